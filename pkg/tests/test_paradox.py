import json

import pytest

from banach_tarski.orbit import StabilizedOrbit
from banach_tarski.paradox import (
    ConfigurationError,
    F2Universe,
    FreenessError,
    Piece,
    SymbolicSeedUniverse,
    assert_lower_bound,
    ball_witness_shape,
    f2_paradox_witness,
    mutate,
    transfer_witness,
    validate,
    witness_descriptor,
    witness_from_descriptor,
)
from banach_tarski.words import EMPTY, parse


@pytest.mark.parametrize("n", [2, 3, 4])
def test_f2_witness_validates(n):
    w = f2_paradox_witness(n)
    assert w.r == 2 * n
    assert assert_lower_bound(w)
    rep = validate(w, F2Universe(7))
    assert rep.passed, rep.violations[:3]
    assert rep.extra["lower_bound"]["holds"]
    assert rep.extra["group_sizes"] == [2] * n


def test_two_piece_movers_are_identity_and_gamma():
    w = f2_paradox_witness(3)
    for j, g in enumerate(w.groups):
        assert [p.ref for p in g.pieces] == [f"A{j}", f"B{j}"]
        assert g.pieces[0].mover == EMPTY
    assert [g.pieces[1].mover for g in w.groups] == [parse("s s"), parse("t s"), parse("S t")]


@pytest.mark.parametrize("kind", ["drop_piece", "swap_movers", "shrink_piece"])
def test_mutants_fail(kind):
    bad = mutate(f2_paradox_witness(3), kind)
    rep = validate(bad, F2Universe(5))
    assert rep.violation_count >= 1


def test_unknown_mutation():
    with pytest.raises(ValueError):
        mutate(f2_paradox_witness(2), "flip")


def test_dropped_piece_breaks_lower_bound_without_anomaly():
    bad = mutate(f2_paradox_witness(2), "drop_piece")
    assert bad.r == 3 and not assert_lower_bound(bad)
    rep = validate(bad, F2Universe(4))
    assert not rep.extra["lower_bound"]["holds"]
    assert not any("critical anomaly" in v["detail"] for v in rep.violations)
    assert not rep.passed


def test_mover_without_inverse_action():
    w = f2_paradox_witness(2)
    g0 = w.groups[0]
    odd = type(g0)(g0.source, (Piece("A0", g0.pieces[0].contains, "rotate"),) + g0.pieces[1:])
    with pytest.raises(ConfigurationError):
        validate(type(w)(2, (odd,) + w.groups[1:]), F2Universe(2))


def test_descriptor_round_trip():
    w = f2_paradox_witness(4)
    desc = witness_descriptor(w, "f2:max_len=6")
    again = witness_from_descriptor(json.dumps(desc))
    assert witness_descriptor(again, "f2:max_len=6") == desc
    assert validate(again, F2Universe(6)).passed


def test_corrupted_descriptor_fails_validation():
    desc = witness_descriptor(f2_paradox_witness(3), "f2")
    desc["groups"][1]["movers"] = ["", "s"]
    assert not validate(witness_from_descriptor(desc), F2Universe(5)).passed


@pytest.mark.parametrize(
    "desc",
    [{"groups": []}, {"n": 2, "groups": [{"source_piece": "P0", "piece_refs": ["A0"], "movers": []}]}],
)
def test_malformed_descriptor(desc):
    with pytest.raises(ConfigurationError):
        witness_from_descriptor(desc)


def test_transfer_to_free_symbolic_orbits():
    universe = SymbolicSeedUniverse(6, (None, None))
    w = transfer_witness(f2_paradox_witness(2), universe, 12)
    rep = validate(w, universe)
    assert rep.passed
    assert rep.words_checked == 2 * (1 + 2 * (3**6 - 1))
    assert w.info["transfer"]["seeds"] == 2


def test_transfer_rejects_fixed_seed():
    universe = SymbolicSeedUniverse(4, (None, StabilizedOrbit(parse("S"))))
    with pytest.raises(FreenessError) as err:
        transfer_witness(f2_paradox_witness(2), universe, 8)
    assert err.value.seed == 1
    assert err.value.word == parse("s")


def test_f2_witness_is_not_ball_shaped():
    rep = ball_witness_shape(f2_paradox_witness(2))
    assert not rep.passed
