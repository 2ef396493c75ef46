import dataclasses

import pytest
from hypothesis import given, settings

from banach_tarski.partition import (
    A,
    B,
    Leftover,
    PieceIndex,
    Variant,
    base_prefix,
    build_21gen,
    build_21tau,
    classify_base,
    delta_power_member,
    gamma,
    green_check,
    omega_suite,
    tau_suite,
    verify_base_pairing,
    verify_theorem_pairing,
)
from banach_tarski.words import (
    EMPTY,
    concat,
    enumerate_reduced,
    has_prefix,
    invert,
    parse,
    power,
)

from conftest import words

P = parse


def prefix_oracle(n, w):
    hits = [q for i in range(n) for q in (A(i), B(i)) if has_prefix(w, base_prefix(n, q))]
    if not hits:
        assert all(x == 1 for x in w) and len(w) <= n - 2
        return Leftover(len(w))
    assert len(hits) == 1
    return hits[0]


def family(delta, n, top):
    out = {}
    for k in range(top + 1):
        for m in range(n - 1):
            out.setdefault(concat(power(delta, -k), power(P("s"), -m)), (k, m))
    return out


def gen21_oracle(p, w, fam):
    return p.c_piece if w in fam else classify_base(p.n, w)


def tau21_oracle(p, w, top):
    for i in range(1, p.n):
        for k in range(top + 1):
            if concat(power(p.gammas[i], -k), power(P("s"), -(i - 1))) == w:
                return A(i)
    return classify_base(p.n, w)


@pytest.mark.parametrize(
    "n,i,expected",
    [(3, 0, "s s"), (2, 1, "t"), (4, 2, "S t"), (2, 0, "s"), (4, 3, "S S t s")],
)
def test_gamma_values(n, i, expected):
    assert gamma(n, i) == P(expected)


def test_gamma_index_checked():
    with pytest.raises(IndexError):
        gamma(3, 3)
    with pytest.raises(ValueError):
        gamma(1, 0)


def test_classify_base_examples():
    assert classify_base(3, P("s t")) == A(0)
    assert classify_base(3, P("S")) == Leftover(1)
    assert classify_base(3, P("S t s")) == A(2)


@pytest.mark.parametrize("n", range(2, 7))
def test_classify_base_matches_prefix_definitions(n):
    for w in enumerate_reduced(7):
        assert classify_base(n, w) == prefix_oracle(n, w)


def test_delta_power_member_examples():
    assert delta_power_member(EMPTY, P("t s"), 3) == (0, 0)
    assert delta_power_member(P("S^5"), gamma(3, 0), 3) == (2, 1)
    assert delta_power_member(P("t"), gamma(3, 1), 3) is None


@settings(max_examples=200)
@given(words(8))
def test_delta_power_member_brute_force(w):
    n = 3
    for delta in (gamma(n, 0), invert(gamma(n, 1)), gamma(n, 2)):
        fam = family(delta, n, len(w) + 1)
        got = delta_power_member(w, delta, n)
        if w in fam:
            assert got is not None
            assert concat(power(delta, -got[0]), power(P("s"), -got[1])) == w
        else:
            assert got is None


def test_build_21gen_examples():
    p = build_21gen(3, P("S S"))
    assert p.classify(EMPTY) == B(0) == p.classify(P("S S"))
    assert build_21gen(2, P("s")).classify(EMPTY) == A(0)
    p = build_21gen(3, P("t s"))
    assert p.classify(P("t s")) == p.classify(EMPTY) == A(1)
    assert build_21gen(3, P("S S")).classify(P("t")) == A(1)
    assert build_21gen(2, P("s")).classify(P("S t")) == B(0)


def test_leftover_omega_is_substituted():
    p = build_21gen(4, P("S"))
    assert p.omega == P("S S S")
    assert p.original_omega == P("S")
    assert "substitution" in p.describe()
    assert p.classify(P("S")) == p.classify(EMPTY)


def test_build_21tau_examples():
    p = build_21tau(3, P("t s"))
    assert p.variant is Variant.TAU21
    assert p.classify(EMPTY) == A(1)
    assert p.classify(P("S")) == A(2)
    assert p.classify(P("S T")) == A(1)
    w = P("S S T s t")
    assert p.classify(w) == tau21_oracle(p, w, len(w) + 1)


def test_build_21tau_requires_t_initial_omega():
    with pytest.raises(ValueError):
        build_21tau(3, P("s t"))
    with pytest.raises(ValueError):
        build_21tau(3, EMPTY)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_gen21_classifier_matches_brute_force(n):
    for omega in omega_suite(n):
        p = build_21gen(n, omega)
        fam = family(p.delta, n, 9)
        for w in enumerate_reduced(7):
            assert p.classify(w) == gen21_oracle(p, w, fam), (omega, w)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_tau21_classifier_matches_brute_force(n):
    for omega in tau_suite(n)[:3]:
        p = build_21tau(n, omega)
        for w in enumerate_reduced(6):
            assert p.classify(w) == tau21_oracle(p, w, 8)


@pytest.mark.parametrize("n", [2, 3, 5])
def test_gen21_agrees_with_base_outside_c_and_d(n):
    for omega in omega_suite(n):
        p = build_21gen(n, omega)
        for w in enumerate_reduced(6):
            base = classify_base(n, w)
            if base not in (p.c_piece, p.d_piece) and not isinstance(base, Leftover):
                assert p.classify(w) == base


@pytest.mark.parametrize("n,max_len", [(2, 8), (3, 8), (5, 6)])
def test_base_pairing(n, max_len):
    rep = verify_base_pairing(n, max_len)
    assert rep.passed, rep.violations[:3]
    assert rep.words_checked == 1 + 2 * (3**max_len - 1)


def test_green_examples():
    assert green_check(3, 1, 1, 1)
    assert green_check(3, 0, 2, 0)
    assert green_check(4, 3, 1, 2)


@pytest.mark.parametrize("n", range(2, 7))
def test_green_sweep(n):
    assert all(green_check(n, i, k, m) for i in range(n) for k in range(1, 7) for m in range(n - 1))


@pytest.mark.parametrize(
    "builder,n,omega",
    [(build_21gen, 3, "S S"), (build_21tau, 4, "t S t"), (build_21gen, 2, "T s")],
)
def test_theorem_pairing_examples(builder, n, omega):
    rep = verify_theorem_pairing(builder(n, P(omega)), 10)
    assert rep.passed, rep.violations[:3]


def test_classic_two_piece_statement():
    # with n = 2 the movers are s and t themselves
    p = build_21gen(2, P("S"))
    assert p.gammas == (P("s"), P("t"))
    rep = verify_theorem_pairing(p, 10)
    assert rep.passed


def test_tampered_partition_is_caught():
    p = build_21gen(3, P("t s"))
    bad = dataclasses.replace(p, delta=invert(p.delta), _table={}, _covered=[-1])
    rep = verify_theorem_pairing(bad, 6)
    assert not rep.passed


def test_totality_and_single_membership():
    for n in range(2, 7):
        for omega in omega_suite(n)[:4]:
            p = build_21gen(n, omega)
            for w in enumerate_reduced(5):
                assert p.memberships(w) == [p.classify(w)]


@pytest.mark.parametrize("n", range(2, 6))
def test_omega_suite_covers_every_case(n):
    suite = omega_suite(n)
    assert len(suite) >= 2 * n + 1
    cases = {classify_base(n, w) for w in suite}
    expected = {q for i in range(n) for q in (A(i), B(i))} | {Leftover(m) for m in range(n - 1)}
    assert cases == expected
    assert any(len(w) >= 4 for w in suite)


def test_piece_index_parse():
    assert PieceIndex.parse("B12") == B(12)
    assert str(A(3)) == "A3"
    with pytest.raises(ValueError):
        PieceIndex.parse("X1")
