import pytest
from hypothesis import given, settings

from banach_tarski.orbit import (
    ORBIT_SUITE,
    OrbitElement,
    OrbitVariant,
    StabilizedOrbit,
    act,
    basepoint_stabilizer,
    build_orbit_partition,
    canonical_form,
    classify_orbit,
    is_canonical,
    normalize_omega,
    verify_canonical_uniqueness,
    verify_orbit_pairing,
)
from banach_tarski.partition import A, B
from banach_tarski.words import EMPTY, TAU, concat, enumerate_reduced, invert, parse, power

from conftest import words

P = parse
ORBITS = [StabilizedOrbit(P(w)) for w in ORBIT_SUITE]


def canonical_oracle(rho, orbit):
    span = len(rho) + 3
    hits = {
        concat(rho, power(orbit.omega, k))
        for k in range(-span, span + 1)
    }
    good = [z for z in hits if is_canonical(z, orbit)]
    assert len(good) == 1, good
    return good[0]


def test_orbit_validation():
    with pytest.raises(ValueError):
        StabilizedOrbit(EMPTY)
    with pytest.raises(ValueError):
        StabilizedOrbit(P("t s T"))
    with pytest.raises(ValueError):
        StabilizedOrbit(P("s t"))


def test_normalize_examples():
    norm = normalize_omega(P("t s t"))
    assert norm.orbit.omega == P("t s t") and not norm.steps
    assert normalize_omega(P("s s")).orbit.omega == P("S S")
    norm = normalize_omega(P("s t S"))
    assert norm.orbit.omega == P("t")
    assert [s["step"] for s in norm.steps] == ["cyclic_reduce"]


@given(words(7))
def test_normalize_moves_stabiliser_with_base_point(w):
    if not w:
        return
    norm = normalize_omega(w)
    om = norm.orbit.omega
    assert om[0] == TAU or set(om) == {1}
    c = norm.rebase
    # the new stabiliser is c <w> c^-1, up to inversion
    conj = concat(concat(c, w), invert(c))
    assert conj in (om, invert(om))


def test_canonical_examples():
    assert canonical_form(EMPTY, ORBITS[1]).zeta == EMPTY
    assert canonical_form(P("s T"), StabilizedOrbit(P("t s t"))).zeta == P("s s t")
    assert canonical_form(P("t S S S"), StabilizedOrbit(P("S S"))).zeta == P("t S")


@settings(max_examples=150)
@given(words(7))
def test_canonical_matches_search(rho):
    for orbit in ORBITS:
        assert canonical_form(rho, orbit).zeta == canonical_oracle(rho, orbit)


@settings(max_examples=100)
@given(words(4), words(4), words(6))
def test_act_is_an_action(u, v, z):
    for orbit in ORBITS[:3] + ORBITS[4:5]:
        y = canonical_form(z, orbit)
        assert act(EMPTY, y, orbit) == y
        assert act(concat(u, v), y, orbit) == act(u, act(v, y, orbit), orbit)
        assert act(u, act(invert(u), y, orbit), orbit) == y


def test_act_by_omega_fixes_base_point():
    orbit = StabilizedOrbit(P("S S"))
    assert act(P("S S"), OrbitElement(EMPTY), orbit).zeta == EMPTY


@pytest.mark.parametrize("omega", ORBIT_SUITE)
def test_basepoint_stabilizer_is_powers(omega):
    orbit = StabilizedOrbit(P(omega))
    bound = min(6 * len(orbit.omega), 8)
    found = set(basepoint_stabilizer(orbit, bound))
    powers = {power(orbit.omega, k) for k in range(-8, 9)}
    assert found == {w for w in powers if len(w) <= bound}


def test_build_orbit_partition_variants():
    assert build_orbit_partition(3, StabilizedOrbit(P("t s"))).variant is OrbitVariant.ALPHA_TAU
    part = build_orbit_partition(3, StabilizedOrbit(P("S S")))
    assert part.variant is OrbitVariant.OMEGA_SIGMA_K
    assert classify_orbit(part, OrbitElement(EMPTY)) == B(0)
    assert build_orbit_partition(2, StabilizedOrbit(P("t"))).variant is OrbitVariant.ALPHA_TAU


def test_classify_orbit_examples():
    tau = build_orbit_partition(3, StabilizedOrbit(P("t s")))
    sig = build_orbit_partition(3, StabilizedOrbit(P("S S")))
    assert classify_orbit(tau, OrbitElement(EMPTY)) == A(1)
    assert classify_orbit(sig, OrbitElement(P("t"))) == A(1)
    assert classify_orbit(sig, OrbitElement(EMPTY)) == B(0)


@pytest.mark.parametrize("omega", ["t s t", "S", "t t"])
def test_canonical_uniqueness_examples(omega):
    rep = verify_canonical_uniqueness(StabilizedOrbit(P(omega)), 7)
    assert rep.passed, rep.violations[:3]
    assert rep.extra["stabilizer"]["minimal_at_basepoint"]


@pytest.mark.parametrize("n,omega,max_len", [(3, "t s", 8), (3, "S S", 8), (4, "t t S", 7)])
def test_orbit_pairing_examples(n, omega, max_len):
    part = build_orbit_partition(n, StabilizedOrbit(P(omega)))
    rep = verify_orbit_pairing(part, max_len)
    assert rep.passed, rep.violations[:3]
    assert rep.words_checked == sum(1 for w in enumerate_reduced(max_len) if is_canonical(w, part.orbit))


def test_wrong_stabiliser_is_caught():
    # a partition built for <S S> does not respect the orbit of <t s>
    part = build_orbit_partition(3, StabilizedOrbit(P("t s")))
    other = build_orbit_partition(3, StabilizedOrbit(P("S S")))
    mismatched = type(part)(3, part.orbit, part.variant, other.partition)
    assert not verify_orbit_pairing(mismatched, 6).passed
