"""End-to-end acceptance checks, one test per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the detail lines, or
``python tests/test_acceptance.py``.  The terminal summary prints one
PASS/FAIL line per criterion.
"""

import random
import sys
from fractions import Fraction as F

import pytest
from click.testing import CliRunner

from banach_tarski.cli import dumps, main, strip_timing
from banach_tarski.geometry import (
    ball_demo,
    freeness_scan,
    hemisphere_disjoint_check,
    hemisphere_for,
    random_center,
    random_points_in,
    sphere_demo,
    sphere_point,
)
from banach_tarski.orbit import (
    ORBIT_SUITE,
    StabilizedOrbit,
    build_orbit_partition,
    canonical_form,
    is_canonical,
    verify_canonical_uniqueness,
    verify_orbit_pairing,
)
from banach_tarski.paradox import (
    F2Universe,
    assert_lower_bound,
    f2_paradox_witness,
    mutate,
    validate,
)
from banach_tarski.partition import (
    A,
    B,
    Leftover,
    build_21gen,
    build_21tau,
    classify_base,
    green_check,
    omega_suite,
    tau_suite,
    verify_base_pairing,
    verify_theorem_pairing,
)
from banach_tarski.words import SIGMA, TAU, Word, enumerate_reduced, format_word, parse, power

pytestmark = pytest.mark.slow

NS = (2, 3, 4, 5)
L = 10
SEED = sphere_point("3/5,4/5,0")


def count(L):
    return 1 + 2 * (3**L - 1)


def detail(number, text):
    print(f"  [{number}] {text}")


@pytest.mark.criterion(1, "base pairing at L=10 and gamma-power sweep, n=2..5")
def test_criterion_01_base_lemmas():
    for n in NS:
        rep = verify_base_pairing(n, L)
        detail(1, f"n={n} base pairing: {rep.words_checked} words, {rep.violation_count} violations")
        assert rep.words_checked == count(L)
        assert rep.passed, rep.violations[:3]
        bad = [(i, k, m) for i in range(n) for k in range(1, 7) for m in range(n - 1) if not green_check(n, i, k, m)]
        detail(1, f"n={n} gamma sweep k<=6: {len(bad)} failures")
        assert not bad


@pytest.mark.criterion(2, "general-omega partition pairing at L=10, n=2..5")
def test_criterion_02_gen21():
    for n in NS:
        suite = omega_suite(n)
        assert len(suite) >= 2 * n + 1
        cases = {classify_base(n, w) for w in suite}
        assert cases == {q for i in range(n) for q in (A(i), B(i))} | {Leftover(m) for m in range(n - 1)}
        for omega in suite:
            rep = verify_theorem_pairing(build_21gen(n, omega), L)
            assert rep.words_checked == count(L)
            assert rep.passed, (format_word(omega), rep.violations[:3])
        detail(2, f"n={n}: {len(suite)} omegas, every case covered, zero violations")


@pytest.mark.criterion(3, "tau-initial partition pairing at L=10 with anchors")
def test_criterion_03_tau21():
    sigma = Word((SIGMA,))
    for n in NS:
        for omega in tau_suite(n):
            assert omega[0] == TAU
            p = build_21tau(n, omega)
            for i in range(1, n):
                assert p.classify(power(sigma, 1 - i)) == A(i)
            assert p.classify(omega) == A(1)
            rep = verify_theorem_pairing(p, L)
            assert rep.passed, (format_word(omega), rep.violations[:3])
        detail(3, f"n={n}: {len(tau_suite(n))} tau-initial omegas, anchors hold, zero violations")


@pytest.mark.criterion(4, "canonical orbit forms unique at L=9")
def test_criterion_04_canonical_uniqueness():
    for text in ORBIT_SUITE:
        orbit = StabilizedOrbit(parse(text))
        rep = verify_canonical_uniqueness(orbit, 9)
        assert rep.passed, (text, rep.violations[:3])
        assert rep.words_checked == count(9)
        assert all(is_canonical(canonical_form(w, orbit).zeta, orbit) for w in enumerate_reduced(6))
        assert rep.extra["stabilizer"]["minimal_at_basepoint"]
        detail(4, f"omega={text}: stabiliser scan to {rep.extra['stabilizer']['scan_bound']} is exactly <omega>")


@pytest.mark.criterion(5, "orbit partition pairing at L=9, n=2..4")
def test_criterion_05_orbit_pairing():
    for text in ORBIT_SUITE:
        for n in (2, 3, 4):
            part = build_orbit_partition(n, StabilizedOrbit(parse(text)))
            rep = verify_orbit_pairing(part, 9)
            assert rep.passed, (text, n, rep.violations[:3])
        detail(5, f"omega={text} ({part.variant.value}): zero violations for n=2,3,4")


@pytest.mark.criterion(6, "free-group witness, mutants and lower bound")
def test_criterion_06_f2_witness():
    universe = F2Universe(L)
    for n in NS:
        w = f2_paradox_witness(n)
        assert len(w.all_pieces()) == w.r == 2 * n
        assert assert_lower_bound(w)
        rep = validate(w, universe)
        assert rep.words_checked == count(L)
        assert rep.passed, rep.violations[:3]
        detail(6, f"n={n}: {w.r} pieces validate over {rep.words_checked} words")
    small = F2Universe(6)
    for kind in ("drop_piece", "swap_movers", "shrink_piece"):
        rep = validate(mutate(f2_paradox_witness(3), kind), small)
        detail(6, f"mutant {kind}: {rep.violation_count} violations")
        assert rep.violation_count >= 1


@pytest.mark.criterion(7, "no short word maps to the identity rotation (L=12)")
def test_criterion_07_freeness():
    rep = freeness_scan(12)
    expected = 2 * (3**12 - 1)
    detail(7, f"{rep.words_checked} nontrivial words checked (2(3^12 - 1) = {expected}), {rep.violation_count} violations")
    assert rep.words_checked == expected
    assert rep.passed, rep.violations[:3]


@pytest.mark.criterion(8, "sphere fragment labelled by 2n pieces at depth 6")
def test_criterion_08_sphere():
    for n in (2, 3):
        demo = sphere_demo(n, [SEED], 6)
        pts = {p.point for p in demo.points}
        labels = {p.label for p in demo.points}
        detail(8, f"n={n}: {len(pts)} points, {len(labels)} labels")
        assert len(demo.points) == len(pts) == 1457
        assert len(labels) == 2 * n
        assert demo.passed, [r.violations[:2] for r in demo.reports]


@pytest.mark.criterion(9, "points of a closed hemisphere are far from its center")
def test_criterion_09_hemisphere():
    rng = random.Random(20240915)
    checked = 0
    for _ in range(100):
        c = random_center(rng)
        pts = random_points_in(hemisphere_for(c), rng, 1000)
        rep = hemisphere_disjoint_check(c, pts)
        assert rep.words_checked == 1000
        assert rep.passed, rep.violations[:3]
        checked += rep.words_checked
    detail(9, f"{checked} exact point/center pairs, zero violations")


@pytest.mark.criterion(10, "ball decomposition with 3n-1 pieces")
def test_criterion_10_ball():
    for n in (2, 3):
        demo = ball_demo(n, [SEED], [1, F(1, 2), F(1, 3)], 4)
        pieces = demo.witness.all_pieces()
        sizes = sorted(g.r for g in demo.witness.groups)
        detail(10, f"n={n}: {len(pieces)} pieces, group sizes {sizes}, {len(demo.points)} points")
        assert len(pieces) == 3 * n - 1
        assert sum(p.singleton for p in pieces) == n - 1
        assert sizes == [2] + [3] * (n - 1)
        assert demo.points[0].point.is_zero()
        assert demo.passed, [r.violations[:2] for r in demo.reports]
        if n == 2:
            assert [p.ref for p in pieces] == ["A0", "B0", "A1", "B1", "X1"]


COMMANDS = [
    ["lemmas", "--n", "3", "--max-len", "6", "--k-max", "4"],
    ["orbit", "--n", "3", "--omega", "s t S", "--max-len", "6"],
    ["freeness", "--max-len", "7"],
    ["witness", "--n", "3", "--max-len", "6"],
    ["sphere", "--n", "2", "--depth", "3"],
    ["ball", "--n", "2", "--depth", "3", "--radii", "1,1/2,1/3"],
]


@pytest.mark.criterion(11, "reports identical across runs and worker counts")
def test_criterion_11_determinism():
    runner = CliRunner()
    for args in COMMANDS:
        outs = []
        for workers in ("1", "1", "4"):
            r = runner.invoke(main, args + ["--workers", workers])
            assert r.exit_code == 0, r.output
            outs.append(dumps(strip_timing(r.output)).encode())
        detail(11, f"{args[0]}: {len(outs[0])} bytes, identical x3")
        assert outs[0] == outs[1] == outs[2]


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-s", "-q"]))
