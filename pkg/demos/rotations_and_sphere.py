# Two rational rotations generating a free group, and the sphere labelled by orbit words.
from fractions import Fraction

from banach_tarski import parse
from banach_tarski.geometry import (
    STANDARD_PAIR,
    apply,
    axis_orbit_demo,
    fixed_ray,
    freeness_scan,
    orbit_fragment,
    rho,
    sphere_demo,
    sphere_point,
    stabilizer_scan,
)

print(STANDARD_PAIR.describe())
m = rho(parse("s t"))
print("rho(s t) =", m.to_lists(), "det", m.det())

rep = freeness_scan(7)
print("no word of length <= 7 is the identity:", rep.passed, f"({rep.words_checked} words)")

seed = sphere_point(Fraction(3, 5), Fraction(4, 5), 0)
print("sigma moves the seed to", apply(rho(parse("s")), seed).text())
print("stabiliser words of the seed up to length 6:", stabilizer_scan(seed, 6))

frag = orbit_fragment(seed, 3)
print("orbit fragment at depth 3:", len(frag), "distinct points")

for n in (2, 3):
    demo = sphere_demo(n, [seed], 4)
    labels = sorted({p.label for p in demo.points})
    print(f"n={n}:", labels, [(r.lemma, r.passed) for r in demo.reports])

# points on a rotation axis have a cyclic stabiliser and get the orbit partition instead
print("axis of t s t:", fixed_ray(parse("t s t")))
print("axis orbit check:", axis_orbit_demo(3, parse("t s t"), 3).passed)
