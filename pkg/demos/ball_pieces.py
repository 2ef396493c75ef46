# The ball with 3n - 1 pieces: layers of the sphere plus translations that fill in the centre.
import random
from fractions import Fraction
from pathlib import Path

from banach_tarski.geometry import (
    ball_demo,
    export_points,
    hemisphere_disjoint_check,
    hemisphere_for,
    random_center,
    random_points_in,
    sphere_point,
)

seed = sphere_point("3/5,4/5,0")

# a unit sphere translated by c with |c| >= 1 misses every closed hemisphere facing away from c
rng = random.Random(1)
c = random_center(rng)
pts = random_points_in(hemisphere_for(c), rng, 200)
print("center", c.text(), hemisphere_disjoint_check(c, pts).passed)

for n in (2, 3):
    demo = ball_demo(n, [seed], [1, Fraction(1, 2), Fraction(1, 3)], 3)
    print(f"n={n}")
    for g in demo.witness.groups:
        print("  ", g.source, [(p.ref, p.mover.describe()) for p in g.pieces])
    print("   passed:", demo.passed, " sampled points:", len(demo.points))

out = Path("ball_n2.ply")
export_points(ball_demo(2, [seed], [1, Fraction(1, 2)], 3).points, out)
print("wrote", out)
