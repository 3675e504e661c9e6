"""
Greedy optimization and polytope intersections
==============================================

On a jump system the coordinate greedy maximizes any linear objective.
Intersections of two partition polytopes stay integral when all degrees
are even.
"""

import random

from tpathjump import (enumerate_feasible, greedy_optimize, intersect_and_check,
                       member_via_reduction, realize)
from tpathjump.families import named

tri = named("triangle")
J = enumerate_feasible(tri, "edge")
for w in [(1, 1, 1), (2, -1, 0), (-1, -1, 3)]:
    m, value = greedy_optimize(J, w)
    best = max(sum(a * b for a, b in zip(w, v)) for v in J)
    print(f"w={w}: greedy {m} value {value}, brute force {best}")

# random objectives on a wheel, both disjointness modes
rng = random.Random(0)
g = named("wheel")
for mode in ("edge", "vertex"):
    J = enumerate_feasible(g, mode)
    gaps = 0
    for _ in range(200):
        w = tuple(rng.randint(-5, 5) for _ in g.terminals)
        gaps += greedy_optimize(J, w)[1] != max(sum(a * b for a, b in zip(w, v)) for v in J)
    print(f"wheel/{mode}: |J|={len(J)}, gaps over 200 objectives: {gaps}")

# two partitions of the 4-cycle's terminals
sq = named("square4")
rep = intersect_and_check(sq, "ac|bd", "ab|cd")
print("intersection vertices:", [tuple(map(str, v)) for v in rep.vertices])
print("integral:", rep.all_integral, " max sum:", rep.max_sum, " attained at:", rep.attainer)
print("conjecture candidates:", rep.infeasible_vertices)

# the terminal-copy reduction makes terminals inner vertices; in vertex
# mode a terminal that carries two paths is then lost
print("triangle (2,2,2), vertex mode: search", realize(tri, "vertex", (2, 2, 2)) is not None,
      " reduction", member_via_reduction(tri, "vertex", (2, 2, 2)))
