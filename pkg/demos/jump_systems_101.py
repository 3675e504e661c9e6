"""
Feasible demand vectors form jump systems
=========================================

Count, for a family of disjoint terminal paths, how many paths end at each
terminal.  The set of all such vectors is the object studied here.
"""

from tpathjump import (FiniteJumpSystem, check_delta_matroid, check_two_step_axiom,
                       enumerate_feasible, realize)
from tpathjump.families import named

# the star: three leaves a, b, c hung on a center v
star = named("star")
J = enumerate_feasible(star, "edge")
print("star, edge-disjoint:", sorted(J))

# every two paths share a center edge, so at most one path fits and
# (1,1,1) is out even though each leaf could carry a path
print("(1,1,1) feasible?", (1, 1, 1) in J)

# a witness for one vector
print("witness for (1,1,0):", [str(p) for p in realize(star, "edge", (1, 1, 0))])

# the two-step axiom holds
print(check_two_step_axiom(J))

# the triangle has room for more: each edge is a path on its own
tri = named("triangle")
print("triangle, edge-disjoint:", sorted(enumerate_feasible(tri, "edge")))

# a set that is not a jump system, and the triple that breaks it
bad = FiniteJumpSystem.from_vectors("xy", [(0, 0), (3, 0)])
print(check_two_step_axiom(bad))

# with a partition and vertex mode the paths are entirely disjoint and
# the vectors are 0-1: a delta-matroid
k4 = named("k4")
D = enumerate_feasible(k4, "vertex", k4.partition("singletons"))
print("k4, entirely vertex-disjoint:", sorted(D))
print(check_delta_matroid(D))
