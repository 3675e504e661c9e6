"""
The polytope of relaxed-feasible vectors
========================================

Fractional path packings with unit edge loads realize exactly the points of
a polytope cut out by one cut inequality per vertex set and class.  Its
vertices are integral, but its integer points need not be feasible.
"""

from fractions import Fraction

from tpathjump import (check_bisubmodular, enumerate_feasible, enumerate_vertices,
                       parity_feasibility_check, polytope_member, reduced_inequalities,
                       relaxed_feasible, support_function, support_pair_function)
from tpathjump.families import named

star = named("star")
S = reduced_inequalities(star)
for row in S.rows:
    print(row.to_dict(star.terminals))

print("vertices:", [tuple(map(str, v)) for v in enumerate_vertices(S)])

# (1,1,1): half of each of the three paths loads every edge exactly once
print("(1,1,1) in polytope:", polytope_member(S, (1, 1, 1)),
      " relaxed:", relaxed_feasible(star, None, (1, 1, 1)),
      " feasible:", (1, 1, 1) in enumerate_feasible(star, "edge"))

half = (Fraction(1, 2), Fraction(1, 2), Fraction(1))
print("(1/2,1/2,1) relaxed:", relaxed_feasible(star, None, half))

# support function and the bisubmodular inequality
print("max x(a)+x(b)-x(c):", support_function(S, {"a", "b"}, {"c"}))
print(check_bisubmodular(support_pair_function(S)))

# with every degree even, integer points are realizable (the parity
# condition); here on a triangle with a doubled edge
g = named("fat_triangle")
print(parity_feasibility_check(g))
