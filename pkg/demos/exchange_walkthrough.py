"""
Walking through a constructive exchange
=======================================

Given edge-disjoint path systems for two demand vectors and one step from
the first toward the second, the exchange edits the first system until it
realizes the step, or the step followed by one more.  Every edit is logged.
"""

from tpathjump import (Step, certify, enumerate_feasible, exchange_step_edge, realize,
                       steps_toward)
from tpathjump.families import named

star = named("star")
P1 = realize(star, "edge", (1, 1, 0))
P2 = realize(star, "edge", (0, 1, 1))
print("P1:", [str(p) for p in P1], " P2:", [str(p) for p in P2])

# lowering a: the path at a is deleted, then c gains a path of P2
r = exchange_step_edge(star, P1, P2, Step(-1, 0))
print(r.outcome, r.step.label(star.terminals), [str(p) for p in r.system])
for rec in r.trace:
    print("   ", rec)

# raising c: the path of P2 at c is blocked at v, so a-v-b is rerouted
# along it and loses its end at a
r = exchange_step_edge(star, P1, P2, Step(1, 2))
print(r.outcome, r.step.label(star.terminals), [str(p) for p in r.system])
for rec in r.trace:
    print("   ", rec)

# on a wheel, every step between the two incomparable feasible vectors
# farthest apart
g = named("wheel")
J = sorted(enumerate_feasible(g, "edge"))
m1, m2 = max(((x, y) for x in J for y in J
              if any(a > b for a, b in zip(x, y)) and any(a < b for a, b in zip(x, y))),
             key=lambda p: (sum(abs(a - b) for a, b in zip(*p)), sum(p[0]) + sum(p[1])))
A, B = realize(g, "edge", m1), realize(g, "edge", m2)
print("from", m1, "toward", m2)
for sigma in steps_toward(m1, m2):
    res = exchange_step_edge(g, A, B, sigma)
    print("   ", sigma.label(g.terminals), "->", res.outcome,
          res.step.label(g.terminals) if res.step else "",
          "certified" if certify(g, m1, m2, sigma, res) else "NOT certified",
          f"({len(res.trace)} edits)")
