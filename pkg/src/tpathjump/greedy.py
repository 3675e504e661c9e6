"""Linear optimization over a finite jump system by the coordinate greedy.

Terminals are fixed one at a time, heaviest weight first, each to the most
profitable value that some member of the system still extends.  On a jump
system this attains the maximum of the objective.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from typing import Union

from .jump import FiniteJumpSystem

__all__ = ["achievable", "greedy_optimize", "weight_vector"]

Weights = Union[Mapping[str, int], Sequence[int]]
Fixings = Mapping[Union[str, int], int]


def weight_vector(J: FiniteJumpSystem, w: Weights) -> tuple[int, ...]:
    """Coerce a terminal-keyed mapping or a sequence to a tuple in ground order."""
    if isinstance(w, Mapping):
        if set(w) != set(J.ground):
            raise ValueError(f"weights must be defined on exactly {list(J.ground)}")
        out = tuple(w[t] for t in J.ground)
    else:
        out = tuple(w)
        if len(out) != len(J.ground):
            raise ValueError(f"expected {len(J.ground)} weights, got {len(out)}")
    if any(isinstance(x, bool) or not isinstance(x, int) for x in out):
        raise ValueError("weights must be integers")
    return out


def _index_fixings(J: FiniteJumpSystem, fixings: Fixings) -> list[tuple[int, int]]:
    out = []
    for k, v in fixings.items():
        i = J.ground.index(k) if isinstance(k, str) else k
        out.append((i, v))
    return out


def achievable(J: FiniteJumpSystem, fixings: Fixings) -> bool:
    """Whether some vector of ``J`` agrees with all fixings (keys are terminals or indices)."""
    fixed = _index_fixings(J, fixings)
    return any(all(v[i] == a for i, a in fixed) for v in J.vectors)


def greedy_optimize(J: FiniteJumpSystem, w: Weights) -> tuple[tuple[int, ...], int]:
    """Maximize ``w . m`` over ``J`` with the coordinate greedy.

    Ties in ``|w|`` are broken by ground order; zero weights count as
    nonnegative, so the stage fixes the largest achievable value.
    """
    if not J.vectors:
        raise ValueError("cannot optimize over an empty jump system")
    weights = weight_vector(J, w)
    n = len(J.ground)
    order = sorted(range(n), key=lambda i: (-abs(weights[i]), i))
    fixings: dict[int, int] = {}
    for i in order:
        hi = J.box[i] if J.box else max(v[i] for v in J.vectors)
        values = range(hi, -1, -1) if weights[i] >= 0 else range(0, hi + 1)
        for value in values:
            fixings[i] = value
            if achievable(J, fixings):
                break
        else:  # pragma: no cover - J nonempty and the previous stage was achievable
            raise AssertionError("no achievable value at a greedy stage")
    m = tuple(fixings[i] for i in range(n))
    return m, sum(a * b for a, b in zip(weights, m))
