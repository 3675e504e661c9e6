"""Finite jump systems: steps, the two-step axiom, delta-matroids, parity.

Vectors are integer tuples indexed by an ordered ground set (the terminal
order of the graph they come from).
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Any, NamedTuple, Optional

__all__ = [
    "FiniteJumpSystem",
    "Step",
    "Verdict",
    "check_delta_matroid",
    "check_even_sum",
    "check_two_step_axiom",
    "steps_toward",
]

Vector = tuple[int, ...]


class Step(NamedTuple):
    """``delta`` is +1 (increment), -1 (decrement) or 0 (stay, with ``coord`` None)."""

    delta: int
    coord: Optional[int] = None

    @property
    def kind(self) -> str:
        return {1: "increment", -1: "decrement", 0: "stay"}[self.delta]

    def apply(self, x: Sequence[int]) -> Vector:
        if self.delta == 0:
            return tuple(x)
        y = list(x)
        y[self.coord] += self.delta  # type: ignore[index]
        return tuple(y)

    def is_legal(self, x: Sequence[int], y: Sequence[int]) -> bool:
        """Whether this is a step from ``x`` toward ``y``."""
        if self.delta == 0:
            return tuple(x) == tuple(y)
        if self.coord is None or not 0 <= self.coord < len(x):
            return False
        if self.delta == 1:
            return x[self.coord] < y[self.coord]
        return self.delta == -1 and x[self.coord] > y[self.coord]

    def label(self, ground: Sequence[str]) -> str:
        if self.delta == 0:
            return "stay"
        return ("+" if self.delta > 0 else "-") + ground[self.coord]  # type: ignore[index]

    @classmethod
    def parse(cls, text: str, ground: Sequence[str]) -> "Step":
        """Inverse of :meth:`label`: ``"stay"``, ``"+t"`` or ``"-t"``."""
        text = text.strip()
        if text == "stay":
            return cls(0)
        if len(text) < 2 or text[0] not in "+-":
            raise ValueError(f"step must be 'stay', '+t' or '-t', got {text!r}")
        name = text[1:]
        if name not in ground:
            raise ValueError(f"unknown terminal {name!r} in step")
        return cls(1 if text[0] == "+" else -1, list(ground).index(name))

    def to_dict(self, ground: Sequence[str]) -> dict[str, Any]:
        if self.delta == 0:
            return {"kind": "stay"}
        return {"kind": self.kind, "terminal": ground[self.coord]}  # type: ignore[index]


def steps_toward(x: Sequence[int], y: Sequence[int]) -> list[Step]:
    """All steps from ``x`` to ``y``, ordered by coordinate."""
    if len(x) != len(y):
        raise ValueError("vectors are indexed by different ground sets")
    if tuple(x) == tuple(y):
        return [Step(0)]
    out = []
    for i, (a, b) in enumerate(zip(x, y)):
        if a < b:
            out.append(Step(1, i))
        elif a > b:
            out.append(Step(-1, i))
    return out


@dataclass(frozen=True)
class Verdict:
    ok: bool
    counterexample: Optional[dict[str, Any]] = None
    detail: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"ok": self.ok}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        out.update(self.detail)
        return out


@dataclass(frozen=True)
class FiniteJumpSystem:
    """An explicit finite set of integer vectors over an ordered ground set.

    ``box`` holds per-coordinate upper bounds; every vector lies in
    ``[0, box]``.  Whether the set really is a jump system is what
    :func:`check_two_step_axiom` decides.
    """

    ground: tuple[str, ...]
    vectors: frozenset[Vector]
    box: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        n = len(self.ground)
        for v in self.vectors:
            if len(v) != n:
                raise ValueError(f"vector {v} does not match ground set of size {n}")
        if self.box:
            if len(self.box) != n:
                raise ValueError("box has the wrong dimension")
            for v in self.vectors:
                if any(not 0 <= a <= b for a, b in zip(v, self.box)):
                    raise ValueError(f"vector {v} leaves the box {self.box}")

    @classmethod
    def from_vectors(cls, ground: Iterable[str], vectors: Iterable[Sequence[int]],
                     box: Optional[Sequence[int]] = None) -> "FiniteJumpSystem":
        ground = tuple(ground)
        vecs = frozenset(tuple(v) for v in vectors)
        if box is None:
            box = tuple(max((v[i] for v in vecs), default=0) for i in range(len(ground)))
        return cls(ground, vecs, tuple(box))

    def __contains__(self, v: object) -> bool:
        return tuple(v) in self.vectors  # type: ignore[arg-type]

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self) -> Iterator[Vector]:
        return iter(sorted(self.vectors))

    def named(self, v: Sequence[int]) -> dict[str, int]:
        return dict(zip(self.ground, v))

    def to_dict(self) -> dict[str, Any]:
        return {
            "ground": list(self.ground),
            "box": list(self.box),
            "vectors": [list(v) for v in self],
        }


def check_two_step_axiom(J: FiniteJumpSystem) -> Verdict:
    """Exhaustively verify the two-step axiom.

    For all ``x, y`` in ``J`` and every step ``x'`` from ``x`` to ``y``,
    either ``x'`` is in ``J`` or some step from ``x'`` to ``y`` lands in
    ``J``.  The first failing triple in lexicographic order of ``(x, y)`` and
    coordinate order of the step is reported.
    """
    vecs = sorted(J.vectors)
    members = J.vectors
    for x in vecs:
        for y in vecs:
            if x == y:
                continue
            for step in steps_toward(x, y):
                x1 = step.apply(x)
                if x1 in members:
                    continue
                if any(s2.apply(x1) in members for s2 in steps_toward(x1, y)):
                    continue
                return Verdict(False, {
                    "x": list(x), "y": list(y), "step": step.to_dict(J.ground),
                    "x_prime": list(x1),
                })
    return Verdict(True, detail={"size": len(vecs)})


def check_delta_matroid(J: FiniteJumpSystem) -> Verdict:
    """Symmetric-exchange check for a set of 0-1 vectors.

    For ``x, y`` in ``J`` and ``s`` with ``x_s != y_s``: ``x + e_s`` (mod 2)
    is in ``J``, or flipping one more coordinate ``t`` with
    ``(x + e_s)_t != y_t`` lands in ``J``.
    """
    for v in J.vectors:
        if any(a not in (0, 1) for a in v):
            raise ValueError(f"vector {v} is not a 0-1 vector")
    members = J.vectors
    vecs = sorted(members)
    for x in vecs:
        for y in vecs:
            for s in range(len(x)):
                if x[s] == y[s]:
                    continue
                x1 = list(x)
                x1[s] ^= 1
                if tuple(x1) in members:
                    continue
                found = False
                for t in range(len(x)):
                    if x1[t] != y[t]:
                        x2 = list(x1)
                        x2[t] ^= 1
                        if tuple(x2) in members:
                            found = True
                            break
                if not found:
                    return Verdict(False, {
                        "x": list(x), "y": list(y), "flip": J.ground[s],
                    })
    return Verdict(True, detail={"size": len(vecs)})


def check_even_sum(J: FiniteJumpSystem) -> Verdict:
    for v in sorted(J.vectors):
        if sum(v) % 2:
            return Verdict(False, {"x": list(v)})
    return Verdict(True)
