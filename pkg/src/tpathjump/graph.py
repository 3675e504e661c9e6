"""Multigraphs with a terminal set, terminal partitions and demand vectors.

Vertices are strings.  Edges are endpoint pairs whose identifier is their
position in ``Multigraph.edges``; parallel edges are distinct edges.  The
order of ``Multigraph.terminals`` fixes the coordinate order of every vector
indexed by the terminals (demands, weights, points of polytopes).
"""

from __future__ import annotations

import hashlib
import json
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Union

__all__ = [
    "InstanceError",
    "Multigraph",
    "TerminalPartition",
    "augment_with_copies",
    "build_graph",
    "cut_degree",
    "dump_instance",
    "load_instance",
]


class InstanceError(ValueError):
    """Raised for malformed instance descriptions or arguments."""


@dataclass(frozen=True)
class TerminalPartition:
    """A partition of the terminal set into nonempty disjoint classes."""

    classes: tuple[frozenset[str], ...]

    @classmethod
    def singletons(cls, terminals: Iterable[str]) -> "TerminalPartition":
        return cls(tuple(frozenset([t]) for t in terminals))

    @classmethod
    def from_lists(cls, classes: Iterable[Iterable[str]]) -> "TerminalPartition":
        return cls(tuple(frozenset(c) for c in classes))

    def class_of(self, t: str) -> int:
        for i, c in enumerate(self.classes):
            if t in c:
                return i
        raise InstanceError(f"terminal {t!r} is not covered by the partition")

    def separates(self, s: str, t: str) -> bool:
        return self.class_of(s) != self.class_of(t)

    def validate(self, terminals: Iterable[str]) -> None:
        terminals = set(terminals)
        seen: set[str] = set()
        for c in self.classes:
            if not c:
                raise InstanceError("partition has an empty class")
            if c & seen:
                raise InstanceError("partition classes are not disjoint")
            seen |= c
        if seen != terminals:
            raise InstanceError("partition classes do not cover exactly the terminals")

    def to_lists(self, order: Sequence[str]) -> list[list[str]]:
        rank = {t: i for i, t in enumerate(order)}
        return sorted(
            (sorted(c, key=rank.__getitem__) for c in self.classes),
            key=lambda c: rank[c[0]],
        )


Vector = tuple[int, ...]
DemandLike = Union[Mapping[str, int], Sequence[int]]


@dataclass(frozen=True)
class Multigraph:
    """Undirected loopless multigraph with terminals.

    Build instances with :func:`build_graph`, which validates the input; the
    constructor itself trusts its arguments.
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    terminals: tuple[str, ...]
    partitions: Mapping[str, TerminalPartition] = field(default_factory=dict)

    def __post_init__(self) -> None:
        inc: dict[str, list[int]] = {v: [] for v in self.vertices}
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        object.__setattr__(self, "_incidence", {v: tuple(es) for v, es in inc.items()})
        object.__setattr__(self, "_tindex", {t: i for i, t in enumerate(self.terminals)})
        object.__setattr__(self, "_tset", frozenset(self.terminals))

    # identity is structural; the cached lookup tables are not compared
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.edges == other.edges
            and self.terminals == other.terminals
            and dict(self.partitions) == dict(other.partitions)
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges, self.terminals))

    @property
    def terminal_set(self) -> frozenset[str]:
        return self._tset  # type: ignore[attr-defined]

    def is_terminal(self, v: str) -> bool:
        return v in self._tset  # type: ignore[attr-defined]

    def terminal_index(self, t: str) -> int:
        return self._tindex[t]  # type: ignore[attr-defined]

    def incident(self, v: str) -> tuple[int, ...]:
        """Edge ids incident to ``v`` in increasing order."""
        return self._incidence[v]  # type: ignore[attr-defined]

    def degree(self, v: str) -> int:
        return len(self.incident(v))

    def other_end(self, e: int, v: str) -> str:
        a, b = self.edges[e]
        if v == a:
            return b
        if v == b:
            return a
        raise InstanceError(f"edge {e} is not incident to {v!r}")

    def terminal_degrees(self) -> Vector:
        return tuple(self.degree(t) for t in self.terminals)

    def partition(self, name_or_partition: "str | TerminalPartition | None") -> "TerminalPartition | None":
        """Resolve a partition given by name (as stored in the instance)."""
        if name_or_partition is None or isinstance(name_or_partition, TerminalPartition):
            return name_or_partition
        if name_or_partition == "singletons" and "singletons" not in self.partitions:
            return TerminalPartition.singletons(self.terminals)
        try:
            return self.partitions[name_or_partition]
        except KeyError:
            raise InstanceError(f"unknown partition {name_or_partition!r}") from None

    def vector(self, m: DemandLike, *, nonnegative: bool = True) -> Vector:
        """Coerce a demand/weight given as mapping or sequence to a tuple in terminal order."""
        if isinstance(m, Mapping):
            if set(m) != set(self.terminals):
                raise InstanceError("vector keys must be exactly the terminals")
            out = tuple(m[t] for t in self.terminals)
        else:
            out = tuple(m)
            if len(out) != len(self.terminals):
                raise InstanceError(
                    f"vector has {len(out)} entries, expected {len(self.terminals)}"
                )
        for x in out:
            if isinstance(x, bool) or not isinstance(x, int):
                raise InstanceError(f"vector entries must be integers, got {x!r}")
            if nonnegative and x < 0:
                raise InstanceError("demand entries must be nonnegative")
        return out

    def as_dict(self, vec: Sequence[Any]) -> dict[str, Any]:
        return dict(zip(self.terminals, vec))

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "vertices": list(self.vertices),
            "edges": [[u, v] for u, v in self.edges],
            "terminals": list(self.terminals),
        }
        if self.partitions:
            out["partitions"] = {
                name: p.to_lists(self.terminals) for name, p in self.partitions.items()
            }
        return out

    def digest(self) -> str:
        blob = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()[:16]

    def with_terminals(self, terminals: Iterable[str]) -> "Multigraph":
        """Same graph with another terminal set (stored partitions are dropped)."""
        return build_graph(
            {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges],
             "terminals": list(terminals)}
        )


def build_graph(spec: Mapping[str, Any]) -> Multigraph:
    """Validate an instance description and build the multigraph.

    ``spec`` has keys ``vertices``, ``edges`` (endpoint pairs), ``terminals``
    and optionally ``partitions`` (name -> list of classes).  Edge ids are
    assigned in input order.
    """
    try:
        vertices = [str(v) for v in spec["vertices"]]
        raw_edges = spec["edges"]
        terminals = [str(t) for t in spec["terminals"]]
    except (KeyError, TypeError) as exc:
        raise InstanceError(f"instance needs vertices, edges and terminals: {exc}") from None

    if len(set(vertices)) != len(vertices):
        dup = next(v for v in vertices if vertices.count(v) > 1)
        raise InstanceError(f"duplicate vertex {dup!r}")
    vset = set(vertices)

    edges: list[tuple[str, str]] = []
    for i, e in enumerate(raw_edges):
        if len(e) != 2:
            raise InstanceError(f"edge {i} must have exactly two endpoints")
        u, v = str(e[0]), str(e[1])
        if u not in vset or v not in vset:
            raise InstanceError(f"edge {i} has an endpoint that is not a vertex")
        if u == v:
            raise InstanceError(f"edge {i} is a loop at {u!r}")
        edges.append((u, v))

    if len(set(terminals)) != len(terminals):
        raise InstanceError("duplicate terminal")
    for t in terminals:
        if t not in vset:
            raise InstanceError(f"terminal {t!r} is not a vertex")

    partitions: dict[str, TerminalPartition] = {}
    for name, classes in (spec.get("partitions") or {}).items():
        p = TerminalPartition.from_lists([str(t) for t in c] for c in classes)
        try:
            p.validate(terminals)
        except InstanceError as exc:
            raise InstanceError(f"partition {name!r}: {exc}") from None
        partitions[str(name)] = p

    return Multigraph(tuple(vertices), tuple(edges), tuple(terminals), partitions)


def load_instance(path: "str | Path") -> Multigraph:
    with open(path, encoding="utf-8") as fh:
        try:
            spec = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InstanceError(f"{path}: invalid JSON: {exc}") from None
    return build_graph(spec)


def dump_instance(g: Multigraph, path: "str | Path") -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(g.to_dict(), fh, indent=2)
        fh.write("\n")


def cut_degree(g: Multigraph, X: Iterable[str]) -> int:
    """Number of edges with exactly one endpoint in ``X``."""
    X = set(X)
    unknown = X.difference(g.vertices)
    if unknown:
        raise InstanceError(f"unknown vertices {sorted(unknown)}")
    return sum((u in X) != (v in X) for u, v in g.edges)


def _copy_name(t: str, taken: set[str]) -> str:
    name = t + "'"
    while name in taken:
        name += "'"
    return name


def augment_with_copies(g: Multigraph, m: DemandLike) -> tuple[Multigraph, tuple[str, ...]]:
    """Attach a copy ``t'`` to every terminal ``t`` through ``m(t)`` parallel edges.

    The copies form the terminal set of the returned graph, in the order of
    ``g.terminals``; the original terminals become ordinary vertices.  The
    original edges keep their ids.
    """
    m = g.vector(m)
    taken = set(g.vertices)
    copies = []
    for t in g.terminals:
        c = _copy_name(t, taken)
        taken.add(c)
        copies.append(c)
    edges = [list(e) for e in g.edges]
    for t, c, k in zip(g.terminals, copies, m):
        edges.extend([t, c] for _ in range(k))
    h = build_graph(
        {"vertices": list(g.vertices) + copies, "edges": edges, "terminals": copies}
    )
    return h, tuple(copies)
