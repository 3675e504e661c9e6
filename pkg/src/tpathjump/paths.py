"""T-paths, path systems, disjointness and edge-transitions."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from itertools import product
from typing import Any, NamedTuple, Optional, Union

from .graph import InstanceError, Multigraph, TerminalPartition

__all__ = [
    "EDGE",
    "VERTEX",
    "MODES",
    "PathSystem",
    "TPath",
    "Transition",
    "Validity",
    "are_disjoint",
    "as_partitions",
    "demand_of",
    "enumerate_t_paths",
    "enumerate_vertex_routes",
    "is_valid_system",
    "route_transitions",
    "transitions_of",
]

EDGE = "edge"
VERTEX = "vertex"
MODES = (EDGE, VERTEX)

PartitionArg = Union[None, TerminalPartition, Sequence[TerminalPartition]]


def check_mode(mode: str) -> str:
    if mode not in MODES:
        raise InstanceError(f"mode must be 'edge' or 'vertex', got {mode!r}")
    return mode


def as_partitions(partition: PartitionArg) -> tuple[TerminalPartition, ...]:
    """Normalize the ``partition`` argument accepted throughout the package.

    ``None`` means plain T-paths; a single partition gives its paths; a
    sequence of partitions asks for paths that are paths for each of them.
    """
    if partition is None:
        return ()
    if isinstance(partition, TerminalPartition):
        return (partition,)
    return tuple(partition)


@dataclass(frozen=True, order=True)
class TPath:
    """A path stored as its vertex sequence and the ids of the edges between them.

    The orientation is canonical: the lexicographically smaller endpoint
    comes first.
    """

    vertices: tuple[str, ...]
    edges: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.edges) != len(self.vertices) - 1 or not self.edges:
            raise InstanceError("a path needs k >= 1 edges and k + 1 vertices")
        if self.vertices[-1] < self.vertices[0]:
            object.__setattr__(self, "vertices", self.vertices[::-1])
            object.__setattr__(self, "edges", self.edges[::-1])

    @property
    def ends(self) -> tuple[str, str]:
        return self.vertices[0], self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.edges)

    def other_end(self, t: str) -> str:
        a, b = self.ends
        if t == a:
            return b
        if t == b:
            return a
        raise ValueError(f"{t!r} is not an endpoint of {self}")

    def end_edge(self, t: str) -> int:
        """Id of the edge of the path incident to endpoint ``t``."""
        if t == self.vertices[0]:
            return self.edges[0]
        if t == self.vertices[-1]:
            return self.edges[-1]
        raise ValueError(f"{t!r} is not an endpoint of {self}")

    def oriented_from(self, t: str) -> tuple[tuple[str, ...], tuple[int, ...]]:
        if t == self.vertices[0]:
            return self.vertices, self.edges
        if t == self.vertices[-1]:
            return self.vertices[::-1], self.edges[::-1]
        raise ValueError(f"{t!r} is not an endpoint of {self}")

    def to_dict(self) -> dict[str, Any]:
        return {"vertices": list(self.vertices), "edges": list(self.edges)}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "TPath":
        return cls(tuple(str(v) for v in d["vertices"]), tuple(int(e) for e in d["edges"]))

    def __str__(self) -> str:
        return "-".join(self.vertices)


def _sort_key(p: TPath) -> tuple:
    return (p.length, p.edges, p.vertices)


@dataclass(frozen=True)
class PathSystem:
    """A collection of paths together with the disjointness mode it claims."""

    paths: tuple[TPath, ...]
    mode: str = EDGE

    def __post_init__(self) -> None:
        check_mode(self.mode)
        object.__setattr__(self, "paths", tuple(sorted(self.paths, key=_sort_key)))

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[TPath]:
        return iter(self.paths)

    def to_dict(self) -> dict[str, Any]:
        return {"mode": self.mode, "paths": [p.to_dict() for p in self.paths]}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "PathSystem":
        return cls(tuple(TPath.from_dict(p) for p in d["paths"]), d.get("mode", EDGE))


class Transition(NamedTuple):
    """An edge-transition: two edges consecutive at ``vertex``, or ``(t, e)`` at a terminal end."""

    vertex: str
    edges: tuple[int, ...]


class Validity(NamedTuple):
    ok: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def enumerate_vertex_routes(g: Multigraph, partition: PartitionArg = None, *,
                            through_terminals: bool = False) -> list[tuple[str, ...]]:
    """Vertex sequences of all T-paths (parallel edges not distinguished).

    Every route starts at its lexicographically smaller end.  Routes are
    found by depth-first search from each terminal through non-terminals,
    or through any vertex with ``through_terminals``.
    """
    parts = as_partitions(partition)
    routes: list[tuple[str, ...]] = []
    # neighbour lists in edge-id order, deduplicated over parallel edges
    nbrs: dict[str, list[str]] = {}
    for v in g.vertices:
        seen: dict[str, None] = {}
        for e in g.incident(v):
            seen.setdefault(g.other_end(e, v), None)
        nbrs[v] = list(seen)

    def allowed(s: str, t: str) -> bool:
        return s < t and all(p.separates(s, t) for p in parts)

    for s in g.terminals:
        stack = [s]
        on_path = {s}

        def dfs(v: str) -> None:
            for w in nbrs[v]:
                if w in on_path:
                    continue
                if g.is_terminal(w):
                    if allowed(s, w):
                        routes.append(tuple(stack) + (w,))
                    if not through_terminals:
                        continue
                stack.append(w)
                on_path.add(w)
                dfs(w)
                on_path.discard(w)
                stack.pop()

        dfs(s)
    return routes


def bundles_along(g: Multigraph, route: Sequence[str]) -> list[list[int]]:
    """For each consecutive pair of the route, the ids of the parallel edges joining them."""
    out = []
    for a, b in zip(route, route[1:]):
        out.append([e for e in g.incident(a) if g.other_end(e, a) == b])
    return out


def enumerate_t_paths(g: Multigraph, partition: PartitionArg = None, *,
                      through_terminals: bool = False) -> list[TPath]:
    """All T-paths of ``g`` (or paths joining different classes of each given partition).

    Interiors avoid the terminal set unless ``through_terminals`` is set.
    Parallel edges yield distinct paths.  Output is sorted by (length, edge ids).
    """
    out = []
    for route in enumerate_vertex_routes(g, partition, through_terminals=through_terminals):
        for choice in product(*bundles_along(g, route)):
            out.append(TPath(route, tuple(choice)))
    out.sort(key=_sort_key)
    return out


def are_disjoint(p: TPath, q: TPath, mode: str, *, entire: bool = False) -> bool:
    """Disjointness of two T-paths.

    ``edge``: no common edge.  ``vertex``: common vertices are terminals,
    which for T-paths means common endpoints; with ``entire`` no common
    vertex at all.
    """
    check_mode(mode)
    if mode == EDGE:
        return not set(p.edges) & set(q.edges)
    shared = set(p.vertices) & set(q.vertices)
    if entire:
        return not shared
    return shared <= (set(p.ends) & set(q.ends))


def demand_of(s: Iterable[TPath], terminals: Sequence[str]) -> tuple[int, ...]:
    """Number of paths ending at each terminal, in the given terminal order."""
    index = {t: i for i, t in enumerate(terminals)}
    m = [0] * len(terminals)
    for p in s:
        for t in p.ends:
            m[index[t]] += 1
    return tuple(m)


def route_transitions(vertices: Sequence[str], edges: Sequence[int]) -> list[Transition]:
    """Edge-transitions of one path (or trail) given by its vertex and edge sequences."""
    out = [Transition(vertices[0], (edges[0],))]
    for i in range(1, len(edges)):
        a, b = edges[i - 1], edges[i]
        out.append(Transition(vertices[i], (a, b) if a <= b else (b, a)))
    out.append(Transition(vertices[-1], (edges[-1],)))
    return out


def transitions_of(s: Iterable[TPath]) -> set[Transition]:
    out: set[Transition] = set()
    for p in s:
        out.update(route_transitions(p.vertices, p.edges))
    return out


def _check_path(g: Multigraph, p: TPath, parts: tuple[TerminalPartition, ...],
                through_terminals: bool = False) -> Optional[str]:
    if len(set(p.vertices)) != len(p.vertices):
        return f"path {p} repeats a vertex"
    for a, b, e in zip(p.vertices, p.vertices[1:], p.edges):
        if not 0 <= e < len(g.edges) or set(g.edges[e]) != {a, b}:
            return f"path {p}: edge {e} does not join {a} and {b}"
    s, t = p.ends
    if not (g.is_terminal(s) and g.is_terminal(t)):
        return f"path {p}: an endpoint is not a terminal"
    if not through_terminals:
        for v in p.vertices[1:-1]:
            if g.is_terminal(v):
                return f"path {p}: interior vertex {v} is a terminal"
    for part in parts:
        if not part.separates(s, t):
            return f"path {p}: endpoints lie in the same partition class"
    return None


def is_valid_system(g: Multigraph, s: PathSystem, partition: PartitionArg = None, *,
                    through_terminals: bool = False) -> Validity:
    """Check every path against ``g`` and the pairwise disjointness of ``s.mode``.

    When partitions are given, endpoints must be separated by each of them
    and, in vertex mode, the paths must be entirely vertex-disjoint.
    ``through_terminals`` (edge mode only) admits terminals inside paths.
    Returns the first violated constraint.
    """
    parts = as_partitions(partition)
    if through_terminals and s.mode != EDGE:
        return Validity(False, "paths through terminals are only defined for edge mode")
    for p in s.paths:
        reason = _check_path(g, p, parts, through_terminals)
        if reason:
            return Validity(False, reason)
    entire = bool(parts) and s.mode == VERTEX
    for i, p in enumerate(s.paths):
        for q in s.paths[i + 1:]:
            if p == q:
                return Validity(False, f"path {p} is listed twice")
            if not are_disjoint(p, q, s.mode, entire=entire):
                if s.mode == EDGE:
                    e = min(set(p.edges) & set(q.edges))
                    return Validity(False, f"paths {p} and {q} share edge {e}")
                return Validity(False, f"paths {p} and {q} share a vertex")
    return Validity(True)
