"""Exact packing solvers: maximum packings, realizing a demand vector,
the set of feasible vectors, and the terminal-copy membership reduction.

All solvers search over *routes* (vertex sequences of T-paths) rather than
individual paths.  Parallel edges are interchangeable, so a route is given
concrete edges only when a witness is produced, always taking the smallest
unused id in each bundle of parallel edges.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from itertools import product
from typing import Optional

from .graph import DemandLike, InstanceError, Multigraph, augment_with_copies
from .jump import FiniteJumpSystem
from .paths import (
    EDGE,
    VERTEX,
    PartitionArg,
    PathSystem,
    TPath,
    as_partitions,
    check_mode,
    enumerate_vertex_routes,
)

__all__ = [
    "FiniteJumpSystem",
    "enumerate_feasible",
    "feasible_box",
    "max_packing",
    "member_via_reduction",
    "realize",
    "reduction_agrees",
]

log = logging.getLogger(__name__)


class _Router:
    """Routes of one (graph, mode, partitions) combination with their resource usage."""

    def __init__(self, g: Multigraph, mode: str, parts: tuple, through: bool = False) -> None:
        if through and mode != EDGE:
            raise InstanceError("paths through terminals are only defined for edge mode")
        self.g = g
        self.mode = mode
        # vertex mode with partitions asks for entirely vertex-disjoint paths
        self.entire = mode == VERTEX and bool(parts)
        n = len(g.terminals)
        self.n = n

        bundle_ids: dict[frozenset, int] = {}
        self.bundle_edges: list[list[int]] = []
        for e, (u, v) in enumerate(g.edges):
            key = frozenset((u, v))
            if key not in bundle_ids:
                bundle_ids[key] = len(self.bundle_edges)
                self.bundle_edges.append([])
            self.bundle_edges[bundle_ids[key]].append(e)
        self.cap = [len(es) for es in self.bundle_edges]

        vbit = {v: 1 << i for i, v in enumerate(g.vertices)}
        routes = enumerate_vertex_routes(g, parts, through_terminals=through)
        routes.sort(key=lambda r: (len(r), [bundle_ids[frozenset(p)] for p in zip(r, r[1:])], r))
        self.routes = routes
        self.r_bundles: list[tuple[int, ...]] = []
        self.r_vmask: list[int] = []
        self.r_ends: list[tuple[int, int]] = []
        for r in routes:
            self.r_bundles.append(tuple(bundle_ids[frozenset(p)] for p in zip(r, r[1:])))
            if mode != VERTEX:
                inner = ()
            elif self.entire:
                inner = r
            else:
                inner = r[1:-1]
            mask = 0
            for v in inner:
                mask |= vbit[v]
            self.r_vmask.append(mask)
            self.r_ends.append((g.terminal_index(r[0]), g.terminal_index(r[-1])))
        # routes incident to terminal i, in route order
        self.at: list[list[int]] = [[] for _ in range(n)]
        for k, (i, j) in enumerate(self.r_ends):
            self.at[i].append(k)
            self.at[j].append(k)

        # first bundles out of each terminal, with the far vertex bit (vertex mode)
        self.t_slots: list[list[tuple[int, int]]] = []
        for t in g.terminals:
            slots = []
            seen = set()
            for e in g.incident(t):
                w = g.other_end(e, t)
                b = bundle_ids[frozenset((t, w))]
                if b in seen:
                    continue
                seen.add(b)
                slots.append((b, 0 if g.is_terminal(w) else vbit[w]))
            self.t_slots.append(slots)
        self.t_bit = [vbit[t] for t in g.terminals]

    def box(self) -> tuple[int, ...]:
        if self.entire:
            return tuple(1 if self.at[i] else 0 for i in range(self.n))
        return tuple(self.g.degree(t) for t in self.g.terminals)

    def fits(self, k: int, used: list[int], vmask: int) -> bool:
        if self.r_vmask[k] & vmask:
            return False
        for b in self.r_bundles[k]:
            if used[b] >= self.cap[b]:
                return False
        return True

    def take(self, k: int, used: list[int]) -> None:
        for b in self.r_bundles[k]:
            used[b] += 1

    def give(self, k: int, used: list[int]) -> None:
        for b in self.r_bundles[k]:
            used[b] -= 1

    def free_at(self, i: int, used: list[int], vmask: int) -> int:
        """Upper bound on further path ends at terminal ``i``."""
        if self.entire:
            return 0 if vmask & self.t_bit[i] else 1
        total = 0
        for b, wbit in self.t_slots[i]:
            if wbit:
                if self.mode == VERTEX:
                    total += 0 if (vmask & wbit or used[b] >= self.cap[b]) else 1
                else:
                    total += self.cap[b] - used[b]
            else:
                total += self.cap[b] - used[b]
        return total

    def witness(self, chosen: list[int]) -> PathSystem:
        taken = [0] * len(self.cap)
        paths = []
        for k in chosen:
            edges = []
            for b in self.r_bundles[k]:
                edges.append(self.bundle_edges[b][taken[b]])
                taken[b] += 1
            paths.append(TPath(tuple(self.routes[k]), tuple(edges)))
        return PathSystem(tuple(paths), self.mode)


@lru_cache(maxsize=256)
def _router(g: Multigraph, mode: str, parts: tuple, through: bool) -> _Router:
    return _Router(g, mode, parts, through)


def get_router(g: Multigraph, mode: str, partition: PartitionArg = None,
               through_terminals: bool = False) -> _Router:
    return _router(g, check_mode(mode), as_partitions(partition), through_terminals)


def feasible_box(g: Multigraph, mode: str, partition: PartitionArg = None, *,
                 through_terminals: bool = False) -> tuple[int, ...]:
    """Per-terminal upper bounds on feasible vectors (``deg(t)``, or 1 for entirely disjoint paths)."""
    return get_router(g, mode, partition, through_terminals).box()


def realize(g: Multigraph, mode: str, m: DemandLike, partition: PartitionArg = None, *,
            through_terminals: bool = False) -> Optional[PathSystem]:
    """A disjoint path system whose demand vector is ``m``, or None.

    Exhaustive backtracking: the first terminal with remaining demand must
    be an endpoint of some further path; routes at that terminal are tried
    in canonical order, with repetition allowed only in nondecreasing order.
    Pruned by parity and by the free capacity left at each terminal.

    ``partition`` restricts to paths joining different classes (of each
    partition, if several are given); ``through_terminals`` lets edge-mode
    paths pass through terminals.
    """
    R = get_router(g, mode, partition, through_terminals)
    m = g.vector(m)
    if sum(m) % 2:
        return None
    if any(a > b for a, b in zip(m, R.box())):
        return None
    residual = list(m)
    used = [0] * len(R.cap)
    chosen: list[int] = []
    failed: set = set()

    def search(vmask: int, start_i: int, min_k: int) -> bool:
        i = start_i
        while i < R.n and residual[i] == 0:
            i += 1
            min_k = 0
        if i == R.n:
            return True
        for j in range(i, R.n):
            if residual[j] and R.free_at(j, used, vmask) < residual[j]:
                return False
        key = (tuple(residual), tuple(used), vmask, i, min_k)
        if key in failed:
            return False
        for pos in range(min_k, len(R.at[i])):
            k = R.at[i][pos]
            a, b = R.r_ends[k]
            j = b if a == i else a
            if residual[j] == 0 or not R.fits(k, used, vmask):
                continue
            R.take(k, used)
            residual[i] -= 1
            residual[j] -= 1
            chosen.append(k)
            if search(vmask | R.r_vmask[k], i, pos):
                return True
            chosen.pop()
            residual[i] += 1
            residual[j] += 1
            R.give(k, used)
        failed.add(key)
        return False

    if search(0, 0, 0):
        return R.witness(chosen)
    return None


def max_packing(g: Multigraph, mode: str, partition: PartitionArg = None, *,
                through_terminals: bool = False) -> tuple[int, PathSystem]:
    """Maximum number of pairwise disjoint T-paths, with a witness.

    Branch and bound: the lowest open terminal either receives another path
    to a later open terminal or is closed for good.  The bound is half the
    total free capacity at open terminals; the search stops as soon as the
    root bound is attained.
    """
    R = get_router(g, mode, partition, through_terminals)
    used = [0] * len(R.cap)
    chosen: list[int] = []
    best: list = [0, []]
    open_ = [bool(R.at[i]) for i in range(R.n)]

    def bound(vmask: int) -> int:
        return sum(R.free_at(i, used, vmask) for i in range(R.n) if open_[i]) // 2

    root = bound(0)

    def search(vmask: int, i: int, min_k: int) -> bool:
        while i < R.n and not open_[i]:
            i += 1
            min_k = 0
        if len(chosen) > best[0]:
            best[0], best[1] = len(chosen), list(chosen)
            if best[0] == root:
                return True
        if i == R.n or len(chosen) + bound(vmask) <= best[0]:
            return False
        for pos in range(min_k, len(R.at[i])):
            k = R.at[i][pos]
            a, b = R.r_ends[k]
            j = b if a == i else a
            if j < i or not open_[j] or not R.fits(k, used, vmask):
                continue
            R.take(k, used)
            chosen.append(k)
            done = search(vmask | R.r_vmask[k], i, pos)
            chosen.pop()
            R.give(k, used)
            if done:
                return True
        open_[i] = False
        done = search(vmask, i + 1, 0)
        open_[i] = True
        return done

    search(0, 0, 0)
    return best[0], R.witness(best[1])


def enumerate_feasible(g: Multigraph, mode: str, partition: PartitionArg = None, *,
                       through_terminals: bool = False) -> FiniteJumpSystem:
    """All feasible vectors, found by calling :func:`realize` on every
    even-sum vector of the box ``0 <= m(t) <= deg(t)``."""
    box = feasible_box(g, mode, partition, through_terminals=through_terminals)
    vecs = []
    for m in product(*(range(b + 1) for b in box)):
        if sum(m) % 2 == 0 and realize(g, mode, m, partition,
                                       through_terminals=through_terminals) is not None:
            vecs.append(m)
    return FiniteJumpSystem(tuple(g.terminals), frozenset(vecs), box)


def member_via_reduction(g: Multigraph, mode: str, m: DemandLike) -> bool:
    """Membership test through terminal copies: attach ``m(t)`` parallel
    edges from each terminal to a new copy and ask whether a maximum packing
    of paths between copies reaches ``sum(m) / 2``."""
    m = g.vector(m)
    if sum(m) % 2:
        return False
    h, _copies = augment_with_copies(g, m)
    count, _ = max_packing(h, mode)
    return count == sum(m) // 2


def reduction_agrees(g: Multigraph, mode: str, m: DemandLike) -> bool:
    """Cross-check the reduction against :func:`realize`, logging any divergence."""
    direct = realize(g, mode, m) is not None
    reduced = member_via_reduction(g, mode, m)
    if direct != reduced:
        log.warning("reduction disagrees with search on %s mode=%s m=%s: search=%s reduction=%s",
                    g.digest(), mode, g.vector(m), direct, reduced)
    return direct == reduced

