"""Named instances and the instance families used by the verification battery.

The exhaustive family contains every connected graph on 2 to 5 vertices
(from the networkx graph atlas), both as a simple graph and with each
possible single edge doubled, with at most 8 edges, and every terminal set
of size 2 to 4, all taken up to isomorphism.  Random instances are seeded.
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from functools import lru_cache
from typing import Any

import networkx as nx

from .graph import Multigraph, build_graph

__all__ = [
    "NAMED",
    "exhaustive_family",
    "even_degree_family",
    "named",
    "random_family",
    "random_instance",
]

_LETTERS = "abcdefghijklmnopqrstuvwxyz"

NAMED: dict[str, dict[str, Any]] = {
    "star": {
        "vertices": ["a", "b", "c", "v"],
        "edges": [["a", "v"], ["b", "v"], ["c", "v"]],
        "terminals": ["a", "b", "c"],
        "partitions": {"singletons": [["a"], ["b"], ["c"]], "ab|c": [["a", "b"], ["c"]]},
    },
    "triangle": {
        "vertices": ["a", "b", "c"],
        "edges": [["a", "b"], ["b", "c"], ["c", "a"]],
        "terminals": ["a", "b", "c"],
        "partitions": {"singletons": [["a"], ["b"], ["c"]], "ab|c": [["a", "b"], ["c"]]},
    },
    "path": {
        "vertices": ["a", "x", "y", "b"],
        "edges": [["a", "x"], ["x", "y"], ["y", "b"]],
        "terminals": ["a", "b"],
    },
    "edge": {
        "vertices": ["a", "b"],
        "edges": [["a", "b"]],
        "terminals": ["a", "b"],
    },
    "square": {
        "vertices": ["a", "x", "b", "y"],
        "edges": [["a", "x"], ["x", "b"], ["b", "y"], ["y", "a"]],
        "terminals": ["a", "b"],
    },
    "square4": {
        "vertices": ["a", "b", "c", "d"],
        "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]],
        "terminals": ["a", "b", "c", "d"],
        "partitions": {"ac|bd": [["a", "c"], ["b", "d"]], "ab|cd": [["a", "b"], ["c", "d"]]},
    },
    # two triangles joined by a doubled bridge: every degree is even
    "bowtie": {
        "vertices": ["a", "b", "u", "v", "c", "d"],
        "edges": [["a", "b"], ["b", "u"], ["u", "a"], ["u", "v"], ["u", "v"],
                  ["v", "c"], ["c", "d"], ["d", "v"]],
        "terminals": ["a", "b", "c", "d"],
        "partitions": {"ab|cd": [["a", "b"], ["c", "d"]], "ac|bd": [["a", "c"], ["b", "d"]]},
    },
    "k4": {
        "vertices": ["a", "b", "c", "d"],
        "edges": [["a", "b"], ["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"], ["c", "d"]],
        "terminals": ["a", "b", "c", "d"],
    },
    # triangle with every edge doubled (all degrees 4)
    "fat_triangle": {
        "vertices": ["a", "b", "c"],
        "edges": [["a", "b"], ["a", "b"], ["b", "c"], ["b", "c"], ["c", "a"], ["c", "a"]],
        "terminals": ["a", "b", "c"],
        "partitions": {"ab|c": [["a", "b"], ["c"]]},
    },
    # wheel-like: hub with a 4-cycle rim, terminals on the rim (degrees 4,3,3,3,3)
    "wheel": {
        "vertices": ["h", "a", "b", "c", "d"],
        "edges": [["h", "a"], ["h", "b"], ["h", "c"], ["h", "d"],
                  ["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]],
        "terminals": ["a", "b", "c", "d"],
    },
    # even-degree graph on 8 vertices: two 4-cycles sharing vertex x, plus a chord triangle
    "twin_squares": {
        "vertices": ["a", "p", "x", "q", "b", "r", "c", "s"],
        "edges": [["a", "p"], ["p", "x"], ["x", "q"], ["q", "a"],
                  ["b", "r"], ["r", "x"], ["x", "s"], ["s", "b"],
                  ["a", "c"], ["c", "b"], ["a", "b"]],
        "terminals": ["a", "b", "c"],
        "partitions": {"ab|c": [["a", "b"], ["c"]]},
    },
}


def named(name: str) -> Multigraph:
    return build_graph(NAMED[name])


def _to_multigraph(G: nx.MultiGraph, terminals: list[int]) -> Multigraph:
    name = {v: _LETTERS[i] for i, v in enumerate(sorted(G.nodes))}
    edges = sorted((min(name[u], name[v]), max(name[u], name[v])) for u, v in G.edges())
    return build_graph({
        "vertices": [name[v] for v in sorted(G.nodes)],
        "edges": [list(e) for e in edges],
        "terminals": sorted(name[t] for t in terminals),
    })


def _nx_view(g: Multigraph) -> nx.Graph:
    H = nx.Graph()
    for v in g.vertices:
        H.add_node(v, terminal=g.is_terminal(v))
    for u, v in g.edges:
        if H.has_edge(u, v):
            H[u][v]["mult"] += 1
        else:
            H.add_edge(u, v, mult=1)
    return H


def _dedupe(graphs: list[Multigraph]) -> list[Multigraph]:
    kept: dict[tuple, list[tuple[Multigraph, nx.Graph]]] = {}
    out = []
    for g in graphs:
        H = _nx_view(g)
        key = (len(g.vertices), len(g.edges), len(g.terminals),
               tuple(sorted(g.degree(v) for v in g.vertices)),
               tuple(sorted(g.degree(t) for t in g.terminals)))
        bucket = kept.setdefault(key, [])
        if any(nx.is_isomorphic(H, H2, node_match=lambda a, b: a["terminal"] == b["terminal"],
                                edge_match=lambda a, b: a["mult"] == b["mult"])
               for _, H2 in bucket):
            continue
        bucket.append((g, H))
        out.append(g)
    return out


@lru_cache(maxsize=None)
def exhaustive_family(max_vertices: int = 5, max_edges: int = 8, max_terminals: int = 4,
                      parallel: bool = True) -> tuple[Multigraph, ...]:
    from itertools import combinations

    raw = []
    for G in nx.graph_atlas_g():
        n = G.number_of_nodes()
        if n < 2 or n > max_vertices or not nx.is_connected(G):
            continue
        variants = []
        if G.number_of_edges() <= max_edges:
            variants.append(nx.MultiGraph(G))
        if parallel and G.number_of_edges() + 1 <= max_edges:
            for u, v in G.edges():
                M = nx.MultiGraph(G)
                M.add_edge(u, v)
                variants.append(M)
        for M in variants:
            for k in range(2, min(max_terminals, n) + 1):
                for T in combinations(sorted(M.nodes), k):
                    raw.append(_to_multigraph(M, list(T)))
    return tuple(_dedupe(raw))


def random_instance(rng: random.Random, min_vertices: int = 4, max_vertices: int = 6,
                    max_edges: int = 8, max_terminals: int = 4,
                    even: bool = False) -> Multigraph:
    """A connected multigraph with exactly one parallel pair (or an even-degree one)."""
    while True:
        n = rng.randint(min_vertices, max_vertices)
        names = list(_LETTERS[:n])
        edges = []
        for i in range(1, n):
            edges.append((names[rng.randrange(i)], names[i]))
        simple_target = rng.randint(n - 1, max_edges - 1)
        pairs = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
        rng.shuffle(pairs)
        present = {frozenset(e) for e in edges}
        for u, v in pairs:
            if len(edges) >= simple_target:
                break
            if frozenset((u, v)) not in present:
                present.add(frozenset((u, v)))
                edges.append((u, v))
        edges.append(rng.choice(edges))
        if even:
            deg = {v: 0 for v in names}
            for u, v in edges:
                deg[u] += 1
                deg[v] += 1
            if any(d % 2 for d in deg.values()) or len(edges) > max_edges + 2:
                continue
        k = rng.randint(2, min(max_terminals, n))
        T = sorted(rng.sample(names, k))
        return build_graph({"vertices": names, "edges": [list(e) for e in edges], "terminals": T})


def random_family(count: int, seed: int = 0, **kwargs: Any) -> list[Multigraph]:
    rng = random.Random(seed)
    return [random_instance(rng, **kwargs) for _ in range(count)]


def even_degree_family() -> list[Multigraph]:
    """Instances where every vertex has even degree, with a second partition when useful."""
    out = [named(n) for n in ("triangle", "square", "square4", "bowtie", "fat_triangle",
                              "twin_squares")]
    return out


def iter_partitions(g: Multigraph) -> Iterator[tuple[str, Any]]:
    """Singletons plus one two-class partition (first terminal against the rest)."""
    from .graph import TerminalPartition

    yield "singletons", TerminalPartition.singletons(g.terminals)
    if len(g.terminals) >= 3:
        t0 = g.terminals[0]
        yield "split", TerminalPartition.from_lists([[t0], list(g.terminals[1:])])
