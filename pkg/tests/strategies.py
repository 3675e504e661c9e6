from hypothesis import strategies as st

from tpathjump.graph import TerminalPartition, build_graph

NAMES = "abcdef"


@st.composite
def multigraphs(draw, min_vertices=2, max_vertices=5, max_edges=7, max_terminals=4):
    n = draw(st.integers(min_vertices, max_vertices))
    names = list(NAMES[:n])
    pairs = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), min_size=1, max_size=max_edges))
    k = draw(st.integers(2, min(max_terminals, n)))
    terminals = draw(st.lists(st.sampled_from(names), min_size=k, max_size=k, unique=True))
    return build_graph({"vertices": names, "edges": [list(e) for e in edges],
                        "terminals": sorted(terminals)})


@st.composite
def graphs_with_partition(draw, **kwargs):
    g = draw(multigraphs(**kwargs))
    labels = draw(st.lists(st.integers(0, 2), min_size=len(g.terminals),
                           max_size=len(g.terminals)))
    classes = {}
    for t, l in zip(g.terminals, labels):
        classes.setdefault(l, []).append(t)
    return g, TerminalPartition.from_lists(classes.values())


def vectors(n, lo=0, hi=3):
    return st.lists(st.integers(lo, hi), min_size=n, max_size=n).map(tuple)
