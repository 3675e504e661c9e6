import json

import pytest
from hypothesis import given, settings

from tpathjump.families import named
from tpathjump.graph import (InstanceError, TerminalPartition, augment_with_copies, build_graph,
                             cut_degree, dump_instance, load_instance)

from strategies import multigraphs

STAR = {"vertices": ["a", "b", "c", "v"], "edges": [["a", "v"], ["b", "v"], ["c", "v"]],
        "terminals": ["a", "b", "c"]}


def test_build_star_and_triangle():
    g = build_graph(STAR)
    assert (len(g.vertices), len(g.edges)) == (4, 3)
    t = named("triangle")
    assert (len(t.vertices), len(t.edges)) == (3, 3)


@pytest.mark.parametrize("bad, msg", [
    ({**STAR, "edges": [["a", "a"]]}, "loop"),
    ({**STAR, "vertices": ["a", "a", "b", "c", "v"]}, "duplicate vertex"),
    ({**STAR, "edges": [["a", "z"]]}, "not a vertex"),
    ({**STAR, "terminals": ["a", "z"]}, "not a vertex"),
    ({**STAR, "terminals": ["a", "a"]}, "duplicate terminal"),
    ({**STAR, "partitions": {"p": [["a"], ["b"]]}}, "partition"),
    ({**STAR, "partitions": {"p": [["a", "b"], ["b", "c"]]}}, "partition"),
    ({"vertices": ["a"]}, "needs"),
])
def test_build_rejects(bad, msg):
    with pytest.raises(InstanceError, match=msg):
        build_graph(bad)


def test_cut_degree_examples():
    t, s = named("triangle"), named("star")
    assert cut_degree(t, {"a"}) == 2
    assert cut_degree(s, set()) == 0
    assert cut_degree(s, {"a", "b", "v"}) == 1


@given(multigraphs())
def test_cut_degree_complement_symmetric(g):
    X = set(g.vertices[::2])
    assert cut_degree(g, X) == cut_degree(g, set(g.vertices) - X)
    assert cut_degree(g, {g.vertices[0]}) == g.degree(g.vertices[0])


def test_augment_star():
    g = named("star")
    h, copies = augment_with_copies(g, (1, 1, 0))
    assert set(h.vertices) == {"a", "b", "c", "v", "a'", "b'", "c'"}
    assert copies == ("a'", "b'", "c'") == h.terminals
    extra = sorted(tuple(sorted(e)) for e in h.edges[len(g.edges):])
    assert extra == [("a", "a'"), ("b", "b'")]
    assert h.edges[:len(g.edges)] == g.edges


def test_augment_zero_and_triangle():
    g = named("triangle")
    h, _ = augment_with_copies(g, (0, 0, 0))
    assert len(h.edges) == len(g.edges) and len(h.vertices) == 6
    h, _ = augment_with_copies(g, (2, 2, 2))
    assert len(h.edges) - len(g.edges) == 6


def test_augment_name_clash():
    g = build_graph({"vertices": ["a", "a'", "b"], "edges": [["a", "a'"], ["a'", "b"]],
                     "terminals": ["a", "b"]})
    h, copies = augment_with_copies(g, (1, 1))
    assert copies[0] == "a''" and len(set(h.vertices)) == len(h.vertices)


def test_vector_coercion():
    g = named("star")
    assert g.vector({"a": 1, "b": 1, "c": 0}) == (1, 1, 0)
    assert g.as_dict((1, 0, 1)) == {"a": 1, "b": 0, "c": 1}
    for bad in ({"a": 1}, (1, 1), (1, -1, 0), (1, 1.5, 0), (True, 0, 0)):
        with pytest.raises(InstanceError):
            g.vector(bad)
    assert g.vector((1, -1, 0), nonnegative=False) == (1, -1, 0)


def test_partitions():
    g = named("star")
    assert g.partition("singletons") == TerminalPartition.singletons("abc")
    p = g.partition("ab|c")
    assert not p.separates("a", "b") and p.separates("a", "c")
    with pytest.raises(InstanceError):
        g.partition("nope")


def test_roundtrip_and_digest(tmp_path):
    g = named("bowtie")
    f = tmp_path / "g.json"
    dump_instance(g, f)
    h = load_instance(f)
    assert h == g and h.digest() == g.digest() and hash(h) == hash(g)
    assert json.loads(f.read_text())["terminals"] == list(g.terminals)
    f.write_text("{not json")
    with pytest.raises(InstanceError, match="invalid JSON"):
        load_instance(f)


@settings(max_examples=50)
@given(multigraphs())
def test_roundtrip_property(g):
    assert build_graph(g.to_dict()) == g
