import json
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liebasis.errors import NotATree, NotPartitionable, ParseError
from liebasis.graphs import LabeledDigraph, connected, edge_cuts, path_graph, star_graph, to_dot
from liebasis.partition import Leaf, full_partition
from liebasis.words import enumerate_lyndon_by_length


def test_star_aaab():
    g = star_graph(full_partition("aaab"))
    assert g.vertices == ((0, "a"), (1, "a"), (2, "a"), (3, "b"))
    assert g.edges == ((0, 3), (1, 3), (2, 3))
    assert g.anchor == 3


def test_star_aabcb():
    g = star_graph("aabcb")
    # a -> b <- a, that b -> c, c -> anchor b
    assert set(g.edges) == {(0, 2), (1, 2), (2, 3), (3, 4)}
    assert g.anchor == 4
    assert g.labels[4] == "b"


def test_star_ababb():
    g = star_graph("ababb")
    assert set(g.edges) == {(0, 1), (2, 3), (1, 4), (3, 4)}
    assert g.anchor == 4


def test_star_leaf():
    g = star_graph(Leaf("x"))
    assert g.vertices == ((0, "x"),)
    assert g.edges == ()
    assert g.anchor == 0


def test_star_requires_full_partition():
    with pytest.raises(NotPartitionable):
        star_graph("abab")


@pytest.mark.parametrize("n", range(1, 10))
def test_star_graph_shape(n):
    for w in enumerate_lyndon_by_length("ab", n):
        g = star_graph(w)
        assert len(g) == n
        assert len(g.edges) == n - 1
        assert g.is_tree()
        assert "".join(c for _, c in g.vertices) == w
        assert Counter(c for _, c in g.vertices) == Counter(w)


def test_connected_examples():
    g = star_graph("aaab")
    assert connected(g, {0, 3})
    assert not connected(g, {0, 1})
    assert connected(g, {2})
    assert connected(g, set())
    with pytest.raises(ValueError):
        connected(g, {7})


def test_edge_cuts_aaab():
    cuts = edge_cuts(star_graph("aaab"))
    assert len(cuts) == 3
    for (u, v), (g1, g2) in cuts:
        assert g1.content == ("a",)
        assert g2.content == ("a", "a", "b")
        assert g2.anchor == 3 and g1.anchor is None
        assert u in g1.labels and v in g2.labels


def test_edge_cuts_aababb_unique_aab_abb_split():
    cuts = edge_cuts(star_graph("aababb"))
    split = [c for c in cuts if {c[1].g1.content, c[1].g2.content} == {("a", "a", "b"), ("a", "b", "b")}]
    assert len(split) == 1


def test_edge_cuts_single_vertex_and_cycle():
    assert edge_cuts(star_graph("b")) == []
    tri = LabeledDigraph(((0, "a"), (1, "b"), (2, "c")), ((0, 1), (1, 2), (2, 0)))
    with pytest.raises(NotATree):
        edge_cuts(tri)


def _is_in_tree(g):
    """Every vertex but one root has exactly one outgoing edge; underlying graph a tree."""
    out = Counter(u for u, _ in g.edges)
    roots = [i for i in g.ids if out[i] == 0]
    return g.is_tree() and len(roots) == 1 and all(out[i] <= 1 for i in g.ids)


@pytest.mark.parametrize("n", range(2, 10))
def test_cut_pieces_are_in_trees(n):
    """Cut pieces keep the star-graph shape: edges all flow toward a single root.

    The root of the head side is the old anchor; the root of the tail side is
    the tail of the removed edge.
    """
    for w in enumerate_lyndon_by_length("ab", n):
        g = star_graph(w)
        assert _is_in_tree(g)
        for (u, _), (g1, g2) in edge_cuts(g):
            assert _is_in_tree(g1) and _is_in_tree(g2)
            assert g2.anchor == g.anchor
            assert u in g1.labels and not any(x == u for x, _ in g1.edges)


def test_cut_piece_need_not_be_labelled_star_graph():
    # cutting a -> b off star(abb) leaves b -> b, which is no word's star graph
    (_, (g1, g2)), = [c for c in edge_cuts(star_graph("abb")) if c[0] == (0, 1)]
    assert g2.content == ("b", "b") and len(g2.edges) == 1
    from liebasis.partition import fully_partitions

    assert not fully_partitions("bb")


def test_json_roundtrip():
    g = star_graph("aababb")
    data = g.to_json()
    assert data["format"] == 1
    assert data["anchor"] == 5
    assert LabeledDigraph.from_json(json.dumps(data)) == g
    with pytest.raises(ParseError):
        LabeledDigraph.from_json({"vertices": [{"id": 0}]})


def test_digraph_validation():
    with pytest.raises(ValueError):
        LabeledDigraph(((0, "a"), (0, "b")), ())
    with pytest.raises(ValueError):
        LabeledDigraph(((0, "a"),), ((0, 0),))
    with pytest.raises(ValueError):
        LabeledDigraph(((0, "a"),), ((0, 1),))


def test_dot_export():
    dot = to_dot(star_graph("ab"))
    assert 'v1 [label="b", shape=doublecircle];' in dot
    assert "v0 -> v1;" in dot
    assert to_dot(star_graph("x")).count("label=") == 1
    big = to_dot(star_graph("ababb"))
    assert big.count("label=") == 5 and big.count("->") == 4
    assert big == to_dot(star_graph("ababb"))


def test_path_graph():
    g = path_graph("abca")
    assert g.edges == ((0, 1), (1, 2), (2, 3))
    assert g.anchor is None


@given(st.text(alphabet="abc", min_size=1, max_size=11))
def test_star_label_multiset_matches_content(w):
    try:
        t = full_partition(w)
    except NotPartitionable:
        return
    g = star_graph(t)
    assert Counter(c for _, c in g.vertices) == Counter(w)
    assert g.is_tree()
    assert g.anchor is not None
