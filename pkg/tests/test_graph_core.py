import pytest

from power_domination import utils
from power_domination.errors import InvalidParameterError
from power_domination.graphs.core import (
    Graph,
    build_complete_tree,
    extend,
    extended_subtree,
    path_graph,
    star_graph,
)


@pytest.mark.parametrize(
    "m, h, vertices, edges",
    [(2, 0, 1, 0), (2, 3, 15, 14), (3, 2, 13, 12), (4, 1, 5, 4)],
)
def test_complete_tree_size(m, h, vertices, edges):
    tree = build_complete_tree(m, h)
    assert tree.vertex_count == vertices == utils.tree_order(m, h)
    assert tree.graph.edge_count == edges


def test_heap_labels():
    tree = build_complete_tree(3, 2)
    assert tree.children(0) == (1, 2, 3)
    assert tree.children(2) == (7, 8, 9)
    assert tree.children(7) == ()
    assert tree.parent(9) == 2
    assert tree.parent(0) is None
    assert tree.depth(0) == 0 and tree.depth(3) == 1 and tree.depth(12) == 2
    assert tree.level_index[8] == (2, 2)
    assert tree.leaves() == tuple(range(4, 13))


def test_single_vertex_tree_is_its_own_leaf():
    tree = build_complete_tree(2, 0)
    assert tree.leaves() == (0,)
    assert tree.children(0) == ()


@pytest.mark.parametrize("m, h", [(1, 2), (0, 0), (2, -1), (True, 2), (2.0, 1)])
def test_rejects_bad_parameters(m, h):
    with pytest.raises(InvalidParameterError):
        build_complete_tree(m, h)


def test_extend_adds_pendant_stem():
    t = extend(build_complete_tree(2, 3))
    assert t.vertex_count == 16
    assert t.graph.edge_count == 15
    assert t.stem == 15
    assert t.graph.adjacency[t.stem] == (0,)
    assert t.monitor_mask == (1 << 15) - 1


def test_extend_height_zero_is_a_path():
    t = extend(build_complete_tree(2, 0))
    assert t.graph == path_graph(2)


def test_extend_height_one_is_star_with_pendant():
    t = extend(build_complete_tree(3, 1))
    assert t.graph.adjacency[0] == (1, 2, 3, 4)
    assert all(t.graph.degree(v) == 1 for v in range(1, 5))
    assert t.graph.induced(range(4)) == star_graph(3)


def test_first_extended_subtree_of_t_plus_2_3():
    view = extended_subtree(extend(build_complete_tree(2, 3)), 1)
    assert view.tree.vertex_count == 8
    assert set(view.vertex_map) == {0, 1, 3, 4, 7, 8, 9, 10}
    assert view.vertex_map[view.tree.root] == 1
    assert view.vertex_map[view.tree.stem] == 0


def test_subtree_of_height_one_tree():
    view = extended_subtree(extend(build_complete_tree(2, 1)), 2)
    assert view.tree.h == 0
    assert view.vertex_map == (2, 0)


def test_subtree_preserves_edges():
    tree = build_complete_tree(3, 2)
    view = extended_subtree(tree, 3)
    for u, v in view.tree.graph.edges():
        a, b = view.vertex_map[u], view.vertex_map[v]
        assert b in tree.graph.adjacency[a]


@pytest.mark.parametrize("m, h", [(2, 1), (2, 3), (3, 2)])
def test_subtrees_cover_tree_and_meet_at_root(m, h):
    tree = build_complete_tree(m, h)
    views = [extended_subtree(tree, i) for i in range(1, m + 1)]

    union = 0
    for view in views:
        union |= view.image_mask
    assert union == tree.graph.full_mask

    for a in range(m):
        for b in range(a + 1, m):
            assert views[a].image_mask & views[b].image_mask == 1 << tree.root


def test_restrict_and_lift():
    tree = build_complete_tree(2, 2)
    view = extended_subtree(tree, 2)
    parent_mask = utils.bits_to_mask([0, 1, 5])
    local = view.restrict(parent_mask)
    assert view.lift(local) == utils.bits_to_mask([0, 5])


@pytest.mark.parametrize("index", [0, 3, True, "1"])
def test_subtree_index_out_of_range(index):
    with pytest.raises(InvalidParameterError):
        extended_subtree(build_complete_tree(2, 2), index)


def test_height_zero_has_no_subtrees():
    with pytest.raises(InvalidParameterError):
        extended_subtree(build_complete_tree(3, 0), 1)


def test_from_edges_validation():
    with pytest.raises(InvalidParameterError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(InvalidParameterError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(InvalidParameterError):
        Graph.from_edges(3, [(0, 1), (1, 0)])


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(InvalidParameterError):
        Graph(2, ((1,), ()))
    with pytest.raises(InvalidParameterError):
        Graph(2, ((1, 1), (0,)))


def test_edge_list_text():
    assert path_graph(3).edge_list_text() == "0 1\n1 2\n"
    assert list(star_graph(2).edges()) == [(0, 1), (0, 2)]


def test_graphs_are_values():
    assert path_graph(4) == Graph.from_edges(4, [(2, 3), (0, 1), (1, 2)])
    assert hash(path_graph(4)) == hash(path_graph(4))


@pytest.mark.parametrize("m", [2, 3, 4, 5])
@pytest.mark.parametrize("h", [0, 1, 2, 3, 4])
def test_vertex_count_formula(m, h):
    tree = build_complete_tree(m, h)
    assert tree.vertex_count == sum(m**depth for depth in range(h + 1))
    assert tree.vertex_count == (m ** (h + 1) - 1) // (m - 1)
    assert tree.graph.edge_count == tree.vertex_count - 1
    assert len(tree.leaves()) == m**h


@pytest.mark.parametrize("extended", [False, True])
@pytest.mark.parametrize("m, h", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)])
def test_vertex_map_relabels_onto_canonical_subtree(m, h, extended):
    tree = build_complete_tree(m, h)
    parent = extend(tree) if extended else tree
    for i in range(1, m + 1):
        view = extended_subtree(parent, i)
        assert len(set(view.vertex_map)) == view.tree.vertex_count

        inverse = {v: u for u, v in enumerate(view.vertex_map)}
        kept = sorted(view.vertex_map)
        induced = parent.graph.induced(view.vertex_map)
        relabeled = {frozenset((inverse[kept[a]], inverse[kept[b]])) for a, b in induced.edges()}
        assert relabeled == {frozenset(edge) for edge in view.tree.graph.edges()}
