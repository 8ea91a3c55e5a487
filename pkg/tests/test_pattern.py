"""Pattern parsing, builtin generators, relabeling, and validation rules."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from motifmoments import (
    PatternGraph,
    builtin,
    builtin_names,
    parse_adjacency_matrix,
    parse_edge_list,
    relabel,
    to_adjacency_text,
    to_edge_list_text,
)

TRIANGLE_MATRIX = "0 1 1\n1 0 1\n1 1 0"


def test_parse_adjacency_triangle():
    p = parse_adjacency_matrix(TRIANGLE_MATRIX)
    assert p.vertex_count == 3
    assert p.edges == frozenset({(0, 1), (0, 2), (1, 2)})


def test_parse_adjacency_single_node():
    p = parse_adjacency_matrix("0")
    assert p.vertex_count == 1
    assert p.edge_count == 0


def test_parse_adjacency_rejections_are_distinct():
    with pytest.raises(ValueError, match="diagonal"):
        parse_adjacency_matrix("0 1\n1 1")
    with pytest.raises(ValueError, match="symmetric"):
        parse_adjacency_matrix("0 1\n0 0")
    with pytest.raises(ValueError, match="0 or 1"):
        parse_adjacency_matrix("0 2\n2 0")
    with pytest.raises(ValueError, match="square"):
        parse_adjacency_matrix("0 1 0\n1 0")
    with pytest.raises(ValueError, match="empty"):
        parse_adjacency_matrix("   \n  ")


def test_parse_edge_list_wedge():
    p = parse_edge_list("3\n0 1\n1 2")
    assert p.vertex_count == 3
    assert p.edges == frozenset({(0, 1), (1, 2)})


def test_parse_edge_list_deduplicates():
    p = parse_edge_list("2\n0 1\n1 0")
    assert p.edge_count == 1


def test_parse_edge_list_rejections():
    with pytest.raises(ValueError, match="out of range"):
        parse_edge_list("2\n0 2")
    with pytest.raises(ValueError, match="self-loop"):
        parse_edge_list("3\n1 1")
    with pytest.raises(ValueError, match="expected 'u v'"):
        parse_edge_list("3\n0 1 2")
    with pytest.raises(ValueError, match="integers"):
        parse_edge_list("3\n0 x")
    with pytest.raises(ValueError, match="vertex count"):
        parse_edge_list("x\n0 1")


def test_builtin_fixed_patterns():
    assert builtin("triangle").vertex_count == 3
    assert builtin("triangle").edge_count == 3
    assert builtin("square").edge_count == 4
    assert builtin("k4") == builtin("clique:4")
    assert builtin("wedge") == builtin("path:3")
    assert builtin("square") == builtin("cycle:4")
    assert builtin("node").vertex_count == 1


@pytest.mark.parametrize("size", range(1, 8))
def test_builtin_edge_counts_match_closed_forms(size):
    assert builtin(f"clique:{size}").edge_count == size * (size - 1) // 2
    assert builtin(f"path:{size}").edge_count == size - 1
    if size + 1 <= 8:
        star = builtin(f"star:{size}")
        assert star.vertex_count == size + 1
        assert star.edge_count == size
    if size >= 3:
        assert builtin(f"cycle:{size}").edge_count == size


def test_builtin_rejections():
    with pytest.raises(ValueError, match="unknown builtin"):
        builtin("pentagon")
    with pytest.raises(ValueError, match="K >= 3"):
        builtin("cycle:2")
    with pytest.raises(ValueError, match="positive integer"):
        builtin("clique:x")
    with pytest.raises(ValueError, match="maximum"):
        builtin("clique:9")
    with pytest.raises(ValueError, match="maximum"):
        builtin("star:8")


def test_pattern_graph_validation():
    with pytest.raises(ValueError, match="at least one vertex"):
        PatternGraph(0)
    with pytest.raises(ValueError, match="self-loop"):
        PatternGraph(3, [(1, 1)])
    with pytest.raises(ValueError, match="out of range"):
        PatternGraph(2, [(0, 2)])


def test_relabel():
    wedge = builtin("wedge")  # path 0-1-2, center 1
    assert relabel(wedge, (2, 1, 0)) == wedge
    assert relabel(wedge, (0, 1, 2)) == wedge
    rotated = relabel(wedge, (1, 2, 0))  # center moves to vertex 2
    assert rotated.edges == frozenset({(1, 2), (0, 2)})
    with pytest.raises(ValueError, match="bijection"):
        relabel(wedge, (0, 0, 1))


def test_round_trip_builtins():
    for name in builtin_names():
        p = builtin(name)
        assert parse_adjacency_matrix(to_adjacency_text(p)) == p
        assert parse_edge_list(to_edge_list_text(p)) == p


@st.composite
def patterns(draw, min_vertices=1, max_vertices=6):
    k = draw(st.integers(min_vertices, max_vertices))
    pairs = [(u, v) for u in range(k) for v in range(u + 1, k)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return PatternGraph(k, edges)


@given(patterns())
def test_round_trip_random_patterns(p):
    assert parse_adjacency_matrix(to_adjacency_text(p)) == p
    assert parse_edge_list(to_edge_list_text(p)) == p
