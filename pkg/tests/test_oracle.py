"""Exhaustive-enumeration oracle: counting, moments, engine certification."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from motifmoments import (
    LabeledGraph,
    PatternGraph,
    builtin,
    count_subgraphs,
    exact_moments,
    relabel,
    verify,
)
from motifmoments.oracle import (
    VerificationCheck,
    VerificationReport,
    _check_enumeration_size,
    pair_index,
)

F = Fraction


def complete_graph(n):
    return LabeledGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def test_pair_index_is_row_major_upper_triangle():
    n = 5
    expected = 0
    for u in range(n):
        for v in range(u + 1, n):
            assert pair_index(u, v, n) == expected
            assert pair_index(v, u, n) == expected
            expected += 1
    assert expected == n * (n - 1) // 2


def test_labeled_graph_round_trip():
    g = LabeledGraph.from_edges(4, [(0, 1), (2, 3)])
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert g.has_edge(2, 3)
    assert not g.has_edge(0, 2)
    rows = g.adjacency_rows()
    assert rows[0] == 0b0010
    assert rows[3] == 0b0100


def test_count_subgraphs_examples():
    assert count_subgraphs(complete_graph(3), builtin("edge")) == 3
    assert count_subgraphs(complete_graph(4), builtin("triangle")) == 4
    path3 = LabeledGraph.from_edges(3, [(0, 1), (1, 2)])
    assert count_subgraphs(path3, builtin("wedge")) == 1
    assert count_subgraphs(path3, builtin("triangle")) == 0


def test_count_subgraphs_non_induced_semantics():
    # the triangle contains 3 wedges even though all image pairs are adjacent
    assert count_subgraphs(complete_graph(3), builtin("wedge")) == 3


def test_count_subgraphs_pattern_larger_than_graph():
    assert count_subgraphs(complete_graph(2), builtin("triangle")) == 0


def test_count_subgraphs_with_isolated_vertex():
    # edge plus isolated vertex: 3 edges x 1 leftover node in K3
    pattern = PatternGraph(3, [(0, 1)])
    assert count_subgraphs(complete_graph(3), pattern) == 3


graph_masks = st.integers(min_value=0, max_value=2**10 - 1)


@given(graph_masks)
def test_edge_count_equals_popcount(mask):
    g = LabeledGraph(5, mask)
    assert count_subgraphs(g, builtin("edge")) == mask.bit_count()


@given(graph_masks, st.data())
def test_count_invariant_under_graph_relabeling(mask, data):
    n = 5
    perm = data.draw(st.permutations(range(n)))
    g = LabeledGraph(n, mask)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if g.has_edge(u, v)]
    relabeled = LabeledGraph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])
    for name in ("edge", "wedge", "triangle"):
        assert count_subgraphs(g, builtin(name)) == count_subgraphs(
            relabeled, builtin(name)
        )


@given(graph_masks, st.data())
def test_count_invariant_under_pattern_relabeling(mask, data):
    g = LabeledGraph(5, mask)
    pattern = builtin("wedge")
    perm = data.draw(st.permutations(range(3)))
    assert count_subgraphs(g, relabel(pattern, perm)) == count_subgraphs(g, pattern)


@given(graph_masks, st.integers(min_value=0, max_value=9))
def test_adding_an_edge_never_decreases_counts(mask, extra_bit):
    g = LabeledGraph(5, mask)
    bigger = LabeledGraph(5, mask | (1 << extra_bit))
    for name in ("edge", "wedge", "triangle", "square"):
        assert count_subgraphs(bigger, builtin(name)) >= count_subgraphs(g, builtin(name))


def test_exact_moments_triangle_n3():
    result = exact_moments(builtin("triangle"), builtin("triangle"), 3)
    assert result.mean_a == F(1, 8)
    assert result.covariance == F(7, 64)
    assert result.second_moment == F(1, 8)  # Bernoulli: count squared equals count


def test_exact_moments_node_deterministic():
    result = exact_moments(builtin("node"), builtin("node"), 5)
    assert result.mean_a == 5
    assert result.covariance == 0


def test_exact_moments_edge_triangle_n3():
    result = exact_moments(builtin("edge"), builtin("triangle"), 3)
    assert result.covariance == F(3, 16)
    assert result.mean_a == F(3, 2)  # C(3,2)/2 edges expected
    assert result.mean_b == F(1, 8)


def test_exact_moments_identity():
    result = exact_moments(builtin("edge"), builtin("wedge"), 4)
    assert result.covariance == result.second_moment - result.mean_a * result.mean_b


def test_enumeration_caps():
    with pytest.raises(ValueError, match=r"2\*\*36 = 68719476736"):
        exact_moments(builtin("k4"), builtin("k4"), 9)
    with pytest.raises(ValueError, match="not supported"):
        _check_enumeration_size(5, node_cap=8)
    with pytest.raises(ValueError, match="cap of 7"):
        _check_enumeration_size(8, node_cap=7)
    with pytest.warns(UserWarning, match=r"2\*\*21 = 2097152"):
        _check_enumeration_size(7, node_cap=7)
    with pytest.raises(ValueError, match=">= 0"):
        _check_enumeration_size(-1, node_cap=6)
    _check_enumeration_size(6, node_cap=6)  # at the cap: no error, no warning


def test_verify_triangle():
    report = verify(builtin("triangle"), builtin("triangle"), [3, 4, 5])
    assert report.all_match
    quantities = {check.quantity for check in report.checks}
    assert quantities == {"mean", "variance"}
    assert len(report.checks) == 6


def test_verify_node_all_zero_covariance():
    report = verify(builtin("node"), builtin("node"), range(1, 6))
    assert report.all_match
    for check in report.checks:
        if check.quantity == "variance":
            assert check.oracle_value == 0


def test_verify_wedge_degenerate_sizes():
    report = verify(builtin("wedge"), builtin("wedge"), [0, 1, 2])
    assert report.all_match
    for check in report.checks:
        assert check.engine_value == 0


def test_verify_pair_quantities():
    report = verify(builtin("edge"), builtin("triangle"), [3])
    assert report.all_match
    assert {check.quantity for check in report.checks} == {
        "mean[A]",
        "mean[B]",
        "covariance",
    }
    cov = next(c for c in report.checks if c.quantity == "covariance")
    assert cov.engine_value == cov.oracle_value == F(3, 16)


def test_verification_report_mismatch_detection():
    good = VerificationCheck(3, "mean", F(1, 8), F(1, 8))
    bad = VerificationCheck(3, "variance", F(1, 8), F(7, 64))
    assert good.matches and not bad.matches
    report = VerificationReport(builtin("triangle"), builtin("triangle"), (good, bad))
    assert not report.all_match


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=4))
def test_oracle_matches_engine_for_disconnected_pattern(n):
    pattern = PatternGraph(3, [(0, 1)])
    report = verify(pattern, pattern, [n])
    assert report.all_match


@st.composite
def small_patterns(draw, max_vertices=4):
    k = draw(st.integers(1, max_vertices))
    pairs = [(u, v) for u in range(k) for v in range(u + 1, k)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return PatternGraph(k, edges)


@settings(max_examples=25, deadline=None)
@given(small_patterns(), small_patterns())
def test_oracle_matches_engine_for_random_pattern_pairs(pattern_a, pattern_b):
    report = verify(pattern_a, pattern_b, range(5))
    assert report.all_match, report.checks


@pytest.mark.parametrize(
    "name_a,name_b",
    [
        (a, b)
        for i, a in enumerate(("node", "edge", "wedge", "triangle", "square", "k4"))
        for b in ("node", "edge", "wedge", "triangle", "square", "k4")[i:]
    ],
)
def test_central_theorem_every_builtin_pair(name_a, name_b):
    # engine == oracle for every builtin pair at every enumerable n
    report = verify(builtin(name_a), builtin(name_b), range(6))
    assert report.all_match, (name_a, name_b, report.checks)
