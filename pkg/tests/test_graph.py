import numpy as np
import pytest

from cyclerank.graph import (GraphParseError, build_graph, components, degree,
                             degree_moments, density, parse_edge_list,
                             to_canonical_edge_list)

from conftest import complete_graph, path_graph, star_graph, triangle
from oracles import random_graph


def test_parse_triangle():
    g = triangle()
    assert (g.n, g.m) == (3, 3)
    assert sorted(g.labels) == ["a", "b", "c"]
    assert set(map(int, g.neighbors(0))) == {1, 2}


def test_parse_dedup_and_self_loop():
    g = parse_edge_list("1 1\n1 2\n2 1")
    assert (g.n, g.m) == (2, 1)
    assert g.dedup.self_loops == 1
    assert g.dedup.duplicates == 1


def test_parse_labels_first_appearance_order():
    g = parse_edge_list("b a\nc b")
    assert g.labels == ("b", "a", "c")


def test_parse_comments_and_blank_lines():
    g = parse_edge_list("# header\n% other comment\n\na b\n\nb c\n")
    assert (g.n, g.m) == (3, 2)


def test_parse_malformed_line_reports_number():
    with pytest.raises(GraphParseError, match="line 2"):
        parse_edge_list("a b\na b c\n")


def test_parse_empty_is_error():
    with pytest.raises(GraphParseError):
        parse_edge_list("# only a comment\n")


def test_degree_star_and_triangle():
    star = star_graph(4)
    center = star.labels.index("c")
    assert degree(star, center) == 4
    assert all(degree(triangle(), i) == 2 for i in range(3))
    with pytest.raises(IndexError):
        degree(star, 99)


def test_components():
    assert components(triangle()).count == 1
    two = parse_edge_list("a b\nb c\nc a\nx y\ny z\nz x")
    lab = components(two)
    assert lab.count == 2
    assert lab.component_id[0] != lab.component_id[3]
    assert components(path_graph(5)).count == 1
    assert sorted(lab.sizes()) == [3, 3]


def test_degree_moments():
    k5 = complete_graph(5)  # 4-regular
    assert degree_moments(k5) == (4.0, 16.0)
    star3 = star_graph(3)
    assert degree_moments(star3) == (1.5, 3.0)


def test_degree_sum_is_twice_edges():
    rng = np.random.default_rng(7)
    for _ in range(20):
        g = random_graph(int(rng.integers(2, 30)), 0.3, rng)
        assert int(g.degrees.sum()) == 2 * g.m


def test_density():
    assert density(triangle()) == 1.0
    assert density(path_graph(5)) == pytest.approx(2 * 4 / (5 * 4))


def test_canonical_round_trip():
    rng = np.random.default_rng(11)
    for _ in range(10):
        g = random_graph(int(rng.integers(2, 25)), 0.4, rng)
        text = to_canonical_edge_list(g)
        if not text:
            continue
        h = parse_edge_list(text)
        assert h.m == g.m
        assert sorted(h.labels) == sorted(lab for lab in g.labels
                                          if degree(g, g.labels.index(lab)) > 0)
        assert to_canonical_edge_list(h) == text


def test_build_graph_rejects_bad_edges():
    with pytest.raises(ValueError, match="self-loop"):
        build_graph(["a", "b"], [(0, 0)])
    with pytest.raises(ValueError, match="duplicate"):
        build_graph(["a", "b"], [(0, 1), (1, 0)])
    g = build_graph(["a", "b", "c"], [(0, 1)])  # isolated node allowed
    assert (g.n, g.m) == (3, 1)
    assert degree(g, 2) == 0
