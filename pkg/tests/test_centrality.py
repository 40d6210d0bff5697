import numpy as np
import pytest

from cyclerank.centrality import bc_scores, core_numbers, coreness_scores, dc_scores
from cyclerank.graph import build_graph, parse_edge_list

from conftest import complete_graph, path_graph, star_graph, triangle
from oracles import bc_oracle, coreness_oracle, random_graph


def test_dc_star_and_triangle():
    star = star_graph(4)
    dc = dc_scores(star)
    assert dc.scores[star.labels.index("c")] == 4
    assert sorted(dc.scores) == [1, 1, 1, 1, 4]
    assert np.array_equal(dc_scores(triangle()).scores, np.full(3, 2.0))


def test_coreness_tree_and_isolated():
    tree = path_graph(6)
    assert np.array_equal(core_numbers(tree), np.ones(6, dtype=np.int64))
    withiso = build_graph(["a", "b", "c"], [(0, 1)])
    assert core_numbers(withiso).tolist() == [1, 1, 0]


def test_coreness_k4_and_pendant():
    assert np.array_equal(core_numbers(complete_graph(4)), np.full(4, 3))
    g = parse_edge_list("n0 n1\nn0 n2\nn0 n3\nn1 n2\nn1 n3\nn2 n3\nn0 leaf")
    core = core_numbers(g)
    assert core[g.labels.index("leaf")] == 1
    for name in ("n0", "n1", "n2", "n3"):
        assert core[g.labels.index(name)] == 3


def test_coreness_matches_peeling_oracle():
    rng = np.random.default_rng(53)
    for _ in range(20):
        g = random_graph(int(rng.integers(2, 12)), float(rng.uniform(0.2, 0.6)), rng)
        assert np.array_equal(core_numbers(g), coreness_oracle(g))


def test_coreness_invariants():
    rng = np.random.default_rng(59)
    g = random_graph(40, 0.12, rng)
    core = core_numbers(g)
    assert np.all(core <= g.degrees)
    for k in range(1, int(core.max()) + 1):
        survivors = {v for v in range(g.n) if core[v] >= k}
        for v in survivors:
            inside = sum(1 for w in g.neighbors(v) if int(w) in survivors)
            assert inside >= k


def test_bc_star_and_path():
    star = star_graph(4)
    bc = bc_scores(star)
    assert bc.scores[star.labels.index("c")] == 6.0  # C(4, 2) leaf pairs
    assert all(bc.scores[i] == 0.0 for i in range(star.n)
               if star.labels[i] != "c")
    p3 = path_graph(3)
    assert sorted(bc_scores(p3).scores) == [0.0, 0.0, 1.0]


def test_bc_matches_path_enumeration_oracle():
    rng = np.random.default_rng(61)
    for _ in range(15):
        g = random_graph(10, 0.4, rng)
        got = bc_scores(g).scores
        want = bc_oracle(g)
        assert np.allclose(got, want, rtol=1e-12, atol=1e-12)


def test_scores_split_across_components():
    left = "a b\nb c\nc a\nc d"
    right = "x y\ny z"
    combined = parse_edge_list(left + "\n" + right)
    gl, gr = parse_edge_list(left), parse_edge_list(right)
    for fn in (dc_scores, coreness_scores, bc_scores):
        whole = fn(combined)
        parts = {**dict(zip(gl.labels, fn(gl).scores)),
                 **dict(zip(gr.labels, fn(gr).scores))}
        for lab, score in zip(combined.labels, whole.scores):
            assert score == pytest.approx(parts[lab], abs=1e-12)


def test_rank_order_tie_break_by_label():
    g = parse_edge_list("b a\nc a\nb c")  # triangle, all degree 2
    order = dc_scores(g).order
    assert [g.labels[i] for i in order] == ["a", "b", "c"]
