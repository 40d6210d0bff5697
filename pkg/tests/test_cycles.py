import numpy as np
import pytest

from cyclerank.cycles import (basic_cycles, bcr_scores, cycle_matrix,
                              dump_basic_cycles, nc_scores, spanning_forest)
from cyclerank.graph import components, parse_edge_list

from conftest import (complete_graph, cycle_graph, path_graph, triangle,
                      two_triangles_shared)
from oracles import (brute_basic_cycle_sets, brute_cycle_counts,
                     brute_ratio_scores, random_graph)


def cyclomatic(g):
    return g.m - g.n + components(g).count


def test_forest_on_tree_has_no_chords():
    g = path_graph(6)
    for seed in range(5):
        f = spanning_forest(g, seed)
        assert len(f.non_tree_edges) == 0
        assert len(f.tree_edges) == g.n - 1


def test_forest_on_triangle_has_one_chord():
    f = spanning_forest(triangle(), 0)
    assert len(f.non_tree_edges) == 1


def test_forest_counts_on_random_graph():
    rng = np.random.default_rng(3)
    g = random_graph(20, 0.3, rng)
    for seed in range(5):
        f = spanning_forest(g, seed)
        assert len(f.non_tree_edges) == cyclomatic(g)


def test_forest_structure_invariants():
    rng = np.random.default_rng(5)
    for _ in range(10):
        g = random_graph(int(rng.integers(2, 25)), 0.25, rng)
        f = spanning_forest(g, int(rng.integers(0, 100)))
        comp = components(g)
        sizes = comp.sizes()
        per_comp = np.zeros(comp.count, dtype=int)
        for u, v in f.tree_edges:
            assert comp.component_id[u] == comp.component_id[v]
            per_comp[comp.component_id[u]] += 1
        assert all(per_comp[c] == sizes[c] - 1 for c in range(comp.count))
        for v in range(g.n):
            if f.parent[v] < 0:
                assert f.depth[v] == 0
            else:
                assert f.depth[v] == f.depth[f.parent[v]] + 1
        # parent pointers are acyclic: walking up always terminates
        for v in range(g.n):
            hops, x = 0, v
            while f.parent[x] >= 0:
                x = int(f.parent[x])
                hops += 1
                assert hops <= g.n


def test_forest_determinism():
    g = random_graph(15, 0.4, np.random.default_rng(1))
    f1 = spanning_forest(g, 7)
    f2 = spanning_forest(g, 7)
    assert np.array_equal(f1.parent, f2.parent)
    assert np.array_equal(f1.non_tree_edges, f2.non_tree_edges)


def test_basic_cycles_c4_single_ring():
    g = cycle_graph(4)
    for seed in range(5):
        cycles = basic_cycles(g, spanning_forest(g, seed))
        assert len(cycles) == 1
        assert cycles.cycle(0).nodes == {0, 1, 2, 3}


def test_basic_cycles_triangle():
    g = triangle()
    cycles = basic_cycles(g, spanning_forest(g, 42))
    assert [c.nodes for c in cycles] == [{0, 1, 2}]


def test_basic_cycles_k4_sizes():
    g = complete_graph(4)
    for seed in range(10):
        cycles = basic_cycles(g, spanning_forest(g, seed))
        assert len(cycles) == 3
        assert all(len(c.nodes) in (3, 4) for c in cycles)


def test_nc_examples():
    tree = path_graph(5)
    nc_tree = nc_scores(basic_cycles(tree, spanning_forest(tree, 0)), tree.labels)
    assert np.array_equal(nc_tree.scores, np.zeros(5))

    tri = triangle()
    nc_tri = nc_scores(basic_cycles(tri, spanning_forest(tri, 0)), tri.labels)
    assert np.array_equal(nc_tri.scores, np.ones(3))

    shared = two_triangles_shared()
    for seed in range(5):
        nc = nc_scores(basic_cycles(shared, spanning_forest(shared, seed)),
                       shared.labels)
        x = shared.labels.index("x")
        assert nc.scores[x] == 2
        assert all(nc.scores[i] == 1 for i in range(shared.n) if i != x)


def test_cycle_matrix_examples():
    tri = triangle()
    cm = cycle_matrix(basic_cycles(tri, spanning_forest(tri, 0)), tri.n)
    assert all(cm.entry(i, j) == 1 for i in range(3) for j in range(3))

    tree = path_graph(4)
    cm_tree = cycle_matrix(basic_cycles(tree, spanning_forest(tree, 0)), tree.n)
    assert cm_tree.counts.nnz == 0

    shared = two_triangles_shared()
    lab = {name: shared.labels.index(name) for name in "xabcd"}
    cm2 = cycle_matrix(basic_cycles(shared, spanning_forest(shared, 1)), shared.n)
    assert cm2.entry(lab["x"], lab["x"]) == 2
    assert cm2.entry(lab["x"], lab["a"]) == 1
    assert cm2.entry(lab["a"], lab["b"]) == 1
    assert cm2.entry(lab["a"], lab["c"]) == 0


def test_bcr_examples():
    tri = triangle()
    bcr = bcr_scores(cycle_matrix(basic_cycles(
        tri, spanning_forest(tri, 0)), tri.n), tri.labels)
    assert np.array_equal(bcr.scores, np.full(3, 3.0))

    tree = path_graph(6)
    bcr_tree = bcr_scores(cycle_matrix(basic_cycles(
        tree, spanning_forest(tree, 0)), tree.n), tree.labels)
    assert np.array_equal(bcr_tree.scores, np.zeros(6))

    c5 = cycle_graph(5)
    bcr_c5 = bcr_scores(cycle_matrix(basic_cycles(
        c5, spanning_forest(c5, 3)), c5.n), c5.labels)
    assert np.array_equal(bcr_c5.scores, np.full(5, 5.0))


def test_cyclomatic_invariant_many_seeds():
    rng = np.random.default_rng(17)
    graphs = [triangle(), cycle_graph(6), complete_graph(5)]
    graphs += [random_graph(int(rng.integers(2, 20)), 0.35, rng) for _ in range(5)]
    for g in graphs:
        expected = cyclomatic(g)
        for seed in range(10):
            cycles = basic_cycles(g, spanning_forest(g, seed))
            assert len(cycles) == expected


def test_diag_matches_nc_and_threshold_properties():
    rng = np.random.default_rng(23)
    for _ in range(10):
        g = random_graph(int(rng.integers(3, 18)), 0.4, rng)
        for seed in (0, 1, 42):
            cycles = basic_cycles(g, spanning_forest(g, seed))
            cm = cycle_matrix(cycles, g.n)
            nc = nc_scores(cycles, g.labels)
            assert np.array_equal(cm.diag, nc.scores.astype(np.int64))
            bcr = bcr_scores(cm, g.labels)
            for i in range(g.n):
                row = cm.row(i)
                if cm.diag[i] == 0:
                    assert bcr.scores[i] == 0.0
                    continue
                assert bcr.scores[i] >= 1.0
                support = len(row)
                assert bcr.scores[i] <= support + 1e-9
                if all(row[j] == cm.diag[j] for j in row):
                    assert bcr.scores[i] == pytest.approx(support)
                else:
                    assert bcr.scores[i] < support


def test_bcr_determinism_is_bytewise():
    g = random_graph(30, 0.2, np.random.default_rng(2))
    runs = []
    for _ in range(2):
        cm = cycle_matrix(basic_cycles(g, spanning_forest(g, 42)), g.n)
        runs.append(bcr_scores(cm, g.labels).scores.tobytes())
    assert runs[0] == runs[1]


def test_matches_brute_force_oracle():
    rng = np.random.default_rng(31)
    for _ in range(25):
        g = random_graph(int(rng.integers(3, 9)), float(rng.uniform(0.3, 0.6)), rng)
        forest = spanning_forest(g, int(rng.integers(0, 1000)))
        cycles = basic_cycles(g, forest)
        cm = cycle_matrix(cycles, g.n)
        oracle_sets = brute_basic_cycle_sets(forest)
        assert sorted(tuple(sorted(c.nodes)) for c in cycles) == sorted(
            tuple(sorted(s)) for s in oracle_sets)
        counts = brute_cycle_counts(oracle_sets)
        for i in range(g.n):
            for j in range(g.n):
                assert cm.entry(i, j) == counts.get((i, j), 0)
        expected = brute_ratio_scores(counts, g.n)
        got = bcr_scores(cm, g.labels).scores
        assert np.array_equal(got, expected)


def test_dump_is_sorted_and_stable():
    g = two_triangles_shared()
    cycles = basic_cycles(g, spanning_forest(g, 42))
    dump = dump_basic_cycles(cycles, g.labels)
    lines = dump.strip().splitlines()
    assert lines == sorted(lines)
    assert len(lines) == 2
    for line in lines:
        tokens = line.split()
        assert tokens == sorted(tokens)
