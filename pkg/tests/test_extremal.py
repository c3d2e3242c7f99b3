import pytest

from treepack.extremal import (
    Budget,
    Strategy,
    complement_shapes,
    enumerate_graphs,
    f_min_edges,
    lower_bound_edges,
    shape_complement_graph,
)
from treepack.generators import complete, complete_bipartite, path
from treepack.graph import InputError, complement, is_connected
from treepack.packing import tau

from oracles import all_labeled_graphs


def test_enumerate_graphs_examples():
    got = list(enumerate_graphs(4, 3, min_deg=1, min_kappa=1))
    assert path(4) in got
    assert complete_bipartite(1, 3) in got
    from treepack.graph import build_graph
    triangle_plus_isolated = build_graph(4, [(0, 1), (0, 2), (1, 2)])
    assert triangle_plus_isolated not in got
    assert list(enumerate_graphs(5, 10)) == [complete(5)]
    with pytest.raises(InputError):
        list(enumerate_graphs(4, 7))


def test_enumerate_counts_connected_on_four_vertices():
    want = sum(1 for g in all_labeled_graphs(4) if is_connected(g))
    assert want == 38
    got = sum(len(list(enumerate_graphs(4, m, require_connected=True)))
              for m in range(0, 7))
    assert got == 38


def test_enumeration_is_complete_per_edge_count():
    import math

    for m in range(0, 7):
        got = len(list(enumerate_graphs(4, m)))
        assert got == math.comb(6, m)


def test_lower_bound_edges():
    assert lower_bound_edges(7, 3, 0) == 6
    assert lower_bound_edges(6, 3, 1) == 9
    assert lower_bound_edges(10, 3, 5) == 35


def test_sparse_examples():
    rec = f_min_edges(7, 3, 0, Strategy.SPARSE_ASC)
    assert rec.f_value == 6 and rec.exhaustive and rec.status == "exact"
    assert tau(rec.witness, 3) == 0
    rec = f_min_edges(6, 3, 1, Strategy.SPARSE_ASC)
    assert rec.f_value == 9 and rec.exhaustive
    assert tau(rec.witness, 3) == 1
    assert rec.witness.edge_count == 9


def test_sparse_guards_large_orders():
    with pytest.raises(InputError):
        f_min_edges(8, 3, 1, Strategy.SPARSE_ASC)
    with pytest.raises(InputError):
        f_min_edges(9, 3, 1, Strategy.SPARSE_ASC, long_runs=True)


def test_dense_examples():
    rec = f_min_edges(8, 3, 5, Strategy.DENSE_DESC)
    assert rec.f_value == 28 and rec.witness == complete(8)
    rec = f_min_edges(8, 3, 4, Strategy.DENSE_DESC)
    assert rec.f_value == 26
    assert complement(rec.witness).edge_count == 2
    assert tau(rec.witness, 3) == 4
    with pytest.raises(InputError):
        f_min_edges(10, 3, 3, Strategy.DENSE_DESC)  # n-k-l too large


def test_strategies_agree_where_both_run():
    for (n, k, l) in ((6, 3, 1), (6, 3, 2), (6, 3, 3), (7, 3, 2), (7, 3, 3),
                      (7, 4, 1), (7, 4, 2)):
        sparse = f_min_edges(n, k, l, Strategy.SPARSE_ASC)
        dense = f_min_edges(n, k, l, Strategy.DENSE_DESC)
        assert sparse.f_value == dense.f_value, (n, k, l)
        assert sparse.exhaustive and dense.exhaustive


def test_construction_only_certifies_floor_matches():
    rec = f_min_edges(9, 3, 2, Strategy.CONSTRUCTION_ONLY)
    assert rec.status == "exact" and rec.f_value == 18 and rec.exhaustive
    rec = f_min_edges(12, 3, 1, Strategy.CONSTRUCTION_ONLY)
    assert rec.status == "exact" and rec.f_value == 18
    rec = f_min_edges(11, 3, 0, Strategy.CONSTRUCTION_ONLY)
    assert rec.status == "exact" and rec.f_value == 10
    # a gap between floor and best construction stays unresolved
    rec = f_min_edges(12, 3, 2, Strategy.CONSTRUCTION_ONLY)
    assert rec.status in ("exact", "unresolved")
    if rec.status == "unresolved":
        assert rec.f_value is None and rec.upper_bound is not None


def test_budget_exhaustion_is_flagged():
    rec = f_min_edges(7, 3, 1, Strategy.SPARSE_ASC, Budget(max_graphs=0))
    assert rec.status == "budget-exhausted"
    assert not rec.exhaustive and rec.f_value is None


def test_infeasible_target():
    rec = f_min_edges(2, 2, 0, Strategy.SPARSE_ASC)
    assert rec.status == "infeasible" and rec.f_value is None and rec.exhaustive


def test_records_respect_bounds_and_witnesses():
    for (n, k, l, strategy) in ((6, 3, 1, Strategy.SPARSE_ASC),
                                (7, 3, 3, Strategy.DENSE_DESC),
                                (8, 3, 4, Strategy.DENSE_DESC)):
        rec = f_min_edges(n, k, l, strategy)
        assert rec.f_value >= lower_bound_edges(n, k, l)
        assert rec.f_value >= n - 1
        assert tau(rec.witness, k) == l
        assert rec.witness.edge_count == rec.f_value


def test_record_json_line():
    rec = f_min_edges(6, 3, 1, Strategy.DENSE_DESC)
    line = rec.to_json_line()
    assert '"f":9' in line and '"exhaustive":true' in line and '"witness"' in line


def test_complement_shapes_cover_bounded_degree_graphs():
    # every labeled 5-vertex graph with max degree <= 2 matches some shape
    import collections

    def shape_key(g):
        comps = []
        seen = 0
        for v in range(g.n):
            if seen >> v & 1 or g.degree(v) == 0:
                continue
            from treepack.graph import reachable_mask

            m = reachable_mask(g, v)
            seen |= m
            size = m.bit_count()
            inner = sum(1 for u in range(g.n) if m >> u & 1 and g.degree(u) == 2)
            kind = "C" if inner == size else "P"
            comps.append((kind, size))
        return tuple(sorted(comps))

    for c in range(0, 6):
        shapes = {tuple(sorted(s)) for s in complement_shapes(5, c, 2)}
        seen = set()
        for g in all_labeled_graphs(5):
            if g.edge_count == c and max(g.degree(v) for v in range(5)) <= 2:
                seen.add(shape_key(g))
        assert seen == shapes, c
        for s in shapes:
            built = shape_complement_graph(5, list(s))
            assert shape_key(built) == s
