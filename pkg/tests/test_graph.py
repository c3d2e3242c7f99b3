import random
from itertools import combinations, permutations

import pytest

from treepack.graph import (
    InputError,
    bits,
    build_graph,
    complement,
    degree,
    edge_boundary,
    edge_disjoint_paths,
    induced_subgraph,
    is_connected,
    local_vertex_connectivity,
    mask_of,
    max_degree,
    min_degree,
    vertex_connectivity,
    vertex_disjoint_paths,
)
from treepack.generators import (
    complete,
    complete_bipartite,
    cycle,
    empty,
    harary,
    join,
    path,
    wheel,
)

from oracles import all_labeled_graphs, oracle_vertex_connectivity, random_connected_graph


def test_build_graph_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.edge_count == 3
    assert g.edges() == [(0, 1), (0, 2), (1, 2)]


def test_build_graph_edgeless_and_duplicates():
    assert build_graph(4, []).edge_count == 0
    g = build_graph(2, [(0, 1), (1, 0)])
    assert g.edge_count == 1


def test_build_graph_rejects_bad_input():
    with pytest.raises(InputError):
        build_graph(3, [(0, 3)])
    with pytest.raises(InputError):
        build_graph(3, [(1, 1)])
    with pytest.raises(InputError):
        build_graph(0, [])


def test_complement_basics():
    assert complement(complete(5)).edge_count == 0
    assert complement(empty(4)) == complete(4)


def test_cycle5_self_complementary():
    # explicit isomorphism 0->0, 1->2, 2->4, 3->1, 4->3
    c5 = cycle(5)
    comp = complement(c5)
    relabel = {0: 0, 1: 2, 2: 4, 3: 1, 4: 3}
    mapped = build_graph(5, [(relabel[u], relabel[v]) for u, v in c5.edges()])
    assert mapped == comp


def test_complement_involution_and_size_identity():
    rng = random.Random(1)
    for _ in range(100):
        g = random_connected_graph(rng, 2, 8)
        assert complement(complement(g)) == g
        assert g.edge_count + complement(g).edge_count == g.n * (g.n - 1) // 2


def test_degrees():
    assert min_degree(complete(6)) == max_degree(complete(6)) == 5
    star = complete_bipartite(1, 3)
    assert min_degree(star) == 1 and max_degree(star) == 3
    h = harary(8, 3)
    assert min_degree(h) == max_degree(h) == 3
    assert degree(complete(4), 2) == 3
    with pytest.raises(InputError):
        degree(complete(4), 4)


def test_is_connected():
    assert is_connected(path(5))
    two_k2 = build_graph(4, [(0, 1), (2, 3)])
    assert not is_connected(two_k2)
    assert is_connected(build_graph(1, []))


def test_vertex_connectivity_examples():
    assert vertex_connectivity(complete(5)) == 4
    assert vertex_connectivity(harary(10, 4)) == 4
    assert vertex_connectivity(join(complete(1), cycle(4))) == 3  # wheel hub + C4
    assert vertex_connectivity(build_graph(1, [])) == 0
    assert vertex_connectivity(build_graph(4, [(0, 1), (2, 3)])) == 0


def test_vertex_connectivity_against_bruteforce_small():
    for n in (2, 3, 4, 5):
        for g in all_labeled_graphs(n):
            assert vertex_connectivity(g) == oracle_vertex_connectivity(g)


def test_vertex_connectivity_against_bruteforce_n6():
    for g in all_labeled_graphs(6):
        assert vertex_connectivity(g) == oracle_vertex_connectivity(g)


def test_kappa_at_most_delta_and_zero_iff_disconnected():
    rng = random.Random(2)
    for _ in range(1000):
        n = rng.randint(2, 8)
        p = rng.random()
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if rng.random() < p]
        g = build_graph(n, edges)
        k = vertex_connectivity(g)
        assert k <= min_degree(g)
        assert (k == 0) == (not is_connected(g))


def test_join_connectivity_law_random_pairs():
    rng = random.Random(3)
    for _ in range(60):
        a = random_connected_graph(rng, 2, 5)
        b = random_connected_graph(rng, 2, 5)
        got = vertex_connectivity(join(a, b))
        want = min(a.n + vertex_connectivity(b), b.n + vertex_connectivity(a))
        assert got == want


def test_edge_boundary():
    k4 = complete(4)
    assert edge_boundary(k4, [0], [1, 2, 3]) == [(0, 1), (0, 2), (0, 3)]
    two_k2 = build_graph(4, [(0, 1), (2, 3)])
    assert edge_boundary(two_k2, [0, 1], [2, 3]) == []
    k33 = complete_bipartite(3, 3)
    assert len(edge_boundary(k33, [0, 1, 2], [3, 4, 5])) == 9
    with pytest.raises(InputError):
        edge_boundary(k4, [0, 1], [1, 2])


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def test_induced_subgraph():
    sub, labels = induced_subgraph(complete(5), [0, 2, 4])
    assert sub == complete(3) and labels == [0, 2, 4]
    sub, _ = induced_subgraph(cycle(6), [0, 2, 4])
    assert sub.edge_count == 0
    sub, _ = induced_subgraph(petersen(), [0, 1, 2, 3, 4])
    assert sub == cycle(5)
    with pytest.raises(InputError):
        induced_subgraph(complete(3), [])


def test_menger_paths_are_witnesses():
    rng = random.Random(4)
    for _ in range(80):
        g = random_connected_graph(rng, 3, 7)
        u, v = rng.sample(range(g.n), 2)
        paths = vertex_disjoint_paths(g, u, v)
        assert len(paths) == local_vertex_connectivity(g, u, v)
        interiors = []
        for p in paths:
            assert p[0] == u and p[-1] == v and len(set(p)) == len(p)
            for a, b in zip(p, p[1:]):
                assert g.has_edge(a, b)
            interiors.append(set(p[1:-1]))
        for i, j in combinations(range(len(paths)), 2):
            assert not interiors[i] & interiors[j]
        epaths = edge_disjoint_paths(g, u, v)
        used = set()
        for p in epaths:
            assert p[0] == u and p[-1] == v and len(set(p)) == len(p)
            for a, b in zip(p, p[1:]):
                assert g.has_edge(a, b)
                e = (min(a, b), max(a, b))
                assert e not in used
                used.add(e)


def test_mask_helpers():
    assert mask_of([0, 2, 5]) == 0b100101
    assert list(bits(0b100101)) == [0, 2, 5]
