"""Independent brute-force oracles the solver is checked against.

Everything here enumerates rather than searches cleverly: trees are all
edge subsets that form trees, packings are maximized by trying every
compatible combination, and vertex cuts are tried in increasing size.
Nothing is shared with the solver's code paths.
"""

from itertools import combinations

from treepack.graph import Graph, bits, from_adj
from treepack.packing import DisjointnessMode

PENDANT = (DisjointnessMode.INTERNAL_PENDANT, DisjointnessMode.EDGE_PENDANT)
INTERNAL = (DisjointnessMode.INTERNAL_PENDANT, DisjointnessMode.INTERNAL_PLAIN)


def edge_subset_is_tree(edge_set):
    verts = set()
    for u, v in edge_set:
        verts.add(u)
        verts.add(v)
    if len(edge_set) != len(verts) - 1:
        return False
    adj = {v: [] for v in verts}
    for u, v in edge_set:
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(verts))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for w in adj[x]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(verts)


def all_trees(g: Graph):
    """Every edge subset of g forming a tree, with its vertex mask."""
    edges = g.edges()
    out = []
    for size in range(1, g.n):
        for combo in combinations(edges, size):
            if edge_subset_is_tree(combo):
                vmask = 0
                for u, v in combo:
                    vmask |= (1 << u) | (1 << v)
                out.append((frozenset(combo), vmask))
    return out


def _tree_ok(combo, vmask, smask, pendant):
    if smask & ~vmask:
        return False
    if pendant:
        for s in bits(smask):
            if sum(1 for u, v in combo if s in (u, v)) != 1:
                return False
    return True


def _compatible(a, b, mode, smask):
    ta, va = a
    tb, vb = b
    if ta & tb:
        return False
    if mode in INTERNAL and (va & vb) != smask:
        return False
    return True


def oracle_local(g: Graph, terminals, mode: DisjointnessMode,
                 trees=None) -> int:
    """Maximum packing size by exhaustive combination search.

    The only pruning beyond the running best is a handshake fact: every
    tree of a packing uses at least one edge at every terminal and the
    trees are edge-disjoint, so the free degree at any terminal bounds
    the number of trees still addable.
    """
    smask = terminals if isinstance(terminals, int) else sum(1 << v for v in terminals)
    if trees is None:
        trees = all_trees(g)
    pendant = mode in PENDANT
    cand = [(t, v) for t, v in trees if _tree_ok(t, v, smask, pendant)]
    cand.sort(key=lambda tv: (len(tv[0]), sorted(tv[0])))
    term_list = list(bits(smask))
    degs = {s: g.degree(s) for s in term_list}
    best = 0

    def rec(start, chosen, used_at):
        nonlocal best
        if len(chosen) > best:
            best = len(chosen)
        room = min(degs[s] - used_at[s] for s in term_list)
        if len(chosen) + min(room, len(cand) - start) <= best:
            return
        for i in range(start, len(cand)):
            c = cand[i]
            if all(_compatible(c, other, mode, smask) for other in chosen):
                chosen.append(c)
                for u, v in c[0]:
                    for s in (u, v):
                        if s in used_at:
                            used_at[s] += 1
                rec(i + 1, chosen, used_at)
                for u, v in c[0]:
                    for s in (u, v):
                        if s in used_at:
                            used_at[s] -= 1
                chosen.pop()

    rec(0, [], {s: 0 for s in term_list})
    return best


def oracle_vertex_connectivity(g: Graph) -> int:
    """Smallest vertex set whose removal disconnects g or leaves one vertex."""
    n = g.n
    if n == 1:
        return 0
    for size in range(n - 1):
        for cut in combinations(range(n), size):
            cut_mask = sum(1 << v for v in cut)
            rest = g.vertex_mask() & ~cut_mask
            if rest.bit_count() <= 1:
                return size
            start = (rest & -rest).bit_length() - 1
            seen = 1 << start
            frontier = seen
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= g.adj[v]
                frontier = nxt & rest & ~seen
                seen |= frontier
            if seen != rest:
                return size
    return n - 1


def all_labeled_graphs(n: int):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield from_adj(n, adj)


def random_connected_graph(rng, n_min=4, n_max=8):
    from treepack.graph import is_connected

    while True:
        n = rng.randint(n_min, n_max)
        p = rng.uniform(0.3, 0.85)
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        g = from_adj(n, adj)
        if is_connected(g):
            return g
