"""Exact solvers for pendant and plain Steiner-tree packing numbers.

Three packing regimes are supported, named by the pairwise constraint
between the trees of a packing:

* ``INTERNAL_PENDANT`` -- terminals are leaves of every tree; trees are
  pairwise edge-disjoint and meet only in the terminal set.
* ``EDGE_PENDANT`` -- terminals are leaves; trees are pairwise
  edge-disjoint but may share internal vertices.
* ``INTERNAL_PLAIN`` -- no leaf requirement; trees are pairwise
  edge-disjoint and meet only in the terminal set.

For a terminal pair all three regimes degenerate to path packing and
are solved by max flow.  For three or more terminals the solver runs an
iterative-deepening backtrack over candidate trees in a fixed canonical
order, which kills the permutation symmetry between trees.  Structural
facts the search relies on:

* a pendant tree with >= 3 terminals contains no terminal-terminal
  edge, so it is exactly "a connected internal set dominating S plus
  one attachment edge per terminal";
* in the internal regimes trees interact only through their internal
  vertex sets and (without the leaf rule) terminal-terminal edges, so
  candidates can be tabulated once per terminal set;
* restricting to candidates from which no single internal vertex or
  terminal-terminal edge can be dropped never lowers the packing
  number: a tree in a packing can always be replaced by a minimal one
  using a subset of its own resources.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .graph import (
    Graph,
    InputError,
    bits,
    edge_disjoint_paths,
    is_connected,
    mask_connected,
    min_degree,
    vertex_connectivity,
    vertex_disjoint_paths,
)


class DisjointnessMode(Enum):
    INTERNAL_PENDANT = "tau"
    EDGE_PENDANT = "mu"
    INTERNAL_PLAIN = "kappa"


PENDANT_MODES = (DisjointnessMode.INTERNAL_PENDANT, DisjointnessMode.EDGE_PENDANT)
INTERNAL_MODES = (DisjointnessMode.INTERNAL_PENDANT, DisjointnessMode.INTERNAL_PLAIN)


@dataclass(frozen=True)
class SteinerTree:
    """A tree subgraph covering a terminal set, stored as sorted edges."""

    edges: tuple[tuple[int, int], ...]
    terminals: int

    @property
    def vertex_mask(self) -> int:
        m = 0
        for u, v in self.edges:
            m |= (1 << u) | (1 << v)
        return m


@dataclass(frozen=True)
class TreePacking:
    trees: tuple[SteinerTree, ...]
    mode: DisjointnessMode
    terminals: int

    def __len__(self):
        return len(self.trees)


@dataclass(frozen=True)
class ConnectivityResult:
    """A global packing number with its minimizing set and witness."""

    value: int
    minimizing_terminals: int
    witness: TreePacking


# --- witness checking --------------------------------------------------


def _tree_reach(edges) -> int:
    adj: dict[int, list[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = edges[0][0]
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    m = 0
    for v in seen:
        m |= 1 << v
    return m


def _tree_violation(g: Graph, tree: SteinerTree, pendant: bool) -> str | None:
    edges = tree.edges
    if not edges:
        return "empty-tree"
    if len(set(edges)) != len(edges):
        return "duplicate-edge"
    deg: dict[int, int] = {}
    for u, v in edges:
        if u == v or not (0 <= u < g.n and 0 <= v < g.n):
            return "bad-edge"
        if not g.has_edge(u, v):
            return "edge-not-in-graph"
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    vmask = tree.vertex_mask
    if tree.terminals & ~vmask:
        return "terminal-missing"
    if _tree_reach(edges) != vmask:
        return "not-connected"
    if len(edges) != vmask.bit_count() - 1:
        return "has-cycle"
    if pendant:
        for t in bits(tree.terminals):
            if deg.get(t, 0) != 1:
                return "terminal-not-leaf"
    return None


def packing_violation(g: Graph, p: TreePacking) -> str | None:
    """Reason code when the packing fails against ``g``, else None."""
    pendant = p.mode in PENDANT_MODES
    for tree in p.trees:
        if tree.terminals != p.terminals:
            return "terminal-mismatch"
        reason = _tree_violation(g, tree, pendant)
        if reason:
            return reason
    seen: set[tuple[int, int]] = set()
    for tree in p.trees:
        for e in tree.edges:
            if e in seen:
                return "shared-edge"
            seen.add(e)
    if p.mode in INTERNAL_MODES:
        for a, b in combinations(p.trees, 2):
            if a.vertex_mask & b.vertex_mask != p.terminals:
                return "shared-internal-vertex"
    return None


def verify_packing(g: Graph, p: TreePacking) -> bool:
    """True iff every packing invariant holds against ``g``."""
    return packing_violation(g, p) is None


# --- candidate tables (|S| >= 3) ----------------------------------------


class _LazyList:
    """Materializes an ascending generator only as far as a search walks it."""

    __slots__ = ("_it", "items", "done")

    def __init__(self, iterator):
        self._it = iterator
        self.items: list = []
        self.done = False

    def get(self, i: int):
        items = self.items
        while not self.done and len(items) <= i:
            try:
                items.append(next(self._it))
            except StopIteration:
                self.done = True
        return items[i] if i < len(items) else None


def _pendant_candidates(g: Graph, smask: int, pool: int) -> _LazyList:
    """Connected S-dominating internal sets with no droppable vertex.

    Yielded in ascending mask order; searches that only need to find a
    packing touch a short prefix, and only an exhausted search pays for
    the full enumeration.
    """
    term_adj = [g.adj[s] for s in bits(smask)]
    positions = list(bits(pool))

    def conn_dom(m: int) -> bool:
        if m == 0:
            return False
        for a in term_adj:
            if not a & m:
                return False
        return mask_connected(g, m)

    def generate():
        for j in range(1, 1 << len(positions)):
            m = 0
            jj = j
            idx = 0
            while jj:
                if jj & 1:
                    m |= 1 << positions[idx]
                jj >>= 1
                idx += 1
            if conn_dom(m) and not any(conn_dom(m & ~(1 << v)) for v in bits(m)):
                yield m

    return _LazyList(generate())


class _PlainCandidates:
    """(internal set, terminal-terminal edge set) candidates for plain trees.

    A pair (I, F) is feasible when the graph on S | I whose edges are the
    non-terminal-terminal edges of g plus F is connected.  Minimality makes
    every F-edge a bridge there, so any spanning tree consumes exactly F.
    """

    def __init__(self, g: Graph, smask: int, pool: int):
        self.g = g
        self.smask = smask
        self.terminals = list(bits(smask))
        self.ss_edges = [
            (u, v) for u, v in combinations(self.terminals, 2) if g.has_edge(u, v)
        ]
        # static rows with terminal-terminal edges stripped
        self.rows = {}
        for v in bits(smask | pool):
            row = g.adj[v]
            if smask >> v & 1:
                row &= ~smask
            self.rows[v] = row
        self._conn_memo: dict[tuple[int, int], bool] = {}
        self.items = self._enumerate(pool)
        # per-terminal mask of incident ss-edge indices, for pruning
        self.ss_at = {s: 0 for s in self.terminals}
        for i, (u, v) in enumerate(self.ss_edges):
            self.ss_at[u] |= 1 << i
            self.ss_at[v] |= 1 << i

    def _connected(self, imask: int, fmask: int) -> bool:
        key = (imask, fmask)
        hit = self._conn_memo.get(key)
        if hit is not None:
            return hit
        verts = self.smask | imask
        extra: dict[int, int] = {}
        fm = fmask
        while fm:
            i = (fm & -fm).bit_length() - 1
            fm ^= fm & -fm
            u, v = self.ss_edges[i]
            extra[u] = extra.get(u, 0) | (1 << v)
            extra[v] = extra.get(v, 0) | (1 << u)
        start = (verts & -verts).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self.rows[v] | extra.get(v, 0)
            frontier = nxt & verts & ~seen
            seen |= frontier
        ok = seen == verts
        self._conn_memo[key] = ok
        return ok

    def _enumerate(self, pool: int):
        n_ss = len(self.ss_edges)
        items = []
        imasks = [0]
        sub = pool
        while sub:
            imasks.append(sub)
            sub = (sub - 1) & pool
        for imask in imasks:
            for fmask in range(1 << n_ss):
                if not self._connected(imask, fmask):
                    continue
                if any(self._connected(imask, fmask & ~(1 << i))
                       for i in range(n_ss) if fmask >> i & 1):
                    continue  # an F-edge is redundant
                if any(self._connected(imask & ~(1 << v), fmask)
                       for v in bits(imask)):
                    continue  # an internal vertex is redundant
                items.append((imask, fmask))
        items.sort()
        return items


def _materialize_pendant_tree(g: Graph, smask: int, imask: int) -> SteinerTree:
    edges = []
    seen = imask & -imask
    while seen != imask:  # grow a spanning tree over the internal set
        for v in bits(seen):
            nxt = g.adj[v] & imask & ~seen
            if nxt:
                w = (nxt & -nxt).bit_length() - 1
                edges.append((v, w) if v < w else (w, v))
                seen |= 1 << w
                break
    for s in bits(smask):
        w = (g.adj[s] & imask)
        w = (w & -w).bit_length() - 1
        edges.append((s, w) if s < w else (w, s))
    return SteinerTree(tuple(sorted(edges)), smask)


def _materialize_plain_tree(g: Graph, smask: int, imask: int, fmask: int,
                            ss_edges) -> SteinerTree:
    verts = smask | imask
    parent = {v: v for v in bits(verts)}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    chosen = [ss_edges[i] for i in range(len(ss_edges)) if fmask >> i & 1]
    rest = [
        (u, v)
        for u, v in combinations(bits(verts), 2)
        if g.has_edge(u, v) and not ((smask >> u & 1) and (smask >> v & 1))
    ]
    edges = []
    for u, v in chosen + rest:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            edges.append((u, v) if u < v else (v, u))
    return SteinerTree(tuple(sorted(edges)), smask)


# --- backtracking searches ----------------------------------------------


def _search_internal(cands: _LazyList, terminals, adj, pool: int,
                     target: int) -> list[int] | None:
    """Pick ``target`` pairwise-disjoint candidate masks, values ascending."""
    chosen: list[int] = []

    def rec(start: int, used: int) -> bool:
        need = target - len(chosen)
        if need == 0:
            return True
        free = pool & ~used
        if free.bit_count() < need:
            return False
        for s in terminals:
            if (adj[s] & free).bit_count() < need:
                return False
        i = start
        while True:
            m = cands.get(i)
            if m is None:
                return False
            if not m & used:
                chosen.append(m)
                if rec(i + 1, used | m):
                    return True
                chosen.pop()
            i += 1

    return chosen if rec(0, 0) else None


def _search_plain(table: _PlainCandidates, pool: int, target: int):
    chosen: list[tuple[int, int]] = []
    g, terminals = table.g, table.terminals

    def rec(start: int, used_i: int, used_f: int) -> bool:
        need = target - len(chosen)
        if need == 0:
            return True
        free = pool & ~used_i
        for s in terminals:
            cap = (g.adj[s] & free).bit_count() + (table.ss_at[s] & ~used_f).bit_count()
            if cap < need:
                return False
        for idx in range(start, len(table.items)):
            imask, fmask = table.items[idx]
            if (imask & used_i) or (fmask & used_f):
                continue
            chosen.append((imask, fmask))
            if rec(idx + 1, used_i | imask, used_f | fmask):
                return True
            chosen.pop()
        return False

    return chosen if rec(0, 0, 0) else None


class _EdgePendantSearch:
    """Backtracking over explicit pendant trees, edge-disjoint only.

    Trees of a packing are ordered by the attachment neighbour of the
    smallest terminal; those neighbours are distinct because the
    attachment edges are.  Candidate trees never carry an internal leaf,
    so every packing can be rewritten over enumerated candidates.
    """

    def __init__(self, g: Graph, smask: int, pool: int):
        self.g = g
        self.smask = smask
        self.pool = pool
        self.terminals = list(bits(smask))
        self.s0 = self.terminals[0]
        self.others = self.terminals[1:]
        self.edge_index = {e: i for i, e in enumerate(g.edges())}

    def _eid(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def _avail(self, used: int, u: int, v: int) -> bool:
        return not used >> self._eid(u, v) & 1

    def _spanning_trees(self, verts: tuple[int, ...], used: int):
        es = [
            (u, v)
            for u, v in combinations(verts, 2)
            if self.g.has_edge(u, v) and self._avail(used, u, v)
        ]
        need = len(verts) - 1
        if need == 0:
            yield ()
            return
        for combo in combinations(es, need):
            parent = {v: v for v in verts}

            def find(a):
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                return a

            ok = True
            for u, v in combo:
                ru, rv = find(u), find(v)
                if ru == rv:
                    ok = False
                    break
                parent[ru] = rv
            if ok:
                yield combo

    def _candidates(self, used: int, min_i0: int):
        g = self.g
        for i0 in bits(g.adj[self.s0] & self.pool):
            if i0 < min_i0 or not self._avail(used, self.s0, i0):
                continue
            base = 1 << i0
            rest = self.pool & ~base
            imasks = [base]
            sub = rest
            while sub:
                imasks.append(sub | base)
                sub = (sub - 1) & rest
            imasks.sort()
            for imask in imasks:
                verts = tuple(bits(imask))
                opts = []
                feasible = True
                for s in self.others:
                    choices = [
                        w for w in bits(g.adj[s] & imask) if self._avail(used, s, w)
                    ]
                    if not choices:
                        feasible = False
                        break
                    opts.append(choices)
                if not feasible:
                    continue
                for tree_es in self._spanning_trees(verts, used):
                    base_deg = {v: 0 for v in verts}
                    for u, v in tree_es:
                        base_deg[u] += 1
                        base_deg[v] += 1
                    base_deg[i0] += 1
                    yield from self._attach(i0, tree_es, base_deg, opts)

    def _attach(self, i0, tree_es, base_deg, opts):
        others = self.others

        def rec(idx, picked):
            if idx == len(others):
                deg = dict(base_deg)
                for w in picked:
                    deg[w] += 1
                if any(d < 2 for d in deg.values()):
                    return  # internal leaf: a smaller candidate covers it
                edges = [self._ordered(self.s0, i0)]
                edges += [self._ordered(u, v) for u, v in tree_es]
                edges += [self._ordered(s, w) for s, w in zip(others, picked)]
                yield i0, tuple(sorted(edges))
                return
            for w in opts[idx]:
                yield from rec(idx + 1, picked + (w,))

        yield from rec(0, ())

    @staticmethod
    def _ordered(u, v):
        return (u, v) if u < v else (v, u)

    def search(self, target: int) -> list[tuple] | None:
        chosen: list[tuple] = []
        g = self.g

        def rec(used: int, min_i0: int) -> bool:
            need = target - len(chosen)
            if need == 0:
                return True
            for s in self.terminals:
                avail = sum(
                    1 for w in bits(g.adj[s] & self.pool) if self._avail(used, s, w)
                )
                if avail < need:
                    return False
            for i0, edges in self._candidates(used, min_i0):
                new_used = used
                for u, v in edges:
                    new_used |= 1 << self._eid(u, v)
                chosen.append(edges)
                if rec(new_used, i0 + 1):
                    return True
                chosen.pop()
            return False

        return chosen if rec(0, 0) else None


# --- local solver -------------------------------------------------------


def _paths_to_trees(paths, smask) -> list[SteinerTree]:
    trees = []
    for p in paths:
        edges = tuple(
            sorted((p[i], p[i + 1]) if p[i] < p[i + 1] else (p[i + 1], p[i])
                   for i in range(len(p) - 1))
        )
        trees.append(SteinerTree(edges, smask))
    return trees


class _LocalSolver:
    """Per-terminal-set exact solver with reusable candidate tables."""

    def __init__(self, g: Graph, smask: int, mode: DisjointnessMode):
        self.g = g
        self.smask = smask
        self.mode = mode
        self.k = smask.bit_count()
        self.pool = g.vertex_mask() & ~smask
        self.terminals = list(bits(smask))
        self._pendant_cands = None
        self._plain_table = None
        self._edge_search = None

    def structural_cap(self) -> int:
        """An upper bound no packing at this terminal set can exceed."""
        g, pool = self.g, self.pool
        if self.k == 2:
            return min(g.degree(s) for s in self.terminals)
        if self.mode is DisjointnessMode.INTERNAL_PENDANT:
            cap = min((g.adj[s] & pool).bit_count() for s in self.terminals)
            return min(cap, pool.bit_count())
        if self.mode is DisjointnessMode.EDGE_PENDANT:
            return min((g.adj[s] & pool).bit_count() for s in self.terminals)
        # plain: each tree uses an edge at every terminal and claims either
        # an internal vertex or k-1 of the <= C(k,2) terminal-terminal edges
        cap = min(g.degree(s) for s in self.terminals)
        return min(cap, pool.bit_count() + self.k // 2)

    def can_pack(self, target: int):
        """A packing of ``target`` trees, or None after exhausting the search."""
        if target == 0:
            return []
        g, smask = self.g, self.smask
        if self.k == 2:
            s, t = self.terminals
            if self.mode is DisjointnessMode.EDGE_PENDANT:
                paths = edge_disjoint_paths(g, s, t)
            else:
                paths = vertex_disjoint_paths(g, s, t)
            if len(paths) >= target:
                return _paths_to_trees(paths[:target], smask)
            return None
        if self.mode is DisjointnessMode.INTERNAL_PENDANT:
            if self._pendant_cands is None:
                self._pendant_cands = _pendant_candidates(g, smask, self.pool)
            picked = _search_internal(self._pendant_cands, self.terminals,
                                      g.adj, self.pool, target)
            if picked is None:
                return None
            return [_materialize_pendant_tree(g, smask, m) for m in picked]
        if self.mode is DisjointnessMode.INTERNAL_PLAIN:
            if self._plain_table is None:
                self._plain_table = _PlainCandidates(g, smask, self.pool)
            picked = _search_plain(self._plain_table, self.pool, target)
            if picked is None:
                return None
            return [
                _materialize_plain_tree(g, smask, im, fm, self._plain_table.ss_edges)
                for im, fm in picked
            ]
        if self._edge_search is None:
            self._edge_search = _EdgePendantSearch(g, smask, self.pool)
        picked = self._edge_search.search(target)
        if picked is None:
            return None
        return [SteinerTree(es, smask) for es in picked]

    def solve(self, cap: int | None = None) -> tuple[int, list[SteinerTree]]:
        """Iterative deepening; exact when ``cap`` is None, else min(value, cap)."""
        limit = self.structural_cap()
        if cap is not None:
            limit = min(limit, cap)
        value, witness = 0, []
        t = 1
        while t <= limit:
            found = self.can_pack(t)
            if found is None:
                break
            value, witness = t, found
            t += 1
        return value, witness


def local_connectivity(g: Graph, terminals, mode: DisjointnessMode,
                       cap: int | None = None) -> tuple[int, TreePacking]:
    """Exact local packing number for one terminal set, with a witness.

    ``cap`` truncates the search from above (the result is then
    min(value, cap)); leave it None for the exact value.  Degree- and
    connectivity-based global bounds are deliberately not applied here:
    they bound the minimum over all terminal sets, not a single set.
    """
    smask = terminals if isinstance(terminals, int) else sum(1 << v for v in set(terminals))
    if smask & ~g.vertex_mask():
        raise InputError("terminal set out of range")
    if smask.bit_count() < 2:
        raise InputError("terminal set needs at least two vertices")
    solver = _LocalSolver(g, smask, mode)
    value, trees = solver.solve(cap)
    return value, TreePacking(tuple(trees), mode, smask)


# --- global solver ------------------------------------------------------


def connectivity_upper_bounds(g: Graph, k: int) -> int:
    """min(delta-k+1, kappa-k+2, n-k) floored at zero; caps the search."""
    if not 3 <= k <= g.n:
        raise InputError(f"k must be in [3, n], got k={k}, n={g.n}")
    bound = min(min_degree(g) - k + 1, vertex_connectivity(g) - k + 2, g.n - k)
    return max(bound, 0)


def _global_cap(g: Graph, k: int, mode: DisjointnessMode) -> int | None:
    if k < 3:
        return None
    if mode is DisjointnessMode.INTERNAL_PENDANT:
        return connectivity_upper_bounds(g, k)
    if mode is DisjointnessMode.EDGE_PENDANT:
        return min_degree(g)
    return None


def _terminal_sets(n: int, k: int):
    for combo in combinations(range(n), k):
        yield sum(1 << v for v in combo)


def _is_complete(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def complete_bipartite_parts(g: Graph) -> tuple[int, int] | None:
    """(r, s) part sizes if g is complete bipartite, else None."""
    if g.n < 2 or g.edge_count == 0 or not is_connected(g):
        return None
    color = {0: 0}
    part = [1, 0]
    queue = [0]
    while queue:
        u = queue.pop()
        for v in bits(g.adj[u]):
            if v not in color:
                color[v] = 1 - color[u]
                part[color[v]] |= 1 << v
                queue.append(v)
            elif color[v] == color[u]:
                return None
    if len(color) != g.n:
        return None
    r, s = part[0].bit_count(), part[1].bit_count()
    if g.edge_count != r * s:
        return None
    for u in bits(part[0]):
        if g.adj[u] != part[1]:
            return None
    return (r, s) if r <= s else (s, r)


def _certify_at(solver: "_LocalSolver", value: int):
    """Witness at the solver's terminal set when its value is exactly ``value``."""
    if value + 1 <= solver.structural_cap() and solver.can_pack(value + 1) is not None:
        return None
    witness = solver.can_pack(value) if value else []
    if witness is None:
        raise AssertionError("terminal set below the computed global minimum")
    return witness


def _scan_minimum(g: Graph, k: int, mode: DisjointnessMode, start_cap,
                  threads: int, solver_for) -> int:
    sets = _terminal_sets(g.n, k)
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        box = [start_cap]

        def work(smask):
            value, _ = solver_for(smask).solve(box[0])
            if box[0] is None or value < box[0]:
                box[0] = value  # races only loosen the cap; min is unchanged
            return value

        with ThreadPoolExecutor(max_workers=threads) as ex:
            values = list(ex.map(work, sets))
        best = min(values)
        return best if start_cap is None else min(best, start_cap)
    best = start_cap
    for smask in sets:
        value, _ = solver_for(smask).solve(best)
        if best is None or value < best:
            best = value
        if best == 0:
            break
    return best


def global_connectivity(g: Graph, k: int, mode: DisjointnessMode,
                        force_generic: bool = False,
                        threads: int = 1) -> ConnectivityResult:
    """Minimum local packing number over all k-element terminal sets.

    Returns the lexicographically smallest minimizing set and a witness
    packing certified by an exhausted search for one more tree (or by a
    structural bound that already forbids one more).  Disconnected
    graphs yield 0 immediately.  ``force_generic`` disables the complete
    and complete-bipartite closed forms so the generic search can be
    cross-checked against them.
    """
    n = g.n
    if not 2 <= k <= n:
        raise InputError(f"k must be in [2, n], got k={k}, n={n}")
    if not is_connected(g):
        for smask in _terminal_sets(n, k):
            if _LocalSolver(g, smask, mode).can_pack(1) is None:
                return ConnectivityResult(0, smask, TreePacking((), mode, smask))
        raise AssertionError("disconnected graph with every terminal set packable")
    if k == n and k >= 3 and mode in PENDANT_MODES:
        # no vertices remain to serve as the internal vertex every
        # pendant tree on >= 3 terminals needs
        smask = g.vertex_mask()
        return ConnectivityResult(0, smask, TreePacking((), mode, smask))
    solvers: dict[int, _LocalSolver] = {}

    def solver_for(smask: int) -> _LocalSolver:
        solver = solvers.get(smask)
        if solver is None:
            solver = solvers[smask] = _LocalSolver(g, smask, mode)
        return solver

    if not force_generic and mode is DisjointnessMode.INTERNAL_PENDANT and k >= 3:
        if _is_complete(g):
            value = n - k
            smask = (1 << k) - 1
            witness = _certify_at(solver_for(smask), value)
            return ConnectivityResult(value, smask,
                                      TreePacking(tuple(witness), mode, smask))
        parts = complete_bipartite_parts(g)
        if parts is not None:
            r, s = parts
            value = max(min(r - k + 1, s - k + 1), 0)
            for smask in _terminal_sets(n, k):
                witness = _certify_at(solver_for(smask), value)
                if witness is not None:
                    return ConnectivityResult(
                        value, smask, TreePacking(tuple(witness), mode, smask))
            raise AssertionError("bipartite closed form not attained")
    value = _scan_minimum(g, k, mode, _global_cap(g, k, mode), threads, solver_for)
    for smask in _terminal_sets(n, k):
        witness = _certify_at(solver_for(smask), value)
        if witness is not None:
            return ConnectivityResult(value, smask,
                                      TreePacking(tuple(witness), mode, smask))
    raise AssertionError("no terminal set attains the computed minimum")


def tau(g: Graph, k: int, **kw) -> int:
    """Pendant-tree k-connectivity."""
    return global_connectivity(g, k, DisjointnessMode.INTERNAL_PENDANT, **kw).value


def mu(g: Graph, k: int, **kw) -> int:
    """Pendant-tree k-edge-connectivity."""
    return global_connectivity(g, k, DisjointnessMode.EDGE_PENDANT, **kw).value


def kappa_k(g: Graph, k: int, **kw) -> int:
    """Generalized k-connectivity (plain internally disjoint trees)."""
    return global_connectivity(g, k, DisjointnessMode.INTERNAL_PLAIN, **kw).value
