"""Simple undirected graphs on dense integer vertices 0..n-1.

Adjacency is stored as one integer bit-set per vertex, which keeps the
set algebra used by the packing and enumeration searches O(1).  Graphs
are immutable once built and safe to share across workers.  Vertex sets
are plain Python ints used as bit masks; ``mask_of`` / ``bits`` convert
between masks and vertex iterables.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

MAX_VERTICES = 64


class InputError(ValueError):
    """Raised for arguments that violate an operation's preconditions."""


def mask_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex labels into a bit mask."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Graph:
    """Immutable simple graph; use :func:`build_graph` to construct."""

    __slots__ = ("n", "adj", "edge_count")

    def __init__(self, n: int, adj: tuple[int, ...], edge_count: int):
        self.n = n
        self.adj = adj
        self.edge_count = edge_count

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"


def from_adj(n: int, adj: list[int]) -> Graph:
    """Internal fast constructor; assumes ``adj`` is already symmetric."""
    m = sum(a.bit_count() for a in adj) // 2
    return Graph(n, tuple(adj), m)


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on vertices 0..n-1 from unordered vertex pairs.

    Duplicate pairs collapse; self-loops and out-of-range endpoints are
    rejected.
    """
    if n < 1:
        raise InputError(f"graph order must be >= 1, got {n}")
    if n > MAX_VERTICES:
        raise InputError(f"graph order must be <= {MAX_VERTICES}, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge endpoint out of range: ({u}, {v}) with n={n}")
        if u == v:
            raise InputError(f"self-loop not allowed: ({u}, {v})")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return from_adj(n, adj)


def complement(g: Graph) -> Graph:
    """Edge present exactly where absent in ``g`` (no loops)."""
    full = g.vertex_mask()
    adj = [(full & ~g.adj[v]) & ~(1 << v) for v in range(g.n)]
    return from_adj(g.n, adj)


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise InputError(f"vertex {v} out of range for n={g.n}")
    return g.degree(v)


def min_degree(g: Graph) -> int:
    return min(g.degree(v) for v in range(g.n))


def max_degree(g: Graph) -> int:
    return max(g.degree(v) for v in range(g.n))


def reachable_mask(g: Graph, start: int, within: int | None = None) -> int:
    """Vertices reachable from ``start`` staying inside the ``within`` mask."""
    allowed = g.vertex_mask() if within is None else within
    seen = (1 << start) & allowed
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    return reachable_mask(g, 0) == g.vertex_mask()


def mask_connected(g: Graph, mask: int) -> bool:
    """True iff the nonempty vertex set ``mask`` induces a connected subgraph."""
    start = (mask & -mask).bit_length() - 1
    return reachable_mask(g, start, mask) == mask


def _as_mask(g: Graph, vertices) -> int:
    m = vertices if isinstance(vertices, int) else mask_of(vertices)
    if m & ~g.vertex_mask():
        raise InputError("vertex set contains labels outside 0..n-1")
    return m


def edge_boundary(g: Graph, x, y) -> list[tuple[int, int]]:
    """Edges of ``g`` with one endpoint in ``x`` and the other in ``y``."""
    xm, ym = _as_mask(g, x), _as_mask(g, y)
    if xm & ym:
        raise InputError("edge_boundary requires disjoint vertex sets")
    out = []
    for u in bits(xm):
        for v in bits(g.adj[u] & ym):
            out.append((u, v) if u < v else (v, u))
    out.sort()
    return out


def induced_subgraph(g: Graph, x) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``x`` plus the new-index -> old-label map."""
    xm = _as_mask(g, x)
    if xm == 0:
        raise InputError("induced_subgraph requires a nonempty vertex set")
    labels = list(bits(xm))
    index = {old: new for new, old in enumerate(labels)}
    adj = [0] * len(labels)
    for old in labels:
        for w in bits(g.adj[old] & xm):
            adj[index[old]] |= 1 << index[w]
    return from_adj(len(labels), adj), labels


# --- Menger machinery -------------------------------------------------
#
# Unit-capacity max flow on a residual adjacency map.  Both local
# connectivity variants (internally disjoint and edge-disjoint paths)
# reduce to it; path decompositions double as packing witnesses.


def _augment(res: dict[int, dict[int, int]], s: int, t: int) -> bool:
    parent = {s: None}
    q = deque([s])
    while q:
        u = q.popleft()
        if u == t:
            break
        for v, cap in res[u].items():
            if cap > 0 and v not in parent:
                parent[v] = u
                q.append(v)
    if t not in parent:
        return False
    v = t
    while parent[v] is not None:
        u = parent[v]
        res[u][v] -= 1
        res[v][u] = res[v].get(u, 0) + 1
        v = u
    return True


def _decompose_paths(out_flow: dict[int, dict[int, int]], s: int, t: int) -> list[list[int]]:
    paths = []
    while any(out_flow[s].values()):
        path = [s]
        u = s
        while u != t:
            v = min(w for w, f in out_flow[u].items() if f > 0)
            out_flow[u][v] -= 1
            path.append(v)
            u = v
        paths.append(path)
    return paths


def vertex_disjoint_paths(g: Graph, s: int, t: int) -> list[list[int]]:
    """A maximum set of pairwise internally disjoint s-t paths.

    A direct edge counts as one path.  ``s`` and ``t`` must differ.
    """
    if s == t:
        raise InputError("endpoints must differ")
    n = g.n
    # split v into in-node v and out-node v+n; terminals keep full capacity
    res: dict[int, dict[int, int]] = {v: {} for v in range(2 * n)}
    for v in range(n):
        res[v][v + n] = n if v in (s, t) else 1
        res[v + n][v] = 0
    for u in range(n):
        for v in bits(g.adj[u]):
            res[u + n][v] = 1
    while _augment(res, s + n, t):
        pass
    out_flow = {v: {} for v in range(2 * n)}
    for u in range(n):
        for v in bits(g.adj[u]):
            sent = res[v].get(u + n, 0)  # reverse residual = flow pushed
            if sent:
                out_flow[u + n][v] = sent
    for v in range(n):
        used = res[v + n].get(v, 0)
        if used:
            out_flow[v][v + n] = used
    # split paths look like [s+n, v1, v1+n, v2, v2+n, ..., t]; odd indices
    # are in-nodes, i.e. the vertex labels after s
    split_paths = _decompose_paths(out_flow, s + n, t)
    return [[s] + [p[i] for i in range(1, len(p), 2)] for p in split_paths]


def edge_disjoint_paths(g: Graph, s: int, t: int) -> list[list[int]]:
    """A maximum set of pairwise edge-disjoint s-t paths."""
    if s == t:
        raise InputError("endpoints must differ")
    res: dict[int, dict[int, int]] = {v: {} for v in range(g.n)}
    for u in range(g.n):
        for v in bits(g.adj[u]):
            res[u][v] = 1
    while _augment(res, s, t):
        pass
    out_flow = {v: {} for v in range(g.n)}
    for u in range(g.n):
        for v in bits(g.adj[u]):
            # opposite unit arcs share residual: pushes on u->v raise
            # res[v][u] and lower res[u][v], so the net transfer halves
            net = (res[v][u] - res[u][v]) // 2
            if net > 0:
                out_flow[u][v] = net
    walks = _decompose_paths(out_flow, s, t)
    # a decomposed walk may traverse a flow circulation; shortcut repeats
    paths = []
    for w in walks:
        path: list[int] = []
        pos: dict[int, int] = {}
        for v in w:
            if v in pos:
                cut = pos[v]
                for x in path[cut:]:
                    del pos[x]
                path = path[:cut]
            pos[v] = len(path)
            path.append(v)
        paths.append(path)
    return paths


def local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    return len(vertex_disjoint_paths(g, s, t))


def local_edge_connectivity(g: Graph, s: int, t: int) -> int:
    return len(edge_disjoint_paths(g, s, t))


def vertex_connectivity(g: Graph) -> int:
    """Classical connectivity; n-1 for complete graphs, 0 when disconnected."""
    n = g.n
    if n == 1:
        return 0
    if not is_connected(g):
        return 0
    if g.edge_count == n * (n - 1) // 2:
        return n - 1
    best = n - 1
    for u in range(n):
        nonadj = g.vertex_mask() & ~g.adj[u] & ~((1 << (u + 1)) - 1)
        for v in bits(nonadj):
            best = min(best, local_vertex_connectivity(g, u, v))
            if best == 1:
                return 1
    return best
