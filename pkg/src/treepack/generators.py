"""Constructors for the named graphs and graph operations the toolkit studies.

Every generator carries a closed-form edge count that the tests assert.
Product vertices are numbered (u, v) -> u * |V(H)| + v so witnesses and
examples are reproducible.  A small text grammar (``harary:9,3``,
``join:(complete:1),(cycle:6)``) exposes the generators to the CLI.
"""

from __future__ import annotations

import math

from .graph import Graph, InputError, build_graph, complement, from_adj


def empty(n: int) -> Graph:
    return build_graph(n, [])


def complete(n: int) -> Graph:
    if n < 1:
        raise InputError("complete graph needs n >= 1")
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(r: int, s: int) -> Graph:
    """Parts {0..r-1} and {r..r+s-1}."""
    if r < 1 or s < 1:
        raise InputError("complete bipartite graph needs r, s >= 1")
    return build_graph(r + s, [(u, r + v) for u in range(r) for v in range(s)])


def path(n: int) -> Graph:
    if n < 1:
        raise InputError("path needs n >= 1")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs n >= 3")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def wheel(n: int) -> Graph:
    """Wheel of order n: hub 0 joined to the cycle 1..n-1."""
    if n < 4:
        raise InputError("wheel needs n >= 4")
    edges = [(0, i) for i in range(1, n)]
    edges += [(i, i % (n - 1) + 1) for i in range(1, n)]
    return build_graph(n, edges)


def harary(n: int, d: int) -> Graph:
    """The canonical d-connected graph on n vertices with ceil(dn/2) edges.

    Circulant core with offsets 1..floor(d/2); for odd d, diameters when
    n is even, and the near-diameter chords through vertex 0 when n is
    odd.  Guarantees kappa = d and e = ceil(dn/2).
    """
    if not 2 <= d < n:
        raise InputError(f"harary graph needs 2 <= d < n, got d={d}, n={n}")
    r = d // 2
    edges = [(i, (i + off) % n) for i in range(n) for off in range(1, r + 1)]
    if d % 2 == 1:
        if n % 2 == 0:
            edges += [(i, i + n // 2) for i in range(n // 2)]
        else:
            half = (n + 1) // 2
            edges += [(0, (n - 1) // 2), (0, half)]
            edges += [(i, (i + half) % n) for i in range(1, (n - 1) // 2 + 1)]
    g = build_graph(n, [(min(u, v), max(u, v)) for u, v in edges])
    want = math.ceil(d * n / 2)
    if g.edge_count != want:  # pragma: no cover - construction guarantee
        raise AssertionError(f"harary({n},{d}) produced {g.edge_count} edges, want {want}")
    return g


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two vertex sets."""
    n = g.n + h.n
    adj = [0] * n
    hmask_shift = ((1 << h.n) - 1) << g.n
    gmask = (1 << g.n) - 1
    for v in range(g.n):
        adj[v] = g.adj[v] | hmask_shift
    for v in range(h.n):
        adj[g.n + v] = (h.adj[v] << g.n) | gmask
    return from_adj(n, adj)


def cartesian(g: Graph, h: Graph) -> Graph:
    """Move along one coordinate at a time; (u,v) -> u*|V(H)|+v."""
    n = g.n * h.n
    edges = []
    for u in range(g.n):
        for v in range(h.n):
            a = u * h.n + v
            for w in range(h.n):
                if h.has_edge(v, w) and v < w:
                    edges.append((a, u * h.n + w))
            for x in range(g.n):
                if g.has_edge(u, x) and u < x:
                    edges.append((a, x * h.n + v))
    out = build_graph(n, edges)
    want = g.edge_count * h.n + h.edge_count * g.n
    if out.edge_count != want:  # pragma: no cover
        raise AssertionError("cartesian product edge count mismatch")
    return out


def lexicographic(g: Graph, h: Graph) -> Graph:
    """First-coordinate adjacency, or equal firsts and second adjacency."""
    n = g.n * h.n
    edges = []
    for u in range(g.n):
        for v in range(h.n):
            a = u * h.n + v
            for w in range(v + 1, h.n):
                if h.has_edge(v, w):
                    edges.append((a, u * h.n + w))
            for x in range(g.n):
                if g.has_edge(u, x) and u < x:
                    for w in range(h.n):
                        edges.append((a, x * h.n + w))
    out = build_graph(n, edges)
    want = h.edge_count * g.n + g.edge_count * h.n * h.n
    if out.edge_count != want:  # pragma: no cover
        raise AssertionError("lexicographic product edge count mismatch")
    return out


def complete_minus_matching(n: int, r: int) -> Graph:
    """K_n minus the fixed matching {0-1, 2-3, ...} of size r."""
    if r < 0 or 2 * r > n:
        raise InputError(f"matching size {r} does not fit in K_{n}")
    g = complete(n)
    adj = list(g.adj)
    for i in range(r):
        u, v = 2 * i, 2 * i + 1
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    return from_adj(n, adj)


def prop_2_3_graph(n: int, k: int, l: int) -> Graph:
    """Clique on k+l-1 vertices joined to n-k-l+1 isolated vertices.

    Realizes pendant-tree k-connectivity l with
    (k+l-1)(n-k-l+1) + C(k+l-1, 2) edges in the dense-l regime
    n/2 - k + 2 <= l <= n - k.
    """
    if not 3 <= k <= n:
        raise InputError(f"need 3 <= k <= n, got k={k}, n={n}")
    if not (2 * l + 2 * k - 4 >= n and l <= n - k):
        raise InputError(
            f"l={l} outside the dense regime [n/2-k+2, n-k] for n={n}, k={k}")
    c = k + l - 1
    return join(complete(c), empty(n - c))


def prop_2_3_edge_count(n: int, k: int, l: int) -> int:
    c = k + l - 1
    return c * (n - c) + c * (c - 1) // 2


def prop_3_3_graph(n: int, l: int) -> Graph:
    """l isolated vertices joined to a chorded cycle on n-l vertices.

    Vertices 0..l-1 are the joined set; l..n-1 the cycle, with one chord
    halving it.  Realizes tau_3 = l with (l+1)(n-l)+1 edges and minimum
    degree l+2, for 3 <= l <= (n-4)/3.
    """
    if not (3 <= l and 3 * l + 4 <= n):
        raise InputError(f"need 3 <= l <= (n-4)/3, got l={l}, n={n}")
    c = n - l
    h = join(empty(l), cycle(c))
    chord = (l, l + c // 2 - 1)  # cycle positions 1 and floor(c/2), 1-based
    adj = list(h.adj)
    adj[chord[0]] |= 1 << chord[1]
    adj[chord[1]] |= 1 << chord[0]
    return from_adj(n, adj)


def prop_3_4_graph(n: int, l: int) -> Graph:
    """Layered lexicographic backbone with a short extra layer.

    Path of s = floor(n/(l+1)) layers of l+1 independent vertices, fully
    joined consecutively; r = n mod (l+1) >= 2 extra vertices fully
    joined to the last layer and forming a path; a path across the first
    layer.  Realizes tau_3 = l with connectivity l+1.
    """
    if l < 3:
        raise InputError("need l >= 3")
    s, r = divmod(n, l + 1)
    if r < 2:
        raise InputError(f"need n mod (l+1) >= 2, got r={r} for n={n}, l={l}")
    if s < 2:
        raise InputError(f"need at least two full layers, got s={s}")
    width = l + 1

    def vid(layer, i):  # layer 1..s+1, position 1..width (paper indexing)
        return (layer - 1) * width + (i - 1)

    edges = []
    for layer in range(1, s):
        for i in range(1, width + 1):
            for j in range(1, width + 1):
                edges.append((vid(layer, i), vid(layer + 1, j)))
    for i in range(1, width + 1):
        for j in range(1, r + 1):
            edges.append((vid(s, i), vid(s + 1, j)))
    for j in range(1, r):
        edges.append((vid(s + 1, j), vid(s + 1, j + 1)))
    for j in range(1, width):
        edges.append((vid(1, j), vid(1, j + 1)))
    return build_graph(n, [(min(u, v), max(u, v)) for u, v in edges])


def prop_3_4_edge_count(n: int, l: int) -> int:
    """Direct count of the edges prop_3_4_graph constructs."""
    s, r = divmod(n, l + 1)
    return (s - 1) * (l + 1) ** 2 + r * (l + 1) + (r - 1) + l


def prop_3_4_claimed_edge_count(n: int, l: int) -> int:
    """The published closed form for the same family.

    Disagrees with the construction's direct count by (l+1)^2 + 1; the
    theorem checker reports the discrepancy instead of patching either
    side.
    """
    s, r = divmod(n, l + 1)
    return s * (l + 1) ** 2 + (r + 1) * (l + 1) + r - 1


def lemma_3_6_family(n: int) -> list[tuple[Graph, Graph]]:
    """Maximal complement shapes whose complements have tau_3 = n - 5.

    Returns (complement_graph, graph) pairs on n vertices: two short
    cycles plus isolates; a short cycle or a 5-path plus a maximum
    matching; or a single 5/6/7-cycle plus isolates.
    """
    if n < 10:
        raise InputError("family needs n >= 10")
    shapes: list[list[tuple[str, int]]] = []
    for i, j in ((3, 3), (3, 4), (4, 4)):
        shapes.append([("C", i), ("C", j)])
    for i in (3, 4):
        shapes.append([("C", i)] + [("P", 2)] * ((n - i) // 2))
    shapes.append([("P", 5)] + [("P", 2)] * ((n - 5) // 2))
    for i in (5, 6, 7):
        shapes.append([("C", i)])
    out = []
    for shape in shapes:
        edges = []
        base = 0
        for kind, size in shape:
            vs = list(range(base, base + size))
            if kind == "C":
                edges += [(vs[i], vs[(i + 1) % size]) for i in range(size)]
            else:
                edges += [(vs[i], vs[i + 1]) for i in range(size - 1)]
            base += size
        if base > n:  # pragma: no cover - guarded by n >= 10
            raise AssertionError("family member does not fit")
        comp = build_graph(n, edges)
        out.append((comp, complement(comp)))
    return out


# --- text grammar --------------------------------------------------------

_SIMPLE = {
    "complete": (complete, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "path": (path, 1),
    "cycle": (cycle, 1),
    "wheel": (wheel, 1),
    "harary": (harary, 2),
    "empty": (empty, 1),
    "complete_minus_matching": (complete_minus_matching, 2),
    "prop_2_3": (prop_2_3_graph, 3),
    "prop_3_3": (prop_3_3_graph, 2),
    "prop_3_4": (prop_3_4_graph, 2),
}

_BINARY = {"join": join, "cartesian": cartesian, "lex": lexicographic}


def _split_args(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise InputError(f"unbalanced parentheses in generator spec: {text!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth != 0:
        raise InputError(f"unbalanced parentheses in generator spec: {text!r}")
    parts.append("".join(cur))
    return parts


def parse_generator(spec: str):
    """Build a graph (or, for the family kind, a list of pairs) from text.

    Grammar: ``name:arg,arg,...`` with nested specs in parentheses, e.g.
    ``harary:9,3`` or ``join:(complete:1),(cycle:6)``.
    """
    spec = spec.strip()
    name, sep, rest = spec.partition(":")
    name = name.strip()
    args = _split_args(rest) if sep else []
    if name in _BINARY:
        if len(args) != 2:
            raise InputError(f"{name} takes two operand specs")
        operands = []
        for a in args:
            a = a.strip()
            if not (a.startswith("(") and a.endswith(")")):
                raise InputError(f"operands of {name} must be parenthesized specs")
            operands.append(parse_generator(a[1:-1]))
        if any(isinstance(op, list) for op in operands):
            raise InputError("family generators cannot be operands")
        return _BINARY[name](*operands)
    if name == "lemma_3_6_family":
        if len(args) != 1:
            raise InputError("lemma_3_6_family takes one argument")
        return lemma_3_6_family(_int_arg(args[0]))
    if name in _SIMPLE:
        fn, arity = _SIMPLE[name]
        if len(args) != arity:
            raise InputError(f"{name} takes {arity} integer argument(s)")
        return fn(*[_int_arg(a) for a in args])
    raise InputError(f"unknown generator kind: {name!r}")


def _int_arg(text: str) -> int:
    try:
        return int(text.strip())
    except ValueError:
        raise InputError(f"generator argument is not an integer: {text!r}") from None
