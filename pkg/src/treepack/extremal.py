"""Certified minimum-edge search for graphs with a given packing number.

``f_min_edges(n, k, l)`` finds the least edge count of a connected
n-vertex graph whose pendant-tree k-connectivity is exactly l, by one
of three strategies:

* ``SPARSE_ASC`` enumerates labeled connected graphs by ascending edge
  count starting at the proven degree floor, pruned by the forced
  minimum degree k+l-1 and connectivity k+l-2 (both only for l >= 1);
* ``DENSE_DESC`` walks complement edge counts downward; the complement
  of any qualifying graph has maximum degree n-k-l, so for
  n-k-l <= 2 the complements are disjoint unions of paths and cycles
  and one representative per shape suffices;
* ``CONSTRUCTION_ONLY`` certifies a named construction with the solver
  and closes the record exactly when its size meets the degree floor.

The search domain is connected graphs throughout: the n-1-edge value
for l = 0 forces that reading, since an edgeless graph would otherwise
win trivially.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from . import generators as gen
from .graph import Graph, InputError, from_adj, is_connected, vertex_connectivity
from .packing import DisjointnessMode, global_connectivity


class Strategy(Enum):
    SPARSE_ASC = "sparse"
    DENSE_DESC = "dense"
    CONSTRUCTION_ONLY = "construction"


@dataclass
class Budget:
    max_graphs: int | None = None
    max_seconds: float | None = None

    def tracker(self) -> "_BudgetTracker":
        return _BudgetTracker(self)


class _BudgetTracker:
    def __init__(self, budget: Budget):
        self.budget = budget
        self.count = 0
        self.start = time.monotonic()

    def tick(self) -> bool:
        """Count one graph; False once the budget is exhausted."""
        self.count += 1
        b = self.budget
        if b.max_graphs is not None and self.count > b.max_graphs:
            return False
        if b.max_seconds is not None and time.monotonic() - self.start > b.max_seconds:
            return False
        return True


@dataclass
class ExtremalRecord:
    n: int
    k: int
    l: int
    f_value: int | None
    witness: Graph | None
    strategy: Strategy
    exhaustive: bool
    graphs_examined: int
    status: str  # "exact" | "infeasible" | "budget-exhausted" | "unresolved"
    lower_bound: int
    upper_bound: int | None
    note: str = ""

    def to_json_line(self) -> str:
        import json

        from .formats import encode_graph6

        payload = {
            "n": self.n, "k": self.k, "l": self.l, "f": self.f_value,
            "strategy": self.strategy.value, "exhaustive": self.exhaustive,
            "graphs_examined": self.graphs_examined, "status": self.status,
            "lower_bound": self.lower_bound, "upper_bound": self.upper_bound,
        }
        if self.witness is not None:
            payload["witness"] = encode_graph6(self.witness)
        if self.note:
            payload["note"] = self.note
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def lower_bound_edges(n: int, k: int, l: int) -> int:
    """Connectivity floor n-1, sharpened to ceil((k+l-1)n/2) when l >= 1."""
    floor = n - 1
    if l >= 1:
        floor = max(floor, math.ceil((k + l - 1) * n / 2))
    return floor


def _tau(g: Graph, k: int) -> int:
    return global_connectivity(g, k, DisjointnessMode.INTERNAL_PENDANT).value


def enumerate_graphs(n: int, m: int, min_deg: int = 0, min_kappa: int = 0,
                     require_connected: bool = False):
    """Stream every labeled n-vertex graph with m edges meeting the filters.

    Completeness is the contract: every qualifying labeled graph appears.
    No isomorph rejection is attempted here; class-level deduplication
    belongs to the complement-shape walk of the dense strategy.
    """
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not 0 <= m <= len(pairs):
        raise InputError(f"edge count {m} out of range for n={n}")
    need_connected = require_connected or min_kappa >= 1
    for combo in combinations(pairs, m):
        adj = [0] * n
        for u, v in combo:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if min_deg and any(a.bit_count() < min_deg for a in adj):
            continue
        g = from_adj(n, adj)
        if need_connected and not is_connected(g):
            continue
        if min_kappa >= 2 and vertex_connectivity(g) < min_kappa:
            continue
        yield g


def _sparse_asc(n, k, l, budget, long_runs) -> ExtremalRecord:
    if n > 8 or (n == 8 and not long_runs):
        raise InputError(
            "ascending enumeration is exact only for n <= 7 "
            "(n = 8 requires the long-runs flag)")
    floor = lower_bound_edges(n, k, l)
    min_deg = k + l - 1 if l >= 1 else 1
    min_kappa = max(k + l - 2, 1) if l >= 1 else 1
    tracker = budget.tracker()
    top = n * (n - 1) // 2
    for m in range(floor, top + 1):
        for g in enumerate_graphs(n, m, min_deg, min_kappa, True):
            if not tracker.tick():
                return ExtremalRecord(
                    n, k, l, None, None, Strategy.SPARSE_ASC, False,
                    tracker.count, "budget-exhausted", floor, None,
                    note=f"stopped inside m={m}")
            if _tau(g, k) == l:
                return ExtremalRecord(
                    n, k, l, m, g, Strategy.SPARSE_ASC, True, tracker.count,
                    "exact", floor, m)
    return ExtremalRecord(n, k, l, None, None, Strategy.SPARSE_ASC, True,
                          tracker.count, "infeasible", floor, None)


# --- dense side: complements are unions of paths and cycles -------------


def complement_shapes(n: int, c: int, max_deg: int):
    """Canonical multisets of path/cycle components with c edges, <= n vertices."""
    comps: list[tuple[str, int]] = []
    if max_deg >= 2:
        comps += [("C", j) for j in range(n, 2, -1)]
        comps += [("P", j) for j in range(n, 1, -1) if j >= 3]
    if max_deg >= 1:
        comps.append(("P", 2))

    def rec(edges_left, verts_left, start):
        if edges_left == 0:
            yield []
            return
        for idx in range(start, len(comps)):
            kind, size = comps[idx]
            e = size if kind == "C" else size - 1
            if e > edges_left or size > verts_left:
                continue
            for rest in rec(edges_left - e, verts_left - size, idx):
                yield [(kind, size)] + rest

    yield from rec(c, n, 0)


def shape_complement_graph(n: int, shape) -> Graph:
    """The labeled complement graph with the shape's components laid out first."""
    from .graph import build_graph

    edges = []
    base = 0
    for kind, size in shape:
        if kind == "C":
            edges += [(base + i, base + (i + 1) % size) for i in range(size)]
        else:
            edges += [(base + i, base + i + 1) for i in range(size - 1)]
        base += size
    return build_graph(n, edges)


def _dense_desc(n, k, l, budget) -> ExtremalRecord:
    if l < 1:
        raise InputError("the descending strategy needs l >= 1")
    dmax = n - k - l
    if dmax < 0:
        raise InputError(f"l={l} exceeds n-k={n - k}")
    if dmax > 2:
        raise InputError(
            "the descending strategy is exact only for n-k-l <= 2 "
            f"(got {dmax}); use the ascending strategy")
    floor = lower_bound_edges(n, k, l)
    total = n * (n - 1) // 2
    tracker = budget.tracker()
    from .graph import complement as comp_of

    for c in range(n * dmax // 2, -1, -1):
        for shape in complement_shapes(n, c, dmax):
            if not tracker.tick():
                return ExtremalRecord(
                    n, k, l, None, None, Strategy.DENSE_DESC, False,
                    tracker.count, "budget-exhausted", floor, None,
                    note=f"stopped at complement size {c}")
            gbar = shape_complement_graph(n, shape)
            g = comp_of(gbar)
            if not is_connected(g):
                continue
            if _tau(g, k) == l:
                return ExtremalRecord(
                    n, k, l, total - c, g, Strategy.DENSE_DESC, True,
                    tracker.count, "exact", floor, total - c)
    return ExtremalRecord(n, k, l, None, None, Strategy.DENSE_DESC, True,
                          tracker.count, "infeasible", floor, None)


# --- constructions -------------------------------------------------------


def _construction_candidates(n, k, l):
    """Known-good graphs for (n, k, l), smallest first; lazily built."""
    out = []
    if l == 0 and k >= 3:
        out.append(("star tree", lambda: gen.complete_bipartite(1, n - 1)))
    if l == n - k:
        out.append(("complete", lambda: gen.complete(n)))
    if l == n - k - 1 and n >= 4:
        out.append(("complete minus 2-matching",
                    lambda: gen.complete_minus_matching(n, 2)))
    if 1 <= l and k + l - 1 >= 2 and k + l - 1 <= n - k - l + 1:
        out.append(("complete bipartite",
                    lambda: gen.complete_bipartite(k + l - 1, n - k - l + 1)))
    if l == 1 and 2 <= k < n:
        out.append(("harary", lambda: gen.harary(n, k)))
    if k == 3 and l == 2:
        for p in range(3, n):
            if n % p == 0 and n // p >= 3:
                q = n // p
                out.append((f"cycle product {p}x{q}",
                            lambda p=p, q=q: gen.cartesian(gen.cycle(p), gen.cycle(q))))
                break
        if n % 2 == 0 and n // 2 >= 4:
            out.append(("wheel times edge",
                        lambda: gen.cartesian(gen.wheel(n // 2), gen.path(2))))
    if k == 3 and 3 <= l and 3 * l + 4 <= n:
        out.append(("joined chorded cycle", lambda: gen.prop_3_3_graph(n, l)))
    if k == 3 and l >= 3 and n % (l + 1) >= 2 and n // (l + 1) >= 2:
        out.append(("layered backbone", lambda: gen.prop_3_4_graph(n, l)))
    if l >= 1 and 2 * l + 2 * k - 4 >= n and l <= n - k and k >= 3:
        out.append(("clique join", lambda: gen.prop_2_3_graph(n, k, l)))
    return out


def _construction_only(n, k, l, budget) -> ExtremalRecord:
    floor = lower_bound_edges(n, k, l)
    tracker = budget.tracker()
    best: tuple[int, Graph, str] | None = None
    failed = []
    for name, builder in _construction_candidates(n, k, l):
        if not tracker.tick():
            break
        try:
            g = builder()
        except InputError:
            continue
        if best is not None and g.edge_count >= best[0]:
            continue
        if _tau(g, k) == l:
            best = (g.edge_count, g, name)
        else:
            failed.append(name)
    note = ""
    if failed:
        note = "constructions not realizing the value: " + ", ".join(failed)
    if best is None:
        return ExtremalRecord(n, k, l, None, None, Strategy.CONSTRUCTION_ONLY,
                              False, tracker.count, "unresolved", floor, None,
                              note=note)
    edges, g, name = best
    exact = edges == floor
    return ExtremalRecord(
        n, k, l, edges if exact else None, g, Strategy.CONSTRUCTION_ONLY,
        exact, tracker.count, "exact" if exact else "unresolved", floor, edges,
        note=(note + ("; " if note else "") + f"witness: {name}"))


def f_min_edges(n: int, k: int, l: int, strategy: Strategy | str = "auto",
                budget: Budget | None = None,
                long_runs: bool = False) -> ExtremalRecord:
    """Minimum edges of a connected n-vertex graph with tau_k exactly l."""
    if not 2 <= k <= n:
        raise InputError(f"need 2 <= k <= n, got k={k}, n={n}")
    if not 0 <= l <= n - k:
        raise InputError(f"need 0 <= l <= n-k, got l={l}")
    if budget is None:
        budget = Budget()
    if isinstance(strategy, str):
        if strategy == "auto":
            if l >= 1 and n - k - l <= 2:
                strategy = Strategy.DENSE_DESC
            elif n <= 7 or (n == 8 and long_runs):
                strategy = Strategy.SPARSE_ASC
            else:
                strategy = Strategy.CONSTRUCTION_ONLY
        else:
            strategy = Strategy(strategy)
    if strategy is Strategy.SPARSE_ASC:
        return _sparse_asc(n, k, l, budget, long_runs)
    if strategy is Strategy.DENSE_DESC:
        return _dense_desc(n, k, l, budget)
    return _construction_only(n, k, l, budget)
