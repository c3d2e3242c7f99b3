"""Mechanical verification of the catalogued extremal claims.

Each catalogued claim compares a closed-form value (or bound pair)
against what the solver and the extremal search actually compute, and
yields a verdict.  Claims whose stated hypothesis starts above desk
scale are still run below it, in a separate exploratory band: an
exploratory mismatch is reported but is not a refutation.

Characterization checks test both directions of an "equals iff" class
description: every member of the class must attain the value, and every
enumerated graph attaining the value must lie in the class.  The
enumerable side is the dense one, where the complement's maximum degree
is forced down to at most 2 and one representative per path/cycle shape
suffices; outside that universe seeded random graphs spot-check the
zero side.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass
from itertools import combinations

from . import generators as gen
from .extremal import (
    Budget,
    ExtremalRecord,
    Strategy,
    complement_shapes,
    f_min_edges,
    lower_bound_edges,
    shape_complement_graph,
)
from .graph import Graph, InputError, build_graph, complement, from_adj, is_connected
from .packing import DisjointnessMode, global_connectivity

CONFIRMED = "CONFIRMED"
WITHIN_BOUNDS = "WITHIN_BOUNDS"
VIOLATED = "VIOLATED"
SKIPPED = "SKIPPED_OUT_OF_RANGE"

IN_HYPOTHESIS = "in-hypothesis"
EXPLORATORY = "exploratory"


@dataclass
class TheoremCheck:
    claim_id: str
    params: dict
    claimed: str
    computed: str
    verdict: str
    band: str
    note: str = ""

    def to_line(self) -> str:
        p = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        tail = f"  # {self.note}" if self.note else ""
        return (f"{self.claim_id} [{p}] claimed={self.claimed} "
                f"computed={self.computed} verdict={self.verdict} "
                f"band={self.band}{tail}")

    def to_json_line(self) -> str:
        return json.dumps(
            {"claim": self.claim_id, "params": self.params,
             "claimed": self.claimed, "computed": self.computed,
             "verdict": self.verdict, "band": self.band, "note": self.note},
            sort_keys=True, separators=(",", ":"))


def _tau(g: Graph, k: int) -> int:
    return global_connectivity(g, k, DisjointnessMode.INTERNAL_PENDANT).value


def try_exact_f(n: int, k: int, l: int, long_runs: bool = False,
                budget: Budget | None = None) -> ExtremalRecord | None:
    """Exact f via the cheapest certifying strategy, or None if out of reach."""
    if not (2 <= k <= n and 0 <= l <= n - k):
        return None
    budget = budget or Budget()
    if l >= 1 and n - k - l <= 2 and n <= 12:
        rec = f_min_edges(n, k, l, Strategy.DENSE_DESC, budget)
        if rec.status == "exact":
            return rec
    rec = f_min_edges(n, k, l, Strategy.CONSTRUCTION_ONLY, budget)
    if rec.status == "exact":
        return rec
    if n <= 7 or (n == 8 and long_runs):
        rec = f_min_edges(n, k, l, Strategy.SPARSE_ASC, budget, long_runs=long_runs)
        if rec.status in ("exact", "infeasible"):
            return rec
    return None


def _exact_claim(claim_id, n, k, l, claimed_value, band, long_runs=False,
                 note="") -> TheoremCheck:
    params = {"n": n, "k": k, "l": l}
    rec = try_exact_f(n, k, l, long_runs)
    if rec is None or rec.status == "budget-exhausted":
        return TheoremCheck(claim_id, params, str(claimed_value), "?",
                            SKIPPED, band,
                            (note + "; " if note else "") +
                            "not exactly computable at desk scale")
    computed = "infeasible" if rec.status == "infeasible" else str(rec.f_value)
    ok = rec.status == "exact" and rec.f_value == claimed_value
    return TheoremCheck(claim_id, params, str(claimed_value), computed,
                        CONFIRMED if ok else VIOLATED, band, note)


def _bound_claim(claim_id, n, k, l, lo, hi, band, builder,
                 note="") -> TheoremCheck:
    """Bound-pair claim: certify the construction, sandwich exact f if known."""
    params = {"n": n, "k": k, "l": l}
    claimed = f"{lo}<=f<={hi}"
    rec = try_exact_f(n, k, l)
    if rec is not None and rec.status == "exact":
        ok = lo <= rec.f_value <= hi
        return TheoremCheck(claim_id, params, claimed, f"f={rec.f_value}",
                            WITHIN_BOUNDS if ok else VIOLATED, band, note)
    try:
        g = builder()
    except InputError as exc:
        return TheoremCheck(claim_id, params, claimed, "?", SKIPPED, band,
                            (note + "; " if note else "") + f"construction: {exc}")
    if _tau(g, k) != l:
        return TheoremCheck(
            claim_id, params, claimed, f"construction tau != {l}", VIOLATED,
            band, (note + "; " if note else "") +
            "claimed construction does not realize the value")
    ok = lo <= g.edge_count <= hi
    return TheoremCheck(
        claim_id, params, claimed, f"{lo}<=f<={g.edge_count}",
        WITHIN_BOUNDS if ok else VIOLATED, band,
        (note + "; " if note else "") + f"construction edges={g.edge_count}")


def _band(n: int, threshold: int) -> str:
    return IN_HYPOTHESIS if n >= threshold else EXPLORATORY


def _general_k_claims(n: int, k: int, long_runs: bool) -> list[TheoremCheck]:
    band = _band(n, 15)
    nc2 = n * (n - 1) // 2
    out = []
    if k <= n - 3:  # the two dense values need l >= 1 to be meaningful
        out.append(_exact_claim("T1.1-1", n, k, n - k, nc2, band))
        out.append(_exact_claim("T1.1-2", n, k, n - k - 1, nc2 - 2, band))
    out.append(_exact_claim("T1.1-3", n, k, 0, n - 1, band))
    if n - k >= 1:
        out.append(_exact_claim("T1.1-4", n, k, 1, math.ceil(k * n / 2), band))
    for l in range(1, n // 2 - k + 2):
        if l > n - k:
            break
        out.append(_bound_claim(
            "T1.1-5", n, k, l, lower_bound_edges(n, k, l),
            (k + l - 1) * (n - k - l + 1), band,
            lambda l=l: gen.complete_bipartite(k + l - 1, n - k - l + 1)))
    lo_l = math.ceil(n / 2) - k + 2
    for l in range(max(lo_l, 1), n - k - 1):
        out.append(_bound_claim(
            "T1.1-6", n, k, l, lower_bound_edges(n, k, l),
            (k + l - 1) * (n - k - l + 1) + math.comb(k + l - 1, 2), band,
            lambda l=l: gen.prop_2_3_graph(n, k, l)))
    return out


def _near_n_claims(n: int, long_runs: bool) -> list[TheoremCheck]:
    band = _band(n, 15)
    nc2 = n * (n - 1) // 2
    out = [_exact_claim("T1.2-1", n, n, 0, n - 1, band)]
    out.append(_exact_claim("T1.2-2", n, n - 1, 1, nc2, band))
    out.append(_exact_claim("T1.2-2", n, n - 1, 0, n - 1, band))
    out.append(_exact_claim("T1.2-3", n, n - 2, 2, nc2, band))
    out.append(_exact_claim("T1.2-3", n, n - 2, 1, nc2 - 2, band))
    out.append(_exact_claim("T1.2-3", n, n - 2, 0, n - 1, band))
    out.append(_exact_claim("T1.2-4", n, n - 3, 3, nc2, band))
    out.append(_exact_claim("T1.2-4", n, n - 3, 2, nc2 - 2, band))
    out.append(_exact_claim("T1.2-4", n, n - 3, 1, nc2 - n, band))
    out.append(_exact_claim("T1.2-4", n, n - 3, 0, n - 1, band))
    return out


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


def _k3_claims(n: int, long_runs: bool) -> list[TheoremCheck]:
    band = _band(n, 10)
    nc2 = n * (n - 1) // 2
    out = [
        _exact_claim("T1.3-1", n, 3, 0, n - 1, band),
        _exact_claim("T1.3-2", n, 3, 1, math.ceil(3 * n / 2), band),
    ]
    composite = next((p for p in range(3, n) if n % p == 0 and n // p >= 3), None)
    if composite is not None:
        out.append(_exact_claim("T1.3-3", n, 3, 2, 2 * n, band,
                                note="n=pq case"))
    elif n % 2 == 0:
        p = n // 2
        out.append(_bound_claim(
            "T1.3-3", n, 3, 2, 2 * n, (5 * n - 8) // 2, band,
            lambda: gen.cartesian(gen.wheel(p), gen.path(2)),
            note="n=2p case; published upper reads 5n/2, the construction "
                 "yields (5n-8)/2 which is used here"))
    elif _is_prime(n):
        out.append(_bound_claim(
            "T1.3-3", n, 3, 2, 2 * n, 4 * n - 16, band,
            lambda: gen.complete_bipartite(4, n - 4), note="prime n case"))
    for l in range(3, (n - 4) // 3 + 1):
        out.append(_bound_claim(
            "T1.3-4", n, 3, l, math.ceil((l + 2) * n / 2),
            (l + 1) * (n - l) + 1, band, lambda l=l: gen.prop_3_3_graph(n, l)))
    for l in range(max(3, math.ceil((n - 4) / 3)), (n - 4) // 2 + 1):
        r = n % (l + 1)
        if r >= 2 and 2 * l <= n - r - 2:
            out.append(_bound_claim(
                "T1.3-5", n, 3, l, math.ceil((l + 2) * n / 2),
                gen.prop_3_4_claimed_edge_count(n, l), band,
                lambda l=l: gen.prop_3_4_graph(n, l),
                note="modulus read as l+1 per the construction (text also "
                     "prints mod l); the published count exceeds the "
                     f"construction's {gen.prop_3_4_edge_count(n, l)} edges"))
        else:
            out.append(_bound_claim(
                "T1.3-5", n, 3, l, math.ceil((l + 2) * n / 2),
                (l + 2) * (n - l - 2), band,
                lambda l=l: gen.complete_bipartite(l + 2, n - l - 2),
                note="r<2 subrange served by the balanced bipartite bound"))
    for l in range(max(math.ceil((n - 2) / 2), 1), n - 5):
        out.append(_bound_claim(
            "T1.3-6", n, 3, l, math.ceil((l + 2) * n / 2),
            (l + 2) * (n - l - 2) + math.comb(l + 2, 2), band,
            lambda l=l: gen.prop_2_3_graph(n, 3, l)))
    if n - 5 >= 1:
        out.append(_exact_claim("T1.3-7", n, 3, n - 5,
                                nc2 - (n - 4) // 2, band))
    if n - 4 >= 1:
        out.append(_exact_claim("T1.3-8", n, 3, n - 4, nc2 - 2, band))
    out.append(_exact_claim("T1.3-9", n, 3, n - 3, nc2, band))
    return out


def verify_theorems(n_values, k_values=None, theorems=("T1.1", "T1.2", "T1.3"),
                    long_runs: bool = False) -> list[TheoremCheck]:
    """Run every catalogued claim instance over the requested parameters."""
    out: list[TheoremCheck] = []
    for n in n_values:
        if "T1.1" in theorems:
            ks = k_values if k_values is not None else range(3, n + 1)
            for k in ks:
                if 3 <= k <= n:
                    out.extend(_general_k_claims(n, k, long_runs))
        if "T1.2" in theorems and n >= 6:
            out.extend(_near_n_claims(n, long_runs))
        if "T1.3" in theorems and n >= 8:
            out.extend(_k3_claims(n, long_runs))
    return out


# --- characterizations ----------------------------------------------------


def _random_graph(n: int, rng: random.Random, p: float) -> Graph:
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return from_adj(n, adj)


def _sample_graphs(n, rng, count, predicate):
    out = []
    while len(out) < count:
        g = _random_graph(n, rng, rng.uniform(0.2, 0.9))
        if predicate(g):
            out.append(g)
    return out


def _all_matchings(n: int):
    """(r, graph whose complement is r disjoint edges) for r = 0..n//2."""
    for r in range(n // 2 + 1):
        yield r, gen.complete_minus_matching(n, r)


def _check(lemma_id, n, claimed, violations, scanned, note="") -> TheoremCheck:
    verdict = CONFIRMED if not violations else VIOLATED
    detail = f"{scanned} graphs scanned"
    if violations:
        detail += "; violations: " + "; ".join(violations[:5])
        if len(violations) > 5:
            detail += f" (+{len(violations) - 5} more)"
    return TheoremCheck(lemma_id, {"n": n}, claimed, detail, verdict,
                        IN_HYPOTHESIS, note)


def characterize_complete(n: int, seed: int = 0) -> TheoremCheck:
    """tau_k = n-k exactly at the complete graph, for 3 <= k < n.

    Any missing edge caps the minimum degree at n-2 and with it tau_k at
    n-k-1, so the converse is screened through the degree bound; graphs
    with up to two missing edges (and a seeded sample beyond) are solved
    in full at k = 3.
    """
    rng = random.Random(seed)
    violations = []
    scanned = 0
    kn = gen.complete(n)
    for k in range(3, n):
        scanned += 1
        if _tau(kn, k) != n - k:
            violations.append(f"K_{n}: tau_{k} != {n - k}")
    from .graph import min_degree

    pairs = list(combinations(range(n), 2))
    for c in (1, 2):
        for combo in combinations(pairs, c):
            g = complement(build_graph(n, combo))
            scanned += 1
            if min_degree(g) >= n - 1:
                violations.append(f"complement {combo} kept full degree")
            if _tau(g, 3) == n - 3:
                violations.append(
                    f"non-complete graph (complement {combo}) reaches n-k at k=3")
    for g in _sample_graphs(n, rng, 25,
                            lambda h: is_connected(h)
                            and h.edge_count < n * (n - 1) // 2):
        scanned += 1
        for k in range(3, n):
            if _tau(g, k) == n - k:
                violations.append(f"sampled non-complete graph reaches n-k at k={k}")
    return _check("L2.5", n, "tau_k=n-k iff complete (k<n)", violations, scanned,
                  note="k=n excluded: tau_n=0=n-k holds for every connected graph")


def characterize_near_complete(n: int, seed: int = 0) -> TheoremCheck:
    """tau_k = n-k-1 exactly at K_n minus a matching of size 1 or 2.

    The claim quantifies over every k; the scan reports honestly that it
    fails at k = n-2, where a matching of ANY positive size leaves every
    pair of non-terminals able to host a pendant tree (each vertex of a
    removed pair still sees the entire rest of the graph).  For
    k <= n-3 the stated size cap is confirmed.
    """
    rng = random.Random(seed)
    violations = []
    scanned = 0
    clean_below = True
    for k in range(3, n - 1):
        for r, g in _all_matchings(n):
            scanned += 1
            got = _tau(g, k)
            want_hit = r in (1, 2)
            if (got == n - k - 1) != want_hit:
                violations.append(f"k={k} complement {r}K2: tau={got}")
                if k <= n - 3:
                    clean_below = False
    from .graph import max_degree

    for g in _sample_graphs(n, rng, 20,
                            lambda h: is_connected(h)
                            and max_degree(complement(h)) >= 2):
        scanned += 1
        for k in range(3, n - 1):
            if _tau(g, k) == n - k - 1:
                violations.append(f"sampled graph with dense complement hits n-k-1 at k={k}")
                if k <= n - 3:
                    clean_below = False
    note = ""
    if violations and clean_below:
        note = ("all violations sit at k = n-2, where every nonempty "
                "complement matching attains the value; the size cap is "
                "confirmed for k <= n-3")
    return _check("L2.6", n, "tau_k=n-k-1 iff complement is a 1- or 2-matching",
                  violations, scanned, note)


def characterize_whole_set(n: int) -> TheoremCheck:
    """tau_n = 0 for every graph of order n (exhaustive for n <= 6)."""
    if not 3 <= n <= 6:
        raise InputError("exhaustive whole-set check supports 3 <= n <= 6")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    violations = []
    scanned = 0
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        g = from_adj(n, adj)
        scanned += 1
        if _tau(g, n) != 0:
            violations.append(f"edge mask {mask}: tau_n != 0")
    return _check("L3.1", n, "tau_n=0 for every graph", violations, scanned,
                  note="order 2 is excluded: a single edge packs one pendant path")


def characterize_all_but_one(n: int, seed: int = 0) -> TheoremCheck:
    """tau_{n-1} = 1 iff complete, else 0."""
    rng = random.Random(seed)
    k = n - 1
    violations = []
    scanned = 0
    for r, g in _all_matchings(n):
        scanned += 1
        got = _tau(g, k)
        want = 1 if r == 0 else 0
        if got != want:
            violations.append(f"complement {r}K2: tau={got} want {want}")
    for g in _sample_graphs(n, rng, 60,
                            lambda h: is_connected(h)
                            and h.edge_count < n * (n - 1) // 2):
        scanned += 1
        if _tau(g, k) != 0:
            violations.append("sampled non-complete graph has tau_{n-1} != 0")
    return _check("L3.2", n, "tau_{n-1}=1 iff complete, else 0",
                  violations, scanned)


def characterize_all_but_two(n: int, seed: int = 0) -> TheoremCheck:
    """tau_{n-2}: 2 iff complete; 1 iff complement a 1- or 2-matching; else 0.

    Reported honestly: matchings of size >= 3 also attain 1 (any two
    missing terminals still see the whole terminal set between them), so
    the stated size cap fails in the value-1 clause and those graphs are
    not "other graphs with value 0" either.
    """
    rng = random.Random(seed)
    k = n - 2
    violations = []
    scanned = 0
    for r, g in _all_matchings(n):
        scanned += 1
        got = _tau(g, k)
        want = 2 if r == 0 else (1 if r in (1, 2) else 0)
        if got != want:
            violations.append(f"complement {r}K2: tau={got} want {want}")
    from .graph import max_degree

    for g in _sample_graphs(n, rng, 40,
                            lambda h: is_connected(h)
                            and max_degree(complement(h)) >= 2):
        scanned += 1
        if _tau(g, k) != 0:
            violations.append("sampled graph with dense complement has tau != 0")
    note = ""
    if violations and all("K2: tau=1 want 0" in v for v in violations):
        note = ("every violation is a complement matching of size >= 3 "
                "attaining the value 1; the classification is otherwise exact")
    return _check("L3.3", n, "tau_{n-2} in {2,1,0} by complement matching size",
                  violations, scanned, note)


def characterize_all_but_three(n: int, seed: int = 0) -> TheoremCheck:
    """Both readings of the tau_{n-3} = 1 class; contextual one is binding.

    Contextual class: complement maximum degree in [1, 2] and the
    complement is not a matching of size at most 2.  The literal text
    ("every matching has at least three edges") admits no graph at all;
    its failure is reported in the note, not in the verdict.
    """
    rng = random.Random(seed)
    k = n - 3
    violations = []
    scanned = 0
    literal_hits = 0
    for c in range(n + 1):
        for shape in complement_shapes(n, c, 2):
            gbar = shape_complement_graph(n, shape)
            g = complement(gbar)
            scanned += 1
            got = _tau(g, k)
            n_edges = gbar.edge_count
            is_matching = all(kind == "P" and size == 2 for kind, size in shape)
            if n_edges == 0:
                want = 3
            elif is_matching and n_edges <= 2:
                want = 2
            else:
                want = 1  # contextual reading
            if got == 1:
                literal_hits += 1
            if got != want:
                violations.append(f"complement {shape}: tau={got} want {want}")
    from .graph import max_degree

    for g in _sample_graphs(n, rng, 30,
                            lambda h: is_connected(h)
                            and max_degree(complement(h)) >= 3):
        scanned += 1
        if _tau(g, k) != 0:
            violations.append("complement with a degree-3 vertex has tau != 0")
    note = ("literal reading admits no graphs yet "
            f"{literal_hits} graphs attain tau=1, so it fails; "
            "contextual reading verified")
    return _check("P3.1", n, "tau_{n-3} classes under the contextual reading",
                  violations, scanned, note)


# --- the tau_3 = n-5 family ----------------------------------------------


def _family_shapes(n: int):
    fams = []
    for i, j in ((3, 3), (3, 4), (4, 4)):
        fams.append([("C", i), ("C", j)])
    for i in (3, 4):
        fams.append([("C", i)] + [("P", 2)] * ((n - i) // 2))
    fams.append([("P", 5)] + [("P", 2)] * ((n - 5) // 2))
    for i in (5, 6, 7):
        fams.append([("C", i)])
    return fams


def shape_embeds(shape, fam) -> bool:
    """Can the path/cycle multiset ``shape`` be drawn inside ``fam``?

    Cycles must match a distinct family cycle of the same length; paths
    bin-pack by vertex count into the remaining components (a cycle or
    path on b vertices hosts disjoint paths of total size <= b).
    """
    fam_cycles = sorted((s for kind, s in fam if kind == "C"), reverse=True)
    fam_paths = [s for kind, s in fam if kind == "P"]
    cycles = sorted((s for kind, s in shape if kind == "C"), reverse=True)
    paths = sorted((s for kind, s in shape if kind == "P"), reverse=True)
    remaining = list(fam_cycles)
    for c in cycles:
        if c in remaining:
            remaining.remove(c)
        else:
            return False
    bins = sorted(remaining + fam_paths, reverse=True)

    def pack(idx, space):
        if idx == len(paths):
            return True
        size = paths[idx]
        seen = set()
        for b in range(len(space)):
            if space[b] >= size and space[b] not in seen:
                seen.add(space[b])
                space[b] -= size
                if pack(idx + 1, space):
                    space[b] += size
                    return True
                space[b] += size
        return False

    return pack(0, bins)


def characterize_family(n: int) -> TheoremCheck:
    """Double inclusion for the tau_3 = n-5 complement-shape family."""
    if n < 10:
        raise InputError("family characterization needs n >= 10")
    fams = _family_shapes(n)
    violations = []
    scanned = 0
    for c in range(n + 1):
        for shape in complement_shapes(n, c, 2):
            gbar = shape_complement_graph(n, shape)
            g = complement(gbar)
            scanned += 1
            got = _tau(g, 3)
            member = any(shape_embeds(shape, fam) for fam in fams)
            if member != (got == n - 5):
                violations.append(
                    f"complement {shape}: tau_3={got}, family member={member}")
    return _check("L3.6", n, "tau_3=n-5 iff complement embeds in the family",
                  violations, scanned,
                  note="universe: complements with maximum degree <= 2 "
                       "(forced by the degree bound)")


_CHARACTERIZATIONS = {
    "L2.5": characterize_complete,
    "L2.6": characterize_near_complete,
    "L3.1": lambda n, seed=0: characterize_whole_set(n),
    "L3.2": characterize_all_but_one,
    "L3.3": characterize_all_but_two,
    "L3.6": lambda n, seed=0: characterize_family(n),
    "P3.1": characterize_all_but_three,
}


def verify_characterization(lemma_id: str, n: int, seed: int = 0) -> TheoremCheck:
    """Both-direction check of one catalogued class description."""
    try:
        fn = _CHARACTERIZATIONS[lemma_id]
    except KeyError:
        raise InputError(
            f"unknown characterization {lemma_id!r}; choose from "
            + ", ".join(sorted(_CHARACTERIZATIONS))) from None
    return fn(n, seed=seed)
