"""Exact combinatorial oracles for matchings and factors.

Every notion gets ground truth at desk scale: maximum matching (blossom),
exhaustive Tutte-type violator searches, exact rational feasibility for
fractional degree-constrained assignments, a gadget reduction for k-factors,
and independent-set-deletable factor criticality.  Witnesses are re-validated
by independent recount before they are returned, and exhaustive searches
return the first violator in (size, lexicographic) order so results are
deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import networkx as nx

from . import rational_lp
from .graphs import Graph, delete

SUBSET_SEARCH_CAP = 24
HALF_INTEGRAL_EDGE_CAP = 16
HALL_SIDE_CAP = 20


class TooLargeError(ValueError):
    """Input exceeds an exhaustive-search cap."""


@dataclass(frozen=True)
class ComponentStats:
    components: int
    odd_components: int
    isolated: int


@dataclass(frozen=True)
class FactorWitness:
    """Verdict plus a positive certificate or a violating certificate.

    Positive certificates: a matching or factor edge set, or an exact
    fractional assignment.  Negative certificates: a blocking vertex set S,
    a blocking pair (I, S), or a single blocking edge, together with the
    violated count (odd components, isolated vertices, or neighborhood size).
    """

    exists: bool
    kind: str
    edges: frozenset[tuple[int, int]] | None = None
    assignment: tuple[tuple[tuple[int, int], Fraction], ...] | None = None
    blocking_set: tuple[int, ...] | None = None
    blocking_pair: tuple[tuple[int, ...], tuple[int, ...]] | None = None
    blocking_edge: tuple[int, int] | None = None
    deficiency: int | None = None
    detail: str = ""

    def to_json(self) -> dict:
        out: dict = {"exists": self.exists, "kind": self.kind}
        if self.edges is not None:
            out["edges"] = [list(e) for e in sorted(self.edges)]
        if self.assignment is not None:
            out["assignment"] = [
                {"edge": list(e), "value": [h.numerator, h.denominator]}
                for e, h in self.assignment
            ]
        if self.blocking_set is not None:
            out["blocking_set"] = list(self.blocking_set)
        if self.blocking_pair is not None:
            out["blocking_pair"] = {
                "independent_set": list(self.blocking_pair[0]),
                "separator": list(self.blocking_pair[1]),
            }
        if self.blocking_edge is not None:
            out["blocking_edge"] = list(self.blocking_edge)
        if self.deficiency is not None:
            out["deficiency"] = self.deficiency
        if self.detail:
            out["detail"] = self.detail
        return out


# ---------------------------------------------------------------------------
# Components
# ---------------------------------------------------------------------------

def _component_sizes(masks: Sequence[int], n: int, removed: int) -> list[int]:
    remaining = ((1 << n) - 1) & ~removed
    sizes = []
    while remaining:
        start = remaining & -remaining
        frontier = start
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= masks[v]
            frontier = nxt & remaining & ~comp
        remaining &= ~comp
        sizes.append(comp.bit_count())
    return sizes


def component_stats(g: Graph, removed: Sequence[int] = ()) -> ComponentStats:
    """Component, odd-component, and isolated-vertex counts, optionally after removing vertices."""
    removed_mask = 0
    for v in removed:
        removed_mask |= 1 << v
    sizes = _component_sizes(g.adjacency_masks(), g.n, removed_mask)
    return ComponentStats(
        components=len(sizes),
        odd_components=sum(1 for s in sizes if s % 2),
        isolated=sum(1 for s in sizes if s == 1),
    )


# ---------------------------------------------------------------------------
# Matching
# ---------------------------------------------------------------------------

def max_matching(g: Graph) -> FactorWitness:
    """Maximum matching (blossom); exists flags whether it is perfect."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    raw = nx.max_weight_matching(nxg, maxcardinality=True)
    edges = frozenset((u, v) if u < v else (v, u) for u, v in raw)
    covered: set[int] = set()
    for u, v in edges:
        if u in covered or v in covered:
            raise ArithmeticError("matching edges are not disjoint")
        covered.update((u, v))
    perfect = len(covered) == g.n
    return FactorWitness(
        exists=perfect,
        kind="perfect-matching",
        edges=edges,
        deficiency=g.n - len(covered),
    )


def _subsets_by_size(universe: Sequence[int]):
    for k in range(len(universe) + 1):
        yield from itertools.combinations(universe, k)


def tutte_violator(g: Graph) -> FactorWitness:
    """Exhaustive search for S with more odd components in G-S than |S|.

    A violator refutes a perfect matching; no violator certifies one exists.
    """
    if g.n > SUBSET_SEARCH_CAP:
        raise TooLargeError(f"subset search capped at n = {SUBSET_SEARCH_CAP}, got {g.n}")
    masks = g.adjacency_masks()
    for subset in _subsets_by_size(range(g.n)):
        removed = 0
        for v in subset:
            removed |= 1 << v
        sizes = _component_sizes(masks, g.n, removed)
        odd = sum(1 for s in sizes if s % 2)
        if odd > len(subset):
            return FactorWitness(
                exists=False,
                kind="perfect-matching",
                blocking_set=subset,
                deficiency=odd,
                detail=f"odd components {odd} exceed |S| = {len(subset)}",
            )
    return FactorWitness(exists=True, kind="perfect-matching")


def fractional_pm_violator(g: Graph) -> FactorWitness:
    """Exhaustive search for S with more isolated vertices in G-S than |S|."""
    if g.n > SUBSET_SEARCH_CAP:
        raise TooLargeError(f"subset search capped at n = {SUBSET_SEARCH_CAP}, got {g.n}")
    masks = g.adjacency_masks()
    for subset in _subsets_by_size(range(g.n)):
        removed = 0
        for v in subset:
            removed |= 1 << v
        sizes = _component_sizes(masks, g.n, removed)
        isolated = sum(1 for s in sizes if s == 1)
        if isolated > len(subset):
            return FactorWitness(
                exists=False,
                kind="fractional-perfect-matching",
                blocking_set=subset,
                deficiency=isolated,
                detail=f"isolated vertices {isolated} exceed |S| = {len(subset)}",
            )
    return FactorWitness(exists=True, kind="fractional-perfect-matching")


def hall_check(g: Graph, side_a: Sequence[int], side_b: Sequence[int]) -> FactorWitness:
    """Neighborhood-size check over all subsets of side A of a bipartition."""
    a_set, b_set = set(side_a), set(side_b)
    if a_set & b_set or len(a_set) + len(b_set) != g.n or a_set | b_set != set(range(g.n)):
        raise ValueError("sides must partition the vertex set")
    for u, v in g.edges:
        if (u in a_set) == (v in a_set):
            raise ValueError(f"edge ({u}, {v}) does not cross the bipartition")
    if len(a_set) > HALL_SIDE_CAP:
        raise TooLargeError(f"side-A subset search capped at {HALL_SIDE_CAP}, got {len(a_set)}")
    masks = g.adjacency_masks()
    for subset in _subsets_by_size(sorted(a_set)):
        nbhd = 0
        for v in subset:
            nbhd |= masks[v]
        if nbhd.bit_count() < len(subset):
            return FactorWitness(
                exists=False,
                kind="bipartite-perfect-matching",
                blocking_set=subset,
                deficiency=nbhd.bit_count(),
                detail=f"|N(S)| = {nbhd.bit_count()} < |S| = {len(subset)}",
            )
    return FactorWitness(
        exists=len(a_set) == len(b_set),
        kind="bipartite-perfect-matching",
        detail="" if len(a_set) == len(b_set) else "sides have unequal sizes",
    )


# ---------------------------------------------------------------------------
# Fractional [a, b] assignments
# ---------------------------------------------------------------------------

def _validate_assignment(g: Graph, a: int, b: int,
                         h: dict[tuple[int, int], Fraction]) -> None:
    sums = {v: Fraction(0) for v in range(g.n)}
    for (u, v), val in h.items():
        if not 0 <= val <= 1:
            raise ArithmeticError(f"assignment value {val} outside [0, 1]")
        sums[u] += val
        sums[v] += val
    for v, s in sums.items():
        if not a <= s <= b:
            raise ArithmeticError(f"vertex {v} incident sum {s} outside [{a}, {b}]")


def fractional_ab_factor(g: Graph, a: int, b: int) -> FactorWitness:
    """Exact feasibility of edge weights in [0,1] with vertex sums in [a, b].

    Constant assignments settle the common cases instantly; everything else
    goes to the exact rational phase-1 simplex.
    """
    if not 1 <= a <= b:
        raise ValueError(f"need 1 <= a <= b, got a={a}, b={b}")
    kind = "fractional-factor"
    deg = g.degrees()
    if g.n == 0:
        return FactorWitness(exists=True, kind=kind, assignment=())
    if min(deg) < a:
        worst = min(range(g.n), key=lambda v: deg[v])
        return FactorWitness(
            exists=False, kind=kind, blocking_set=(worst,), deficiency=deg[worst],
            detail=f"vertex {worst} has degree {deg[worst]} < a = {a}",
        )
    edges = g.sorted_edges()
    const = Fraction(a, min(deg))
    if const <= 1 and const * max(deg) <= b:
        h = {e: const for e in edges}
        _validate_assignment(g, a, b, h)
        return FactorWitness(
            exists=True, kind=kind,
            assignment=tuple((e, const) for e in edges),
            detail="constant assignment",
        )
    index = {e: i for i, e in enumerate(edges)}
    constraints: list[rational_lp.Constraint] = []
    for e, i in index.items():
        constraints.append(({i: 1}, 1))
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for (u, v), i in index.items():
        incident[u].append(i)
        incident[v].append(i)
    for v in range(g.n):
        constraints.append(({i: 1 for i in incident[v]}, b))
        constraints.append(({i: -1 for i in incident[v]}, -a))
    point = rational_lp.feasible_point(len(edges), constraints)
    if point is None:
        return FactorWitness(exists=False, kind=kind, detail="linear system infeasible")
    h = {e: point[i] for e, i in index.items()}
    _validate_assignment(g, a, b, h)
    return FactorWitness(
        exists=True, kind=kind,
        assignment=tuple((e, h[e]) for e in edges),
    )


def half_integral_feasible(g: Graph, a: int, b: int) -> FactorWitness:
    """Brute-force search over assignments with values in {0, 1/2, 1}.

    Independent oracle for fractional_ab_factor; extreme points of these
    degree polytopes are half-integral, so the two must agree on existence.
    """
    if not 1 <= a <= b:
        raise ValueError(f"need 1 <= a <= b, got a={a}, b={b}")
    if g.edge_count > HALF_INTEGRAL_EDGE_CAP:
        raise TooLargeError(
            f"half-integral brute force capped at {HALF_INTEGRAL_EDGE_CAP} edges, got {g.edge_count}"
        )
    kind = "fractional-factor"
    deg = g.degrees()
    edges = g.sorted_edges()
    if any(d == 0 for d in deg):
        v = deg.index(0)
        return FactorWitness(exists=False, kind=kind, blocking_set=(v,), deficiency=0,
                             detail=f"vertex {v} is isolated but a = {a} > 0")
    remaining = [Fraction(d) for d in deg]
    current = [Fraction(0)] * g.n
    values = (Fraction(1), Fraction(1, 2), Fraction(0))
    chosen: dict[tuple[int, int], Fraction] = {}

    def assign(idx: int) -> bool:
        if idx == len(edges):
            return True
        u, v = edges[idx]
        remaining[u] -= 1
        remaining[v] -= 1
        for val in values:
            ok = True
            for w in (u, v):
                s = current[w] + val
                if s > b or s + remaining[w] < a:
                    ok = False
                    break
            if ok:
                current[u] += val
                current[v] += val
                chosen[(u, v)] = val
                if assign(idx + 1):
                    return True
                del chosen[(u, v)]
                current[u] -= val
                current[v] -= val
        remaining[u] += 1
        remaining[v] += 1
        return False

    if assign(0):
        _validate_assignment(g, a, b, chosen)
        return FactorWitness(exists=True, kind=kind,
                             assignment=tuple((e, chosen[e]) for e in edges))
    return FactorWitness(exists=False, kind=kind, detail="no half-integral assignment")


def is_fractional_ab_deleted(g: Graph, a: int, b: int) -> FactorWitness:
    """True when every single-edge deletion still admits a fractional [a, b] assignment."""
    for e in g.sorted_edges():
        reduced, _ = delete(g, edges=[e])
        if not fractional_ab_factor(reduced, a, b).exists:
            return FactorWitness(
                exists=False, kind="fractional-deleted", blocking_edge=e,
                detail=f"removing edge {e} leaves no fractional [{a}, {b}] assignment",
            )
    return FactorWitness(exists=True, kind="fractional-deleted")


# ---------------------------------------------------------------------------
# k-factors by gadget reduction to perfect matching
# ---------------------------------------------------------------------------

def has_k_factor(g: Graph, k: int) -> FactorWitness:
    """Spanning k-regular subgraph via the port/core expansion.

    Each vertex v becomes d(v) ports (one per incident edge) plus d(v)-k
    cores joined to all of v's ports; each original edge links its two ports.
    Perfect matchings of the expansion select exactly the k-factors: cores
    absorb d(v)-k ports, the k ports left must match across their edges.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    kind = f"{k}-factor"
    if (k * g.n) % 2:
        return FactorWitness(exists=False, kind=kind, detail=f"k*n = {k * g.n} is odd")
    deg = g.degrees()
    if g.n and min(deg) < k:
        v = min(range(g.n), key=lambda u: deg[u])
        return FactorWitness(exists=False, kind=kind, blocking_set=(v,), deficiency=deg[v],
                             detail=f"vertex {v} has degree {deg[v]} < k")
    edges = g.sorted_edges()
    gadget = nx.Graph()
    port = {}
    next_id = 0
    for e in edges:
        for v in e:
            port[(v, e)] = next_id
            next_id += 1
    for e in edges:
        u, v = e
        gadget.add_edge(port[(u, e)], port[(v, e)])
    for v in range(g.n):
        incident = [e for e in edges if v in e]
        for _ in range(deg[v] - k):
            core = next_id
            next_id += 1
            for e in incident:
                gadget.add_edge(core, port[(v, e)])
    gadget.add_nodes_from(range(next_id))
    matching = nx.max_weight_matching(gadget, maxcardinality=True)
    matched_pairs = {frozenset(e) for e in matching}
    if 2 * len(matching) != next_id:
        return FactorWitness(exists=False, kind=kind, detail="expansion has no perfect matching")
    factor = frozenset(
        e for e in edges if frozenset((port[(e[0], e)], port[(e[1], e)])) in matched_pairs
    )
    counts = [0] * g.n
    for u, v in factor:
        counts[u] += 1
        counts[v] += 1
    if any(c != k for c in counts):
        raise ArithmeticError(f"extracted factor is not {k}-regular: {counts}")
    return FactorWitness(exists=True, kind=kind, edges=factor)


# ---------------------------------------------------------------------------
# Independent-set-deletable factor criticality
# ---------------------------------------------------------------------------

def _independent_sets(masks: Sequence[int], n: int, parity: int):
    """All independent sets whose size has the given parity, by size then lex.

    The empty set participates when the parity is even.
    """
    def extend(chosen: tuple[int, ...], start: int, blocked: int, size: int):
        if len(chosen) == size:
            yield chosen
            return
        need = size - len(chosen)
        for v in range(start, n - need + 1):
            if not blocked >> v & 1:
                yield from extend(chosen + (v,), v + 1, blocked | masks[v] | 1 << v, size)

    for size in range(parity, n + 1, 2):
        if size == 0:
            yield ()
        else:
            yield from extend((), 0, 0, size)


def is_id_factor_critical(g: Graph) -> FactorWitness:
    """Definition-form decider: every parity-matching independent set leaves a
    perfectly matchable graph.

    On failure the witness pair (I, S) is completed by an exhaustive Tutte
    violator search inside G-I and re-counted on the original labels.
    """
    if g.n > SUBSET_SEARCH_CAP:
        raise TooLargeError(f"independent-set search capped at n = {SUBSET_SEARCH_CAP}, got {g.n}")
    masks = g.adjacency_masks()
    kind = "id-factor-critical"
    for ind in _independent_sets(masks, g.n, g.n % 2):
        reduced, relabel = delete(g, vertices=ind)
        if not max_matching(reduced).exists:
            inverse = {new: old for old, new in relabel.items()}
            sub_witness = tutte_violator(reduced)
            if sub_witness.exists:
                raise ArithmeticError("matching and Tutte oracles disagree on a subgraph")
            separator = tuple(sorted(inverse[v] for v in sub_witness.blocking_set))
            stats = component_stats(g, removed=tuple(ind) + separator)
            if stats.odd_components <= len(separator):
                raise ArithmeticError("witness recount failed")
            return FactorWitness(
                exists=False, kind=kind,
                blocking_pair=(tuple(ind), separator),
                deficiency=stats.odd_components,
                detail=(f"o(G - I - S) = {stats.odd_components} > |S| = {len(separator)}"),
            )
    return FactorWitness(exists=True, kind=kind)


def id_criterion_violator(g: Graph) -> FactorWitness:
    """Criterion-form decider: search directly for a pair (I, S) with more odd
    components in G-I-S than |S|.  Must agree with is_id_factor_critical.
    """
    if g.n > SUBSET_SEARCH_CAP:
        raise TooLargeError(f"independent-set search capped at n = {SUBSET_SEARCH_CAP}, got {g.n}")
    masks = g.adjacency_masks()
    kind = "id-factor-critical"
    for ind in _independent_sets(masks, g.n, g.n % 2):
        ind_mask = 0
        for v in ind:
            ind_mask |= 1 << v
        rest = [v for v in range(g.n) if not ind_mask >> v & 1]
        for subset in _subsets_by_size(rest):
            removed = ind_mask
            for v in subset:
                removed |= 1 << v
            sizes = _component_sizes(masks, g.n, removed)
            odd = sum(1 for s in sizes if s % 2)
            if odd > len(subset):
                return FactorWitness(
                    exists=False, kind=kind,
                    blocking_pair=(tuple(ind), subset),
                    deficiency=odd,
                    detail=f"o(G - I - S) = {odd} > |S| = {len(subset)}",
                )
    return FactorWitness(exists=True, kind=kind)


# ---------------------------------------------------------------------------
# Edge-count thresholds that force factors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EdgeThreshold:
    kind: str
    n: int
    threshold: Fraction
    strict: bool
    min_edge_count: int              # least integer edge count meeting the bound
    min_degree_required: int
    min_order: int
    parity_note: str | None = None

    def met_by(self, edge_count: int) -> bool:
        if self.strict:
            return edge_count > self.threshold
        return edge_count >= self.threshold


def edge_threshold(kind: str, n: int, a_or_k: int, b: int | None = None) -> EdgeThreshold:
    """Edge-count bound that guarantees the requested factor, with side conditions."""
    base = Fraction((n - 1) * (n - 2), 2)
    if kind == "fractional":
        a = a_or_k
        if a < 1 or (b is not None and b < a):
            raise ValueError(f"need 1 <= a <= b, got a={a}, b={b}")
        if n < a + 1:
            raise ValueError(f"need n >= a+1 = {a+1}, got n={n}")
        thr = base + Fraction(a + 1, 2)
        parity = f"n*a even required when a = b = {a}" if (b is None or b == a) else None
        return EdgeThreshold("fractional", n, thr, False, _ceil(thr), a, a + 1, parity)
    if kind == "deleted":
        a = a_or_k
        if b is None:
            raise ValueError("deleted threshold needs both a and b")
        if a < 1 or b < max(a, 3):
            raise ValueError(f"need b >= max(a, 3), got a={a}, b={b}")
        if n < max(a + 2, 7):
            raise ValueError(f"need n >= max(a+2, 7) = {max(a + 2, 7)}, got n={n}")
        thr = base + Fraction(a + 2, 2)
        return EdgeThreshold("deleted", n, thr, False, _ceil(thr), a + 1, max(a + 2, 7))
    if kind == "k_factor":
        k = a_or_k
        if k < 1:
            raise ValueError(f"need k >= 1, got {k}")
        if n < k + 1:
            raise ValueError(f"need n >= k+1 = {k+1}, got n={n}")
        thr = base + Fraction(k + 1, 2)
        return EdgeThreshold("k_factor", n, thr, True, _floor(thr) + 1, k, k + 1,
                             parity_note=f"n*k even required (k = {k})")
    raise ValueError(f"unknown threshold kind {kind!r}")


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator
