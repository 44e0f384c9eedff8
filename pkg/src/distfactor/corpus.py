"""Graph corpora for exhaustive and sampled scans.

Exhaustive enumeration produces one representative per isomorphism class by
extending each (n-1)-vertex representative with every possible neighborhood
for a new vertex, then deduplicating.  Candidates are bucketed by a
refinement-based invariant and settled inside each bucket with an exact
backtracking isomorphism test, so the output is provably one-per-class.
The class counts are pinned in tests against the known sequence
1, 2, 4, 11, 34, 156, 1044, 12346 (connected: 1, 1, 2, 6, 21, 112, 853, 11117).
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Iterator, Sequence

from .graphs import Graph, from_graph6, is_connected

ENUMERATION_CAP = 9


def _refinement_invariant(masks: Sequence[int], n: int,
                          rounds: int = 3) -> tuple[tuple[int, ...], tuple]:
    """Refined vertex colors plus an isomorphism-invariant bucket key.

    The key is the multiset of final (color, sorted neighbor colors)
    signatures.  Signature ranks are derived from sorted signatures, so both
    outputs are invariant under relabeling; when refinement fully separates
    the vertices the key determines the graph, which keeps dedup buckets
    near size one.
    """
    nbrs = [[u for u in range(n) if masks[v] >> u & 1] for v in range(n)]
    colors = [len(nb) for nb in nbrs]
    sigs: list = [(c, ()) for c in colors]
    for _ in range(rounds):
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in nbrs[v])))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return tuple(colors), tuple(sorted(sigs))


def _isomorphic(masks1: Sequence[int], colors1: Sequence[int],
                masks2: Sequence[int], colors2: Sequence[int], n: int) -> bool:
    """Exact isomorphism by color-respecting backtracking over bitmask rows."""
    if sorted(colors1) != sorted(colors2):
        return False
    by_color: dict[int, list[int]] = {}
    for u in range(n):
        by_color.setdefault(colors2[u], []).append(u)
    class_size = {c: len(vs) for c, vs in by_color.items()}
    order = sorted(range(n), key=lambda v: (class_size[colors1[v]], colors1[v], v))
    mapped = [0] * n           # image of order[i]
    used = 0

    def place(depth: int) -> bool:
        nonlocal used
        if depth == n:
            return True
        v = order[depth]
        required = 0
        row = masks1[v]
        for i in range(depth):
            if row >> order[i] & 1:
                required |= 1 << mapped[i]
        for u in by_color[colors1[v]]:
            if used >> u & 1:
                continue
            if masks2[u] & used == required:
                mapped[depth] = u
                used |= 1 << u
                if place(depth + 1):
                    return True
                used &= ~(1 << u)
        return False

    return place(0)


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Graph, ...]:
    """All simple graphs on n vertices, one per isomorphism class, deterministic order."""
    if not 1 <= n <= ENUMERATION_CAP:
        raise ValueError(f"exhaustive enumeration supports 1 <= n <= {ENUMERATION_CAP}, got {n}")
    if n == 1:
        return (Graph(1, frozenset()),)
    reps: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    buckets: dict[tuple, list[int]] = {}
    out: list[Graph] = []
    new_bit = 1 << (n - 1)
    for parent in all_graphs(n - 1):
        base = parent.adjacency_masks()
        for nb in range(1 << (n - 1)):
            masks = [base[v] | new_bit if nb >> v & 1 else base[v] for v in range(n - 1)]
            masks.append(nb)
            colors, key = _refinement_invariant(masks, n)
            bucket = buckets.setdefault(key, [])
            if any(
                _isomorphic(masks, colors, reps[i][0], reps[i][1], n)
                for i in bucket
            ):
                continue
            bucket.append(len(reps))
            reps.append((tuple(masks), colors))
            edges = [
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if masks[u] >> v & 1
            ]
            out.append(Graph.from_edges(n, edges))
    return tuple(out)


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in all_graphs(n) if is_connected(g))


def connected_graphs_upto(n: int) -> Iterator[Graph]:
    for k in range(1, n + 1):
        yield from connected_graphs(k)


def random_connected_graph(n: int, rng: random.Random) -> Graph:
    """Connected Erdos-Renyi draw; the edge probability itself is sampled per
    graph from U(0.25, 0.75) so corpora mix sparse and dense instances."""
    if n < 1:
        raise ValueError("need at least one vertex")
    while True:
        p = rng.uniform(0.25, 0.75)
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g


def sample_connected_graphs(n: int, count: int, seed: int) -> list[Graph]:
    rng = random.Random(seed)
    return [random_connected_graph(n, rng) for _ in range(count)]


def read_graph6_lines(text: str) -> list[Graph]:
    return [from_graph6(line) for line in text.splitlines() if line.strip()]
