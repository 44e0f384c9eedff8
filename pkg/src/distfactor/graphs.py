"""Simple undirected labeled graphs and the algebraic constructions used throughout.

Vertices are the integers 0..n-1.  Edges are stored once as sorted pairs.
All values are immutable and safe to share between tasks.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertex labels 0..n-1 with an immutable edge set."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"bad edge ({u}, {v}) for n={self.n}")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, normalizing each pair to sorted order."""
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            norm.add((u, v) if u < v else (v, u))
        return Graph(n, frozenset(norm))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edges

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return sorted(out)

    def adjacency_masks(self) -> list[int]:
        """Adjacency rows as integer bitmasks (bit u of row v set iff uv is an edge)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class BlockLayout:
    """Ordered block sizes partitioning the vertex range of a constructed graph."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        if any(s < 0 for s in self.sizes):
            raise ValueError(f"block sizes must be nonnegative: {self.sizes}")

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def blocks(self, drop_empty: bool = False) -> list[list[int]]:
        """Consecutive vertex blocks; optionally drop zero-size blocks."""
        out, start = [], 0
        for s in self.sizes:
            if s or not drop_empty:
                out.append(list(range(start, start + s)))
            start += s
        return out


@dataclass(frozen=True)
class GraphStats:
    connected: bool
    min_degree: int
    edge_count: int
    degree_multiset: tuple[int, ...]


# ---------------------------------------------------------------------------
# Elementary constructions
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def empty_graph(n: int) -> Graph:
    """Independent set on n vertices."""
    if n < 1:
        raise ValueError("independent set needs at least one vertex")
    return Graph(n, frozenset())


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph(n, frozenset((i, (i + 1) % n) if i + 1 < n else (0, i) for i in range(n)))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two vertex sets; g's labels come first."""
    edges = set(g.edges)
    edges.update((u + g.n, v + g.n) for u, v in h.edges)
    edges.update((u, v + g.n) for u in range(g.n) for v in range(h.n))
    return Graph(g.n + h.n, frozenset(edges))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = set(g.edges)
    edges.update((u + g.n, v + g.n) for u, v in h.edges)
    return Graph(g.n + h.n, frozenset(edges))


def complement(g: Graph) -> Graph:
    all_pairs = itertools.combinations(range(g.n), 2)
    return Graph(g.n, frozenset(p for p in all_pairs if p not in g.edges))


def delete(g: Graph, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()) -> tuple[Graph, dict[int, int]]:
    """Remove vertices (with incident edges) and explicit edges.

    Remaining vertices are relabeled contiguously; returns the graph and the
    old-to-new label map so callers can translate witnesses back.
    """
    vset = set(vertices)
    for v in vset:
        if not 0 <= v < g.n:
            raise ValueError(f"unknown vertex {v}")
    eset = set()
    for u, v in edges:
        e = (u, v) if u < v else (v, u)
        if e not in g.edges:
            raise ValueError(f"unknown edge {e}")
        eset.add(e)
    keep = [v for v in range(g.n) if v not in vset]
    relabel = {old: new for new, old in enumerate(keep)}
    new_edges = [
        (relabel[u], relabel[v])
        for u, v in g.edges
        if u not in vset and v not in vset and (u, v) not in eset
    ]
    return Graph.from_edges(len(keep), new_edges), relabel


# ---------------------------------------------------------------------------
# Connectivity
# ---------------------------------------------------------------------------

def connected_components(g: Graph) -> list[list[int]]:
    masks = g.adjacency_masks()
    unseen = (1 << g.n) - 1
    comps = []
    while unseen:
        start = (unseen & -unseen).bit_length() - 1
        frontier = 1 << start
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            m = frontier
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                nxt |= masks[v]
            frontier = nxt & ~comp
        unseen &= ~comp
        comps.append([v for v in range(g.n) if comp >> v & 1])
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(connected_components(g)) == 1


def graph_stats(g: Graph) -> GraphStats:
    deg = g.degrees()
    return GraphStats(
        connected=is_connected(g),
        min_degree=min(deg) if deg else 0,
        edge_count=g.edge_count,
        degree_multiset=tuple(sorted(deg)),
    )


# ---------------------------------------------------------------------------
# Extremal families
#
# The canonical vertex order puts the independent part first, then the small
# clique, then the large clique, then the trailing independent part, so the
# distance matrices of the two families differ exactly on the documented
# blocks and can be compared by direct subtraction.
# ---------------------------------------------------------------------------

def extremal_graph(n: int, r: int) -> tuple[Graph, BlockLayout]:
    """The bound-attaining family: join of I_r, K_r and (K_{n-3r-1} + I_{r+1}).

    Canonical layout [r, r, n-3r-1, r+1].  Every pair of parts is fully
    joined except the large clique and the trailing independent set, which
    are separate components of the third operand.
    """
    if r < 1:
        raise ValueError(f"independent-part size must be positive, got r={r}")
    if n < 3 * r + 2:
        raise ValueError(f"order too small: need n >= 3r+2 = {3*r+2}, got n={n}")
    layout = BlockLayout((r, r, n - 3 * r - 1, r + 1))
    a, b, c, e = layout.blocks()
    edges = set()
    edges.update(itertools.combinations(b, 2))
    edges.update(itertools.combinations(c, 2))
    for part1, part2 in [(a, b), (a, c), (a, e), (b, c), (b, e)]:
        edges.update((u, v) for u in part1 for v in part2)
    return Graph.from_edges(n, edges), layout


def barrier_graph(n: int, r: int, s: int) -> tuple[Graph, BlockLayout]:
    """Wider-clique barrier family: join of I_r, K_s and (K_{n-2s-r-1} + I_{s+1}).

    Refined canonical layout [r, r, s-r, n-2s-r-1, s-r, r+1], aligned with
    extremal_graph's layout so the two distance matrices subtract blockwise.
    At s = r this is edge-identical to extremal_graph(n, r).
    """
    if r < 1 or s < r:
        raise ValueError(f"need s >= r >= 1, got r={r}, s={s}")
    if n < 2 * s + r + 2:
        raise ValueError(f"order too small: need n >= 2s+r+2 = {2*s+r+2}, got n={n}")
    layout = BlockLayout((r, r, s - r, n - 2 * s - r - 1, s - r, r + 1))
    a, b, c1, c2, c3, e = layout.blocks()
    clique = b + c1          # K_s
    trailing = c3 + e        # I_{s+1}
    edges = set()
    edges.update(itertools.combinations(clique, 2))
    edges.update(itertools.combinations(c2, 2))
    for part1, part2 in [(a, clique), (a, c2), (a, trailing), (clique, c2), (clique, trailing)]:
        edges.update((u, v) for u in part1 for v in part2)
    return Graph.from_edges(n, edges), layout


def join_odd_cliques(r: int, s: int, parts: Sequence[int]) -> Graph:
    """Join of I_r, K_s and a disjoint union of odd cliques K_{parts[i]}."""
    if s < 0 or r < 1:
        raise ValueError(f"need r >= 1 and s >= 0, got r={r}, s={s}")
    if not parts:
        raise ValueError("at least one clique part required")
    for p in parts:
        if p < 1 or p % 2 == 0:
            raise ValueError(f"clique parts must be odd and positive, got {p}")
    n = r + s + sum(parts)
    a = list(range(r))
    b = list(range(r, r + s))
    edges = set(itertools.combinations(b, 2))
    start = r + s
    clique_blocks = []
    for p in parts:
        blk = list(range(start, start + p))
        clique_blocks.append(blk)
        edges.update(itertools.combinations(blk, 2))
        start += p
    third = [v for blk in clique_blocks for v in blk]
    for part1, part2 in [(a, b), (a, third), (b, third)]:
        edges.update((u, v) for u in part1 for v in part2)
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# graph6 interchange format
#
# Standard bit-packing: vertex count, then the upper triangle column by
# column, six bits per printable byte offset by 63.
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    n = g.n
    if n > 258047:
        raise ValueError(f"graph6 supports at most 258047 vertices, got {n}")
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr((n >> shift & 63) + 63) for shift in (12, 6, 0))
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if (u, v) in g.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    chunks = (
        chr((bits[i] << 5 | bits[i + 1] << 4 | bits[i + 2] << 3
             | bits[i + 3] << 2 | bits[i + 4] << 1 | bits[i + 5]) + 63)
        for i in range(0, len(bits), 6)
    )
    return head + "".join(chunks)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside graph6 range 63..126", i)
    if s[0] != "~":
        n, body, body_off = ord(s[0]) - 63, s[1:], 1
    else:
        if len(s) < 4:
            raise Graph6Error("truncated long-form vertex count", len(s))
        if s[1] == "~":
            raise Graph6Error("very-long-form vertex counts not supported", 1)
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body, body_off = s[4:], 4
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise Graph6Error(
            f"expected {expected} adjacency bytes for n={n}, got {len(body)}",
            body_off + min(len(body), expected),
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", body_off + len(body) - 1)
    edges, i = [], 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Whitespace edge-list format
# ---------------------------------------------------------------------------

def to_edge_list(g: Graph) -> str:
    """Vertex count on the first line, then one 'u v' pair per edge."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def from_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0].startswith("#"):
            continue
        if len(tokens) == 1:
            n = int(tokens[0])
        elif len(tokens) == 2:
            edges.append((int(tokens[0]), int(tokens[1])))
        else:
            raise ValueError(f"line {lineno}: expected 'u v' or a vertex count")
    top = max((max(u, v) for u, v in edges), default=-1)
    if n is None:
        n = top + 1
    elif top >= n:
        raise ValueError(f"edge label {top} exceeds declared vertex count {n}")
    if n < 1:
        raise ValueError("edge list describes an empty graph")
    return Graph.from_edges(n, edges)


def degree_histogram(g: Graph) -> Counter:
    return Counter(g.degrees())
