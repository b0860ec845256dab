"""Immutable undirected simple graphs with a bitset adjacency view.

Vertices are dense integers 0..n-1.  Edges are kept canonically as a
sorted tuple of (u, v) pairs with u < v; a per-vertex bitmask mirror of
the adjacency gives O(1) membership tests, which the induced-path
search below leans on heavily.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "Graph",
    "P4Witness",
    "complement",
    "cartesian_product",
    "hypercube",
    "enumerate_induced_p4",
    "first_induced_p4",
    "connected_components",
    "random_graph",
    "parse_edge_list",
    "format_edge_list",
]


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class P4Witness(NamedTuple):
    """Four distinct vertices inducing the path a-b-c-d.

    The pattern requires edges ab, bc, cd and non-edges ac, bd, ad in
    the host graph; ``holds_in`` re-checks it by direct lookup.
    """

    a: int
    b: int
    c: int
    d: int

    def holds_in(self, g: "Graph") -> bool:
        a, b, c, d = self
        if len({a, b, c, d}) != 4:
            return False
        if not all(0 <= v < g.n for v in self):
            return False
        return (
            g.has_edge(a, b)
            and g.has_edge(b, c)
            and g.has_edge(c, d)
            and not g.has_edge(a, c)
            and not g.has_edge(b, d)
            and not g.has_edge(a, d)
        )


class Graph:
    """Undirected simple graph, immutable after construction.

    Edges are canonicalized (u < v, deduplicated, sorted).  Construction
    rejects self-loops, out-of-range endpoints and a negative vertex
    count, naming the offending item.  n = 0 and n = 1 are legal.
    """

    __slots__ = ("n", "edges", "_adj", "_edge_set")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise ValueError(f"vertex count must be a non-negative integer, got {n!r}")
        canon = set()
        for pair in edges:
            u, v = pair
            for end in (u, v):
                if not isinstance(end, int) or isinstance(end, bool):
                    raise ValueError(f"edge {tuple(pair)!r} has a non-integer endpoint")
            if u == v:
                raise ValueError(f"self-loop {tuple(pair)!r} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {tuple(pair)!r} has an endpoint outside 0..{n - 1}")
            canon.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(canon))
        self._edge_set = frozenset(self.edges)
        adj = [0] * n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._adj = tuple(adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return self._edge_set

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return bool(self._adj[u] >> v & 1)

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def max_degree(self) -> int:
        """Largest vertex degree; 0 for graphs without edges."""
        if self.n == 0:
            return 0
        return max(a.bit_count() for a in self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def complement(g: Graph) -> Graph:
    """Graph on the same vertices whose edges are exactly the non-edges of g."""
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g._adj[u] >> v & 1
    ]
    return Graph(g.n, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex (a, b) is flattened row-major to a*|V(h)| + b.

    (a1, b1) and (a2, b2) are adjacent iff the pairs agree in one
    coordinate and are adjacent in the other.
    """
    hn = h.n
    edges = []
    for a in range(g.n):
        base = a * hn
        for u, v in h.edges:
            edges.append((base + u, base + v))
    for u, v in g.edges:
        for b in range(hn):
            edges.append((u * hn + b, v * hn + b))
    return Graph(g.n * hn, edges)


def hypercube(d: int) -> Graph:
    """The d-cube: 2**d bit-vector vertices, edges at Hamming distance 1."""
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise ValueError(f"hypercube dimension must be a non-negative integer, got {d!r}")
    n = 1 << d
    edges = [(v, v | 1 << b) for v in range(n) for b in range(d) if not v >> b & 1]
    return Graph(n, edges)


def _p4_scan(g: Graph, stop_at_first: bool) -> list[P4Witness]:
    # Lexicographic scan over canonical quadruples (a, b, c, d) with a < d.
    adj = g._adj
    n = g.n
    found = []
    for a in range(n):
        for b in _bits(adj[a]):
            # c adjacent to b, not adjacent or equal to a
            for c in _bits(adj[b] & ~adj[a] & ~(1 << a)):
                # d adjacent to c, independent of a and b, with a < d
                dmask = adj[c] & ~adj[b] & ~adj[a] & ~(1 << b)
                dmask &= -1 << (a + 1)
                for d in _bits(dmask):
                    found.append(P4Witness(a, b, c, d))
                    if stop_at_first:
                        return found
    return found


def enumerate_induced_p4(g: Graph) -> list[P4Witness]:
    """Brute-force induced-path oracle.

    Returns every canonical quadruple (a, b, c, d) with a < d such that
    ab, bc, cd are edges and ac, bd, ad are not, sorted lexicographically.
    The list is empty exactly when g is a cograph.
    """
    return sorted(_p4_scan(g, stop_at_first=False))


def first_induced_p4(g: Graph) -> P4Witness | None:
    """Lexicographically smallest induced-path witness, or None."""
    found = _p4_scan(g, stop_at_first=True)
    return found[0] if found else None


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, each sorted, ordered by minimum."""
    return [tuple(_bits(m)) for m in _component_masks(g._adj, (1 << g.n) - 1, False)]


def _component_masks(adj: tuple[int, ...] | list[int], subset: int, in_complement: bool) -> list[int]:
    """Connected components of the subgraph induced on ``subset``, as bitmasks.

    With ``in_complement`` the complement adjacency (within the subset)
    is used instead.  Components come out ordered by lowest vertex.
    """
    comps = []
    rest = subset
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grow = 0
            for v in _bits(frontier):
                nb = ~adj[v] & ~(1 << v) if in_complement else adj[v]
                grow |= nb & subset
            frontier = grow & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi style graph: each pair becomes an edge with probability p."""
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)


def parse_edge_list(text: str) -> Graph:
    """Read the ``n m`` / ``u v`` edge-list format; ``#`` starts a comment line."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise ValueError(f"line {lineno}: expected header 'n m', got {raw!r}")
            try:
                header = (int(fields[0]), int(fields[1]))
            except ValueError:
                raise ValueError(f"line {lineno}: header values must be integers") from None
            continue
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected an edge 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: edge endpoints must be integers") from None
        if len(edges) >= (header[1] if header else 0):
            raise ValueError(f"line {lineno}: more edge lines than the declared count {header[1]}")
        edges.append((u, v))
    if header is None:
        raise ValueError("line 1: missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise ValueError(f"declared {m} edges but found {len(edges)}")
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    """Canonical edge-list text; parse_edge_list round-trips it byte for byte."""
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
