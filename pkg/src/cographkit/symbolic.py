"""Symmetric symbol-valued pair maps and their labeled-tree representations.

A map assigns every unordered vertex pair a symbol from a finite
alphabet 0..k-1, with the empty value reserved for the diagonal.  Two
checkers decide whether such a map can be realized as the lca labels of
a leaf tree: a direct one over the forbidden triple/quadruple patterns
(axioms U2/U3) and one over the per-symbol graphs (U2'/U3').  The
builder constructs a realizing tree, and an exhaustive small-scale
oracle searches for maps whose edge symbols and non-edge symbols are
disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .cotree import Cotree, check_structure, recognize
from .graph import Graph, P4Witness, _bits

__all__ = [
    "SymbolicMap",
    "AxiomViolation",
    "NotUltrametricError",
    "check_axioms",
    "check_via_graphs",
    "color_graph",
    "build_representation",
    "tree_to_map",
    "delta_from_graph",
    "search_separating_delta",
    "bell_number",
    "set_partitions",
    "parse_symbolic_map",
    "format_symbolic_map",
]


def _pair_index(n: int, u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return u * n - u * (u + 1) // 2 + (v - u - 1)


# The six ways to split the six pairs of a 4-set into two complementary
# 3-edge spanning paths; a quadruple violates U3 exactly when some split
# is monochromatic on both sides with two different symbols.
_QUAD_SPLITS = (
    (((0, 1), (1, 2), (2, 3)), ((0, 2), (0, 3), (1, 3))),
    (((0, 1), (1, 3), (2, 3)), ((0, 2), (0, 3), (1, 2))),
    (((0, 2), (1, 2), (1, 3)), ((0, 1), (0, 3), (2, 3))),
    (((0, 2), (2, 3), (1, 3)), ((0, 1), (0, 3), (1, 2))),
    (((0, 3), (1, 3), (1, 2)), ((0, 1), (0, 2), (2, 3))),
    (((0, 3), (2, 3), (1, 2)), ((0, 1), (0, 2), (1, 3))),
)


@lru_cache(maxsize=None)
def _pair_tables(n: int):
    """Precomputed pair list plus triple/quadruple index patterns for size n."""
    pairs = tuple((u, v) for u in range(n) for v in range(u + 1, n))
    triples = tuple(
        (
            _pair_index(n, x, y),
            _pair_index(n, x, z),
            _pair_index(n, y, z),
            (x, y, z),
        )
        for x in range(n)
        for y in range(x + 1, n)
        for z in range(y + 1, n)
    )
    quads = []
    for w in range(n):
        for x in range(w + 1, n):
            for y in range(x + 1, n):
                for z in range(y + 1, n):
                    q = (w, x, y, z)
                    splits = tuple(
                        (
                            tuple(_pair_index(n, q[i], q[j]) for i, j in side_a),
                            tuple(_pair_index(n, q[i], q[j]) for i, j in side_b),
                        )
                        for side_a, side_b in _QUAD_SPLITS
                    )
                    quads.append((splits, q))
    return pairs, triples, tuple(quads)


class SymbolicMap:
    """Symmetric map from vertex pairs to symbols 0..num_symbols-1.

    The diagonal is the empty value and only there, and the map is
    symmetric; both are enforced at construction.  Symbols are opaque
    ids; unused ids are allowed.
    """

    __slots__ = ("n", "num_symbols", "pair_symbols")

    def __init__(self, n: int, num_symbols: int, pair_symbols: Sequence[int]) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        if num_symbols < 1:
            raise ValueError(f"alphabet must contain at least one symbol, got {num_symbols}")
        expected = n * (n - 1) // 2
        if len(pair_symbols) != expected:
            raise ValueError(f"expected {expected} pair symbols, got {len(pair_symbols)}")
        for idx, s in enumerate(pair_symbols):
            if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s < num_symbols:
                pairs, _, _ = _pair_tables(n)
                raise ValueError(f"pair {pairs[idx]} carries invalid symbol {s!r}")
        self.n = n
        self.num_symbols = num_symbols
        self.pair_symbols = tuple(pair_symbols)

    @classmethod
    def from_pairs(
        cls, n: int, num_symbols: int, assignment: Mapping[tuple[int, int], int]
    ) -> "SymbolicMap":
        pairs, _, _ = _pair_tables(n)
        symbols = []
        for u, v in pairs:
            if (u, v) in assignment:
                symbols.append(assignment[(u, v)])
            elif (v, u) in assignment:
                symbols.append(assignment[(v, u)])
            else:
                raise ValueError(f"missing symbol for pair {(u, v)}")
        return cls(n, num_symbols, symbols)

    def value(self, x: int, y: int) -> int | None:
        """Symbol of the pair, or None (the empty value) when x == y."""
        if not (0 <= x < self.n and 0 <= y < self.n):
            raise ValueError(f"vertex pair {(x, y)} out of range 0..{self.n - 1}")
        if x == y:
            return None
        return self.pair_symbols[_pair_index(self.n, x, y)]

    def pairs(self) -> Iterator[tuple[int, int, int]]:
        pairs, _, _ = _pair_tables(self.n)
        for (u, v), s in zip(pairs, self.pair_symbols):
            yield u, v, s

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymbolicMap):
            return NotImplemented
        return (
            self.n == other.n
            and self.num_symbols == other.num_symbols
            and self.pair_symbols == other.pair_symbols
        )

    def __hash__(self) -> int:
        return hash((self.n, self.num_symbols, self.pair_symbols))

    def __repr__(self) -> str:
        return f"SymbolicMap(n={self.n}, num_symbols={self.num_symbols})"


@dataclass(frozen=True)
class AxiomViolation:
    """Minimal witness against one of the tree-representability conditions.

    ``axiom`` is U2 or U3 for the direct checker (vertex triple resp.
    quadruple in ``vertices``), U2' or U3' for the graph-family checker
    (triple, resp. offending symbol plus induced-path witness).
    """

    axiom: str
    vertices: tuple[int, ...] = ()
    symbol: int | None = None
    p4: P4Witness | None = None

    def recheck(self, d: SymbolicMap) -> bool:
        """Re-verify this witness against the map by direct lookup."""
        if self.axiom in ("U2", "U2'"):
            x, y, z = self.vertices
            return len({d.value(x, y), d.value(x, z), d.value(y, z)}) == 3
        if self.axiom == "U3":
            idx = {v: i for i, v in enumerate(self.vertices)}
            vals = {
                (i, j): d.value(self.vertices[i], self.vertices[j])
                for i in range(4)
                for j in range(i + 1, 4)
            }
            for side_a, side_b in _QUAD_SPLITS:
                a_vals = {vals[p] for p in side_a}
                b_vals = {vals[p] for p in side_b}
                if len(a_vals) == 1 and len(b_vals) == 1 and a_vals != b_vals:
                    return True
            return False
        if self.axiom == "U3'":
            assert self.symbol is not None and self.p4 is not None
            return self.p4.holds_in(color_graph(d, self.symbol))
        raise ValueError(f"unknown axiom tag {self.axiom!r}")


class NotUltrametricError(ValueError):
    """Raised when a representation is requested for a non-representable map."""

    def __init__(self, violation: AxiomViolation) -> None:
        super().__init__(f"map is not tree-representable: {violation}")
        self.violation = violation


def _find_violation(symbols: Sequence[int], n: int):
    """Shared scan used by both the axiom checker and the partition oracle.

    Returns ("U2", triple) or ("U3", quadruple) for the
    lexicographically first failing vertex tuple, else None.
    """
    _, triples, quads = _pair_tables(n)
    for i, j, k, verts in triples:
        a, b, c = symbols[i], symbols[j], symbols[k]
        if a != b and b != c and a != c:
            return ("U2", verts)
    for splits, verts in quads:
        for side_a, side_b in splits:
            a0 = symbols[side_a[0]]
            if symbols[side_a[1]] != a0 or symbols[side_a[2]] != a0:
                continue
            b0 = symbols[side_b[0]]
            if b0 == a0:
                continue
            if symbols[side_b[1]] == b0 and symbols[side_b[2]] == b0:
                return ("U3", verts)
    return None


def check_axioms(d: SymbolicMap) -> AxiomViolation | None:
    """Direct checker: None when the map is tree-representable.

    Scans all vertex triples for three pairwise-distinct symbols (U2)
    and all quadruples for the two-path pattern (U3), returning the
    lexicographically smallest witness.
    """
    hit = _find_violation(d.pair_symbols, d.n)
    if hit is None:
        return None
    return AxiomViolation(axiom=hit[0], vertices=hit[1])


def color_graph(d: SymbolicMap, m: int) -> Graph:
    """The graph on the same vertices whose edges are the pairs with symbol m."""
    if not isinstance(m, int) or isinstance(m, bool) or not 0 <= m < d.num_symbols:
        raise ValueError(f"unknown symbol {m!r}, alphabet is 0..{d.num_symbols - 1}")
    return Graph(d.n, [(u, v) for u, v, s in d.pairs() if s == m])


def check_via_graphs(d: SymbolicMap) -> AxiomViolation | None:
    """Graph-family checker, equivalent to ``check_axioms`` on every input.

    U2': every vertex triple has two of its three pairs under one
    symbol.  U3': every symbol graph is a cograph (checked through the
    recognizer, which supplies the induced-path witness on failure).
    """
    _, triples, _ = _pair_tables(d.n)
    symbols = d.pair_symbols
    for i, j, k, verts in triples:
        a, b, c = symbols[i], symbols[j], symbols[k]
        if a != b and b != c and a != c:
            return AxiomViolation(axiom="U2'", vertices=verts)
    if d.n >= 1:
        for m in range(d.num_symbols):
            result = recognize(color_graph(d, m))
            if isinstance(result, P4Witness):
                return AxiomViolation(axiom="U3'", symbol=m, p4=result)
    return None


def build_representation(d: SymbolicMap) -> Cotree:
    """Labeled tree whose lca labels reproduce the map on every pair.

    At each step the smallest symbol m whose complement graph (pairs
    with any other symbol) is disconnected becomes the root label, and
    the connected components become the children.  A non-representable
    map is rejected with the violation attached.
    """
    if d.n < 1:
        raise ValueError("representation needs at least one vertex")
    violation = check_axioms(d)
    if violation is not None:
        raise NotUltrametricError(violation)
    n = d.n
    symbols = d.pair_symbols

    def split(vertices: tuple[int, ...]):
        if len(vertices) == 1:
            return vertices[0]
        local = {v: i for i, v in enumerate(vertices)}
        for m in range(d.num_symbols):
            adj = [0] * len(vertices)
            for ai, u in enumerate(vertices):
                for v in vertices[ai + 1 :]:
                    if symbols[_pair_index(n, u, v)] != m:
                        adj[ai] |= 1 << local[v]
                        adj[local[v]] |= 1 << ai
            comps = _mask_components(adj)
            if len(comps) > 1:
                children = [
                    split(tuple(vertices[i] for i in _bits(comp))) for comp in comps
                ]
                return (m, children)
        raise AssertionError("no splitting symbol found for a representable map")

    return Cotree(split(tuple(range(n))))


def _mask_components(adj: list[int]) -> list[int]:
    full = (1 << len(adj)) - 1
    comps = []
    rest = full
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= adj[v]
            frontier = grow & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def tree_to_map(t: Cotree, num_symbols: int | None = None) -> SymbolicMap:
    """Evaluate a labeled tree into the map of its pairwise lca labels."""
    check_structure(t)
    n = t.num_leaves
    if t.vertices() != tuple(range(n)):
        raise ValueError(f"leaf vertices must be exactly 0..{n - 1}")
    if num_symbols is None:
        labels = [lab for lab in t.label if lab is not None]
        num_symbols = max(labels) + 1 if labels else 1
    symbols = [0] * (n * (n - 1) // 2)

    def walk(idx: int) -> list[int]:
        if t.leaf_vertex[idx] is not None:
            return [t.leaf_vertex[idx]]
        groups = [walk(c) for c in t.children[idx]]
        lab = t.label[idx]
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                for x in groups[i]:
                    for y in groups[j]:
                        symbols[_pair_index(n, x, y)] = lab
        return [v for grp in groups for v in grp]

    walk(0)
    return SymbolicMap(n, num_symbols, symbols)


def delta_from_graph(g: Graph) -> SymbolicMap:
    """Two-symbol map: edges carry symbol 1, non-edges symbol 0.

    It is tree-representable exactly when g is a cograph.
    """
    pairs, _, _ = _pair_tables(g.n)
    return SymbolicMap(g.n, 2, [1 if g.has_edge(u, v) else 0 for u, v in pairs])


def bell_number(m: int) -> int:
    """Number of set partitions of an m-element set (Bell triangle)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    row = [1]
    for _ in range(m):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


def set_partitions(m: int) -> Iterator[list[tuple[int, ...]]]:
    """All set partitions of range(m) as block lists, in restricted-growth
    lexicographic order; blocks are ordered by first occurrence."""
    if m == 0:
        yield []
        return
    rgs = [0] * m
    maxes = [0] * m
    while True:
        blocks: list[list[int]] = [[] for _ in range(max(rgs) + 1)]
        for item, b in enumerate(rgs):
            blocks[b].append(item)
        yield [tuple(b) for b in blocks]
        pos = None
        for i in range(m - 1, 0, -1):
            if rgs[i] <= maxes[i - 1]:
                pos = i
                break
        if pos is None:
            return
        rgs[pos] += 1
        maxes[pos] = max(maxes[pos - 1], rgs[pos])
        for i in range(pos + 1, m):
            rgs[i] = 0
            maxes[i] = maxes[i - 1]


def search_separating_delta(
    g: Graph,
    max_symbols: int | None = None,
    stats: dict | None = None,
) -> SymbolicMap | None:
    """Exhaustive oracle for maps separating edges from non-edges.

    Screens every set partition of the pair set: a partition with a
    block mixing an edge and a non-edge can never separate the two pair
    families, so the candidate stream enumerates partitions of the edge
    pairs and of the non-edge pairs independently (restricted-growth
    order on each side, edge side outermost).  Candidates within the
    symbol budget are checked against the representability axioms; the
    first passing map is returned, None if the whole space fails.

    ``stats``, when given, receives the size of the screened partition
    space and the number of candidates actually checked.
    """
    if g.n > 6:
        raise ValueError(f"exhaustive search is limited to 6 vertices, got {g.n}")
    pairs, _, _ = _pair_tables(g.n)
    edge_positions = [i for i, (u, v) in enumerate(pairs) if g.has_edge(u, v)]
    non_positions = [i for i, (u, v) in enumerate(pairs) if not g.has_edge(u, v)]
    if stats is not None:
        stats["pairs"] = len(pairs)
        stats["partitions_screened"] = bell_number(len(pairs))
        stats["candidates"] = 0
    n = g.n
    symbols = [0] * len(pairs)
    for edge_blocks in set_partitions(len(edge_positions)):
        edge_count = len(edge_blocks)
        if max_symbols is not None and edge_count > max_symbols:
            continue
        for b, block in enumerate(edge_blocks):
            for pos in block:
                symbols[edge_positions[pos]] = b
        for non_blocks in set_partitions(len(non_positions)):
            k = edge_count + len(non_blocks)
            if max_symbols is not None and k > max_symbols:
                continue
            for b, block in enumerate(non_blocks):
                for pos in block:
                    symbols[non_positions[pos]] = edge_count + b
            if stats is not None:
                stats["candidates"] += 1
            if _find_violation(symbols, n) is None:
                return SymbolicMap(n, max(k, 1), list(symbols))
    return None


def parse_symbolic_map(text: str) -> SymbolicMap:
    """Read the ``n k`` / token-row map format.

    The diagonal must be ``-`` and symbols are tokens ``s0`` .. ``s(k-1)``;
    symmetry is validated, not assumed.
    """
    lines = text.splitlines()
    rows: list[tuple[int, list[str]]] = []
    header: tuple[int, int] | None = None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            fields = line.split()
            if len(fields) != 2:
                raise ValueError(f"line {lineno}: expected header 'n k', got {raw!r}")
            try:
                header = (int(fields[0]), int(fields[1]))
            except ValueError:
                raise ValueError(f"line {lineno}: header values must be integers") from None
            continue
        rows.append((lineno, line.split()))
    if header is None:
        raise ValueError("line 1: missing 'n k' header")
    n, k = header
    if len(rows) != n:
        raise ValueError(f"expected {n} matrix rows, found {len(rows)}")
    table: list[list[int | None]] = []
    for x, (lineno, fields) in enumerate(rows):
        if len(fields) != n:
            raise ValueError(f"line {lineno}: expected {n} tokens, got {len(fields)}")
        row: list[int | None] = []
        for y, token in enumerate(fields):
            if token == "-":
                row.append(None)
            elif token.startswith("s") and token[1:].isdigit():
                s = int(token[1:])
                if s >= k:
                    raise ValueError(f"line {lineno}: symbol {token} outside s0..s{k - 1}")
                row.append(s)
            else:
                raise ValueError(f"line {lineno}: bad token {token!r}")
        table.append(row)
    for x in range(n):
        if table[x][x] is not None:
            raise ValueError(f"diagonal entry ({x},{x}) must be '-'")
        for y in range(n):
            if x != y and table[x][y] is None:
                raise ValueError(f"off-diagonal entry ({x},{y}) must carry a symbol")
            if table[x][y] != table[y][x]:
                raise ValueError(f"entries ({x},{y}) and ({y},{x}) are not symmetric")
    pairs, _, _ = _pair_tables(n)
    return SymbolicMap(n, k, [table[u][v] for u, v in pairs])


def format_symbolic_map(d: SymbolicMap) -> str:
    """Canonical map text; parse_symbolic_map round-trips it byte for byte."""
    lines = [f"{d.n} {d.num_symbols}"]
    for x in range(d.n):
        tokens = []
        for y in range(d.n):
            value = d.value(x, y)
            tokens.append("-" if value is None else f"s{value}")
        lines.append(" ".join(tokens))
    return "\n".join(lines) + "\n"
