"""Cograph edge decompositions: validation, proper-coloring construction,
greedy coarsening, and exact minimum search.

A decomposition splits the edge set of a host graph into classes whose
class graphs (on the full vertex set) must all be induced-path free.
Partitions require pairwise disjoint classes; covers may overlap.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cotree import recognize
from .graph import Graph, P4Witness, _bits, hypercube

__all__ = [
    "PARTITION",
    "COVER",
    "Decomposition",
    "ValidationFault",
    "P4Constraint",
    "SearchOutcome",
    "SolveResult",
    "SOLVED",
    "INFEASIBLE",
    "TIMEOUT",
    "validate",
    "vizing_partition",
    "greedy_partition",
    "coarsen",
    "is_coarsest",
    "p4_constraints",
    "search_assignments",
    "exact_min_partition",
    "exact_min_cover",
    "layers_partition",
    "decomposition_to_json",
    "decomposition_from_json",
]

PARTITION = "partition"
COVER = "cover"

Edge = tuple[int, int]


def _canon_edge(e: Edge) -> Edge:
    u, v = e
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Decomposition:
    """Family of edge classes over a host graph.

    ``classes[i]`` holds canonical (u, v) pairs with u < v; ``mode`` is
    ``"partition"`` or ``"cover"``.
    """

    host: Graph
    classes: tuple[frozenset[Edge], ...]
    mode: str = PARTITION

    def __post_init__(self) -> None:
        if self.mode not in (PARTITION, COVER):
            raise ValueError(f"mode must be {PARTITION!r} or {COVER!r}, got {self.mode!r}")
        object.__setattr__(
            self,
            "classes",
            tuple(frozenset(_canon_edge(e) for e in cls) for cls in self.classes),
        )

    @property
    def k(self) -> int:
        return len(self.classes)

    def sorted_classes(self) -> list[list[Edge]]:
        return [sorted(cls) for cls in self.classes]


@dataclass(frozen=True)
class ValidationFault:
    """First problem found by ``validate``; kind names the broken rule."""

    kind: str  # "foreign-edge" | "coverage" | "overlap" | "class-not-cograph"
    class_index: int | None = None
    witness: P4Witness | None = None
    detail: str = ""


def validate(d: Decomposition) -> ValidationFault | None:
    """None when the decomposition is well formed and every class graph
    is induced-path free; otherwise the first fault in a fixed scan order
    (foreign edges, coverage, overlaps, then per-class recognition)."""
    host_edges = d.host.edge_set
    for idx, cls in enumerate(d.classes):
        for e in sorted(cls):
            if e not in host_edges:
                return ValidationFault(
                    kind="foreign-edge",
                    class_index=idx,
                    detail=f"class {idx} contains non-host edge {e}",
                )
    covered = set()
    for cls in d.classes:
        covered.update(cls)
    missing = sorted(host_edges - covered)
    if missing:
        return ValidationFault(kind="coverage", detail=f"host edges not covered: {missing}")
    if d.mode == PARTITION:
        for i, j in combinations(range(len(d.classes)), 2):
            shared = sorted(d.classes[i] & d.classes[j])
            if shared:
                return ValidationFault(
                    kind="overlap",
                    class_index=i,
                    detail=f"classes {i} and {j} share edges {shared}",
                )
    for idx, cls in enumerate(d.classes):
        result = recognize(Graph(d.host.n, cls)) if d.host.n else None
        if isinstance(result, P4Witness):
            return ValidationFault(kind="class-not-cograph", class_index=idx, witness=result)
    return None


def _is_cograph(n: int, edges) -> bool:
    if n == 0:
        return True
    return not isinstance(recognize(Graph(n, edges)), P4Witness)


# ---------------------------------------------------------------------------
# proper edge coloring (fan rotation / alternating path recoloring)
# ---------------------------------------------------------------------------


def vizing_partition(g: Graph) -> Decomposition:
    """Partition into at most max_degree + 1 matchings via proper edge coloring.

    Uses the Misra-Gries fan/rotation scheme, so the bound holds for
    every input; each color class is a matching and therefore a cograph.
    An edgeless graph yields the single empty class, keeping k total.
    """
    if not g.edges:
        return Decomposition(g, (frozenset(),), PARTITION)
    palette = g.max_degree() + 1
    color: dict[Edge, int] = {}
    at: list[dict[int, int]] = [dict() for _ in range(g.n)]

    def key(u: int, v: int) -> Edge:
        return (u, v) if u < v else (v, u)

    def free_color(v: int) -> int:
        for c in range(1, palette + 1):
            if c not in at[v]:
                return c
        raise AssertionError("palette exhausted")

    def assign(u: int, v: int, c: int) -> None:
        e = key(u, v)
        old = color.get(e)
        if old is not None:
            del at[u][old]
            del at[v][old]
        color[e] = c
        at[u][c] = v
        at[v][c] = u

    def unassign(u: int, v: int) -> None:
        e = key(u, v)
        c = color.pop(e)
        del at[u][c]
        del at[v][c]

    for u, v in g.edges:
        # maximal fan of u starting at v: each next fan edge's color is
        # free at the previous fan vertex
        fan = [v]
        in_fan = {v}
        while True:
            last = fan[-1]
            nxt = None
            for c in sorted(at[u]):
                w = at[u][c]
                if w not in in_fan and c not in at[last]:
                    nxt = w
                    break
            if nxt is None:
                break
            fan.append(nxt)
            in_fan.add(nxt)
        c = free_color(u)
        d = free_color(fan[-1])
        if d != c and d in at[u]:
            # invert the maximal alternating d/c path starting at u
            path = []
            x, col = u, d
            while col in at[x]:
                y = at[x][col]
                path.append((x, y, col))
                x, col = y, (c if col == d else d)
            for x, y, _ in path:
                unassign(x, y)
            for x, y, col in path:
                assign(x, y, c if col == d else d)
            assert d not in at[u]
        # first fan vertex with d free, over a prefix that is still a fan
        j = None
        for i, w in enumerate(fan):
            if i > 0 and color[key(u, fan[i])] in at[fan[i - 1]]:
                break
            if d not in at[w]:
                j = i
                break
        assert j is not None, "fan rotation target must exist"
        shifted = [color[key(u, fan[i])] for i in range(1, j + 1)]
        for i in range(1, j + 1):
            unassign(u, fan[i])
        for i in range(j):
            assign(u, fan[i], shifted[i])
        assign(u, fan[j], d)

    used = sorted(set(color.values()))
    classes = tuple(
        frozenset(e for e, c in color.items() if c == want) for want in used
    )
    return Decomposition(g, classes, PARTITION)


def greedy_partition(g: Graph) -> Decomposition:
    """Proper-coloring partition coarsened by greedy class merging."""
    return coarsen(vizing_partition(g))


# ---------------------------------------------------------------------------
# coarsening
# ---------------------------------------------------------------------------


def coarsen(d: Decomposition) -> Decomposition:
    """Merge classes while some union of classes stays induced-path free.

    Repeatedly replaces the lexicographically first mergeable subset
    (smallest subsets first) by its union, so the result is coarsest and
    deterministic.  Invalid input is rejected.
    """
    fault = validate(d)
    if fault is not None:
        raise ValueError(f"cannot coarsen an invalid decomposition: {fault}")
    classes = list(d.classes)
    while len(classes) > 1:
        merged = None
        for size in range(2, len(classes) + 1):
            for subset in combinations(range(len(classes)), size):
                union = frozenset().union(*(classes[i] for i in subset))
                if _is_cograph(d.host.n, union):
                    merged = (subset, union)
                    break
            if merged:
                break
        if merged is None:
            break
        subset, union = merged
        keep = [cls for i, cls in enumerate(classes) if i not in subset]
        keep.insert(subset[0], union)
        classes = keep
    return Decomposition(d.host, tuple(classes), d.mode)


def is_coarsest(d: Decomposition) -> bool:
    """True when no union of two or more classes is induced-path free.

    Guarded to k <= 20 because the scan walks all class subsets.
    """
    fault = validate(d)
    if fault is not None:
        raise ValueError(f"cannot test an invalid decomposition: {fault}")
    if d.k > 20:
        raise ValueError(f"subset scan limited to 20 classes, got {d.k}")
    for size in range(2, d.k + 1):
        for subset in combinations(range(d.k), size):
            union = frozenset().union(*(d.classes[i] for i in subset))
            if _is_cograph(d.host.n, union):
                return False
    return True


# ---------------------------------------------------------------------------
# induced-path constraints and the exact search engine
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class P4Constraint:
    """One length-3 path of the host with its host-present chords.

    A class violates the constraint exactly when it contains all three
    path edges and none of the chords; a class containing a chord keeps
    the path from being induced there.
    """

    path_edges: tuple[Edge, Edge, Edge]
    chord_edges: tuple[Edge, ...]


def p4_constraints(g: Graph) -> list[P4Constraint]:
    """One constraint per length-3 path (as a subgraph) of g.

    Paths are canonical a-b-c-d with a < d; chords record which of
    ac, bd, ad exist in the host (possibly none).
    """
    out = []
    for b, c in g.edges:
        for bb, cc in ((b, c), (c, b)):
            for a in g.neighbors(bb):
                if a == cc:
                    continue
                for dd in g.neighbors(cc):
                    if dd == bb or dd <= a:
                        continue
                    chords = tuple(
                        _canon_edge(e)
                        for e in ((a, cc), (bb, dd), (a, dd))
                        if g.has_edge(*e)
                    )
                    out.append(
                        P4Constraint(
                            path_edges=(
                                _canon_edge((a, bb)),
                                _canon_edge((bb, cc)),
                                _canon_edge((cc, dd)),
                            ),
                            chord_edges=chords,
                        )
                    )
    return out


@dataclass
class SearchOutcome:
    """Raw result of the assignment search.

    ``solutions`` holds per-edge class bitmasks in host edge order;
    ``completed`` is False when the node budget ran out first.
    """

    solutions: list[tuple[int, ...]]
    nodes: int
    completed: bool


def search_assignments(
    host: Graph,
    k: int,
    mode: str = PARTITION,
    *,
    forced: dict[Edge, int] | None = None,
    find_all: bool = False,
    symmetry: bool = True,
    prune: bool = True,
    node_budget: int | None = None,
) -> SearchOutcome:
    """Backtracking search over per-edge class assignments.

    Partition mode assigns each edge one class (a singleton bitmask),
    cover mode any non-empty subset of the k classes.  A monochromatic
    path triple is pruned only once all of its host chords are assigned
    and none shares the class; undecided chords defer the conflict,
    which keeps the pruning sound (class graphs may lose paths when
    edges join them later).

    ``symmetry`` breaks class relabeling: a fresh class id may only be
    introduced as the next unused one.  ``forced`` pins host edges to
    fixed bitmasks (only with ``symmetry=False``).  Search order: edges
    by endpoint degree sum descending, candidate masks ascending.
    """
    if k < 1:
        raise ValueError(f"class count must be at least 1, got {k}")
    if mode not in (PARTITION, COVER):
        raise ValueError(f"mode must be {PARTITION!r} or {COVER!r}, got {mode!r}")
    if forced and symmetry:
        raise ValueError("forced assignments require symmetry=False")
    edges = host.edges
    m = len(edges)
    if m == 0:
        return SearchOutcome(solutions=[()], nodes=0, completed=True)
    eidx = {e: i for i, e in enumerate(edges)}
    cons = []
    for c in p4_constraints(host):
        cons.append(
            (
                eidx[c.path_edges[0]],
                eidx[c.path_edges[1]],
                eidx[c.path_edges[2]],
                tuple(eidx[ch] for ch in c.chord_edges),
            )
        )
    cons_of: list[list[int]] = [[] for _ in range(m)]
    for ci, (p1, p2, p3, chords) in enumerate(cons):
        for e in {p1, p2, p3, *chords}:
            cons_of[e].append(ci)

    deg = [host.degree(v) for v in range(host.n)]
    order = sorted(range(m), key=lambda i: (-(deg[edges[i][0]] + deg[edges[i][1]]), edges[i]))
    if mode == PARTITION:
        domain = tuple(1 << c for c in range(k))
    else:
        domain = tuple(range(1, 1 << k))
    forced_mask = [0] * m
    for e, mask in (forced or {}).items():
        ce = _canon_edge(e)
        if ce not in eidx:
            raise ValueError(f"forced edge {e} is not a host edge")
        if not 0 < mask < 1 << k:
            raise ValueError(f"forced mask {mask} for edge {e} is out of range")
        if mode == PARTITION and mask & (mask - 1):
            raise ValueError(f"forced mask {mask} is not a single class in partition mode")
        forced_mask[eidx[ce]] = mask

    assign = [0] * m
    solutions: list[tuple[int, ...]] = []
    nodes = 0
    out_of_budget = False
    stop = False

    def consistent(e: int) -> bool:
        for ci in cons_of[e]:
            p1, p2, p3, chords = cons[ci]
            common = assign[p1] & assign[p2] & assign[p3]
            if not common:
                continue
            saved = 0
            pending = False
            for ch in chords:
                a = assign[ch]
                if a:
                    saved |= a
                else:
                    pending = True
            if common & ~saved and not pending:
                return False
        return True

    def full_check() -> bool:
        for p1, p2, p3, chords in cons:
            common = assign[p1] & assign[p2] & assign[p3]
            if common:
                saved = 0
                for ch in chords:
                    saved |= assign[ch]
                if common & ~saved:
                    return False
        return True

    def dfs(pos: int, used: int) -> None:
        nonlocal nodes, stop, out_of_budget
        if pos == m:
            if prune or full_check():
                solutions.append(tuple(assign))
                if not find_all:
                    stop = True
            return
        e = order[pos]
        candidates = (forced_mask[e],) if forced_mask[e] else domain
        for mask in candidates:
            if symmetry:
                fresh = mask & ~used
                if fresh and fresh != ((1 << fresh.bit_count()) - 1) << used.bit_length():
                    continue
            if node_budget is not None and nodes >= node_budget:
                out_of_budget = True
                stop = True
                return
            nodes += 1
            assign[e] = mask
            if not prune or consistent(e):
                dfs(pos + 1, used | mask)
            assign[e] = 0
            if stop:
                return

    dfs(0, 0)
    return SearchOutcome(solutions=solutions, nodes=nodes, completed=not out_of_budget)


SOLVED = "solved"
INFEASIBLE = "infeasible"
TIMEOUT = "timeout"


@dataclass
class SolveResult:
    """Outcome of a minimum-k search.

    ``infeasible_below`` is the largest k proven to admit no solution;
    on timeout it records how far the proof got (never reported as
    infeasible).
    """

    status: str
    decomposition: Decomposition | None
    nodes: int
    infeasible_below: int


def _masks_to_decomposition(g: Graph, masks: tuple[int, ...], k: int, mode: str) -> Decomposition:
    classes = tuple(
        frozenset(e for e, mask in zip(g.edges, masks) if mask >> b & 1)
        for b in range(k)
    )
    return Decomposition(g, classes, mode)


def _exact_min(g: Graph, k_max: int, node_budget: int | None, mode: str) -> SolveResult:
    if k_max < 1:
        raise ValueError(f"k_max must be at least 1, got {k_max}")
    if not g.edges:
        d = Decomposition(g, (frozenset(),), mode)
        return SolveResult(SOLVED, d, nodes=0, infeasible_below=0)
    total = 0
    for k in range(1, k_max + 1):
        remaining = None if node_budget is None else node_budget - total
        if remaining is not None and remaining <= 0:
            return SolveResult(TIMEOUT, None, nodes=total, infeasible_below=k - 1)
        out = search_assignments(g, k, mode, node_budget=remaining)
        total += out.nodes
        if out.solutions:
            d = _masks_to_decomposition(g, out.solutions[0], k, mode)
            return SolveResult(SOLVED, d, nodes=total, infeasible_below=k - 1)
        if not out.completed:
            return SolveResult(TIMEOUT, None, nodes=total, infeasible_below=k - 1)
    return SolveResult(INFEASIBLE, None, nodes=total, infeasible_below=k_max)


def exact_min_partition(g: Graph, k_max: int, node_budget: int | None = None) -> SolveResult:
    """Smallest k <= k_max admitting a valid k-partition, by exhaustive search.

    Classes are tried in ascending k with relabeling symmetry broken, so
    the returned partition is the canonical first solution.  The budget
    counts explored assignment nodes; exceeding it reports timeout,
    never infeasibility.
    """
    return _exact_min(g, k_max, node_budget, PARTITION)


def exact_min_cover(g: Graph, k_max: int, node_budget: int | None = None) -> SolveResult:
    """Smallest k <= k_max admitting a valid k-cover (classes may overlap)."""
    return _exact_min(g, k_max, node_budget, COVER)


# ---------------------------------------------------------------------------
# hypercube layer partition
# ---------------------------------------------------------------------------


def layers_partition(half_dim: int) -> Decomposition:
    """Partition of the 2n-cube into n classes of square layers.

    An edge flipping coordinate c lands in class c // 2, so each class
    collects the 4-cycle layers of one coordinate pair and is a disjoint
    union of squares.
    """
    if half_dim < 1:
        raise ValueError(f"half dimension must be at least 1, got {half_dim}")
    host = hypercube(2 * half_dim)
    classes: list[set[Edge]] = [set() for _ in range(half_dim)]
    for u, v in host.edges:
        bit = (u ^ v).bit_length() - 1
        classes[bit // 2].add((u, v))
    return Decomposition(host, tuple(frozenset(c) for c in classes), PARTITION)


# ---------------------------------------------------------------------------
# JSON form
# ---------------------------------------------------------------------------


def decomposition_to_json(d: Decomposition) -> dict:
    """JSON object {"mode", "k", "n", "classes"} with sorted edge lists."""
    return {
        "mode": d.mode,
        "k": d.k,
        "n": d.host.n,
        "classes": [[[u, v] for u, v in cls] for cls in d.sorted_classes()],
    }


def decomposition_from_json(obj: dict, host: Graph | None = None) -> Decomposition:
    """Rebuild a decomposition; without an explicit host the vertex count

    comes from "n" and the host edges are the union of the classes.
    """
    if not isinstance(obj, dict):
        raise ValueError("decomposition JSON must be an object")
    for field in ("mode", "k", "classes"):
        if field not in obj:
            raise ValueError(f"decomposition JSON is missing {field!r}")
    classes = tuple(
        frozenset(_canon_edge((int(u), int(v))) for u, v in cls) for cls in obj["classes"]
    )
    if obj["k"] != len(classes):
        raise ValueError(f"declared k={obj['k']} but found {len(classes)} classes")
    if host is None:
        if "n" not in obj:
            raise ValueError("decomposition JSON needs \"n\" when no host graph is given")
        union = sorted(set().union(*classes)) if classes else []
        host = Graph(int(obj["n"]), union)
    elif "n" in obj and int(obj["n"]) != host.n:
        raise ValueError(f"declared n={obj['n']} does not match the host graph ({host.n})")
    return Decomposition(host, classes, obj["mode"])
