"""Rooted leaf-labeled trees and cograph recognition.

A tree here is a rooted structure whose leaves are bound one-to-one to
graph vertices and whose inner nodes carry small integer labels.
Cographs use the binary alphabet (0 = disjoint union, 1 = join); the
symbolic-map machinery reuses the same structure with larger alphabets.

Canonical form: no inner node repeats its parent's label, every inner
node has at least two children, and children are ordered by their
smallest descendant leaf.
"""

from __future__ import annotations

import random
from typing import Iterator, Union

from .graph import Graph, P4Witness, _bits, _component_masks, first_induced_p4

__all__ = [
    "Cotree",
    "recognize",
    "cotree_to_graph",
    "lca_label",
    "check_structure",
    "to_newick",
    "parse_newick",
    "random_cotree",
    "random_labeled_tree",
]

Nested = Union[int, tuple]


class Cotree:
    """Immutable rooted tree; node 0 is the root, numbering is preorder.

    ``label[i]`` is None for leaves (the empty symbol) and an integer
    for inner nodes; ``leaf_vertex[i]`` is the graph vertex bound to
    leaf i and None for inner nodes.
    """

    __slots__ = ("parent", "children", "label", "leaf_vertex", "_vertex_node", "_depth")

    def __init__(self, nested: Nested) -> None:
        parent: list[int] = []
        children: list[tuple[int, ...]] = []
        label: list[int | None] = []
        leaf_vertex: list[int | None] = []
        depth: list[int] = []

        def build(node: Nested, par: int, dep: int) -> int:
            idx = len(parent)
            parent.append(par)
            children.append(())
            depth.append(dep)
            if isinstance(node, int) and not isinstance(node, bool):
                label.append(None)
                leaf_vertex.append(node)
            elif (
                isinstance(node, tuple)
                and len(node) == 2
                and isinstance(node[0], int)
                and not isinstance(node[0], bool)
            ):
                label.append(node[0])
                leaf_vertex.append(None)
                kids = [build(ch, idx, dep + 1) for ch in node[1]]
                children[idx] = tuple(kids)
            else:
                raise ValueError(f"malformed tree node {node!r}")
            return idx

        build(nested, -1, 0)
        self.parent = tuple(parent)
        self.children = tuple(children)
        self.label = tuple(label)
        self.leaf_vertex = tuple(leaf_vertex)
        self._depth = tuple(depth)
        vmap: dict[int, int] = {}
        for idx, v in enumerate(self.leaf_vertex):
            if v is not None:
                if v in vmap:
                    raise ValueError(f"leaf vertex {v} appears twice")
                vmap[v] = idx
        self._vertex_node = vmap

    @property
    def num_nodes(self) -> int:
        return len(self.parent)

    @property
    def num_leaves(self) -> int:
        return len(self._vertex_node)

    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self._vertex_node))

    def leaf_node(self, vertex: int) -> int:
        if vertex not in self._vertex_node:
            raise ValueError(f"unknown vertex {vertex!r}")
        return self._vertex_node[vertex]

    def lca(self, x: int, y: int) -> int:
        """Node id of the lowest common ancestor of two leaf vertices."""
        a, b = self.leaf_node(x), self.leaf_node(y)
        da, db = self._depth[a], self._depth[b]
        while da > db:
            a = self.parent[a]
            da -= 1
        while db > da:
            b = self.parent[b]
            db -= 1
        while a != b:
            a = self.parent[a]
            b = self.parent[b]
        return a

    def lca_label(self, x: int, y: int) -> int | None:
        """Label of lca(x, y); None (the empty symbol) exactly when x == y."""
        if x == y:
            self.leaf_node(x)
            return None
        return self.label[self.lca(x, y)]

    def to_nested(self) -> Nested:
        def rebuild(idx: int) -> Nested:
            if self.leaf_vertex[idx] is not None:
                return self.leaf_vertex[idx]
            return (self.label[idx], [rebuild(c) for c in self.children[idx]])

        return rebuild(0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Cotree):
            return NotImplemented
        return (
            self.parent == other.parent
            and self.children == other.children
            and self.label == other.label
            and self.leaf_vertex == other.leaf_vertex
        )

    def __hash__(self) -> int:
        return hash((self.parent, self.label, self.leaf_vertex))

    def __repr__(self) -> str:
        return f"Cotree({to_newick(self)!r})"


def check_structure(t: Cotree, binary: bool = False) -> None:
    """Raise ValueError naming the violated invariant, if any.

    Checks: leaves carry the empty label and a vertex, inner nodes have
    at least two children, no inner child repeats its parent's label,
    and (with ``binary``) inner labels are 0/1 only.
    """
    for idx in range(t.num_nodes):
        if t.leaf_vertex[idx] is not None:
            continue
        lab = t.label[idx]
        if lab is None or lab < 0:
            raise ValueError(f"inner node {idx} needs a non-negative integer label")
        if binary and lab not in (0, 1):
            raise ValueError(f"inner node {idx} has label {lab}, expected 0 or 1")
        if len(t.children[idx]) < 2:
            raise ValueError(
                f"inner node {idx} has {len(t.children[idx])} children, need at least 2"
            )
        for ch in t.children[idx]:
            if t.leaf_vertex[ch] is None and t.label[ch] == lab:
                raise ValueError(f"inner node {ch} repeats its parent's label {lab}")


class _FoundP4(Exception):
    def __init__(self, witness: P4Witness) -> None:
        self.witness = witness


def recognize(g: Graph) -> Cotree | P4Witness:
    """Canonical cotree of g, or an induced-path witness if g is not a cograph.

    Recursive split: a disconnected graph becomes a 0-node over its
    components, a graph with disconnected complement a 1-node over its
    co-components; a graph that is neither (with more than one vertex)
    contains an induced P4, extracted by brute force on exactly that
    irreducible part.
    """
    if g.n == 0:
        raise ValueError("recognition needs at least one vertex")
    adj = g._adj

    def split(mask: int) -> Nested:
        if mask & (mask - 1) == 0:
            return mask.bit_length() - 1
        comps = _component_masks(adj, mask, in_complement=False)
        if len(comps) > 1:
            return (0, [split(c) for c in comps])
        cocomps = _component_masks(adj, mask, in_complement=True)
        if len(cocomps) > 1:
            return (1, [split(c) for c in cocomps])
        raise _FoundP4(_witness_in(g, mask))

    try:
        return Cotree(split((1 << g.n) - 1))
    except _FoundP4 as hit:
        return hit.witness


def _witness_in(g: Graph, mask: int) -> P4Witness:
    induced = Graph(
        g.n, [(u, v) for u, v in g.edges if mask >> u & 1 and mask >> v & 1]
    )
    witness = first_induced_p4(induced)
    if witness is None:
        raise AssertionError("irreducible subgraph without an induced path")
    return witness


def cotree_to_graph(t: Cotree) -> Graph:
    """Graph whose edges are the leaf pairs whose lca is labeled 1.

    The tree must be a well-formed binary-labeled cotree over leaf
    vertices 0..n-1; malformed input is rejected naming the invariant.
    """
    check_structure(t, binary=True)
    n = t.num_leaves
    verts = t.vertices()
    if verts != tuple(range(n)):
        raise ValueError(f"leaf vertices must be exactly 0..{n - 1}, got {verts}")
    edges: list[tuple[int, int]] = []

    def leaves_below(idx: int) -> list[int]:
        if t.leaf_vertex[idx] is not None:
            return [t.leaf_vertex[idx]]
        groups = [leaves_below(c) for c in t.children[idx]]
        if t.label[idx] == 1:
            for i in range(len(groups)):
                for j in range(i + 1, len(groups)):
                    edges.extend((x, y) for x in groups[i] for y in groups[j])
        return [v for grp in groups for v in grp]

    leaves_below(0)
    return Graph(n, edges)


def lca_label(t: Cotree, x: int, y: int) -> int | None:
    """Label of the lowest common ancestor of leaf vertices x and y.

    Returns None (the empty symbol) exactly when x == y; unknown
    vertices are rejected.
    """
    return t.lca_label(x, y)


def to_newick(t: Cotree) -> str:
    """Serialize: leaves as vertex ids, inner nodes as ``(...)label``, final ``;``."""

    def render(idx: int) -> str:
        if t.leaf_vertex[idx] is not None:
            return str(t.leaf_vertex[idx])
        inner = ",".join(render(c) for c in t.children[idx])
        return f"({inner}){t.label[idx]}"

    return render(0) + ";"


def parse_newick(text: str) -> Cotree:
    """Parse the serialization produced by ``to_newick`` (round-trip exact)."""
    s = text.strip()
    pos = 0

    def fail(msg: str) -> ValueError:
        return ValueError(f"newick position {pos}: {msg}")

    def read_int() -> int:
        nonlocal pos
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise fail("expected an integer")
        return int(s[start:pos])

    def read_node() -> Nested:
        nonlocal pos
        if pos < len(s) and s[pos] == "(":
            pos += 1
            kids = [read_node()]
            while pos < len(s) and s[pos] == ",":
                pos += 1
                kids.append(read_node())
            if pos >= len(s) or s[pos] != ")":
                raise fail("expected ')'")
            pos += 1
            return (read_int(), kids)
        return read_int()

    nested = read_node()
    if pos >= len(s) or s[pos] != ";":
        raise fail("expected ';'")
    pos += 1
    if pos != len(s):
        raise fail("trailing characters after ';'")
    return Cotree(nested)


def random_labeled_tree(num_leaves: int, num_symbols: int, rng: random.Random) -> Cotree:
    """Random canonical tree on leaves 0..num_leaves-1 with the given alphabet.

    Adjacent inner nodes never share a label and children are ordered by
    smallest leaf, so the output is already in canonical form.
    """
    if num_leaves < 1:
        raise ValueError("need at least one leaf")
    if num_symbols < 1:
        raise ValueError("need at least one symbol")

    def build(vs: list[int], parent_label: int | None) -> Nested:
        if len(vs) == 1:
            return vs[0]
        # parent_label is None only at the root; below the root there is
        # always a differing symbol available once num_symbols >= 2
        label = rng.choice([m for m in range(num_symbols) if m != parent_label])
        if num_symbols == 1:
            # a flat star is the only canonical shape over one symbol
            blocks = [[v] for v in vs]
        else:
            while True:
                width = rng.randint(2, len(vs))
                ids = [rng.randrange(width) for _ in vs]
                if len(set(ids)) >= 2:
                    break
            by_id: dict[int, list[int]] = {}
            for v, i in zip(vs, ids):
                by_id.setdefault(i, []).append(v)
            blocks = sorted(by_id.values(), key=min)
        return (label, [build(block, label) for block in blocks])

    if num_leaves == 1:
        return Cotree(0)
    return Cotree(build(list(range(num_leaves)), None))


def random_cotree(num_leaves: int, rng: random.Random) -> Cotree:
    """Random canonical binary-labeled cotree on leaves 0..num_leaves-1."""
    return random_labeled_tree(num_leaves, 2, rng)
