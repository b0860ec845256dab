"""Graph construction, operators, the induced-path oracle, and edge-list IO."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cographkit import (
    Graph,
    P4Witness,
    cartesian_product,
    complement,
    connected_components,
    enumerate_induced_p4,
    format_edge_list,
    hypercube,
    parse_edge_list,
    random_graph,
)
from helpers import all_graphs, complete_graph, cycle_graph, path_graph


def test_triangle_construction():
    g = Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.n == 3
    assert g.edges == ((0, 1), (0, 2), (1, 2))
    assert g.max_degree() == 2


def test_path_construction():
    g = path_graph(4)
    assert g.edges == ((0, 1), (1, 2), (2, 3))
    assert [g.degree(v) for v in range(4)] == [1, 2, 2, 1]


def test_empty_graph():
    g = Graph(0, [])
    assert g.n == 0 and g.edges == ()
    assert g.max_degree() == 0


def test_edges_are_canonicalized():
    g = Graph(3, [(2, 0), (0, 2), (1, 0)])
    assert g.edges == ((0, 1), (0, 2))


def test_rejects_self_loop():
    with pytest.raises(ValueError, match=r"self-loop \(1, 1\)"):
        Graph(3, [(1, 1)])


def test_rejects_out_of_range_endpoint():
    with pytest.raises(ValueError, match=r"\(0, 3\).*outside"):
        Graph(3, [(0, 3)])


def test_rejects_negative_vertex_count():
    with pytest.raises(ValueError, match="non-negative"):
        Graph(-1, [])


def test_complement_of_triangle_is_edgeless():
    assert complement(complete_graph(3)).edges == ()


def test_complement_of_path_is_reordered_path():
    # complement of 0-1-2-3 has exactly the three former non-edges and
    # is itself a path 1-3-0-2
    g = complement(path_graph(4))
    assert g.edges == ((0, 2), (0, 3), (1, 3))
    assert len(enumerate_induced_p4(g)) == 1


def test_complement_is_involution_on_random_graphs():
    rng = random.Random(1)
    for _ in range(100):
        g = random_graph(rng.randint(0, 12), rng.random(), rng)
        assert complement(complement(g)) == g


def test_product_of_two_edges_is_square():
    k2 = complete_graph(2)
    q2 = cartesian_product(k2, k2)
    assert q2 == Graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


def test_product_unit_element():
    rng = random.Random(2)
    for _ in range(20):
        g = random_graph(rng.randint(1, 8), rng.random(), rng)
        assert cartesian_product(g, complete_graph(1)) == g


def test_product_edge_count():
    rng = random.Random(3)
    for _ in range(50):
        g = random_graph(rng.randint(1, 8), rng.random(), rng)
        h = random_graph(rng.randint(1, 8), rng.random(), rng)
        p = cartesian_product(g, h)
        assert len(p.edges) == g.n * len(h.edges) + h.n * len(g.edges)


def test_product_commutes_up_to_coordinate_swap():
    rng = random.Random(4)
    for _ in range(20):
        g = random_graph(rng.randint(1, 6), rng.random(), rng)
        h = random_graph(rng.randint(1, 6), rng.random(), rng)
        gh = cartesian_product(g, h)
        hg = cartesian_product(h, g)
        swapped = {
            tuple(
                sorted(
                    (
                        (x % h.n) * g.n + x // h.n,
                        (y % h.n) * g.n + y // h.n,
                    )
                )
            )
            for x, y in gh.edges
        }
        assert swapped == set(hg.edges)


def test_product_associates_up_to_flattening():
    rng = random.Random(5)
    for _ in range(10):
        g = random_graph(rng.randint(1, 4), rng.random(), rng)
        h = random_graph(rng.randint(1, 4), rng.random(), rng)
        f = random_graph(rng.randint(1, 4), rng.random(), rng)
        left = cartesian_product(cartesian_product(g, h), f)
        right = cartesian_product(g, cartesian_product(h, f))
        # both flatten (a, b, c) row-major, so they agree exactly
        assert left == right


def test_layer_through_vertex_copies_factor():
    rng = random.Random(6)
    g = random_graph(5, 0.5, rng)
    h = random_graph(4, 0.5, rng)
    p = cartesian_product(g, h)
    for b in range(h.n):
        layer = {(u * h.n + b, v * h.n + b) for u, v in g.edges}
        present = {e for e in p.edges if e[0] % h.n == b and e[1] % h.n == b}
        assert layer == present
    for a in range(g.n):
        layer = {(a * h.n + u, a * h.n + v) for u, v in h.edges}
        present = {
            e for e in p.edges if e[0] // h.n == a and e[1] // h.n == a
        }
        assert layer == present


def test_hypercube_small():
    assert hypercube(0) == Graph(1, [])
    assert hypercube(1) == Graph(2, [(0, 1)])
    q2 = hypercube(2)
    assert (q2.n, len(q2.edges)) == (4, 4)
    assert all(q2.degree(v) == 2 for v in range(4))


def test_hypercube_counts_and_regularity():
    q4 = hypercube(4)
    assert (q4.n, len(q4.edges)) == (16, 32)
    assert all(q4.degree(v) == 4 for v in range(16))
    assert q4.max_degree() == 4


def test_hypercube_rejects_negative_dimension():
    with pytest.raises(ValueError, match="non-negative"):
        hypercube(-1)


def test_p4_oracle_on_path():
    assert enumerate_induced_p4(path_graph(4)) == [P4Witness(0, 1, 2, 3)]


def test_p4_oracle_on_five_cycle():
    assert len(enumerate_induced_p4(cycle_graph(5))) == 5


def test_p4_oracle_on_complete_graph():
    assert enumerate_induced_p4(complete_graph(4)) == []


def test_p4_witnesses_recheck_in_host():
    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng.randint(4, 9), rng.random(), rng)
        for w in enumerate_induced_p4(g):
            assert w.holds_in(g)
            assert w.a < w.d


def test_cograph_class_closed_under_complement():
    for g in all_graphs(4):
        assert bool(enumerate_induced_p4(g)) == bool(enumerate_induced_p4(complement(g)))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 8), st.randoms(use_true_random=False))
def test_complement_preserves_pair_split(n, rng):
    g = random_graph(n, rng.random(), rng)
    c = complement(g)
    assert not (g.edge_set & c.edge_set)
    assert len(g.edges) + len(c.edges) == n * (n - 1) // 2


def test_max_degree_cases():
    assert complete_graph(4).max_degree() == 3
    assert hypercube(4).max_degree() == 4
    assert Graph(5, []).max_degree() == 0


def test_connected_components():
    g = Graph(5, [(0, 1), (3, 4)])
    assert connected_components(g) == [(0, 1), (2,), (3, 4)]


def test_edge_list_round_trip():
    rng = random.Random(8)
    for _ in range(25):
        g = random_graph(rng.randint(0, 10), rng.random(), rng)
        text = format_edge_list(g)
        assert parse_edge_list(text) == g
        assert format_edge_list(parse_edge_list(text)) == text


def test_edge_list_accepts_comments():
    g = parse_edge_list("# a triangle\n3 3\n0 1\n# middle comment\n1 2\n0 2\n")
    assert g == complete_graph(3)


@pytest.mark.parametrize(
    "text, match",
    [
        ("", "line 1: missing"),
        ("3\n", "line 1: expected header"),
        ("3 1\n0 1 2\n", "line 2: expected an edge"),
        ("3 2\n0 1\n", "declared 2 edges but found 1"),
        ("3 1\n0 1\n1 2\n", "line 3: more edge lines"),
        ("3 1\nx y\n", "line 2: edge endpoints"),
    ],
)
def test_edge_list_parse_errors(text, match):
    with pytest.raises(ValueError, match=match):
        parse_edge_list(text)
