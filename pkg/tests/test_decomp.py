"""Decomposition validation, proper-coloring construction, coarsening,
constraints, exact solvers, and the hypercube layer partition."""

import random
from itertools import combinations

import pytest

from cographkit import (
    COVER,
    INFEASIBLE,
    PARTITION,
    SOLVED,
    TIMEOUT,
    Decomposition,
    Graph,
    P4Witness,
    coarsen,
    connected_components,
    decomposition_from_json,
    decomposition_to_json,
    enumerate_induced_p4,
    exact_min_cover,
    exact_min_partition,
    greedy_partition,
    hypercube,
    is_coarsest,
    layers_partition,
    p4_constraints,
    random_graph,
    recognize,
    validate,
    vizing_partition,
)
from helpers import all_graphs, clique_with_pendant_path, complete_graph, cycle_graph, path_graph


def single_class(g: Graph, mode=PARTITION) -> Decomposition:
    return Decomposition(g, (frozenset(g.edges),), mode)


def is_matching(edges) -> bool:
    seen = set()
    for u, v in edges:
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


# ---------------------------------------------------------------------------
# validate
# ---------------------------------------------------------------------------


def test_validate_cograph_single_class():
    assert validate(single_class(complete_graph(4))) is None


def test_validate_five_cycle_single_class_fails():
    fault = validate(single_class(cycle_graph(5)))
    assert fault.kind == "class-not-cograph"
    assert fault.class_index == 0
    assert fault.witness.holds_in(cycle_graph(5))


def test_validate_five_cycle_two_split_ok():
    g = cycle_graph(5)
    d = Decomposition(
        g, (frozenset([(0, 1), (2, 3)]), frozenset([(1, 2), (3, 4), (0, 4)])), PARTITION
    )
    assert validate(d) is None


def test_validate_foreign_edge():
    g = path_graph(3)
    d = Decomposition(g, (frozenset([(0, 1), (0, 2)]),), PARTITION)
    fault = validate(d)
    assert fault.kind == "foreign-edge"
    assert "(0, 2)" in fault.detail


def test_validate_coverage():
    g = path_graph(3)
    d = Decomposition(g, (frozenset([(0, 1)]),), PARTITION)
    fault = validate(d)
    assert fault.kind == "coverage"
    assert "(1, 2)" in fault.detail


def test_validate_partition_rejects_overlap_but_cover_allows_it():
    g = path_graph(3)
    classes = (frozenset([(0, 1), (1, 2)]), frozenset([(1, 2)]))
    assert validate(Decomposition(g, classes, PARTITION)).kind == "overlap"
    assert validate(Decomposition(g, classes, COVER)) is None


def test_validate_agrees_with_oracle_per_class():
    rng = random.Random(30)
    for _ in range(40):
        g = random_graph(rng.randint(2, 9), rng.random(), rng)
        if not g.edges:
            continue
        edges = list(g.edges)
        rng.shuffle(edges)
        cut = rng.randint(0, len(edges))
        classes = (frozenset(edges[:cut]), frozenset(edges[cut:]))
        d = Decomposition(g, classes, PARTITION)
        fault = validate(d)
        clean = all(
            not enumerate_induced_p4(Graph(g.n, cls)) for cls in classes
        )
        assert (fault is None) == clean


def test_decomposition_rejects_unknown_mode():
    with pytest.raises(ValueError, match="mode must be"):
        Decomposition(path_graph(2), (frozenset([(0, 1)]),), "both")


# ---------------------------------------------------------------------------
# proper edge coloring
# ---------------------------------------------------------------------------


def test_vizing_complete_graph():
    d = vizing_partition(complete_graph(4))
    assert validate(d) is None
    assert d.k <= 4
    assert all(is_matching(cls) for cls in d.classes)
    assert set().union(*d.classes) == set(complete_graph(4).edges)


def test_vizing_odd_cycle_needs_extra_color():
    d = vizing_partition(cycle_graph(5))
    assert d.k == 3  # max degree 2, chromatic index 3


def test_five_cycle_has_no_proper_two_coloring():
    # brute-force oracle behind the previous test: no 2-coloring of the
    # five cycle edges is proper, so three matchings are unavoidable
    g = cycle_graph(5)
    edges = g.edges
    for bits in range(1 << len(edges)):
        proper = True
        for i in range(len(edges)):
            for j in range(i + 1, len(edges)):
                if (bits >> i & 1) != (bits >> j & 1):
                    continue
                if set(edges[i]) & set(edges[j]):
                    proper = False
                    break
            if not proper:
                break
        assert not proper


def test_vizing_edgeless_graph_is_single_empty_class():
    d = vizing_partition(Graph(4, []))
    assert d.k == 1
    assert d.classes == (frozenset(),)
    assert validate(d) is None


def test_vizing_random_graphs_proper_and_bounded():
    rng = random.Random(31)
    for _ in range(60):
        g = random_graph(rng.randint(1, 30), rng.uniform(0.1, 0.6), rng)
        d = vizing_partition(g)
        assert d.k <= g.max_degree() + 1
        assert all(is_matching(cls) for cls in d.classes)
        assert validate(d) is None


# ---------------------------------------------------------------------------
# coarsening
# ---------------------------------------------------------------------------


def test_coarsen_complete_graph_coloring_to_one_class():
    assert coarsen(vizing_partition(complete_graph(4))).k == 1


def test_coarsen_singletons_of_cograph_to_one_class():
    g = complete_graph(4)
    d = Decomposition(g, tuple(frozenset([e]) for e in g.edges), PARTITION)
    assert coarsen(d).k == 1


def test_coarsen_keeps_layer_partition():
    d = layers_partition(2)
    assert coarsen(d).classes == d.classes


def test_coarsen_rejects_invalid_input():
    g = cycle_graph(5)
    with pytest.raises(ValueError, match="cannot coarsen"):
        coarsen(single_class(g))


def test_coarsen_output_is_coarsest():
    rng = random.Random(32)
    for _ in range(20):
        g = random_graph(rng.randint(2, 12), rng.uniform(0.2, 0.6), rng)
        coarse = coarsen(vizing_partition(g))
        assert validate(coarse) is None
        assert is_coarsest(coarse)


def test_greedy_partition_is_coarsened_coloring():
    g = complete_graph(5)
    assert greedy_partition(g).k == 1


def test_is_coarsest_two_split_of_cograph_is_false():
    g = complete_graph(4)
    edges = list(g.edges)
    d = Decomposition(g, (frozenset(edges[:3]), frozenset(edges[3:])), PARTITION)
    assert validate(d) is None
    assert not is_coarsest(d)


def test_is_coarsest_rejects_large_k():
    g = Graph(42, [(i, i + 21) for i in range(21)])
    d = Decomposition(g, tuple(frozenset([e]) for e in g.edges), PARTITION)
    with pytest.raises(ValueError, match="limited to 20 classes"):
        is_coarsest(d)


def test_is_coarsest_rejects_invalid_input():
    with pytest.raises(ValueError, match="cannot test"):
        is_coarsest(single_class(cycle_graph(5)))


# ---------------------------------------------------------------------------
# constraints
# ---------------------------------------------------------------------------


def test_constraints_of_path():
    cons = p4_constraints(path_graph(4))
    assert len(cons) == 1
    assert cons[0].path_edges == ((0, 1), (1, 2), (2, 3))
    assert cons[0].chord_edges == ()


def test_constraints_of_square_have_one_chord_each():
    cons = p4_constraints(cycle_graph(4))
    assert len(cons) == 4
    assert all(len(c.chord_edges) == 1 for c in cons)


def test_constraints_of_triangle_empty():
    assert p4_constraints(complete_graph(3)) == []


def test_constraint_count_matches_path_enumeration():
    rng = random.Random(33)
    for _ in range(20):
        g = random_graph(rng.randint(2, 8), rng.random(), rng)
        paths = 0
        for a in range(g.n):
            for b in range(g.n):
                for c in range(g.n):
                    for d in range(g.n):
                        if len({a, b, c, d}) < 4 or a > d:
                            continue
                        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d):
                            paths += 1
        assert len(p4_constraints(g)) == paths


# ---------------------------------------------------------------------------
# exact solvers
# ---------------------------------------------------------------------------


def test_exact_partition_on_cograph_is_one_class():
    result = exact_min_partition(complete_graph(4), 3)
    assert result.status == SOLVED
    assert result.decomposition.k == 1


def test_exact_partition_five_cycle_needs_two():
    result = exact_min_partition(cycle_graph(5), 3)
    assert result.status == SOLVED
    assert result.decomposition.k == 2
    assert validate(result.decomposition) is None


def test_exact_partition_level_one_iff_cograph():
    for g in all_graphs(4):
        result = exact_min_partition(g, 1)
        is_cograph = not isinstance(recognize(g), P4Witness) if g.n else True
        assert (result.status == SOLVED and result.decomposition.k == 1) == is_cograph


def test_exact_min_cover_at_most_partition_minimum():
    rng = random.Random(34)
    checked = 0
    while checked < 25:
        g = random_graph(rng.randint(3, 7), rng.random(), rng)
        if len(g.edges) > 8:
            continue
        checked += 1
        p = exact_min_partition(g, 4)
        c = exact_min_cover(g, 4)
        assert p.status == SOLVED and c.status == SOLVED
        assert c.decomposition.k <= p.decomposition.k
        assert validate(c.decomposition) is None
        assert validate(p.decomposition) is None


def test_empty_edge_set_solves_with_one_empty_class():
    for solver in (exact_min_partition, exact_min_cover):
        result = solver(Graph(3, []), 2)
        assert result.status == SOLVED
        assert result.decomposition.classes == (frozenset(),)


def test_infeasible_reported_below_true_minimum():
    result = exact_min_partition(cycle_graph(5), 1)
    assert result.status == INFEASIBLE
    assert result.infeasible_below == 1


def test_budget_exhaustion_reports_timeout_not_infeasible():
    g = cycle_graph(7)
    result = exact_min_partition(g, 2, node_budget=3)
    assert result.status == TIMEOUT
    assert result.decomposition is None
    assert result.nodes <= 3


def test_solver_rejects_bad_k_max():
    with pytest.raises(ValueError, match="k_max"):
        exact_min_partition(path_graph(3), 0)


def test_symmetry_breaking_is_complete():
    # the relabeling-broken search must find a solution exactly when the
    # unrestricted enumeration does, and its answer must be one of them
    from cographkit.decomp import search_assignments

    rng = random.Random(36)
    checked = 0
    while checked < 60:
        g = random_graph(rng.randint(3, 6), rng.random(), rng)
        if not g.edges or len(g.edges) > 7:
            continue
        checked += 1
        for mode in (PARTITION, COVER):
            for k in (1, 2, 3):
                sym = search_assignments(g, k, mode)
                free = search_assignments(g, k, mode, symmetry=False, find_all=True)
                assert bool(sym.solutions) == bool(free.solutions)
                if sym.solutions:
                    assert sym.solutions[0] in free.solutions


def test_solver_solutions_always_validate():
    rng = random.Random(35)
    for _ in range(25):
        g = random_graph(rng.randint(2, 7), rng.random(), rng)
        result = exact_min_partition(g, max(1, g.max_degree() + 1))
        assert result.status == SOLVED
        assert validate(result.decomposition) is None


# ---------------------------------------------------------------------------
# hypercube layers
# ---------------------------------------------------------------------------


def test_layers_of_square_is_single_class():
    d = layers_partition(1)
    assert d.k == 1
    assert d.classes[0] == frozenset(hypercube(2).edges)
    assert validate(d) is None
    assert is_coarsest(d)


def test_layers_of_four_cube():
    d = layers_partition(2)
    assert d.host == hypercube(4)
    assert d.k == 2
    assert all(len(cls) == 16 for cls in d.classes)
    for cls in d.classes:
        comps = connected_components(Graph(d.host.n, cls))
        squares = [c for c in comps if len(c) == 4]
        assert len(squares) == 4
        for comp in squares:
            induced = [e for e in cls if e[0] in comp and e[1] in comp]
            assert len(induced) == 4  # each component is a 4-cycle
    assert validate(d) is None
    assert is_coarsest(d)


def test_layers_pairwise_unions_contain_induced_path():
    d = layers_partition(3)
    for i, j in combinations(range(d.k), 2):
        union = Graph(d.host.n, d.classes[i] | d.classes[j])
        assert enumerate_induced_p4(union)


def test_layers_rejects_nonpositive_half_dimension():
    with pytest.raises(ValueError, match="at least 1"):
        layers_partition(0)


# ---------------------------------------------------------------------------
# clique plus pendant path family
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("k", range(3, 9))
def test_clique_with_pendant_path_two_partition(k):
    g = clique_with_pendant_path(k)
    assert isinstance(recognize(g), P4Witness)
    bridge = (k - 1, k)
    rest = frozenset(e for e in g.edges if e != bridge)
    d = Decomposition(g, (rest, frozenset([bridge])), PARTITION)
    assert validate(d) is None


# ---------------------------------------------------------------------------
# JSON form
# ---------------------------------------------------------------------------


def test_decomposition_json_round_trip():
    d = layers_partition(2)
    obj = decomposition_to_json(d)
    rebuilt = decomposition_from_json(obj)
    assert rebuilt.classes == d.classes
    assert rebuilt.mode == d.mode
    assert rebuilt.host == d.host
    assert decomposition_to_json(rebuilt) == obj


def test_decomposition_json_with_explicit_host():
    g = path_graph(3)
    d = Decomposition(g, (frozenset([(0, 1)]), frozenset([(1, 2)])), PARTITION)
    obj = decomposition_to_json(d)
    rebuilt = decomposition_from_json(obj, host=g)
    assert rebuilt.host is g


@pytest.mark.parametrize(
    "obj, match",
    [
        ([], "must be an object"),
        ({"mode": PARTITION, "classes": []}, "missing 'k'"),
        ({"mode": PARTITION, "k": 2, "classes": [[[0, 1]]]}, "declared k=2"),
        ({"mode": PARTITION, "k": 1, "classes": [[[0, 1]]]}, 'needs "n"'),
    ],
)
def test_decomposition_json_errors(obj, match):
    with pytest.raises(ValueError, match=match):
        decomposition_from_json(obj)
