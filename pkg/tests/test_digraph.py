import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import cycle, digraphs
from steinerpath.audit import random_digraph
from steinerpath.constructions import complete_symmetric, example1, transitive_tournament
from steinerpath.digraph import (
    Digraph,
    arc_connectivity,
    complement,
    disjoint_paths,
    from_arc_list,
    induced_arcs,
    is_eulerian,
    is_strong,
    is_symmetric,
    min_arc_cut,
    min_degrees,
    min_vertex_cut,
    reachable,
    vertex_connectivity,
)


def brute_vertex_connectivity(D):
    """Smallest deletion set leaving a non-strong digraph; n - 1 if none exists."""
    for size in range(D.n - 1):
        for Q in itertools.combinations(range(D.n), size):
            rest = [v for v in range(D.n) if v not in Q]
            if not set(rest) <= reachable(D, rest[0], Q) or any(rest[0] not in reachable(D, v, Q) for v in rest):
                return size
    return D.n - 1


def to_nx(D):
    G = nx.DiGraph()
    G.add_nodes_from(range(D.n))
    G.add_edges_from(D.arcs)
    return G


def test_from_arc_list():
    D = from_arc_list(3, [(0, 1), (1, 2), (2, 0)])
    assert len(D.arcs) == 3
    assert len(from_arc_list(2, [(0, 1), (0, 1)]).arcs) == 1
    with pytest.raises(ValueError, match="loop"):
        from_arc_list(2, [(0, 0)])
    with pytest.raises(ValueError):
        from_arc_list(2, [(0, 2)])


def test_names_length_checked():
    with pytest.raises(ValueError):
        Digraph(2, [], ["a"])


def test_complement_examples():
    assert complement(Digraph(3)) == complete_symmetric(3)
    assert len(complement(complete_symmetric(5)).arcs) == 0


def test_is_symmetric():
    assert is_symmetric(complete_symmetric(4))
    assert not is_symmetric(cycle(3))
    assert not is_symmetric(example1())


def test_is_eulerian():
    assert is_eulerian(cycle(3))
    assert not is_eulerian(Digraph(2, [(0, 1)]))
    # two disjoint triangles are balanced but not connected
    assert not is_eulerian(Digraph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))
    # isolated vertices are allowed
    assert is_eulerian(Digraph(5, [(0, 1), (1, 2), (2, 0)]))


def test_is_strong():
    assert is_strong(cycle(5))
    assert not is_strong(transitive_tournament(3))
    assert is_strong(example1())


def test_connectivity_examples():
    assert vertex_connectivity(complete_symmetric(5)) == 4
    assert vertex_connectivity(transitive_tournament(4)) == 0
    assert vertex_connectivity(example1()) == 2
    assert arc_connectivity(cycle(6)) == 1
    assert arc_connectivity(complete_symmetric(5)) == 4
    assert arc_connectivity(transitive_tournament(4)) == 0


def test_min_degrees():
    assert min_degrees(complete_symmetric(7)) == (6, 6)
    assert min_degrees(example1()) == (2, 2)
    assert min_degrees(Digraph(2, [(0, 1)])) == (0, 0)


def test_induced_arcs():
    assert len(induced_arcs(complete_symmetric(4), {0, 2})) == 2
    assert len(induced_arcs(cycle(3), {0, 1, 2})) == 3
    assert induced_arcs(example1(), {5, 6, 7}) == frozenset()


def test_complement_partitions_complete():
    D = random_digraph(6, 0.4, seed=3)
    C = complement(D)
    assert D.arcs | C.arcs == complete_symmetric(6).arcs
    assert not D.arcs & C.arcs


def test_cut_witnesses_disconnect():
    for seed in range(30):
        D = random_digraph(6, 0.6, seed)
        kappa, Q = min_vertex_cut(D)
        lam, A = min_arc_cut(D)
        assert len(A) == lam
        if is_strong(D) and kappa < D.n - 1:
            assert len(Q) == kappa
            rest = [v for v in range(D.n) if v not in Q]
            sub = Digraph(D.n, [(u, v) for u, v in D.arcs if u not in Q and v not in Q])
            assert any(not set(rest) <= reachable(sub, u, Q) for u in rest)
        if lam:
            assert not is_strong(D.remove_arcs(A))


@settings(max_examples=150, deadline=None)
@given(digraphs(max_n=7))
def test_connectivity_matches_oracles(D):
    G = to_nx(D)
    assert arc_connectivity(D) == nx.edge_connectivity(G)
    assert vertex_connectivity(D) == brute_vertex_connectivity(D)
    assert is_strong(D) == nx.is_strongly_connected(G)


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=7))
def test_complement_involution(D):
    assert complement(complement(D)) == D
    C = complement(D)
    assert not D.arcs & C.arcs
    assert len(D.arcs) + len(C.arcs) == D.n * (D.n - 1)


@settings(max_examples=80, deadline=None)
@given(digraphs(max_n=7))
def test_connectivity_chain(D):
    kappa, lam = vertex_connectivity(D), arc_connectivity(D)
    assert kappa <= lam <= min(min_degrees(D))
    assert (kappa == 0) == (not is_strong(D))
    assert (lam == 0) == (not is_strong(D))


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=6))
def test_eulerian_with_arcs_is_strong_on_support(D):
    if is_eulerian(D) and D.arcs:
        support = sorted({v for a in D.arcs for v in a})
        for u in support:
            assert set(support) <= reachable(D, u)


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=6))
def test_disjoint_paths_count_matches_flow(D):
    for u, v in itertools.permutations(range(D.n), 2):
        paths = disjoint_paths(D, u, v, "arc")
        assert len(paths) == nx.maximum_flow_value(to_nx_unit(D), u, v)
        arcs = [a for P in paths for a in zip(P, P[1:])]
        assert len(arcs) == len(set(arcs))
        assert all(P[0] == u and P[-1] == v for P in paths)


def to_nx_unit(D):
    G = to_nx(D)
    nx.set_edge_attributes(G, 1, "capacity")
    return G


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=6))
def test_internal_paths_are_internally_disjoint(D):
    for u, v in itertools.permutations(range(D.n), 2):
        paths = disjoint_paths(D, u, v, "internal")
        inner = [set(P[1:-1]) for P in paths]
        for a, b in itertools.combinations(inner, 2):
            assert not a & b
        G = to_nx(D)
        if (u, v) not in D.arcs and v in nx.descendants(G, u):
            assert len(paths) == len(list(nx.node_disjoint_paths(G, u, v)))
        elif (u, v) not in D.arcs:
            assert not paths
