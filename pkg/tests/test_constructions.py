import itertools

import pytest

from steinerpath.constructions import (
    EXAMPLE1_NAMES,
    HamiltonianDecomposition,
    NoDecompositionError,
    complete_symmetric,
    decomposition_to_sr_packing,
    example1,
    half_decomposition_digraph,
    tillson_decomposition,
    transitive_tournament,
)
from steinerpath.digraph import complement, is_eulerian, is_strong, is_symmetric
from steinerpath.packing import PackingCertificate, TerminalSpec, is_path, lambda_p_k

IDX = {name: i for i, name in enumerate(EXAMPLE1_NAMES)}

# explicit Hamiltonian path pairs, one pair per root class
EXAMPLE1_PAIRS = {
    "x1": ("x1 y1 z2 y2 z3 y3 z1 x2", "x1 y2 z1 y3 z2 y1 z3 x2"),
    "y1": ("y1 z2 x1 y2 z3 x2 y3 z1", "y1 z3 x1 y3 z2 x2 y2 z1"),
    "z1": ("z1 x1 y1 z2 x2 y2 z3 y3", "z1 x2 y1 z3 x1 y3 z2 y2"),
}


def test_complete_symmetric():
    assert len(complete_symmetric(3).arcs) == 6
    assert len(complete_symmetric(7).arcs) == 42
    D = complete_symmetric(5)
    assert is_symmetric(D) and is_eulerian(D)


def test_example1_structure():
    D = example1()
    assert D.n == 8 and len(D.arcs) == 27
    assert D.has_arc(IDX["x1"], IDX["y1"]) and not D.has_arc(IDX["y1"], IDX["x1"])
    for i in (1, 2, 3):
        assert not D.has_arc(IDX[f"y{i}"], IDX[f"z{i}"])


@pytest.mark.parametrize("root", sorted(EXAMPLE1_PAIRS))
def test_example1_paths(root):
    D = example1()
    spec = TerminalSpec(range(8), IDX[root])
    paths = tuple(tuple(IDX[v] for v in text.split()) for text in EXAMPLE1_PAIRS[root])
    for P in paths:
        assert is_path(D, P) and len(P) == 8 and P[0] == IDX[root]
    cert = PackingCertificate("internal", spec, paths)
    assert cert.is_valid(D)
    assert PackingCertificate("arc", spec, paths).is_valid(D)


@pytest.mark.parametrize("n", [3, 5, 7, 8, 9, 10, 11])
def test_tillson_valid(n):
    decomp = tillson_decomposition(n)
    assert not decomp.violations()
    assert len(decomp.cycles) == n - 1
    assert decomp.digraph() == complete_symmetric(n)


def test_tillson_triangle():
    cycles = {tuple(c) for c in tillson_decomposition(3).cycles}
    assert cycles == {(0, 1, 2), (0, 2, 1)}


@pytest.mark.parametrize("n", [4, 6])
def test_tillson_impossible(n):
    with pytest.raises(NoDecompositionError, match="no Hamiltonian decomposition"):
        tillson_decomposition(n)


def test_tillson_range():
    with pytest.raises(ValueError):
        tillson_decomposition(2)
    with pytest.raises(NotImplementedError):
        tillson_decomposition(12)


def test_decomposition_checker_catches_errors():
    bad = HamiltonianDecomposition(3, ((0, 1, 2), (0, 1, 2)))
    assert bad.violations()
    with pytest.raises(ValueError):
        decomposition_to_sr_packing(bad, TerminalSpec({0, 1}, 0))


@pytest.mark.parametrize("k", range(2, 8))
def test_decomposition_packing_k7(k):
    D = complete_symmetric(7)
    decomp = tillson_decomposition(7)
    for S in itertools.islice(itertools.combinations(range(7), k), 5):
        for r in S:
            cert = decomposition_to_sr_packing(decomp, TerminalSpec(S, r))
            assert cert.value == 6 and cert.is_valid(D)


def test_decomposition_packing_small():
    cert = decomposition_to_sr_packing(tillson_decomposition(3), TerminalSpec(range(3), 0))
    assert cert.value == 2 and cert.is_valid(complete_symmetric(3))


def test_transitive_tournament():
    T = transitive_tournament(4)
    assert len(T.arcs) == 6 and not is_strong(T)
    assert complement(T) == T.reverse()
    T7 = transitive_tournament(7)
    for k in (2, 3):
        assert lambda_p_k(T7, k)[0] == 0
        assert lambda_p_k(complement(T7), k)[0] == 0


def test_half_decomposition():
    D = half_decomposition_digraph(7)
    C = complement(D)
    assert len(D.arcs) == len(C.arcs) == 21
    assert not D.arcs & C.arcs
    for k in (2, 3):
        a, b = lambda_p_k(D, k)[0], lambda_p_k(C, k)[0]
        assert a == b == 3
        assert a * b == 9
    with pytest.raises(ValueError):
        half_decomposition_digraph(8)


@pytest.mark.parametrize("n", [7, 9, 11])
def test_half_decomposition_partitions_complete(n):
    D = half_decomposition_digraph(n)
    assert D.arcs | complement(D).arcs == complete_symmetric(n).arcs
    assert len(D.arcs) == n * (n - 1) // 2
