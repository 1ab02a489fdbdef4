import numpy as np
import pytest

from steinerpath import _kernels
from steinerpath.audit import random_digraph
from steinerpath.constructions import complete_symmetric, example1
from steinerpath.packing import TerminalSpec, packing_upper_bound

numba_backend = _kernels.numba_backend
numpy_backend = _kernels.numpy_backend

needs_numba = pytest.mark.skipif(numba_backend is None, reason="numba unavailable")


def _inputs(D, spec):
    indptr, indices = D.csr()
    in_s = np.zeros(D.n, dtype=np.uint8)
    in_s[list(spec.S)] = 1
    return indptr, indices, in_s


def _cases():
    yield complete_symmetric(6), TerminalSpec({0, 2, 4}, 2)
    yield example1(), TerminalSpec(range(8), 0)
    yield example1(), TerminalSpec({0, 5, 6, 7}, 0)
    for seed in range(12):
        D = random_digraph(7, 0.55, seed)
        yield D, TerminalSpec({0, 3, 5}, 3)
        yield D, TerminalSpec({1, 2}, 1)


def test_backend_name():
    assert _kernels.BACKEND_NAME in ("numba", "numpy")


@needs_numba
def test_enumeration_identical():
    for D, spec in _cases():
        indptr, indices, in_s = _inputs(D, spec)
        a = numpy_backend.enumerate_paths(indptr, indices, D.n, spec.r, in_s, spec.k, 10**6)
        b = numba_backend.enumerate_paths(indptr, indices, D.n, spec.r, in_s, spec.k, 10**6)
        assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1]) and a[2] == b[2]


@needs_numba
def test_overflow_flag_identical():
    D = complete_symmetric(7)
    spec = TerminalSpec({0, 1, 2}, 0)
    indptr, indices, in_s = _inputs(D, spec)
    assert numpy_backend.enumerate_paths(indptr, indices, D.n, 0, in_s, 3, 5)[2]
    assert numba_backend.enumerate_paths(indptr, indices, D.n, 0, in_s, 3, 5)[2]


@needs_numba
@pytest.mark.parametrize("internal", [True, False])
def test_cliques_identical(internal):
    for D, spec in _cases():
        indptr, indices, in_s = _inputs(D, spec)
        paths, lengths, _ = numpy_backend.enumerate_paths(indptr, indices, D.n, spec.r, in_s, spec.k, 10**6)
        target = packing_upper_bound(D, spec)
        if target == 0 or len(paths) == 0:
            continue
        a = numpy_backend.max_compatible_set(paths, lengths, D.n, in_s, internal, target)
        b = numba_backend.max_compatible_set(paths, lengths, D.n, in_s, internal, target)
        assert list(a) == list(b)


def test_clique_finds_maximum():
    # 5-cycle complement plus a triangle: clique number 3
    n = 8
    edges = {(0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (5, 6), (6, 7), (5, 7)}
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    assert len(numpy_backend.max_clique(adj, n)) == 3
    if numba_backend is not None:
        words = (n + 63) // 64
        arr = np.zeros((n, words), dtype=np.uint64)
        for u in range(n):
            arr[u, 0] = adj[u]
        assert len(numba_backend.max_clique(arr, n, n)) == 3
