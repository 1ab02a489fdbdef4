"""Compare the numba and numpy kernels on enumeration and clique search.

    python3 benchmarks/bench_kernels.py [--repeat 3]

The numba kernels are compiled (or loaded from cache) before timing.
"""
import argparse
import timeit

import numpy as np

from steinerpath import _kernels
from steinerpath.constructions import complete_symmetric, example1
from steinerpath.audit import random_digraph
from steinerpath.packing import TerminalSpec, packing_upper_bound

CASES = [
    ("K8 |S|=3 arc", complete_symmetric(8), TerminalSpec({0, 3, 6}, 0), False),
    ("K8 |S|=3 internal", complete_symmetric(8), TerminalSpec({0, 3, 6}, 0), True),
    ("example1 |S|=8 internal", example1(), TerminalSpec(range(8), 0), True),
    ("G(9, 0.6) |S|=4 arc", random_digraph(9, 0.6, 1), TerminalSpec({0, 2, 4, 8}, 2), False),
]


def arrays(D, spec):
    indptr, indices = D.csr()
    in_s = np.zeros(D.n, dtype=np.uint8)
    in_s[list(spec.S)] = 1
    return indptr, indices, in_s


def run_case(backend, D, spec, internal):
    indptr, indices, in_s = arrays(D, spec)
    paths, lengths, _ = backend.enumerate_paths(indptr, indices, D.n, spec.r, in_s, spec.k, 10**7)
    # no flow-bound target here, so the clique search has to prove optimality
    return backend.max_compatible_set(paths, lengths, D.n, in_s, internal, len(paths))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = [("numpy", _kernels.numpy_backend)]
    if _kernels.numba_backend is not None:
        backends.append(("numba", _kernels.numba_backend))
        for _, D, spec, internal in CASES[:1]:
            run_case(_kernels.numba_backend, D, spec, internal)
    else:
        print("numba unavailable: timing the numpy kernels only")

    print(f"{'case':28s} {'paths':>7s} {'bound':>5s} " + " ".join(f"{name:>10s}" for name, _ in backends))
    for label, D, spec, internal in CASES:
        indptr, indices, in_s = arrays(D, spec)
        count = len(_kernels.numpy_backend.enumerate_paths(indptr, indices, D.n, spec.r, in_s, spec.k, 10**7)[1])
        times = []
        results = []
        for _, backend in backends:
            t = min(timeit.repeat(lambda: results.append(run_case(backend, D, spec, internal)), number=1, repeat=args.repeat))
            times.append(t)
        assert all(list(r) == list(results[0]) for r in results), "backends disagree"
        row = f"{label:28s} {count:7d} {packing_upper_bound(D, spec):5d} "
        print(row + " ".join(f"{t * 1e3:8.1f}ms" for t in times))


if __name__ == "__main__":
    main()
