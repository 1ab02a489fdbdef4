"""(S, r)-paths and exact packing numbers.

An (S, r)-path starts at the root ``r`` and visits every terminal in ``S``.
Enumeration emits each such path truncated at the terminal that completes
the cover; dropping the tail only removes arcs and vertices, so every
packing survives truncation and the packing numbers are unchanged.

The maximum packing is a maximum clique in the compatibility graph over the
enumerated paths. Compatibility is ``arc_disjoint`` (arc mode) or
``internally_disjoint`` (internal mode). A budgeted greedy pass runs first;
when it already reaches the flow upper bound no enumeration is needed.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .digraph import Digraph, local_arc_connectivity, min_degrees, reachable

MODES = ("internal", "arc")

DEFAULT_MAX_VERTICES = 12
DEFAULT_MAX_PATHS = 25_000


class ResourceLimitError(RuntimeError):
    """The instance is larger than the configured enumeration caps allow."""


def max_vertices_cap() -> int:
    return int(os.environ.get("STEINERPATH_MAX_VERTICES", DEFAULT_MAX_VERTICES))


def max_paths_cap() -> int:
    return int(os.environ.get("STEINERPATH_MAX_PATHS", DEFAULT_MAX_PATHS))


@dataclass(frozen=True, order=True)
class TerminalSpec:
    """Terminal set ``S`` with root ``r``; ordered by sorted ``S`` then ``r``."""

    S: tuple[int, ...]
    r: int

    def __init__(self, S: Iterable[int], r: int):
        terms = tuple(sorted({int(x) for x in S}))
        object.__setattr__(self, "S", terms)
        object.__setattr__(self, "r", int(r))
        if self.r not in terms:
            raise ValueError(f"root {self.r} is not a terminal")
        if len(terms) < 2:
            raise ValueError("need at least two terminals")

    @property
    def k(self) -> int:
        return len(self.S)

    def check(self, D: Digraph) -> None:
        bad = [x for x in self.S if not 0 <= x < D.n]
        if bad:
            raise ValueError(f"terminals {bad} are not vertices of a {D.n}-vertex digraph")

    def to_json(self) -> dict:
        return {"S": list(self.S), "r": self.r}


def path_arcs(P: Sequence[int]) -> set[tuple[int, int]]:
    return {(P[i], P[i + 1]) for i in range(len(P) - 1)}


def is_path(D: Digraph, P: Sequence[int]) -> bool:
    """Non-empty, no repeated vertex, consecutive pairs are arcs."""
    if not P or len(set(P)) != len(P):
        return False
    return all((P[i], P[i + 1]) in D.arcs for i in range(len(P) - 1))


def is_sr_path(D: Digraph, P: Sequence[int], spec: TerminalSpec) -> bool:
    return is_path(D, P) and P[0] == spec.r and set(spec.S) <= set(P)


def arc_disjoint(P1: Sequence[int], P2: Sequence[int]) -> bool:
    return not (path_arcs(P1) & path_arcs(P2))


def internally_disjoint(P1: Sequence[int], P2: Sequence[int], S: Iterable[int]) -> bool:
    return arc_disjoint(P1, P2) and set(P1) & set(P2) == set(S)


def compatible(P1, P2, spec: TerminalSpec, mode: str) -> bool:
    if mode == "arc":
        return arc_disjoint(P1, P2)
    if mode == "internal":
        return internally_disjoint(P1, P2, spec.S)
    raise ValueError(f"unknown mode {mode!r}")


@dataclass(frozen=True)
class PackingCertificate:
    mode: str
    spec: TerminalSpec
    paths: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def value(self) -> int:
        return len(self.paths)

    def violations(self, D: Digraph) -> list[str]:
        """Reasons the certificate is invalid on ``D``; empty when it checks out."""
        problems = []
        if self.mode not in MODES:
            problems.append(f"unknown mode {self.mode!r}")
            return problems
        for P in self.paths:
            if not is_sr_path(D, P, self.spec):
                problems.append(f"{list(P)} is not an (S, r)-path")
        for P1, P2 in combinations(self.paths, 2):
            if not compatible(P1, P2, self.spec, self.mode):
                problems.append(f"{list(P1)} and {list(P2)} are not {self.mode}-disjoint")
        return problems

    def is_valid(self, D: Digraph) -> bool:
        return not self.violations(D)

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "value": self.value,
            "paths": [list(p) for p in self.paths],
            "S": list(self.spec.S),
            "r": self.spec.r,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "PackingCertificate":
        spec = TerminalSpec(obj["S"], obj["r"])
        return cls(obj["mode"], spec, tuple(tuple(int(v) for v in p) for p in obj["paths"]))


def _check_caps(D: Digraph, max_vertices: int | None) -> None:
    cap = max_vertices_cap() if max_vertices is None else max_vertices
    if D.n > cap:
        raise ResourceLimitError(
            f"digraph has {D.n} vertices; enumeration cap is {cap} "
            "(raise it with max_vertices= or STEINERPATH_MAX_VERTICES)"
        )


def _enumerate_arrays(D: Digraph, spec: TerminalSpec, max_vertices: int | None):
    spec.check(D)
    _check_caps(D, max_vertices)
    indptr, indices = D.csr()
    in_s = np.zeros(D.n, dtype=np.uint8)
    in_s[list(spec.S)] = 1
    limit = max_paths_cap()
    paths, lengths, overflow = _kernels.enumerate_paths(indptr, indices, D.n, spec.r, in_s, spec.k, limit)
    if overflow:
        raise ResourceLimitError(
            f"more than {limit} (S, r)-paths; raise STEINERPATH_MAX_PATHS to continue"
        )
    return paths, lengths, in_s


def enumerate_sr_paths(D: Digraph, spec: TerminalSpec, max_vertices: int | None = None) -> list[tuple[int, ...]]:
    """All simple (S, r)-paths that end at the terminal completing the cover."""
    paths, lengths, _ = _enumerate_arrays(D, spec, max_vertices)
    return [tuple(int(v) for v in paths[i, :lengths[i]]) for i in range(len(paths))]


def packing_upper_bound(D: Digraph, spec: TerminalSpec) -> int:
    """Min over terminals ``x`` of the number of arc-disjoint ``r``-``x`` paths."""
    return min(_local_arc(D, spec.r, x) for x in spec.S if x != spec.r)


@lru_cache(maxsize=4096)
def _local_arc(D: Digraph, u: int, v: int) -> int:
    return local_arc_connectivity(D, u, v)


def max_packing(
    D: Digraph,
    spec: TerminalSpec,
    mode: str,
    *,
    stop_at: int | None = None,
    max_vertices: int | None = None,
) -> PackingCertificate:
    """A maximum packing of (S, r)-paths.

    With ``stop_at`` the search returns as soon as it holds ``stop_at`` paths,
    so the certificate value is exact only when it is below ``stop_at``.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    spec.check(D)
    _check_caps(D, max_vertices)
    if not set(spec.S) <= reachable(D, spec.r):
        return PackingCertificate(mode, spec, ())
    target = packing_upper_bound(D, spec)
    if stop_at is not None:
        target = min(target, stop_at)
    if target <= 0:
        return PackingCertificate(mode, spec, ())
    greedy = _greedy_packing(D, spec, mode, target)
    if len(greedy) >= target:
        return PackingCertificate(mode, spec, tuple(sorted(greedy)))
    paths, lengths, in_s = _enumerate_arrays(D, spec, max_vertices)
    chosen = _kernels.max_compatible_set(paths, lengths, D.n, in_s, mode == "internal", target)
    found = sorted(tuple(int(v) for v in paths[i, :lengths[i]]) for i in chosen)
    return PackingCertificate(mode, spec, tuple(found))


_GREEDY_ORDERS = (
    lambda w, terminals: (w not in terminals, w),  # terminals first keeps paths short
    lambda w, terminals: (w in terminals, w),
    lambda w, terminals: (w not in terminals, -w),
)


def _greedy_packing(D: Digraph, spec: TerminalSpec, mode: str, want: int, budget: int = 4000) -> list[tuple[int, ...]]:
    """Paths found one at a time in the residual digraph; may fall short of optimal.

    A few fixed neighbour orders are tried and the largest family is kept.
    """
    best: list[tuple[int, ...]] = []
    for order in _GREEDY_ORDERS:
        found = _greedy_pass(D, spec, mode, want, budget, order)
        if len(found) > len(best):
            best = found
        if len(best) >= want:
            break
    return best


def _greedy_pass(D, spec, mode, want, budget, order) -> list[tuple[int, ...]]:
    terminals = set(spec.S)
    k = len(terminals)
    used_arcs: set[tuple[int, int]] = set()
    used_vertices: set[int] = set()
    succ = [sorted(ws, key=lambda w: order(w, terminals)) for ws in D.out_neighbors]
    found: list[tuple[int, ...]] = []
    steps = [budget]

    def dfs(path: list[int], on: set[int], covered: int) -> tuple[int, ...] | None:
        if covered == k:
            return tuple(path)
        steps[0] -= 1
        if steps[0] < 0:
            return None
        u = path[-1]
        for w in succ[u]:
            if w in on or (u, w) in used_arcs or w in used_vertices:
                continue
            path.append(w)
            on.add(w)
            hit = dfs(path, on, covered + (w in terminals))
            if hit:
                return hit
            on.discard(w)
            path.pop()
        return None

    while len(found) < want:
        P = dfs([spec.r], {spec.r}, 1)
        if P is None:
            break
        found.append(P)
        used_arcs |= path_arcs(P)
        if mode == "internal":
            used_vertices |= set(P) - terminals
    return found


def packing_number(D: Digraph, spec: TerminalSpec, mode: str, **kw) -> int:
    return max_packing(D, spec, mode, **kw).value


# -- directed path connectivity ----------------------------------------------------


def terminal_specs(n: int, k: int) -> Iterable[TerminalSpec]:
    """All ``(S, r)`` with ``|S| = k`` in lexicographic order of ``S`` then ``r``."""
    for S in combinations(range(n), k):
        for r in S:
            yield TerminalSpec(S, r)


def _sweep(D: Digraph, specs: Iterable[TerminalSpec], mode: str, bound: int, max_vertices):
    # first spec in order attaining the minimum; values >= bound are not resolved
    best_value, best_spec = bound, None
    for spec in specs:
        if best_value == 0:
            break
        value = packing_number(D, spec, mode, stop_at=best_value, max_vertices=max_vertices)
        if value < best_value:
            best_value, best_spec = value, spec
    return best_value, best_spec


def _sweep_chunk(args):
    D, specs, mode, bound, max_vertices = args
    return _sweep(D, specs, mode, bound, max_vertices)


def path_connectivity(
    D: Digraph, k: int, mode: str, *, jobs: int = 1, max_vertices: int | None = None
) -> tuple[int, TerminalSpec]:
    """Minimum packing number over all ``(S, r)`` with ``|S| = k``, with the first minimiser."""
    if not 2 <= k <= D.n:
        raise ValueError(f"k must lie in 2..{D.n}, got {k}")
    _check_caps(D, max_vertices)
    specs = list(terminal_specs(D.n, k))
    # the minimum over all specs never exceeds min(delta+, delta-), so this start is never returned
    bound = min(min_degrees(D)) + 1
    if jobs <= 1 or len(specs) < 2 * jobs:
        value, spec = _sweep(D, specs, mode, bound, max_vertices)
    else:
        from concurrent.futures import ProcessPoolExecutor

        size = -(-len(specs) // jobs)
        chunks = [(D, specs[i:i + size], mode, bound, max_vertices) for i in range(0, len(specs), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_sweep_chunk, chunks))
        value, spec = bound, None
        for v, s in results:
            if s is not None and v < value:
                value, spec = v, s
    if spec is None:
        raise AssertionError("packing value exceeded the minimum-degree bound")
    return value, spec


def kappa_p_k(D: Digraph, k: int, **kw) -> tuple[int, TerminalSpec]:
    return path_connectivity(D, k, "internal", **kw)


def lambda_p_k(D: Digraph, k: int, **kw) -> tuple[int, TerminalSpec]:
    return path_connectivity(D, k, "arc", **kw)
