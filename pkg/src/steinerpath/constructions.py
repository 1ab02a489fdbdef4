"""Named digraphs: complete symmetric digraphs and their Hamiltonian
decompositions, the 8-vertex non-monotonicity example, transitive
tournaments and the self-complementary half decompositions."""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .digraph import Digraph, complete_pairs
from .packing import PackingCertificate, TerminalSpec

EVEN_SEARCH_LIMIT = 10


class NoDecompositionError(ValueError):
    """The complete symmetric digraph on this many vertices has no Hamiltonian decomposition."""


def complete_symmetric(n: int) -> Digraph:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return Digraph(n, complete_pairs(n))


@dataclass(frozen=True)
class HamiltonianDecomposition:
    n: int
    cycles: tuple[tuple[int, ...], ...]

    def arcs_of(self, i: int) -> list[tuple[int, int]]:
        c = self.cycles[i]
        return [(c[j], c[(j + 1) % len(c)]) for j in range(len(c))]

    def violations(self) -> list[str]:
        problems = []
        seen: dict[tuple[int, int], int] = {}
        for i, c in enumerate(self.cycles):
            if sorted(c) != list(range(self.n)):
                problems.append(f"cycle {i} is not Hamiltonian")
            for a in self.arcs_of(i):
                if a in seen:
                    problems.append(f"arc {a} used by cycles {seen[a]} and {i}")
                seen[a] = i
        missing = set(complete_pairs(self.n)) - set(seen)
        if missing:
            problems.append(f"{len(missing)} arcs of the complete digraph are uncovered")
        if len(self.cycles) != self.n - 1:
            problems.append(f"expected {self.n - 1} cycles, found {len(self.cycles)}")
        return problems

    def digraph(self, indices=None) -> Digraph:
        chosen = range(len(self.cycles)) if indices is None else indices
        return Digraph(self.n, (a for i in chosen for a in self.arcs_of(i)))

    def to_json(self) -> dict:
        return {"n": self.n, "cycles": [list(c) for c in self.cycles]}


def _rotate_to(cycle, start):
    i = cycle.index(start)
    return tuple(cycle[i:] + cycle[:i])


def _walecki(n: int) -> list[tuple[int, ...]]:
    # K_n, n odd: (n-1)/2 undirected Hamiltonian cycles through the hub n-1
    m = (n - 1) // 2
    zigzag = [0]
    for j in range(1, m + 1):
        zigzag.append(j)
        if len(zigzag) < 2 * m:
            zigzag.append(2 * m - j)
    cycles = []
    for i in range(m):
        cycles.append(_rotate_to([(v + i) % (2 * m) for v in zigzag] + [n - 1], 0))
    return cycles


def _even_search(n: int, seed: int = 0) -> list[tuple[int, ...]]:
    """Randomised backtracking with restarts; first cycle is fixed to 0..n-1."""
    rng = random.Random(seed)
    first = tuple(range(n))
    while True:
        avail = [set(range(n)) - {u} for u in range(n)]
        for j in range(n):
            avail[first[j]].discard(first[(j + 1) % n])
        cycles = [first]
        budget = [20000 * n]
        if _fill(n, avail, cycles, rng, budget):
            return cycles


def _fill(n, avail, cycles, rng, budget) -> bool:
    if len(cycles) == n - 1:
        return True
    if len(cycles) == n - 2:
        # remaining arcs form a permutation; accept only a single n-cycle
        succ = [next(iter(a)) for a in avail]
        c, v = [0], succ[0]
        while v != 0:
            c.append(v)
            v = succ[v]
        if len(c) != n:
            return False
        cycles.append(tuple(c))
        return True
    path = [0]
    on_path = [False] * n
    on_path[0] = True

    def extend() -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            return False
        u = path[-1]
        if len(path) == n:
            if 0 not in avail[u]:
                return False
            avail[u].discard(0)
            cycles.append(tuple(path))
            if _fill(n, avail, cycles, rng, budget):
                return True
            cycles.pop()
            avail[u].add(0)
            return False
        options = [w for w in avail[u] if not on_path[w]]
        rng.shuffle(options)
        options.sort(key=lambda w: len(avail[w]))
        for w in options:
            avail[u].discard(w)
            path.append(w)
            on_path[w] = True
            if extend():
                return True
            on_path[w] = False
            path.pop()
            avail[u].add(w)
            if budget[0] < 0:
                return False
        return False

    return extend()


@lru_cache(maxsize=None)
def tillson_decomposition(n: int) -> HamiltonianDecomposition:
    """``n - 1`` arc-disjoint directed Hamiltonian cycles covering the complete digraph.

    Odd ``n`` uses Walecki's cycles in both directions. Even ``n`` up to
    ``EVEN_SEARCH_LIMIT`` is found by seeded search.
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    if n in (4, 6):
        raise NoDecompositionError(f"no Hamiltonian decomposition exists for n={n}")
    if n % 2:
        base = _walecki(n)
        cycles = base + [_rotate_to(list(reversed(c)), 0) for c in base]
    elif n <= EVEN_SEARCH_LIMIT:
        cycles = _even_search(n)
    else:
        raise NotImplementedError(f"even-order decompositions are not implemented for n > {EVEN_SEARCH_LIMIT}")
    decomp = HamiltonianDecomposition(n, tuple(cycles))
    problems = decomp.violations()
    if problems:
        raise AssertionError("; ".join(problems))
    return decomp


def decomposition_to_sr_packing(decomp: HamiltonianDecomposition, spec: TerminalSpec) -> PackingCertificate:
    """One (S, r)-path per cycle: follow it from ``r`` up to the last terminal."""
    problems = decomp.violations()
    if problems:
        raise ValueError("invalid decomposition: " + "; ".join(problems))
    terminals = set(spec.S)
    paths = []
    for c in decomp.cycles:
        walk = _rotate_to(list(c), spec.r)
        last = max(i for i, v in enumerate(walk) if v in terminals)
        paths.append(tuple(walk[:last + 1]))
    return PackingCertificate("arc", spec, tuple(sorted(paths)))


EXAMPLE1_NAMES = ("x1", "x2", "y1", "y2", "y3", "z1", "z2", "z3")


def example1() -> Digraph:
    """Eight vertices ``x1 x2 y1 y2 y3 z1 z2 z3`` (indices 0..7)."""
    X, Y, Z = (0, 1), (2, 3, 4), (5, 6, 7)
    arcs = [(z, x) for z in Z for x in X]
    arcs += [(z, y) for z in Z for y in Y]
    arcs += [(x, y) for x in X for y in Y]
    arcs += [(y, z) for i, y in enumerate(Y) for j, z in enumerate(Z) if i != j]
    return Digraph(8, arcs, EXAMPLE1_NAMES)


def transitive_tournament(n: int) -> Digraph:
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    return Digraph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def half_decomposition_digraph(n: int) -> Digraph:
    """Union of the first ``(n-1)/2`` cycles of the decomposition for odd ``n >= 7``.

    With Walecki's ordering these are the forward cycles, so the result is a
    regular tournament whose complement is its reversal.
    """
    if n % 2 == 0:
        raise ValueError(f"n must be odd, got {n}")
    if n < 7:
        raise ValueError(f"n must be at least 7, got {n}")
    decomp = tillson_decomposition(n)
    return decomp.digraph(range((n - 1) // 2))
