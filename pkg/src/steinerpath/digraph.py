"""Strict digraphs, structural predicates and classical connectivity.

Vertices are the integers ``0..n-1``. A :class:`Digraph` is immutable once
built; derived data (adjacency lists, CSR arrays) is computed lazily and
cached on the instance.
"""
from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

Arc = tuple[int, int]


class Digraph:
    """A digraph without loops or parallel arcs."""

    __slots__ = ("n", "arcs", "names", "_out", "_in", "_csr", "_hash")

    def __init__(self, n: int, arcs: Iterable[Arc] = (), names: Sequence[str] | None = None):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        arcset = frozenset((int(u), int(v)) for u, v in arcs)
        for u, v in arcset:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if names is not None:
            names = tuple(str(x) for x in names)
            if len(names) != n:
                raise ValueError(f"expected {n} names, got {len(names)}")
        self.n = n
        self.arcs = arcset
        self.names = names
        self._out: tuple[tuple[int, ...], ...] | None = None
        self._in: tuple[tuple[int, ...], ...] | None = None
        self._csr = None
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_arc_list(cls, n: int, pairs: Iterable[Sequence[int]], names=None) -> "Digraph":
        return cls(n, (tuple(p) for p in pairs), names)

    # -- basic accessors ------------------------------------------------------

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs and self.names == other.names

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.arcs, self.names))
        return self._hash

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={len(self.arcs)})"

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    @property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        if self._out is None:
            self._build_adjacency()
        return self._out

    @property
    def in_neighbors(self) -> tuple[tuple[int, ...], ...]:
        if self._in is None:
            self._build_adjacency()
        return self._in

    def _build_adjacency(self) -> None:
        out: list[list[int]] = [[] for _ in range(self.n)]
        inn: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.arcs):
            out[u].append(v)
            inn[v].append(u)
        self._out = tuple(tuple(a) for a in out)
        self._in = tuple(tuple(a) for a in inn)

    def csr(self) -> tuple[np.ndarray, np.ndarray]:
        """Out-adjacency as ``(indptr, indices)`` int64 arrays, neighbours sorted."""
        if self._csr is None:
            out = self.out_neighbors
            indptr = np.zeros(self.n + 1, dtype=np.int64)
            indptr[1:] = np.cumsum([len(a) for a in out])
            indices = np.fromiter((v for a in out for v in a), dtype=np.int64, count=len(self.arcs))
            indptr.flags.writeable = False
            indices.flags.writeable = False
            self._csr = (indptr, indices)
        return self._csr

    def label(self, v: int) -> str:
        return self.names[v] if self.names is not None else str(v)

    def remove_arcs(self, arcs: Iterable[Arc]) -> "Digraph":
        drop = set(arcs)
        return Digraph(self.n, (a for a in self.arcs if a not in drop), self.names)

    def reverse(self) -> "Digraph":
        return Digraph(self.n, ((v, u) for u, v in self.arcs), self.names)


def from_arc_list(n: int, pairs: Iterable[Sequence[int]]) -> Digraph:
    """Build a digraph on ``n`` vertices; repeated pairs collapse to one arc."""
    return Digraph.from_arc_list(n, pairs)


def complement(D: Digraph) -> Digraph:
    """The digraph whose arcs are exactly the non-arcs of ``D`` (loops excluded)."""
    n = D.n
    return Digraph(
        n,
        ((u, v) for u in range(n) for v in range(n) if u != v and (u, v) not in D.arcs),
        D.names,
    )


def is_symmetric(D: Digraph) -> bool:
    return all((v, u) in D.arcs for u, v in D.arcs)


def min_degrees(D: Digraph) -> tuple[int, int]:
    """``(min out-degree, min in-degree)``; ``(0, 0)`` for the empty digraph."""
    if D.n == 0:
        return 0, 0
    return (
        min(len(a) for a in D.out_neighbors),
        min(len(a) for a in D.in_neighbors),
    )


def induced_arcs(D: Digraph, S: Iterable[int]) -> frozenset[Arc]:
    """Arcs of ``D`` with both endpoints in ``S``."""
    S = set(S)
    return frozenset((u, v) for u, v in D.arcs if u in S and v in S)


def reachable(D: Digraph, source: int, blocked: Iterable[int] = ()) -> set[int]:
    """Vertices reachable from ``source`` by paths avoiding ``blocked`` internally and at the end."""
    blocked = set(blocked)
    seen = {source}
    queue = deque([source])
    out = D.out_neighbors
    while queue:
        u = queue.popleft()
        for w in out[u]:
            if w not in seen and w not in blocked:
                seen.add(w)
                queue.append(w)
    return seen


def is_strong(D: Digraph) -> bool:
    if D.n <= 1:
        return True
    if len(reachable(D, 0)) != D.n:
        return False
    return len(reachable(D.reverse(), 0)) == D.n


def is_eulerian(D: Digraph) -> bool:
    """Balanced degrees and a single weak component containing every arc."""
    out, inn = D.out_neighbors, D.in_neighbors
    if any(len(out[v]) != len(inn[v]) for v in range(D.n)):
        return False
    active = [v for v in range(D.n) if out[v]]
    if not active:
        return True
    seen = {active[0]}
    stack = [active[0]]
    while stack:
        u = stack.pop()
        for w in out[u] + inn[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return all(v in seen for v in active)


# -- unit-capacity max flow -----------------------------------------------------

_INF = 1 << 30


class _FlowNetwork:
    """Residual network for small max-flow problems (BFS augmenting paths)."""

    def __init__(self, size: int):
        self.size = size
        self.cap: list[dict[int, int]] = [dict() for _ in range(size)]

    def add(self, u: int, v: int, c: int) -> None:
        self.cap[u][v] = self.cap[u].get(v, 0) + c
        self.cap[v].setdefault(u, 0)

    def max_flow(self, s: int, t: int, limit: int = _INF) -> int:
        flow = 0
        cap = self.cap
        while flow < limit:
            parent = {s: s}
            queue = deque([s])
            while queue and t not in parent:
                u = queue.popleft()
                for v, c in cap[u].items():
                    if c > 0 and v not in parent:
                        parent[v] = u
                        queue.append(v)
            if t not in parent:
                break
            v = t
            while v != s:
                u = parent[v]
                cap[u][v] -= 1
                cap[v][u] += 1
                v = u
            flow += 1
        return flow

    def source_side(self, s: int) -> set[int]:
        seen = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for v, c in self.cap[u].items():
                if c > 0 and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen


def _arc_network(D: Digraph) -> _FlowNetwork:
    net = _FlowNetwork(D.n)
    for u, v in D.arcs:
        net.add(u, v, 1)
    return net


def _split_network(D: Digraph, uncapacitated: Iterable[int], arc_cap: int = 1) -> _FlowNetwork:
    # vertex v becomes 2v (in) -> 2v+1 (out)
    free = set(uncapacitated)
    net = _FlowNetwork(2 * D.n)
    for v in range(D.n):
        net.add(2 * v, 2 * v + 1, _INF if v in free else 1)
    for u, v in D.arcs:
        net.add(2 * u + 1, 2 * v, arc_cap)
    return net


def local_arc_connectivity(D: Digraph, u: int, v: int, limit: int = _INF) -> int:
    """Maximum number of arc-disjoint ``u``-``v`` paths."""
    return _arc_network(D).max_flow(u, v, limit)


def local_vertex_connectivity(
    D: Digraph, u: int, v: int, uncapacitated: Iterable[int] = (), limit: int = _INF
) -> int:
    """Maximum number of arc-disjoint ``u``-``v`` paths sharing no vertex outside ``uncapacitated``.

    With ``uncapacitated`` empty this is the number of internally disjoint
    paths (a direct arc ``uv`` counts as one path).
    """
    free = set(uncapacitated) | {u, v}
    return _split_network(D, free).max_flow(2 * u + 1, 2 * v, limit)


def _flow_paths(net: _FlowNetwork, original: dict, s: int, t: int) -> list[list[int]]:
    # decompose a unit flow into paths by following saturated arcs
    used = {u: [v for v, c0 in caps.items() if c0 > 0 and net.cap[u][v] < c0] for u, caps in original.items()}
    paths = []
    while used.get(s):
        path = [s]
        u = s
        while u != t:
            v = used[u].pop()
            path.append(v)
            u = v
        paths.append(path)
    return paths


def disjoint_paths(D: Digraph, u: int, v: int, mode: str) -> list[tuple[int, ...]]:
    """A maximum family of ``u``-``v`` paths, arc-disjoint (``"arc"``) or internally disjoint (``"internal"``)."""
    if mode == "arc":
        net = _arc_network(D)
        original = {a: dict(c) for a, c in enumerate(net.cap)}
        net.max_flow(u, v)
        raw = _flow_paths(net, original, u, v)
        return [tuple(_simplify_walk(p)) for p in raw]
    if mode != "internal":
        raise ValueError(f"unknown mode {mode!r}")
    net = _split_network(D, {u, v})
    original = {a: dict(c) for a, c in enumerate(net.cap)}
    net.max_flow(2 * u + 1, 2 * v)
    raw = _flow_paths(net, original, 2 * u + 1, 2 * v)
    return [tuple(_simplify_walk([u] + [x // 2 for x in p[1::2]])) for p in raw]


def _simplify_walk(walk: list[int]) -> list[int]:
    # cut out cycles so the walk becomes a path over a subset of its arcs
    out: list[int] = []
    pos: dict[int, int] = {}
    for x in walk:
        if x in pos:
            cut = pos[x]
            for y in out[cut + 1:]:
                del pos[y]
            del out[cut + 1:]
        else:
            pos[x] = len(out)
            out.append(x)
    return out


# -- global connectivity ----------------------------------------------------------


def min_vertex_cut(D: Digraph) -> tuple[int, frozenset[int]]:
    """``(kappa(D), Q)`` where ``Q`` is a minimum set whose deletion leaves ``D`` non-strong.

    For a non-strong digraph the cut is empty. A complete digraph has no
    separator at all; its ``kappa`` is ``n - 1`` and ``Q`` is empty.
    """
    n = D.n
    if n < 2:
        raise ValueError("vertex connectivity needs at least 2 vertices")
    if not is_strong(D):
        return 0, frozenset()
    best, cut = n - 1, frozenset()
    for u in range(n):
        for v in range(n):
            if u == v or (u, v) in D.arcs:
                continue
            # uncapacitated arcs force every minimum cut through split vertices
            net = _split_network(D, {u, v}, arc_cap=_INF)
            value = net.max_flow(2 * u + 1, 2 * v, best)
            if value < best:
                side = net.source_side(2 * u + 1)
                best = value
                cut = frozenset(x for x in range(n) if 2 * x in side and 2 * x + 1 not in side)
    return best, cut


def vertex_connectivity(D: Digraph) -> int:
    return min_vertex_cut(D)[0]


def min_arc_cut(D: Digraph) -> tuple[int, frozenset[Arc]]:
    """``(lambda(D), A')`` with ``A'`` a minimum arc set whose deletion leaves ``D`` non-strong."""
    n = D.n
    if n < 2:
        raise ValueError("arc connectivity needs at least 2 vertices")
    best, cut = None, frozenset()
    # lambda(D) = min over v of min(flow(0, v), flow(v, 0))
    for v in range(1, n):
        for s, t in ((0, v), (v, 0)):
            net = _arc_network(D)
            value = net.max_flow(s, t, _INF if best is None else best)
            if best is None or value < best:
                side = net.source_side(s)
                best = value
                cut = frozenset((a, b) for a, b in D.arcs if a in side and b not in side)
    return best, cut


def arc_connectivity(D: Digraph) -> int:
    return min_arc_cut(D)[0]


def complete_pairs(n: int) -> Iterable[Arc]:
    for u, v in combinations(range(n), 2):
        yield u, v
        yield v, u
