"""Reduction instances from Directed 2-Linkage and a brute-force linkage oracle.

``build_internal_gadget`` wraps an Eulerian host ``H`` with terminals
``x_1..x_k`` so that ``ell`` internally disjoint (S, x_1)-paths exist exactly
when ``H`` links ``s_1 -> t_1`` and ``s_2 -> t_2`` disjointly.
``build_arc_gadget`` splits every host vertex so that arc-disjointness in the
split digraph stands in for internal disjointness.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .digraph import Digraph, is_eulerian, reachable
from .packing import ResourceLimitError, TerminalSpec, max_vertices_cap


@dataclass(frozen=True)
class LinkageInstance:
    H: Digraph
    s1: int
    t1: int
    s2: int
    t2: int

    @property
    def terminals(self) -> tuple[int, int, int, int]:
        return self.s1, self.t1, self.s2, self.t2

    def check(self) -> None:
        ts = self.terminals
        if len(set(ts)) != 4:
            raise ValueError(f"linkage terminals {ts} are not distinct")
        if not all(0 <= t < self.H.n for t in ts):
            raise ValueError(f"linkage terminals {ts} are not vertices of H")


@dataclass(frozen=True)
class GadgetOutput:
    D: Digraph
    spec: TerminalSpec
    name_map: tuple[str, ...]

    def index_of(self, name: str) -> int:
        return self.name_map.index(name)

    def to_json(self) -> dict:
        from .io import digraph_to_json

        return {
            "digraph": digraph_to_json(self.D),
            "S": list(self.spec.S),
            "r": self.spec.r,
            "name_map": list(self.name_map),
        }


SplitMap = dict[int, tuple[int, int]]


def _check_gadget_args(inst: LinkageInstance, k: int, ell: int) -> None:
    if k < 3:
        raise ValueError(f"k must be at least 3, got {k}")
    if ell < 2:
        raise ValueError(f"ell must be at least 2, got {ell}")
    inst.check()
    if not is_eulerian(inst.H):
        raise ValueError("the host digraph H is not Eulerian")


def build_internal_gadget(inst: LinkageInstance, k: int, ell: int) -> GadgetOutput:
    """Host vertices keep their indices; ``x_1..x_k, r_1, r_2`` and the subdivision vertices follow."""
    _check_gadget_args(inst, k, ell)
    H = inst.H
    h = H.n
    names = [H.label(v) for v in range(h)]
    x = [None] + [h + i - 1 for i in range(1, k + 1)]  # x[i], 1-based
    names += [f"x{i}" for i in range(1, k + 1)]
    r1, r2 = h + k, h + k + 1
    names += ["r1", "r2"]
    arcs = set(H.arcs)
    arcs |= {
        (x[1], inst.s1), (inst.t1, x[2]), (x[k - 1], inst.s2), (inst.t2, x[k]),
        (inst.s1, r1), (r1, inst.t2), (inst.s2, r2), (r2, inst.t1),
    }
    nxt = len(names)
    for i in range(1, k + 1):
        copies = ell - 1 if i in (1, k - 1) else ell
        head = x[i % k + 1]
        for j in range(1, copies + 1):
            z = nxt
            nxt += 1
            names.append(f"z^{j}_{i},{i + 1}")
            arcs.add((x[i], z))
            arcs.add((z, head))
    if len(set(names)) != len(names):
        raise ValueError("host vertex labels collide with gadget vertex labels")
    D = Digraph(len(names), arcs, names)
    spec = TerminalSpec(x[1:], x[1])
    return GadgetOutput(D, spec, tuple(names))


def build_arc_gadget(inst: LinkageInstance, k: int, ell: int) -> tuple[GadgetOutput, SplitMap]:
    """Split each host vertex ``u`` into ``u-`` (old index) and ``u+`` (appended)."""
    base = build_internal_gadget(inst, k, ell)
    D = base.D
    h = inst.H.n
    plus = {u: D.n + u for u in range(h)}
    names = list(base.name_map)
    names = [f"{nm}-" if v < h else nm for v, nm in enumerate(names)]
    names += [f"{base.name_map[u]}+" for u in range(h)]
    arcs = set()
    for u, v in D.arcs:
        tail = plus[u] if u < h else u
        arcs.add((tail, v))  # heads in H are the minus copies, which keep index v
    arcs |= {(u, plus[u]) for u in range(h)}
    split = Digraph(len(names), arcs, names)
    return GadgetOutput(split, base.spec, tuple(names)), {u: (u, plus[u]) for u in range(h)}


def solve_2linkage_exact(
    inst: LinkageInstance, max_vertices: int | None = None
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Vertex-disjoint ``s1->t1`` and ``s2->t2`` paths, or ``None``."""
    inst.check()
    H = inst.H
    cap = max_vertices_cap() if max_vertices is None else max_vertices
    if H.n > cap:
        raise ResourceLimitError(f"host has {H.n} vertices; enumeration cap is {cap}")
    s1, t1, s2, t2 = inst.terminals
    out = H.out_neighbors
    stack = [(s1,)]
    while stack:
        P = stack.pop()
        u = P[-1]
        if u == t1:
            Q = _bfs_path(H, s2, t2, set(P))
            if Q is not None:
                return P, Q
            continue
        for w in reversed(out[u]):
            if w not in P and w != s2 and w != t2:
                stack.append(P + (w,))
    return None


def _bfs_path(H: Digraph, s: int, t: int, blocked: set[int]) -> tuple[int, ...] | None:
    if s in blocked or t in blocked:
        return None
    if t not in reachable(H, s, blocked):
        return None
    parent = {s: s}
    queue = [s]
    for u in queue:
        for w in H.out_neighbors[u]:
            if w not in parent and w not in blocked:
                parent[w] = u
                queue.append(w)
    path = [t]
    while path[-1] != s:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def random_eulerian_digraph(n: int, cycles: int, seed: int) -> Digraph:
    """Union of ``cycles`` random directed cycles, each meeting the earlier ones.

    A cycle that would repeat an arc is resampled (up to a fixed number of
    tries, after which it is skipped).
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    rng = np.random.default_rng(seed)
    arcs: set[tuple[int, int]] = set()
    touched: set[int] = set()
    for _ in range(cycles):
        for _attempt in range(50):
            length = int(rng.integers(3, n + 1))
            verts = [int(v) for v in rng.permutation(n)[:length]]
            if touched and not touched & set(verts):
                continue
            new = {(verts[i], verts[(i + 1) % length]) for i in range(length)}
            if new & arcs:
                continue
            arcs |= new
            touched |= set(verts)
            break
    D = Digraph(n, arcs)
    if not is_eulerian(D):
        raise AssertionError("generated digraph is not Eulerian")
    return D
