"""Pure numpy / Python-int kernels. Reference backend; always available."""
from __future__ import annotations

import sys

import numpy as np

_BLOCK = 2048


def enumerate_paths(indptr, indices, n, r, in_s, k, max_paths):
    """Simple paths from ``r`` that stop as soon as all ``k`` terminals are covered.

    Returns ``(paths, lengths, overflow)``; ``paths`` is padded with ``-1``.
    Neighbours are visited in CSR order, so output order is deterministic.
    """
    out = [indices[indptr[u]:indptr[u + 1]].tolist() for u in range(n)]
    terminal = [bool(x) for x in in_s]
    visited = [False] * n
    found: list[list[int]] = []
    path = [r]
    visited[r] = True

    def dfs(u: int, covered: int) -> bool:
        for w in out[u]:
            if visited[w]:
                continue
            c = covered + terminal[w]
            if c == k:
                if len(found) >= max_paths:
                    return False
                found.append(path + [w])
                continue
            visited[w] = True
            path.append(w)
            ok = dfs(w, c)
            path.pop()
            visited[w] = False
            if not ok:
                return False
        return True

    limit = sys.getrecursionlimit()
    if n + 50 > limit:
        sys.setrecursionlimit(n + 50)
    complete = True
    if k <= 1:
        found.append([r])
    else:
        complete = dfs(r, int(terminal[r]))
    paths = np.full((len(found), max(n, 1)), -1, dtype=np.int64)
    lengths = np.zeros(len(found), dtype=np.int64)
    for i, p in enumerate(found):
        paths[i, :len(p)] = p
        lengths[i] = len(p)
    return paths, lengths, not complete


def _resources(paths, lengths, n, in_s, internal):
    """0/1 matrix: row ``i`` marks the arcs (and, if ``internal``, the non-terminal vertices) of path ``i``."""
    P = len(paths)
    width = n * n + (n if internal else 0)
    M = np.zeros((P, width), dtype=np.float32)
    if P == 0:
        return M
    tails, heads = paths[:, :-1], paths[:, 1:]
    valid = heads >= 0
    rows = np.broadcast_to(np.arange(P)[:, None], tails.shape)
    M[rows[valid], (tails * n + heads)[valid]] = 1.0
    if internal:
        outside = ~np.asarray(in_s, dtype=bool)
        vmask = (paths >= 0) & outside[np.where(paths >= 0, paths, 0)]
        vrows = np.broadcast_to(np.arange(P)[:, None], paths.shape)
        M[vrows[vmask], n * n + paths[vmask]] = 1.0
    return M


def compatibility(paths, lengths, n, in_s, internal):
    """Boolean matrix: ``True`` where two paths share no resource (diagonal ``False``)."""
    M = _resources(paths, lengths, n, in_s, internal)
    P = len(M)
    G = np.empty((P, P), dtype=bool)
    for start in range(0, P, _BLOCK):
        G[start:start + _BLOCK] = (M[start:start + _BLOCK] @ M.T) == 0
    np.fill_diagonal(G, False)
    return G


def _to_int(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


def max_clique(adj: list[int], target: int) -> list[int]:
    """Branch and bound with greedy-colouring bounds over int bitsets.

    Stops as soon as a clique of size ``target`` is found.
    """
    best: list[int] = []
    cur: list[int] = []

    def expand(cand: int, depth: int) -> bool:
        nonlocal best
        order: list[int] = []
        colors: list[int] = []
        kmin = len(best) - depth + 1
        uncolored = cand
        color = 0
        while uncolored:
            color += 1
            q = uncolored
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~low
                uncolored &= ~low
                q &= ~adj[v]
                if color >= kmin:
                    order.append(v)
                    colors.append(color)
        for i in range(len(order) - 1, -1, -1):
            if depth + colors[i] <= len(best):
                return False
            v = order[i]
            cur.append(v)
            if depth + 1 > len(best):
                best = cur.copy()
            if len(best) >= target:
                return True
            sub = cand & adj[v]
            if sub and expand(sub, depth + 1):
                return True
            cur.pop()
            cand &= ~(1 << v)
        return False

    if target > 0 and adj:
        expand((1 << len(adj)) - 1, 0)
    return best


def max_compatible_set(paths, lengths, n, in_s, internal, target):
    """Indices (ascending) of a maximum pairwise-compatible set of paths, or the first of size ``target``."""
    P = len(paths)
    if P == 0 or target <= 0:
        return np.zeros(0, dtype=np.int64)
    G = compatibility(paths, lengths, n, in_s, internal)
    order = np.argsort(-G.sum(axis=1), kind="stable")
    H = G[np.ix_(order, order)]
    adj = [_to_int(H[i]) for i in range(P)]
    chosen = max_clique(adj, target)
    return np.sort(order[chosen]).astype(np.int64)
