"""numba kernels; same algorithms and visiting order as ``_numpy``."""
from __future__ import annotations

import numpy as np
from numba import njit

_DEBRUIJN_TABLE = np.array(
    [
        0, 1, 48, 2, 57, 49, 28, 3, 61, 58, 50, 42, 38, 29, 17, 4,
        62, 55, 59, 36, 53, 51, 43, 22, 45, 39, 33, 30, 24, 18, 12, 5,
        63, 47, 56, 27, 60, 41, 37, 16, 54, 35, 52, 21, 44, 32, 23, 11,
        46, 26, 40, 15, 34, 20, 31, 10, 25, 14, 19, 9, 13, 8, 7, 6,
    ],
    dtype=np.int64,
)


@njit(cache=True)
def _enumerate(indptr, indices, n, r, in_s, k, max_paths):
    cap = 64
    out = np.full((cap, max(n, 1)), -1, dtype=np.int64)
    lens = np.zeros(cap, dtype=np.int64)
    count = 0
    if k <= 1:
        out[0, 0] = r
        lens[0] = 1
        return out[:1], lens[:1], False
    stack = np.empty(n, dtype=np.int64)
    ptr = np.empty(n, dtype=np.int64)
    visited = np.zeros(n, dtype=np.bool_)
    depth = 0
    stack[0] = r
    ptr[0] = indptr[r]
    visited[r] = True
    covered = np.int64(in_s[r])
    while depth >= 0:
        u = stack[depth]
        p = ptr[depth]
        if p < indptr[u + 1]:
            ptr[depth] = p + 1
            w = indices[p]
            if visited[w]:
                continue
            c = covered + np.int64(in_s[w])
            if c == k:
                if count >= max_paths:
                    return out[:count], lens[:count], True
                if count == cap:
                    cap *= 2
                    grown = np.full((cap, max(n, 1)), -1, dtype=np.int64)
                    grown[:count] = out[:count]
                    out = grown
                    glens = np.zeros(cap, dtype=np.int64)
                    glens[:count] = lens[:count]
                    lens = glens
                for i in range(depth + 1):
                    out[count, i] = stack[i]
                out[count, depth + 1] = w
                lens[count] = depth + 2
                count += 1
                continue
            depth += 1
            stack[depth] = w
            ptr[depth] = indptr[w]
            visited[w] = True
            covered = c
        else:
            visited[u] = False
            covered -= np.int64(in_s[u])
            depth -= 1
    return out[:count], lens[:count], False


def enumerate_paths(indptr, indices, n, r, in_s, k, max_paths):
    paths, lengths, overflow = _enumerate(
        indptr, indices, np.int64(n), np.int64(r), np.asarray(in_s, dtype=np.uint8),
        np.int64(k), np.int64(max_paths),
    )
    return paths.copy(), lengths.copy(), bool(overflow)


@njit(cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return np.int64((x * np.uint64(0x0101010101010101)) >> np.uint64(56))


@njit(cache=True, inline="always")
def _lowbit_index(w, table):
    low = w & (~w + np.uint64(1))
    return table[np.int64((low * np.uint64(0x03F79D71B4CB0A89)) >> np.uint64(58))]


@njit(cache=True)
def _resources(paths, lengths, n, in_s, internal):
    P = paths.shape[0]
    width = n * n + (n if internal else 0)
    words = (width + 63) // 64
    R = np.zeros((P, words), dtype=np.uint64)
    for i in range(P):
        L = lengths[i]
        for j in range(L - 1):
            b = paths[i, j] * n + paths[i, j + 1]
            R[i, b >> 6] |= np.uint64(1) << np.uint64(b & 63)
        if internal:
            for j in range(L):
                v = paths[i, j]
                if in_s[v] == 0:
                    b = n * n + v
                    R[i, b >> 6] |= np.uint64(1) << np.uint64(b & 63)
    return R


@njit(cache=True)
def _compat_bits(R):
    P, words = R.shape
    W = (P + 63) // 64
    G = np.zeros((P, W), dtype=np.uint64)
    for i in range(P):
        for j in range(i + 1, P):
            ok = True
            for w in range(words):
                if R[i, w] & R[j, w]:
                    ok = False
                    break
            if ok:
                G[i, j >> 6] |= np.uint64(1) << np.uint64(j & 63)
                G[j, i >> 6] |= np.uint64(1) << np.uint64(i & 63)
    return G


@njit(cache=True)
def _permute_bits(G, order):
    P = order.shape[0]
    W = G.shape[1]
    H = np.zeros((P, W), dtype=np.uint64)
    for a in range(P):
        i = order[a]
        for b in range(P):
            j = order[b]
            if (G[i, j >> 6] >> np.uint64(j & 63)) & np.uint64(1):
                H[a, b >> 6] |= np.uint64(1) << np.uint64(b & 63)
    return H


@njit(cache=True)
def _degrees(G):
    P, W = G.shape
    deg = np.zeros(P, dtype=np.int64)
    for i in range(P):
        s = 0
        for w in range(W):
            s += _popcount(G[i, w])
        deg[i] = s
    return deg


@njit(cache=True)
def _any(bits):
    for w in range(bits.shape[0]):
        if bits[w]:
            return True
    return False


@njit(cache=True)
def _color_sort(adj, cand, order, colors, kmin, table):
    # greedy colouring; returns how many vertices were kept (colour >= kmin)
    W = cand.shape[0]
    uncolored = cand.copy()
    q = np.empty(W, dtype=np.uint64)
    m = 0
    color = 0
    while _any(uncolored):
        color += 1
        for w in range(W):
            q[w] = uncolored[w]
        for w in range(W):
            while q[w]:
                v = w * 64 + _lowbit_index(q[w], table)
                bit = np.uint64(1) << np.uint64(v & 63)
                q[w] &= ~bit
                uncolored[w] &= ~bit
                for x in range(w, W):
                    q[x] &= ~adj[v, x]
                if color >= kmin:
                    order[m] = v
                    colors[m] = color
                    m += 1
    return m


@njit(cache=True)
def _max_clique(adj, P, target, table):
    W = adj.shape[1]
    levels = min(target, P) + 1
    cand = np.zeros((levels, W), dtype=np.uint64)
    order = np.empty((levels, P), dtype=np.int64)
    colors = np.empty((levels, P), dtype=np.int64)
    pos = np.empty(levels, dtype=np.int64)
    cur = np.empty(levels, dtype=np.int64)
    best = np.empty(levels, dtype=np.int64)
    best_size = 0
    for v in range(P):
        cand[0, v >> 6] |= np.uint64(1) << np.uint64(v & 63)
    pos[0] = _color_sort(adj, cand[0], order[0], colors[0], 1, table) - 1
    depth = 0
    while depth >= 0:
        i = pos[depth]
        if i < 0 or depth + colors[depth, i] <= best_size:
            depth -= 1
            if depth >= 0:
                v = order[depth, pos[depth]]
                cand[depth, v >> 6] &= ~(np.uint64(1) << np.uint64(v & 63))
                pos[depth] -= 1
            continue
        v = order[depth, i]
        cur[depth] = v
        if depth + 1 > best_size:
            best_size = depth + 1
            for j in range(best_size):
                best[j] = cur[j]
        if best_size >= target:
            break
        nonempty = False
        for w in range(W):
            cand[depth + 1, w] = cand[depth, w] & adj[v, w]
            if cand[depth + 1, w]:
                nonempty = True
        if nonempty:
            kmin = best_size - (depth + 1) + 1
            m = _color_sort(adj, cand[depth + 1], order[depth + 1], colors[depth + 1], kmin, table)
            depth += 1
            pos[depth] = m - 1
        else:
            cand[depth, v >> 6] &= ~(np.uint64(1) << np.uint64(v & 63))
            pos[depth] -= 1
    return best[:best_size].copy()


def max_clique(adj, P, target):
    """Same search as ``_numpy.max_clique`` over a ``(P, W)`` uint64 bit matrix."""
    if P == 0 or target <= 0:
        return np.zeros(0, dtype=np.int64)
    return _max_clique(adj, np.int64(P), np.int64(target), _DEBRUIJN_TABLE)


def max_compatible_set(paths, lengths, n, in_s, internal, target):
    P = len(paths)
    if P == 0 or target <= 0:
        return np.zeros(0, dtype=np.int64)
    R = _resources(paths, lengths, np.int64(n), np.asarray(in_s, dtype=np.uint8), bool(internal))
    G = _compat_bits(R)
    order = np.argsort(-_degrees(G), kind="stable").astype(np.int64)
    H = _permute_bits(G, order)
    chosen = max_clique(H, P, target)
    return np.sort(order[chosen]).astype(np.int64)
