"""Deciding ``kappa^p_{S,r}(D) >= ell`` on symmetric digraphs.

For each labelled partition ``A_0, ..., A_ell`` of the arcs induced by ``S``
and each ``ell``-tuple of skeletons (orders of ``S`` starting at ``r``), the
arcs of ``A_i`` are used directly by path ``i`` and every other skeleton arc
``uv`` is routed through ``D - A[S]`` by a path whose interior avoids ``S``
and every other routed path.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Iterator, Sequence

from .digraph import Digraph, disjoint_paths, induced_arcs, is_symmetric
from .packing import PackingCertificate, TerminalSpec, is_path

Skeleton = tuple[int, ...]
ArcPartition = tuple[frozenset, ...]

DEFAULT_MAX_PAIRS = 16


def skeleton_of(P: Sequence[int], S: Iterable[int]) -> Skeleton:
    """The terminals of ``P`` in path order."""
    S = set(S)
    if not S <= set(P):
        raise ValueError(f"path {list(P)} misses terminals {sorted(S - set(P))}")
    return tuple(v for v in P if v in S)


def enumerate_skeletons(spec: TerminalSpec) -> list[Skeleton]:
    rest = [x for x in spec.S if x != spec.r]
    return [(spec.r,) + p for p in permutations(rest)]


def skeleton_arcs(skel: Skeleton) -> list[tuple[int, int]]:
    return [(skel[i], skel[i + 1]) for i in range(len(skel) - 1)]


def enumerate_partitions(arcs: Iterable[tuple[int, int]], ell: int) -> Iterator[ArcPartition]:
    """Every assignment of the (sorted) arcs to parts ``0..ell``, lexicographically."""
    if ell < 1:
        raise ValueError(f"ell must be at least 1, got {ell}")
    arcs = sorted(arcs)
    for labels in product(range(ell + 1), repeat=len(arcs)):
        parts: list[set] = [set() for _ in range(ell + 1)]
        for a, lab in zip(arcs, labels):
            parts[lab].add(a)
        yield tuple(frozenset(p) for p in parts)


@dataclass(frozen=True)
class RoutingRequest:
    pairs: tuple[tuple[int, int], ...]
    forbidden: frozenset = frozenset()


def _induced_paths(D: Digraph, s: int, t: int, blocked: set[int], max_len: int) -> Iterator[tuple[int, ...]]:
    """Chordless ``s``-``t`` paths with interior outside ``blocked``, shortest first."""
    out = D.out_neighbors
    arcs = D.arcs
    for length in range(1, max_len + 1):
        path = [s]
        on = {s}

        def dfs(u: int) -> Iterator[tuple[int, ...]]:
            if len(path) == length:
                if (u, t) in arcs and not any((x, t) in arcs for x in path[:-1]):
                    yield tuple(path) + (t,)
                return
            for w in out[u]:
                if w in on or w in blocked or w == t:
                    continue
                # a chord from an earlier vertex means a shorter path exists
                if any((x, w) in arcs for x in path[:-1]):
                    continue
                path.append(w)
                on.add(w)
                yield from dfs(w)
                on.discard(w)
                path.pop()

        yield from dfs(s)


def _reaches(D: Digraph, s: int, t: int, blocked: set[int]) -> bool:
    if (s, t) in D.arcs:
        return True
    seen = {s}
    stack = [s]
    out = D.out_neighbors
    while stack:
        u = stack.pop()
        for w in out[u]:
            if w == t:
                return True
            if w not in seen and w not in blocked:
                seen.add(w)
                stack.append(w)
    return False


def route_disjoint(
    D: Digraph, request: RoutingRequest, *, max_pairs: int = DEFAULT_MAX_PAIRS, check: bool = True
) -> list[tuple[int, ...]] | None:
    """One path per pair, interiors avoiding ``forbidden``, all endpoints and each other.

    Exact backtracking: pairs are routed most-constrained first and candidate
    paths are chordless, shortest first. Returns ``None`` when infeasible.
    """
    if check and not is_symmetric(D):
        raise ValueError("routing requires a symmetric digraph")
    pairs = list(request.pairs)
    if len(pairs) > max_pairs:
        raise ValueError(f"{len(pairs)} routing pairs exceed the bound {max_pairs}")
    for s, t in pairs:
        if s == t:
            raise ValueError(f"pair ({s}, {t}) has equal endpoints")
    ends = {v for p in pairs for v in p}
    blocked = set(request.forbidden) | ends
    result: list[tuple[int, ...] | None] = [None] * len(pairs)
    todo = []
    for i, (s, t) in enumerate(pairs):
        if (s, t) in D.arcs:
            result[i] = (s, t)
        else:
            todo.append(i)
    max_len = D.n - 1
    failed: set = set()

    def solve(remaining: tuple[int, ...], used: frozenset) -> bool:
        if not remaining:
            return True
        key = (remaining, used)
        if key in failed:
            return False
        block = blocked | used
        # most constrained pair first: fewest short candidates
        scored = []
        for i in remaining:
            s, t = pairs[i]
            if not _reaches(D, s, t, block):
                failed.add(key)
                return False
            scored.append((_count_upto(_induced_paths(D, s, t, block, max_len), 3), i))
        scored.sort()
        i = scored[0][1]
        rest = tuple(j for j in remaining if j != i)
        s, t = pairs[i]
        for cand in _induced_paths(D, s, t, block, max_len):
            result[i] = cand
            if solve(rest, used | frozenset(cand[1:-1])):
                return True
        result[i] = None
        failed.add(key)
        return False

    if not solve(tuple(todo), frozenset()):
        return None
    return list(result)


def _count_upto(it, limit: int) -> int:
    n = 0
    for _ in it:
        n += 1
        if n >= limit:
            break
    return n


def _splice(skel: Skeleton, direct: frozenset, routes: dict) -> tuple[int, ...]:
    path = [skel[0]]
    for u, v in skeleton_arcs(skel):
        if (u, v) in direct:
            path.append(v)
        else:
            path.extend(routes.pop((u, v))[1:])
    return tuple(path)


def _require_symmetric(D: Digraph) -> None:
    if not is_symmetric(D):
        raise ValueError("the digraph is not symmetric")


def _check_partition(arcs_s: frozenset, ell: int, partition: ArcPartition) -> None:
    if len(partition) != ell + 1:
        raise ValueError(f"partition has {len(partition)} parts, expected {ell + 1}")
    seen: set = set()
    for part in partition:
        if seen & part:
            raise ValueError("partition parts overlap")
        seen |= part
    if seen != arcs_s:
        raise ValueError("partition does not cover exactly the arcs induced by S")


def decide_partition(
    D: Digraph, spec: TerminalSpec, ell: int, partition: ArcPartition, *, _cache: dict | None = None
) -> PackingCertificate | None:
    """``ell`` internally disjoint (S, r)-paths with ``A(P_i) & A[S] == A_i``, if they exist."""
    _require_symmetric(D)
    spec.check(D)
    arcs_s = induced_arcs(D, spec.S)
    _check_partition(arcs_s, ell, partition)
    return _decide_partition(D, spec, ell, partition, arcs_s, D.remove_arcs(arcs_s), _cache)


def _decide_partition(D, spec, ell, partition, arcs_s, routing_graph, cache):
    skeletons = enumerate_skeletons(spec)
    forbidden = frozenset(spec.S)
    per_part = []
    for i in range(1, ell + 1):
        part = partition[i]
        # A_i must be carried by the skeleton of path i
        options = [sk for sk in skeletons if part <= set(skeleton_arcs(sk))]
        if not options:
            return None
        per_part.append(options)
    for combo in product(*per_part):
        pairs = []
        for i, sk in enumerate(combo, start=1):
            pairs.extend(a for a in skeleton_arcs(sk) if a not in partition[i])
        key = tuple(pairs)
        if cache is not None and key in cache:
            routed = cache[key]
        else:
            routed = route_disjoint(
                routing_graph, RoutingRequest(key, forbidden), max_pairs=max(DEFAULT_MAX_PAIRS, len(key)), check=False
            )
            if cache is not None:
                cache[key] = routed
        if routed is None:
            continue
        paths = []
        cursor = 0
        for i, sk in enumerate(combo, start=1):
            need = [a for a in skeleton_arcs(sk) if a not in partition[i]]
            routes = {a: routed[cursor + j] for j, a in enumerate(need)}
            cursor += len(need)
            paths.append(_splice(sk, partition[i], routes))
        return PackingCertificate("internal", spec, tuple(paths))
    return None


def _sr_path_search(D: Digraph, spec: TerminalSpec) -> tuple[int, ...] | None:
    terminals = set(spec.S)
    out = D.out_neighbors
    path = [spec.r]
    on = {spec.r}

    def dfs(u: int, covered: int):
        if covered == len(terminals):
            return tuple(path)
        for w in out[u]:
            if w in on:
                continue
            path.append(w)
            on.add(w)
            found = dfs(w, covered + (w in terminals))
            if found:
                return found
            on.discard(w)
            path.pop()
        return None

    return dfs(spec.r, 1)


def _worker(args):
    D, spec, ell, partition, arcs_s = args
    return _decide_partition(D, spec, ell, partition, arcs_s, D.remove_arcs(arcs_s), {})


def decide_kappa_at_least(
    D: Digraph, spec: TerminalSpec, ell: int, *, deterministic: bool = True, jobs: int = 1
) -> tuple[bool, PackingCertificate | None]:
    """Decide whether ``D`` has ``ell`` internally disjoint (S, r)-paths.

    ``ell <= 1`` is a single path search and ``|S| = 2`` is a vertex-disjoint
    path flow; otherwise all labelled partitions of ``A[S]`` are swept in
    lexicographic order. With ``jobs > 1`` and ``deterministic=False`` the
    first partition to succeed in any worker wins.
    """
    _require_symmetric(D)
    spec.check(D)
    if ell <= 0:
        return True, PackingCertificate("internal", spec, ())
    if ell == 1:
        P = _sr_path_search(D, spec)
        if P is None:
            return False, None
        return True, PackingCertificate("internal", spec, (P,))
    if spec.k == 2:
        x = next(v for v in spec.S if v != spec.r)
        paths = disjoint_paths(D, spec.r, x, "internal")
        if len(paths) < ell:
            return False, None
        return True, PackingCertificate("internal", spec, tuple(sorted(paths[:ell])))
    arcs_s = induced_arcs(D, spec.S)
    routing_graph = D.remove_arcs(arcs_s)
    if jobs > 1:
        return _decide_parallel(D, spec, ell, arcs_s, deterministic, jobs)
    cache: dict = {}
    for partition in enumerate_partitions(arcs_s, ell):
        cert = _decide_partition(D, spec, ell, partition, arcs_s, routing_graph, cache)
        if cert is not None:
            return True, cert
    return False, None


def _decide_parallel(D, spec, ell, arcs_s, deterministic, jobs):
    from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait

    tasks = [(D, spec, ell, p, arcs_s) for p in enumerate_partitions(arcs_s, ell)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        if deterministic:
            for cert in pool.map(_worker, tasks, chunksize=16):
                if cert is not None:
                    pool.shutdown(cancel_futures=True)
                    return True, cert
            return False, None
        pending = {pool.submit(_worker, t) for t in tasks}
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                cert = fut.result()
                if cert is not None:
                    for f in pending:
                        f.cancel()
                    return True, cert
    return False, None


def brute_force_route(D: Digraph, request: RoutingRequest) -> list[tuple[int, ...]] | None:
    """Reference router: tries every combination of simple paths, one per pair."""
    ends = {v for p in request.pairs for v in p}
    blocked = set(request.forbidden) | ends
    options = []
    for s, t in request.pairs:
        cands = []
        stack = [(s,)]
        while stack:
            P = stack.pop()
            for w in D.out_neighbors[P[-1]]:
                if w == t:
                    cands.append(P + (t,))
                elif w not in P and w not in blocked:
                    stack.append(P + (w,))
        options.append(sorted(cands, key=lambda p: (len(p), p)))
    for combo in product(*options):
        interiors = [set(P[1:-1]) for P in combo]
        if all(not (interiors[i] & interiors[j]) for i in range(len(combo)) for j in range(i + 1, len(combo))):
            if all(is_path(D, P) for P in combo):
                return list(combo)
    return None
