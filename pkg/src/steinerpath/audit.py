"""Auditors for the inequalities relating path connectivity to degrees,
classical connectivity and complements.

Every parameter is recomputed with the brute-force packing solver; the
symmetric-digraph decision procedure is never consulted.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .digraph import Digraph, complement, min_arc_cut, min_degrees, min_vertex_cut
from .packing import TerminalSpec, path_connectivity


@dataclass
class ClaimResult:
    claim: str
    k: int | None
    holds: bool
    asserted: bool = True
    values: dict = field(default_factory=dict)
    witness: dict | None = None

    @property
    def violated(self) -> bool:
        return self.asserted and not self.holds

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "k": self.k,
            "holds": self.holds,
            "asserted": self.asserted,
            "values": self.values,
            "witness": self.witness,
        }


@dataclass
class AuditReport:
    n: int
    arcs: int
    ks: list[int]
    claims: list[ClaimResult] = field(default_factory=list)

    @property
    def violations(self) -> list[ClaimResult]:
        return [c for c in self.claims if c.violated]

    @property
    def passed(self) -> bool:
        return not self.violations

    def extend(self, other: "AuditReport") -> "AuditReport":
        self.ks = sorted(set(self.ks) | set(other.ks))
        self.claims.extend(other.claims)
        return self

    def to_json(self) -> dict:
        return {
            "digraph": {"n": self.n, "arcs": self.arcs},
            "ks": self.ks,
            "passed": self.passed,
            "claims": [c.to_json() for c in self.claims],
        }


@lru_cache(maxsize=2048)
def _param(D: Digraph, k: int, mode: str) -> tuple[int, TerminalSpec]:
    return path_connectivity(D, k, mode)


def kappa_p(D: Digraph, k: int) -> tuple[int, TerminalSpec]:
    return _param(D, k, "internal")


def lambda_p(D: Digraph, k: int) -> tuple[int, TerminalSpec]:
    return _param(D, k, "arc")


def _w(spec: TerminalSpec, value: int, label: str) -> dict:
    return {label: {"S": list(spec.S), "r": spec.r, "value": value}}


def _new_report(D: Digraph, ks) -> AuditReport:
    return AuditReport(D.n, len(D.arcs), sorted(ks))


def random_digraph(n: int, p: float, seed: int) -> Digraph:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"arc probability must lie in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    mask = rng.random((n, n)) < p
    return Digraph(n, ((u, v) for u in range(n) for v in range(n) if u != v and mask[u, v]))


def random_spanning_subdigraph(D: Digraph, seed: int, keep: float = 0.5) -> Digraph:
    rng = np.random.default_rng(seed)
    arcs = D.sorted_arcs()
    mask = rng.random(len(arcs)) < keep
    return Digraph(D.n, (a for a, m in zip(arcs, mask) if m), D.names)


def audit_monotonicity(D: Digraph, kmax: int, seed: int = 0) -> AuditReport:
    """Monotonicity in ``k`` and under arc deletion, and the degree chain."""
    if not 2 <= kmax <= D.n:
        raise ValueError(f"kmax must lie in 2..{D.n}, got {kmax}")
    ks = list(range(2, kmax + 1))
    report = _new_report(D, ks)
    lam = {k: lambda_p(D, k) for k in ks}
    for k in ks[:-1]:
        (a, sa), (b, sb) = lam[k], lam[k + 1]
        ok = b <= a
        report.claims.append(ClaimResult(
            "lambda_nonincreasing_in_k", k, ok,
            values={"lambda_p_k": a, "lambda_p_k+1": b},
            witness=None if ok else {**_w(sa, a, "k"), **_w(sb, b, "k+1")},
        ))
    sub = random_spanning_subdigraph(D, seed)
    for k in ks:
        for name, fn in (("kappa", kappa_p), ("lambda", lambda_p)):
            full, sfull = fn(D, k)
            part, spart = fn(sub, k)
            ok = part <= full
            report.claims.append(ClaimResult(
                f"{name}_spanning_subdigraph_monotone", k, ok,
                values={"full": full, "subdigraph": part, "subdigraph_arcs": len(sub.arcs), "seed": seed},
                witness=None if ok else {
                    **_w(sfull, full, "full"), **_w(spart, part, "subdigraph"),
                    "subdigraph_arcs": [list(a) for a in sub.sorted_arcs()],
                },
            ))
    dmin = min(min_degrees(D))
    for k in ks:
        kv, ksp = kappa_p(D, k)
        lv, lsp = lam[k]
        ok = kv <= lv <= dmin
        report.claims.append(ClaimResult(
            "kappa_le_lambda_le_min_degree", k, ok,
            values={"kappa_p_k": kv, "lambda_p_k": lv, "min_degree": dmin},
            witness=None if ok else {**_w(ksp, kv, "kappa"), **_w(lsp, lv, "lambda")},
        ))
    return report


def audit_upper_bounds(D: Digraph, k: int) -> AuditReport:
    """``kappa^p_k <= kappa`` (when ``n >= kappa + k``) and ``kappa^p_k <= lambda``."""
    if not 2 <= k <= D.n:
        raise ValueError(f"k must lie in 2..{D.n}, got {k}")
    report = _new_report(D, [k])
    kappa, Q = min_vertex_cut(D)
    lam, cut = min_arc_cut(D)
    kv, spec = kappa_p(D, k)
    applies = D.n >= kappa + k
    ok = kv <= kappa
    report.claims.append(ClaimResult(
        "kappa_p_le_vertex_connectivity", k, ok, asserted=applies,
        values={"kappa_p_k": kv, "kappa": kappa, "condition_applies": applies},
        witness=None if ok else {**_w(spec, kv, "kappa_p"), "vertex_cut": sorted(Q)},
    ))
    ok = kv <= lam
    report.claims.append(ClaimResult(
        "kappa_p_le_arc_connectivity", k, ok,
        values={"kappa_p_k": kv, "lambda": lam},
        witness=None if ok else {**_w(spec, kv, "kappa_p"), "arc_cut": sorted(list(a) for a in cut)},
    ))
    return report


def audit_classical(D: Digraph) -> AuditReport:
    """At ``k = 2`` the path parameters equal vertex and arc connectivity."""
    report = _new_report(D, [2])
    kappa, _ = min_vertex_cut(D)
    lam, _ = min_arc_cut(D)
    for name, (value, spec), classical in (
        ("kappa_p_2_equals_kappa", kappa_p(D, 2), kappa),
        ("lambda_p_2_equals_lambda", lambda_p(D, 2), lam),
    ):
        ok = value == classical
        report.claims.append(ClaimResult(
            name, 2, ok, values={"path": value, "classical": classical},
            witness=None if ok else _w(spec, value, "path"),
        ))
    return report


def audit_nordhaus_gaddum(D: Digraph, k: int) -> AuditReport:
    """Sum and product bounds for ``lambda^p_k`` of a digraph and its complement.

    The bounds are asserted for ``n >= 7`` only and reported otherwise.
    """
    if not 2 <= k <= D.n:
        raise ValueError(f"k must lie in 2..{D.n}, got {k}")
    report = _new_report(D, [k])
    a, sa = lambda_p(D, k)
    b, sb = lambda_p(complement(D), k)
    n = D.n
    asserted = n >= 7
    cap = ((n - 1) * (n - 1)) // 4
    for name, value, upper in (("ng_sum", a + b, n - 1), ("ng_product", a * b, cap)):
        ok = 0 <= value <= upper
        report.claims.append(ClaimResult(
            name, k, ok, asserted=asserted,
            values={"lambda_p_k": a, "complement_lambda_p_k": b, "value": value, "upper": upper},
            witness=None if ok else {**_w(sa, a, "digraph"), **_w(sb, b, "complement")},
        ))
    return report


CLAIM_GROUPS = ("mono", "bounds", "ng", "classical")


def audit(D: Digraph, k: int, claims=CLAIM_GROUPS, seed: int = 0) -> AuditReport:
    report = _new_report(D, [k])
    for group in claims:
        if group == "mono":
            report.extend(audit_monotonicity(D, k, seed))
        elif group == "bounds":
            report.extend(audit_upper_bounds(D, k))
        elif group == "ng":
            report.extend(audit_nordhaus_gaddum(D, k))
        elif group == "classical":
            report.extend(audit_classical(D))
        else:
            raise ValueError(f"unknown claim group {group!r}")
    return report
