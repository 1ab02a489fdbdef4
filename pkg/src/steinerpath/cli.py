"""Command-line interface. Every command prints one JSON document on stdout.

Exit codes: 0 success, 1 audit violation or decision differing from
``--expect``, 2 input error, 3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import sys
import warnings

from . import audit as audit_mod
from .constructions import (
    complete_symmetric,
    example1,
    half_decomposition_digraph,
    tillson_decomposition,
    transitive_tournament,
)
from .digraph import Digraph, min_arc_cut, min_degrees, min_vertex_cut
from .gadgets import LinkageInstance, build_arc_gadget, build_internal_gadget
from .io import InputError, digraph_to_json, dumps, parse_digraph
from .packing import ResourceLimitError, TerminalSpec, max_packing, path_connectivity
from .symmetric import decide_kappa_at_least

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


def _read_digraph(path: str | None) -> Digraph:
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    return parse_digraph(text)


def _vertex(D: Digraph, token: str) -> int:
    token = token.strip()
    if D.names is not None and token in D.names:
        return D.names.index(token)
    try:
        v = int(token)
    except ValueError:
        raise InputError(f"unknown vertex {token!r}") from None
    if not 0 <= v < D.n:
        raise InputError(f"vertex {v} out of range 0..{D.n - 1}")
    return v


def _vertices(D: Digraph, text: str) -> list[int]:
    return [_vertex(D, t) for t in text.split(",") if t.strip()]


def _spec(D: Digraph, terminals: str, root: str) -> TerminalSpec:
    try:
        return TerminalSpec(_vertices(D, terminals), _vertex(D, root))
    except InputError:
        raise
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _checked(cert, D):
    problems = cert.violations(D)
    if problems:
        raise AssertionError("certificate failed validation: " + "; ".join(problems))
    return cert.to_json()


def cmd_compute(args) -> tuple[dict, int]:
    D = _read_digraph(args.input)
    if D.n < 2:
        raise InputError("compute needs at least 2 vertices")
    kappa, Q = min_vertex_cut(D)
    lam, cut = min_arc_cut(D)
    dout, din = min_degrees(D)
    ks = [args.k] if args.k is not None else list(range(2, D.n + 1))
    rows = []
    for k in ks:
        if not 2 <= k <= D.n:
            raise InputError(f"k must lie in 2..{D.n}, got {k}")
        row = {"k": k}
        for key, mode in (("kappa_p", "internal"), ("lambda_p", "arc")):
            value, spec = path_connectivity(D, k, mode, jobs=args.jobs)
            cert = max_packing(D, spec, mode)
            if cert.value != value:
                raise AssertionError("witness packing disagrees with the sweep minimum")
            row[key] = {"value": value, "witness": spec.to_json(), "certificate": _checked(cert, D)}
        rows.append(row)
    out = {
        "n": D.n,
        "arcs": len(D.arcs),
        "kappa": {"value": kappa, "vertex_cut": sorted(Q)},
        "lambda": {"value": lam, "arc_cut": sorted(list(a) for a in cut)},
        "delta_out": dout,
        "delta_in": din,
        "path_connectivity": rows,
    }
    return out, EXIT_OK


def cmd_packing(args) -> tuple[dict, int]:
    D = _read_digraph(args.input)
    spec = _spec(D, args.terminals, args.root)
    cert = max_packing(D, spec, args.mode)
    return _checked(cert, D), EXIT_OK


def cmd_decide(args) -> tuple[dict, int]:
    D = _read_digraph(args.input)
    spec = _spec(D, args.terminals, args.root)
    try:
        ok, cert = decide_kappa_at_least(
            D, spec, args.ell, deterministic=args.deterministic, jobs=args.jobs
        )
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out = {
        "decision": ok,
        "ell": args.ell,
        "S": list(spec.S),
        "r": spec.r,
        "certificate": _checked(cert, D) if cert is not None else None,
    }
    code = EXIT_OK
    if args.expect is not None and ok != (args.expect == "true"):
        code = EXIT_FAIL
    return out, code


def cmd_reduce(args) -> tuple[dict, int]:
    H = _read_digraph(args.input)
    ts = _vertices(H, args.terminals)
    if len(ts) != 4:
        raise InputError("--terminals needs exactly s1,t1,s2,t2")
    inst = LinkageInstance(H, *ts)
    try:
        if args.variant == "internal":
            out = build_internal_gadget(inst, args.k, args.ell).to_json()
        else:
            gadget, split = build_arc_gadget(inst, args.k, args.ell)
            out = gadget.to_json()
            out["split_map"] = {H.label(u): list(pair) for u, pair in sorted(split.items())}
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out["variant"] = args.variant
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dumps(out) + "\n")
    return out, EXIT_OK


def cmd_construct(args) -> tuple[dict, int]:
    kind = args.kind
    try:
        if kind == "complete":
            return digraph_to_json(complete_symmetric(args.n)), EXIT_OK
        if kind == "tillson":
            decomp = tillson_decomposition(args.n)
            return {"digraph": digraph_to_json(complete_symmetric(args.n)), "cycles": decomp.to_json()["cycles"]}, EXIT_OK
        if kind == "example1":
            return digraph_to_json(example1()), EXIT_OK
        if kind == "tournament":
            return digraph_to_json(transitive_tournament(args.n)), EXIT_OK
        if kind == "half":
            return digraph_to_json(half_decomposition_digraph(args.n)), EXIT_OK
    except (ValueError, NotImplementedError) as exc:
        raise InputError(str(exc)) from exc
    raise InputError(f"unknown construction {kind!r}")


def cmd_audit(args) -> tuple[dict, int]:
    claims = tuple(c.strip() for c in args.claims.split(",") if c.strip())
    for c in claims:
        if c not in audit_mod.CLAIM_GROUPS:
            raise InputError(f"unknown claim group {c!r}; choose from {','.join(audit_mod.CLAIM_GROUPS)}")
    if args.random:
        try:
            n_s, p_s, count_s, seed_s = args.random.split(",")
            n, p, count, seed = int(n_s), float(p_s), int(count_s), int(seed_s)
        except ValueError:
            raise InputError("--random expects n,p,count,seed") from None
        k = args.k if args.k is not None else min(3, n)
        reports = []
        for i in range(count):
            D = audit_mod.random_digraph(n, p, seed + i)
            reports.append(audit_mod.audit(D, k, claims, seed=seed + i).to_json())
        bad = sum(not r["passed"] for r in reports)
        return {"reports": reports, "violating_digraphs": bad}, EXIT_FAIL if bad else EXIT_OK
    D = _read_digraph(args.input)
    k = args.k if args.k is not None else min(3, D.n)
    try:
        report = audit_mod.audit(D, k, claims, seed=args.seed)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return report.to_json(), EXIT_OK if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--deterministic", action="store_true", default=True,
                        help="reproducible output (the default)")
    common.add_argument("--fast", dest="deterministic", action="store_false",
                        help="allow racy first-success parallel search")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="steinerpath", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="classical and path connectivity parameters")
    p.add_argument("--input", "-i")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("packing", parents=[common], help="maximum (S, r)-path packing")
    p.add_argument("--input", "-i")
    p.add_argument("--terminals", required=True)
    p.add_argument("--root", required=True)
    p.add_argument("--mode", choices=("internal", "arc"), default="internal")
    p.set_defaults(func=cmd_packing)

    p = sub.add_parser("decide-kappa", parents=[common], help="symmetric-digraph decision procedure")
    p.add_argument("--input", "-i")
    p.add_argument("--terminals", required=True)
    p.add_argument("--root", required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--expect", choices=("true", "false"))
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("reduce", parents=[common], help="build a reduction gadget from a linkage instance")
    p.add_argument("--variant", choices=("internal", "arc"), required=True)
    p.add_argument("--input", "-i")
    p.add_argument("--terminals", required=True, help="s1,t1,s2,t2")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--ell", type=int, default=2)
    p.add_argument("--out")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("construct", parents=[common], help="named digraphs")
    p.add_argument("kind", choices=("complete", "tillson", "example1", "tournament", "half"))
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("audit", parents=[common], help="check the connectivity inequalities")
    p.add_argument("--input", "-i")
    p.add_argument("--k", type=int)
    p.add_argument("--claims", default=",".join(audit_mod.CLAIM_GROUPS))
    p.add_argument("--random", metavar="N,P,COUNT,SEED")
    p.set_defaults(func=cmd_audit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "kind", None) in ("complete", "tillson", "tournament", "half") and args.n is None:
        parser.error(f"construct {args.kind} needs --n")
    with warnings.catch_warnings():
        warnings.simplefilter("always")
        warnings.showwarning = lambda msg, *a, **k: print(f"warning: {msg}", file=sys.stderr)
        try:
            out, code = args.func(args)
        except ResourceLimitError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_RESOURCE
        except (ValueError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
    sys.stdout.write(dumps(out) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
