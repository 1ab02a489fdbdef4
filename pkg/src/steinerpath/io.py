"""JSON formats.

Digraph: ``{"n": int, "arcs": [[tail, head], ...], "names": [str, ...]?}``.
Serialization is canonical: arcs sorted, keys sorted, no whitespace variance.
"""
from __future__ import annotations

import json
import warnings

from .digraph import Digraph


class InputError(ValueError):
    """Malformed or invalid input document."""


def digraph_to_json(D: Digraph) -> dict:
    obj = {"n": D.n, "arcs": [list(a) for a in D.sorted_arcs()]}
    if D.names is not None:
        obj["names"] = list(D.names)
    return obj


def digraph_from_json(obj) -> Digraph:
    """Accepts a digraph object, or any object carrying one under ``"digraph"``."""
    if isinstance(obj, dict) and "digraph" in obj and "n" not in obj:
        obj = obj["digraph"]
    if not isinstance(obj, dict) or "n" not in obj or "arcs" not in obj:
        raise InputError('digraph JSON needs "n" and "arcs"')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InputError(f'"n" must be a non-negative integer, got {n!r}')
    pairs = []
    for a in obj["arcs"]:
        if (
            not isinstance(a, (list, tuple))
            or len(a) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in a)
        ):
            raise InputError(f"arc {a!r} is not a pair of integers")
        pairs.append((a[0], a[1]))
    if len(set(pairs)) != len(pairs):
        warnings.warn(f"{len(pairs) - len(set(pairs))} duplicate arcs dropped", stacklevel=2)
    names = obj.get("names")
    try:
        return Digraph(n, pairs, names)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def parse_digraph(text: str) -> Digraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
    return digraph_from_json(obj)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def serialize_digraph(D: Digraph) -> str:
    return dumps(digraph_to_json(D))
