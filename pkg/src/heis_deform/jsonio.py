"""JSON encodings for pairs, parameter points, verdicts and probe reports.

Rational literals are strings (``"3/4"``); JSON floats put the whole object
in float mode.  JSON integers are exact and fit either mode.  Mixing rational
strings with floats in one object is an error.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .heis import HeisPoint
from .homs import HeisHom
from .oracle import ProbeReport
from .parametrize import CanonicalCoords, ParamPoint, UVPair
from .properness import Geometry, HomPair, ProperVerdict
from .scalar import ScalarModeError, to_json


class InputError(ValueError):
    """Malformed or inconsistent JSON input."""


def _leaves(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            yield from _leaves(v)
    elif isinstance(obj, (list, tuple)):
        for v in obj:
            yield from _leaves(v)
    else:
        yield obj


def detect_mode(obj, require_exact: bool = False) -> str:
    leaves = list(_leaves(obj))
    has_float = any(isinstance(v, float) for v in leaves)
    has_str = any(isinstance(v, str) for v in leaves)
    if has_float and has_str:
        raise ScalarModeError("mixed rational strings and float literals")
    if has_float and require_exact:
        raise ScalarModeError("exact mode requires rational inputs (use \"p/q\" strings or integers)")
    return "float" if has_float else "exact"


def _scalar(v, mode: str):
    if isinstance(v, bool) or not isinstance(v, (int, float, str)):
        raise InputError(f"expected a number or rational string, got {v!r}")
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational literal {v!r}") from exc
    if mode == "float":
        return float(v)
    return Fraction(v)


def _vector(v, length: int, mode: str, what: str) -> tuple:
    if not isinstance(v, (list, tuple)) or len(v) != length:
        raise InputError(f"{what} must be a list of {length} entries")
    return tuple(_scalar(x, mode) for x in v)


def _matrix(v, mode: str, what: str) -> tuple:
    if not isinstance(v, (list, tuple)) or len(v) != 2:
        raise InputError(f"{what} must be a 2x2 nested list")
    return tuple(_vector(r, 2, mode, what) for r in v)


def hom_from_json(obj, mode: str) -> HeisHom:
    if not isinstance(obj, dict) or "gamma1" not in obj or "gamma2" not in obj:
        raise InputError('a homomorphism needs "gamma1" and "gamma2"')
    return HeisHom(HeisPoint(*_vector(obj["gamma1"], 3, mode, "gamma1")),
                   HeisPoint(*_vector(obj["gamma2"], 3, mode, "gamma2")))


def pair_from_json(obj, require_exact: bool = False) -> HomPair:
    if not isinstance(obj, dict) or "rho" not in obj or "rho_prime" not in obj:
        raise InputError('a pair needs "rho" and "rho_prime"')
    sub = {"rho": obj["rho"], "rho_prime": obj["rho_prime"]}
    mode = detect_mode(sub, require_exact)
    return HomPair(hom_from_json(obj["rho"], mode), hom_from_json(obj["rho_prime"], mode))


def param_from_json(obj, require_exact: bool = False) -> ParamPoint:
    if not isinstance(obj, dict) or not {"S", "t", "c"} <= obj.keys():
        raise InputError('a parameter point needs "S", "t" and "c"')
    sub = {k: obj[k] for k in ("S", "t", "c")}
    mode = detect_mode(sub, require_exact)
    return ParamPoint(_matrix(obj["S"], mode, "S"), _vector(obj["t"], 4, mode, "t"),
                      _vector(obj["c"], 4, mode, "c"))


def point_to_json(g: HeisPoint) -> list:
    return [to_json(x) for x in g]


def matrix_to_json(M) -> list:
    return [[to_json(x) for x in row] for row in M]


def hom_to_json(rho: HeisHom) -> dict:
    return {"gamma1": point_to_json(rho.g1), "gamma2": point_to_json(rho.g2)}


def pair_to_json(p: HomPair) -> dict:
    return {"rho": hom_to_json(p.rho), "rho_prime": hom_to_json(p.rho_prime)}


def param_to_json(p: ParamPoint) -> dict:
    return {"S": matrix_to_json(p.S), "t": [to_json(x) for x in p.t], "c": [to_json(x) for x in p.c]}


def uv_to_json(uv: UVPair) -> dict:
    return {"U": matrix_to_json(uv.U), "V": matrix_to_json(uv.V)}


def _component(comp):
    return comp if isinstance(comp, str) else list(comp)


def verdict_to_json(v: ProperVerdict) -> dict:
    return {
        "cond_a": v.cond_a,
        "cond_b": v.cond_b,
        "proper": v.proper,
        "cocompact": v.cocompact,
        "decided": v.decided,
        "component": _component(v.component),
        "torus_matrix": matrix_to_json(v.torus_matrix),
        "fiber_value": to_json(v.fiber_value),
    }


def geometry_to_json(g: Geometry) -> dict:
    return {
        "torus_matrix": matrix_to_json(g.torus_matrix),
        "fiber_length": to_json(g.fiber_length),
        "orientation": _component(g.orientation),
    }


def canonical_to_json(cc: CanonicalCoords) -> dict:
    return {
        "S": matrix_to_json(cc.S),
        "t0": to_json(cc.t0),
        "t": [to_json(x) for x in cc.t],
        "representative": pair_to_json(cc.representative),
    }


def report_to_json(r: ProbeReport) -> dict:
    return {
        "R": to_json(r.R),
        "N": list(r.N),
        "counts": list(r.counts),
        "verdict": r.verdict,
        "witnesses": [list(w) for w in sorted(r.witnesses)],
    }


def load(source: str):
    """Parse inline JSON (text starting with ``{``), ``-`` for stdin, or a file path."""
    import sys

    text = source
    if source == "-":
        text = sys.stdin.read()
    elif not source.lstrip().startswith("{"):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from exc
