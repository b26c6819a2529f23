"""One-parameter families of pairs whose entries are affine in the parameter."""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .heis import HeisPoint
from .homs import HeisHom
from .linalg import det2, sub
from .properness import HomPair, is_proper
from .scalar import DEFAULT_TOL


class FamilyError(ValueError):
    """The family is not affine in a single parameter, or is otherwise malformed."""


@dataclass(frozen=True)
class Affine:
    const: object
    coef: object

    def __call__(self, s):
        return self.const + self.coef * s


_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:/\d+)?"


def parse_affine(text, param: str = "c") -> Affine:
    """Parse ``"3"``, ``"1/2"``, ``"c"``, ``"2 - c/2"``, ``"1 + 3*c"`` and the like."""
    if isinstance(text, bool):
        raise FamilyError("booleans are not entries")
    if isinstance(text, (int, float)):
        v = text if isinstance(text, float) else Fraction(text)
        return Affine(v, 0 * v)
    if not isinstance(text, str):
        raise FamilyError(f"unsupported entry {text!r}")
    name = re.escape(param)
    term = re.compile(
        rf"\s*([+-]?)\s*(?:({_NUM})\s*\*?\s*({name})(?:\s*/\s*(\d+))?|({name})(?:\s*/\s*(\d+))?|({_NUM}))\s*"
    )
    const, coef = Fraction(0), Fraction(0)
    pos, s = 0, text.strip()
    if not s:
        raise FamilyError("empty entry")
    while pos < len(s):
        mt = term.match(s, pos)
        if not mt or mt.end() == pos or (pos > 0 and not mt.group(1)):
            raise FamilyError(f"entry {text!r} is not affine in {param!r}")
        sgn = -1 if mt.group(1) == "-" else 1
        if mt.group(3):
            coef += sgn * Fraction(mt.group(2)) / int(mt.group(4) or 1)
        elif mt.group(5):
            coef += sgn * Fraction(1, int(mt.group(6) or 1))
        else:
            const += sgn * Fraction(mt.group(7))
        pos = mt.end()
    return Affine(const, coef)


@dataclass(frozen=True)
class Family:
    rho: tuple  # two triples of Affine
    rho_prime: tuple
    exact: bool = True
    param: str = "c"

    def at(self, s) -> HomPair:
        def hom(images):
            return HeisHom(*(HeisPoint(*(e(s) for e in img)) for img in images))
        return HomPair(hom(self.rho), hom(self.rho_prime))


def family_from_json(obj) -> Family:
    if not isinstance(obj, dict) or "rho" not in obj or "rho_prime" not in obj:
        raise FamilyError('a family needs "rho" and "rho_prime"')
    param = obj.get("param", "c")
    leaves = []

    def images(h):
        if not isinstance(h, dict) or "gamma1" not in h or "gamma2" not in h:
            raise FamilyError('each homomorphism needs "gamma1" and "gamma2"')
        out = []
        for key in ("gamma1", "gamma2"):
            img = h[key]
            if not isinstance(img, list) or len(img) != 3:
                raise FamilyError(f"{key} must have three entries")
            leaves.extend(img)
            out.append(tuple(parse_affine(e, param) for e in img))
        return tuple(out)

    rho, rho_prime = images(obj["rho"]), images(obj["rho_prime"])
    has_float = any(isinstance(v, float) for v in leaves)
    if has_float:
        def f(img):
            return tuple(tuple(Affine(float(e.const), float(e.coef)) for e in g) for g in img)
        rho, rho_prime = f(rho), f(rho_prime)
    return Family(rho, rho_prime, exact=not has_float, param=param)


EXAMPLE9 = {
    "param": "c",
    "rho": {"gamma1": ["2", "c", "0"], "gamma2": ["1", "2", "0"]},
    "rho_prime": {"gamma1": ["1", "c", "0"], "gamma2": ["0", "1", "0"]},
    "range": ["0", "1"],
    "steps": 5,
}
PRESETS = {"example9": EXAMPLE9}


def sample_values(lo, hi, steps: int, exact: bool = True) -> list:
    if steps < 1:
        raise FamilyError("steps must be >= 1")
    if exact:
        lo, hi = Fraction(lo), Fraction(hi)
    else:
        lo, hi = float(lo), float(hi)
    if steps == 1:
        return [lo]
    return [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]


def _quadratic(fn):
    # Both criterion quantities are polynomials of degree <= 2 in the parameter.
    f0, f1, fm = fn(0), fn(1), fn(-1)
    return f0, (f1 - fm) / 2, (f1 + fm) / 2 - f0


def _roots(coeffs, lo, hi, exact: bool, tol: float):
    c0, c1, c2 = coeffs
    zero = (lambda x: x == 0) if exact else (lambda x: abs(x) <= tol)
    if zero(c2):
        if zero(c1):
            return "everywhere" if zero(c0) else []
        roots = [-c0 / c1]
    else:
        disc = c1 * c1 - 4 * c2 * c0
        if (disc < 0) if exact else (disc < -tol):
            return []
        if exact:
            num, den = disc.numerator, disc.denominator
            rn, rd = math.isqrt(num), math.isqrt(den)
            sq = Fraction(rn, rd) if rn * rn == num and rd * rd == den else math.sqrt(disc)
        else:
            sq = math.sqrt(max(disc, 0.0))
        roots = sorted({(-c1 - sq) / (2 * c2), (-c1 + sq) / (2 * c2)})
    return [r for r in roots if lo <= r <= hi]


def crossings(fam: Family, lo, hi, tol: float = DEFAULT_TOL) -> dict:
    """Parameter values in ``[lo, hi]`` where either criterion determinant vanishes."""
    def torus(s):
        p = fam.at(s)
        return det2(sub(p.A, p.A_prime))

    def fiber(s):
        p = fam.at(s)
        return p.rho.det_A - p.rho_prime.det_A

    return {
        "cond_a": _roots(_quadratic(torus), lo, hi, fam.exact, tol),
        "cond_b": _roots(_quadratic(fiber), lo, hi, fam.exact, tol),
    }


def family_table(fam: Family, values, tol: float = DEFAULT_TOL) -> list:
    rows = []
    for s in values:
        v = is_proper(fam.at(s), tol)
        rows.append({
            "param": s,
            "proper": v.proper,
            "decided": v.decided,
            "fiber_value": v.fiber_value,
            "fiber_length": abs(v.fiber_value) if v.proper else None,
            "torus_matrix": v.torus_matrix,
            "component": v.component,
        })
    return rows

