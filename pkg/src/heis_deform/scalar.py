"""Scalar handling shared by every module.

Two scalar kinds are supported: exact rationals (:class:`fractions.Fraction`,
with plain ``int`` promoted on entry) and binary64 floats.  Zero tests are
exact for rationals and use a tolerance for floats.
"""
from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[Fraction, float]

DEFAULT_TOL = 1e-9


class ScalarModeError(ValueError):
    """Raised when exact and float scalars are mixed where that is not allowed."""


def as_scalar(x) -> Scalar:
    """Coerce ``x`` to a Fraction or a float.

    Integers and strings (``"p/q"``, ``"3"``, ``"0.25"``) become exact;
    floats stay floats.
    """
    t = type(x)
    if t is Fraction or t is float:
        return x
    if t is int:
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, numbers.Integral):
        return Fraction(int(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {x!r}") from exc
    if isinstance(x, numbers.Real):
        return float(x)
    raise TypeError(f"unsupported scalar type: {type(x).__name__}")


def is_exact(x) -> bool:
    return isinstance(x, (Fraction, int)) and not isinstance(x, bool)


def all_exact(values: Iterable) -> bool:
    return all(is_exact(v) for v in values)


def scalar_mode(values: Iterable) -> str:
    """Return ``"exact"`` or ``"float"`` for a homogeneous collection."""
    kinds = {"exact" if is_exact(v) else "float" for v in values}
    if len(kinds) > 1:
        raise ScalarModeError("mixed exact and float scalars")
    return kinds.pop() if kinds else "exact"


def is_zero(x: Scalar, tol: float = DEFAULT_TOL) -> bool:
    if is_exact(x):
        return x == 0
    return abs(x) <= tol


def sign(x: Scalar, tol: float = DEFAULT_TOL) -> int:
    """Sign of ``x`` as -1, 0 or +1; floats within ``tol`` of zero give 0."""
    if is_zero(x, tol):
        return 0
    return 1 if x > 0 else -1


def half(x: Scalar) -> Scalar:
    return Fraction(x, 2) if type(x) is int else x / 2


def close(x: Scalar, y: Scalar, tol: float = DEFAULT_TOL) -> bool:
    if is_exact(x) and is_exact(y):
        return x == y
    return abs(x - y) <= tol


def to_json(x: Scalar):
    """Exact scalars serialize as ``"p/q"`` strings, floats as numbers."""
    if is_exact(x):
        return str(Fraction(x))
    return float(x)
