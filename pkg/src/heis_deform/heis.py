"""The Heisenberg group G, its Lie algebra and the exp/log/adjoint maps.

Group elements use bracket coordinates: ``HeisPoint(a, b, c)`` stands for the
unipotent matrix ``[[1, a, c], [0, 1, b], [0, 0, 1]]``.  Lie algebra elements
are coordinates ``(x, y, z)`` in the basis ``e1, e2, e3`` with ``[e1, e2] = e3``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .scalar import Scalar, as_scalar, close, half, is_exact, DEFAULT_TOL


@dataclass(frozen=True, slots=True)
class HeisPoint:
    a: Scalar
    b: Scalar
    c: Scalar

    def __post_init__(self):
        object.__setattr__(self, "a", as_scalar(self.a))
        object.__setattr__(self, "b", as_scalar(self.b))
        object.__setattr__(self, "c", as_scalar(self.c))

    def __iter__(self) -> Iterator[Scalar]:
        return iter((self.a, self.b, self.c))

    def __mul__(self, other: "HeisPoint") -> "HeisPoint":
        return mul(self, other)

    @property
    def exact(self) -> bool:
        return is_exact(self.a) and is_exact(self.b) and is_exact(self.c)

    def matrix(self):
        """The 3x3 unipotent matrix as nested tuples."""
        one, zero = (1, 0)
        return ((one, self.a, self.c), (zero, one, self.b), (zero, zero, one))

    def isclose(self, other: "HeisPoint", tol: float = DEFAULT_TOL) -> bool:
        return all(close(x, y, tol) for x, y in zip(self, other))


@dataclass(frozen=True, slots=True)
class LieVector:
    x: Scalar
    y: Scalar
    z: Scalar

    def __post_init__(self):
        object.__setattr__(self, "x", as_scalar(self.x))
        object.__setattr__(self, "y", as_scalar(self.y))
        object.__setattr__(self, "z", as_scalar(self.z))

    def __iter__(self) -> Iterator[Scalar]:
        return iter((self.x, self.y, self.z))

    def __add__(self, other: "LieVector") -> "LieVector":
        return LieVector(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "LieVector") -> "LieVector":
        return LieVector(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "LieVector":
        return LieVector(-self.x, -self.y, -self.z)

    def scale(self, s) -> "LieVector":
        s = as_scalar(s)
        return LieVector(s * self.x, s * self.y, s * self.z)

    def isclose(self, other: "LieVector", tol: float = DEFAULT_TOL) -> bool:
        return all(close(x, y, tol) for x, y in zip(self, other))


IDENTITY = HeisPoint(0, 0, 0)
GAMMA1 = HeisPoint(1, 0, 0)
GAMMA2 = HeisPoint(0, 1, 0)
E1 = LieVector(1, 0, 0)
E2 = LieVector(0, 1, 0)
E3 = LieVector(0, 0, 1)


def mul(g: HeisPoint, h: HeisPoint) -> HeisPoint:
    return HeisPoint(g.a + h.a, g.b + h.b, g.c + h.c + g.a * h.b)


def inv(g: HeisPoint) -> HeisPoint:
    return HeisPoint(-g.a, -g.b, g.a * g.b - g.c)


def power(g: HeisPoint, m: int) -> HeisPoint:
    """``g**m`` in closed form, valid for negative ``m`` too."""
    return HeisPoint(m * g.a, m * g.b, m * g.c + half(m * (m - 1) * g.a * g.b))


def commutator(g: HeisPoint, h: HeisPoint) -> HeisPoint:
    """Group commutator ``g h g^-1 h^-1``."""
    return mul(mul(g, h), mul(inv(g), inv(h)))


def log(g: HeisPoint) -> LieVector:
    return LieVector(g.a, g.b, g.c - half(g.a * g.b))


def exp(X: LieVector) -> HeisPoint:
    return HeisPoint(X.x, X.y, X.z + half(X.x * X.y))


def bracket(X: LieVector, Y: LieVector) -> LieVector:
    return LieVector(0, 0, X.x * Y.y - X.y * Y.x)


def adjoint(g: HeisPoint, X: LieVector) -> LieVector:
    """``Ad_g X``, i.e. ``log(g exp(X) g^-1)``."""
    return LieVector(X.x, X.y, X.z + g.a * X.y - g.b * X.x)


def adjoint_matrix(g: HeisPoint):
    """Matrix of ``Ad_g`` in the basis ``(e1, e2, e3)`` (rows)."""
    one, zero = (as_scalar(1), as_scalar(0)) if g.exact else (1.0, 0.0)
    return ((one, zero, zero), (zero, one, zero), (-g.b, g.a, one))
