"""Coordinates on the space of proper pairs and on its quotient by conjugation.

``alpha`` maps ``(S, t0, t1, t2, t3, c1, c2, c1', c2')`` with ``det S != 0``
and ``t0 != 0`` to a proper pair.  It factors through the matrix pair map
``alpha0(U, V) = ((UV + U)/2, (UV - U)/2)``, where
``V = ((t0 + t3, t1), (t2, t0 - t3))``; ``omega(A, A') = (A - A', (A - A')^-1 (A + A'))``
inverts it.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import heis
from .heis import HeisPoint
from .homs import HeisHom
from .linalg import add, det2, inv2, matmul, solve2, sub, trace
from .properness import HomPair, NotProperError, is_proper
from .scalar import DEFAULT_TOL, Scalar, as_scalar, half, is_zero


class DegenerateStratumError(ValueError):
    """Proper pair with ``det A == 0`` or ``det A' == 0``; no canonical c-normal form."""


@dataclass(frozen=True)
class ParamPoint:
    S: tuple
    t: tuple  # (t0, t1, t2, t3)
    c: tuple  # (c1, c2, c1', c2')

    def __post_init__(self):
        S = tuple(tuple(as_scalar(x) for x in row) for row in self.S)
        t = tuple(as_scalar(x) for x in self.t)
        c = tuple(as_scalar(x) for x in self.c)
        if len(S) != 2 or any(len(r) != 2 for r in S) or len(t) != 4 or len(c) != 4:
            raise ValueError("ParamPoint needs a 2x2 S, four t's and four c's")
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "c", c)

    def validate(self, tol: float = DEFAULT_TOL) -> "ParamPoint":
        if is_zero(det2(self.S), tol):
            raise ValueError("S must be invertible")
        if is_zero(self.t[0], tol):
            raise ValueError("t0 must be nonzero")
        return self

    @property
    def V(self):
        return v_from_t(self.t)


@dataclass(frozen=True)
class UVPair:
    U: tuple
    V: tuple


@dataclass(frozen=True)
class CanonicalCoords:
    S: tuple
    t0: Scalar
    t: tuple  # (t1, t2, t3)
    representative: HomPair


def v_from_t(t) -> tuple:
    t0, t1, t2, t3 = t
    return ((t0 + t3, t1), (t2, t0 - t3))


def t_from_v(V) -> tuple:
    (p, q), (r, s) = V
    return (half(p + s), q, r, half(p - s))


def alpha(p: ParamPoint, tol: float = DEFAULT_TOL) -> HomPair:
    """Generator images of the proper pair with parameters ``p``, as displayed formulas."""
    p.validate(tol)
    (s0, s1), (s2, s3) = p.S
    t0, t1, t2, t3 = p.t
    c1, c2, c1p, c2p = p.c
    rho = HeisHom.from_entries(
        (half(s0 * (t0 + t3) + s0 + s1 * t2), half(s2 * (t0 + t3) + s2 + s3 * t2), c1),
        (half(s1 * (t0 - t3) + s1 + s0 * t1), half(s3 * (t0 - t3) + s3 + s2 * t1), c2),
    )
    rho_prime = HeisHom.from_entries(
        (half(s0 * (t0 + t3) - s0 + s1 * t2), half(s2 * (t0 + t3) - s2 + s3 * t2), c1p),
        (half(s1 * (t0 - t3) - s1 + s0 * t1), half(s3 * (t0 - t3) - s3 + s2 * t1), c2p),
    )
    return HomPair(rho, rho_prime)


def omega(p: HomPair, tol: float = DEFAULT_TOL) -> UVPair:
    U = sub(p.A, p.A_prime)
    if is_zero(det2(U), tol):
        raise NotProperError("A - A' is singular")
    return UVPair(U, matmul(inv2(U, tol), add(p.A, p.A_prime)))


def alpha0(uv: UVPair) -> tuple:
    UV = matmul(uv.U, uv.V)
    A = tuple(tuple(half(x + u) for x, u in zip(r, ru)) for r, ru in zip(UV, uv.U))
    A_prime = tuple(tuple(half(x - u) for x, u in zip(r, ru)) for r, ru in zip(UV, uv.U))
    return A, A_prime


def pair_from_matrices(A, A_prime, c=(0, 0, 0, 0)) -> HomPair:
    """Assemble a pair from its abelianized matrices and the four c-entries."""
    c1, c2, c1p, c2p = c
    return HomPair(
        HeisHom.from_entries((A[0][0], A[1][0], c1), (A[0][1], A[1][1], c2)),
        HeisHom.from_entries((A_prime[0][0], A_prime[1][0], c1p), (A_prime[0][1], A_prime[1][1], c2p)),
    )


def coords(p: HomPair, tol: float = DEFAULT_TOL) -> ParamPoint:
    """Inverse of :func:`alpha`: ``S = U`` and ``t`` read off ``V``."""
    uv = omega(p, tol)
    return ParamPoint(uv.U, t_from_v(uv.V), (p.rho.g1.c, p.rho.g2.c, p.rho_prime.g1.c, p.rho_prime.g2.c))


def _conj_hom(rho: HeisHom, h: HeisPoint) -> HeisHom:
    hi = heis.inv(h)
    return HeisHom(heis.mul(heis.mul(h, rho.g1), hi), heis.mul(heis.mul(h, rho.g2), hi))


def conj(p: HomPair, h1: HeisPoint, h2: HeisPoint) -> HomPair:
    """Conjugate ``rho`` by ``h1`` and ``rho'`` by ``h2``."""
    return HomPair(_conj_hom(p.rho, h1), _conj_hom(p.rho_prime, h2))


def _normalizer(rho: HeisHom, tol: float) -> HeisPoint:
    # [u, v, 0] with c_i + u*b_i - v*a_i = 0 for both generators.
    M = ((rho.g1.b, -rho.g1.a), (rho.g2.b, -rho.g2.a))
    u, v = solve2(M, (-rho.g1.c, -rho.g2.c), tol)
    return HeisPoint(u, v, 0 * u)


def normalizing_conjugators(p: HomPair, tol: float = DEFAULT_TOL) -> tuple:
    """``(h1, h2)`` such that ``conj(p, h1, h2)`` has all four c-entries zero."""
    if is_zero(p.rho.det_A, tol) or is_zero(p.rho_prime.det_A, tol):
        raise DegenerateStratumError("det A * det A' = 0: no canonical c-normalization")
    return _normalizer(p.rho, tol), _normalizer(p.rho_prime, tol)


def canonicalize(p: HomPair, tol: float = DEFAULT_TOL) -> CanonicalCoords:
    if not is_proper(p, tol).proper:
        raise NotProperError("canonical coordinates need a proper pair")
    h1, h2 = normalizing_conjugators(p, tol)
    uv = omega(p, tol)
    t0, t1, t2, t3 = t_from_v(uv.V)
    rep = conj(p, h1, h2)
    return CanonicalCoords(uv.U, t0, (t1, t2, t3), rep)


def cond_b_trace_gap(V) -> Scalar:
    """``det(V + I) - det(V - I)``, which equals ``2 tr V``."""
    (p, q), (r, s) = V
    return ((p + 1) * (s + 1) - q * r) - ((p - 1) * (s - 1) - q * r)


def trace_v(uv: UVPair) -> Scalar:
    return trace(uv.V)
