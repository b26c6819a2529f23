"""Proper discontinuity of the two-sided action of a homomorphism pair.

A pair ``(rho, rho')`` lets the discrete Heisenberg group act on G by
``x -> rho(w) x rho'(w)^-1``.  The action is properly discontinuous (and
cocompact) exactly when ``det(A - A') != 0`` and ``det A - det A' != 0``,
where ``A`` and ``A'`` are the abelianized 2x2 matrices of the two
homomorphisms.  :func:`ci_check` tests the same thing a second way, through
the Lie algebra kernel of ``rho_0 - Ad_h rho'_0``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import heis
from .heis import HeisPoint, LieVector
from .homs import HeisHom, hom_matrix
from .linalg import det2, matmul, nullspace, sub
from .scalar import DEFAULT_TOL, Scalar, scalar_mode, sign

Component = Union[tuple, str]
BOUNDARY = "boundary"


class NotProperError(ValueError):
    """Raised by operations that are only defined on proper pairs."""


@dataclass(frozen=True, slots=True)
class HomPair:
    rho: HeisHom
    rho_prime: HeisHom

    @property
    def mode(self) -> str:
        return scalar_mode((*self.rho.g1, *self.rho.g2, *self.rho_prime.g1, *self.rho_prime.g2))

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    @property
    def A(self):
        return self.rho.A

    @property
    def A_prime(self):
        return self.rho_prime.A

    def swapped(self) -> "HomPair":
        return HomPair(self.rho_prime, self.rho)


@dataclass(frozen=True)
class ProperVerdict:
    cond_a: bool
    cond_b: bool
    proper: bool
    torus_matrix: tuple
    fiber_value: Scalar
    component: Component
    # False only on the float path when a determinant sits within tolerance of 0.
    decided: bool = True

    @property
    def cocompact(self) -> bool:
        # Implied by the criterion; not computed independently.
        return self.proper


@dataclass(frozen=True)
class Geometry:
    torus_matrix: tuple
    fiber_length: Scalar
    orientation: tuple


def is_proper(p: HomPair, tol: float = DEFAULT_TOL) -> ProperVerdict:
    exact = p.exact
    torus = sub(p.A, p.A_prime)
    d_torus = det2(torus)
    fiber = p.rho.det_A - p.rho_prime.det_A
    s_torus, s_fiber = sign(d_torus, tol), sign(fiber, tol)
    proper = s_torus != 0 and s_fiber != 0
    return ProperVerdict(
        cond_a=s_torus != 0,
        cond_b=s_fiber != 0,
        proper=proper,
        torus_matrix=torus,
        fiber_value=fiber,
        component=(s_torus, s_fiber) if proper else BOUNDARY,
        decided=proper or exact,
    )


def component(p: HomPair, tol: float = DEFAULT_TOL) -> Component:
    return is_proper(p, tol).component


def ci_kernel(p: HomPair, h: HeisPoint, tol: float = DEFAULT_TOL) -> list:
    """Basis of ``{X : rho_0(X) = Ad_h rho'_0(X)}``."""
    M = hom_matrix(p.rho)
    twisted = matmul(heis.adjoint_matrix(h), hom_matrix(p.rho_prime))
    return [LieVector(*v) for v in nullspace(sub(M, twisted), tol)]


def _sample_point(rng: random.Random, exact: bool) -> HeisPoint:
    if exact:
        return HeisPoint(*(Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(3)))
    return HeisPoint(*(rng.uniform(-5.0, 5.0) for _ in range(3)))


def ci_check(p: HomPair, samples: int = 8, seed: int = 0, tol: float = DEFAULT_TOL) -> bool:
    """True iff the twisted kernel is trivial at ``h = e`` and at ``samples`` seeded points."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    exact = p.exact
    points = [heis.IDENTITY] + [_sample_point(rng, exact) for _ in range(samples)]
    return all(not ci_kernel(p, h, tol) for h in points)


def geometry(p: HomPair, tol: float = DEFAULT_TOL) -> Geometry:
    """Flat structure ``A - A'`` on the base torus and the circle fiber length."""
    verdict = is_proper(p, tol)
    if not verdict.proper:
        raise NotProperError("geometry is only defined for proper pairs")
    return Geometry(verdict.torus_matrix, abs(verdict.fiber_value), verdict.component)


def example9(c: Optional[Scalar] = 0) -> HomPair:
    """The one-parameter family ``rho(g1) = [2, c, 0]``, ``rho'(g1) = [1, c, 0]``."""
    return HomPair(
        HeisHom.from_entries((2, c, 0), (1, 2, 0)),
        HeisHom.from_entries((1, c, 0), (0, 1, 0)),
    )
