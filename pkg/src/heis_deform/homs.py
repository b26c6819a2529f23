"""Elements of the discrete Heisenberg group and homomorphisms into G.

A word ``GammaWord(m, n, k)`` is the integer point ``[m, n, k]``; it factors
as ``g1**m * g2**n * z**(k - m*n)`` with ``z = [g1, g2] = [0, 0, 1]``.  A
homomorphism is fixed by the images of the two generators, and any pair of
images is allowed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from . import heis
from .heis import HeisPoint, LieVector
from .linalg import matvec
from .scalar import DEFAULT_TOL, Scalar, is_zero, scalar_mode


class GammaWord(NamedTuple):
    m: int
    n: int
    k: int

    @property
    def is_identity(self) -> bool:
        return self.m == 0 and self.n == 0 and self.k == 0

    def point(self) -> HeisPoint:
        return HeisPoint(self.m, self.n, self.k)


def word_mul(w1: GammaWord, w2: GammaWord) -> GammaWord:
    return GammaWord(w1.m + w2.m, w1.n + w2.n, w1.k + w2.k + w1.m * w2.n)


def word_inv(w: GammaWord) -> GammaWord:
    return GammaWord(-w.m, -w.n, w.m * w.n - w.k)


def word_commutator(w1: GammaWord, w2: GammaWord) -> GammaWord:
    return word_mul(word_mul(w1, w2), word_mul(word_inv(w1), word_inv(w2)))


@dataclass(frozen=True, slots=True)
class HeisHom:
    """Homomorphism from the discrete Heisenberg group into G.

    ``g1`` and ``g2`` are the images of the generators ``[1,0,0]`` and
    ``[0,1,0]``.
    """

    g1: HeisPoint
    g2: HeisPoint

    @classmethod
    def from_entries(cls, g1, g2) -> "HeisHom":
        return cls(HeisPoint(*g1), HeisPoint(*g2))

    @property
    def mode(self) -> str:
        return scalar_mode((*self.g1, *self.g2))

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    @property
    def A(self):
        """The 2x2 matrix ``((a1, a2), (b1, b2))`` of abelianized images."""
        return ((self.g1.a, self.g2.a), (self.g1.b, self.g2.b))

    @property
    def det_A(self) -> Scalar:
        return self.g1.a * self.g2.b - self.g2.a * self.g1.b

    @property
    def central_image(self) -> HeisPoint:
        """Image of the central generator ``z = [0, 0, 1]``."""
        return heis.commutator(self.g1, self.g2)


INCLUSION = HeisHom(heis.GAMMA1, heis.GAMMA2)
TRIVIAL = HeisHom(heis.IDENTITY, heis.IDENTITY)


def apply(rho: HeisHom, w: GammaWord) -> HeisPoint:
    g = heis.mul(heis.power(rho.g1, w.m), heis.power(rho.g2, w.n))
    return heis.mul(g, heis.power(rho.central_image, w.k - w.m * w.n))


def hom_matrix(rho: HeisHom):
    """Matrix (rows) of the Lie algebra map sending ``e_i`` to ``log rho(gamma_i)``."""
    c1 = heis.log(rho.g1)
    c2 = heis.log(rho.g2)
    zero = 0 * rho.det_A
    c3 = (zero, zero, rho.det_A)
    return tuple(zip(tuple(c1), tuple(c2), c3))


def extend(rho: HeisHom, g: HeisPoint) -> HeisPoint:
    """The continuous extension ``exp . rho_0 . log`` evaluated at ``g``."""
    return heis.exp(LieVector(*matvec(hom_matrix(rho), tuple(heis.log(g)))))


def is_injective(rho: HeisHom, tol: float = DEFAULT_TOL) -> bool:
    return not is_zero(rho.det_A, tol)

