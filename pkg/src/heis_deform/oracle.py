"""Brute-force checks of proper discontinuity, freeness and injectivity.

Nothing here uses the determinant criterion.  Words are enumerated over the
box ``|m|, |n|, |k| <= N`` and each one is tested against the compact set
``{|x|, |y|, |z| <= R}`` in bracket coordinates.  The vectorized enumeration
scales rational data to a common denominator and works in integers, so every
decision on the rational path is exact.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import heis
from .heis import HeisPoint
from .homs import GammaWord, HeisHom, apply
from .properness import HomPair
from .scalar import DEFAULT_TOL, Scalar, as_scalar, is_exact

THREADS_ENV = "HEIS_DEFORM_THREADS"
_INT64_SAFE = 2**62


@dataclass(frozen=True)
class Box:
    R: Scalar

    def __post_init__(self):
        R = as_scalar(self.R)
        if R <= 0:
            raise ValueError("box radius must be positive")
        object.__setattr__(self, "R", R)

    def contains(self, x: HeisPoint) -> bool:
        return all(abs(v) <= self.R for v in x)


@dataclass
class ProbeReport:
    R: Scalar
    N: list
    counts: list
    verdict: str
    witnesses: list = field(default_factory=list)


def action(p: HomPair, w: GammaWord, x: HeisPoint) -> HeisPoint:
    """``rho(w) x rho'(w)^-1``."""
    g, gp = apply(p.rho, w), apply(p.rho_prime, w)
    return HeisPoint(
        x.a + g.a - gp.a,
        x.b + g.b - gp.b,
        x.c + (g.c - gp.c) + g.a * x.b - gp.b * x.a - g.a * gp.b + gp.a * gp.b,
    )


def intersects_box(p: HomPair, w: GammaWord, box: Box) -> bool:
    """Exact test for ``w . box`` meeting ``box``.

    The first two coordinates cut ``(x, y)`` down to a rectangle.  On it the
    third coordinate is ``z + f(x, y)`` with ``f`` affine and ``z`` free in
    ``[-R, R]``, so the test reduces to ``range(f)`` meeting ``[-2R, 2R]``.
    """
    R = box.R
    g, gp = apply(p.rho, w), apply(p.rho_prime, w)
    dp, dq = g.a - gp.a, g.b - gp.b
    if abs(dp) > 2 * R or abs(dq) > 2 * R:
        return False
    x_lo, x_hi = max(-R, -R - dp), min(R, R - dp)
    y_lo, y_hi = max(-R, -R - dq), min(R, R - dq)
    const = (g.c - gp.c) - g.a * gp.b + gp.a * gp.b
    py = (g.a * y_lo, g.a * y_hi)
    qx = (-gp.b * x_lo, -gp.b * x_hi)
    f_lo = const + min(py) + min(qx)
    f_hi = const + max(py) + max(qx)
    return f_lo <= 2 * R and f_hi >= -2 * R


# -- vectorized enumeration -------------------------------------------------

def _scale_for(values) -> int:
    return math.lcm(*(Fraction(v).denominator for v in values)) if values else 1


class _Images:
    """Scaled coordinates of ``rho(w)`` over a grid of words.

    With ``L`` the common denominator, ``P = L*a``, ``Q = L*b`` and
    ``C = 2*L**2*c`` are integers on the exact path.
    """

    def __init__(self, rho: HeisHom, L, dtype):
        self.L = L
        self.dtype = dtype
        conv = (lambda v: int(v * L)) if dtype != np.float64 else float
        self.a1, self.b1, self.c1 = (conv(v) for v in rho.g1)
        self.a2, self.b2, self.c2 = (conv(v) for v in rho.g2)

    def __call__(self, m, n, k):
        L = self.L
        P = m * self.a1 + n * self.a2
        Q = m * self.b1 + n * self.b2
        det = self.a1 * self.b2 - self.a2 * self.b1
        C = (
            2 * L * (m * self.c1 + n * self.c2)
            + m * (m - 1) * (self.a1 * self.b1)
            + n * (n - 1) * (self.a2 * self.b2)
            + 2 * m * n * (self.a1 * self.b2)
            + 2 * (k - m * n) * det
        )
        return P, Q, C


def _setup(p: HomPair, extra=(), N: int = 0):
    entries = [*p.rho.g1, *p.rho.g2, *p.rho_prime.g1, *p.rho_prime.g2]
    exact = p.exact and all(is_exact(v) for v in extra)
    if not exact:
        return 1.0, np.float64, False
    L = _scale_for([*entries, *extra])
    big = max([abs(int(v * L)) for v in [*entries, *extra]] + [1])
    bound = 64 * (N + 1) ** 3 * (big + 1) ** 2 * L
    return L, (np.int64 if bound < _INT64_SAFE else object), True


def _word_chunks(N: int, workers: int):
    ms = np.arange(-N, N + 1)
    return [c for c in np.array_split(ms, max(1, min(workers, len(ms)))) if len(c)]


def _grid(m_values, N, dtype):
    rng = np.arange(-N, N + 1)
    m, n, k = np.meshgrid(m_values, rng, rng, indexing="ij")
    m, n, k = (x.ravel() for x in (m, n, k))
    if dtype is object:
        m, n, k = (x.astype(object) for x in (m, n, k))
    return m, n, k


def default_workers() -> int:
    cap = os.environ.get(THREADS_ENV)
    cpus = os.cpu_count() or 1
    if cap:
        return max(1, min(int(cap), cpus))
    return min(4, cpus)


def _run_chunks(fn, N, workers):
    chunks = _word_chunks(N, workers)
    if len(chunks) == 1:
        parts = [fn(chunks[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(pool.map(fn, chunks))
    # Chunks are in ascending m order, so concatenation is deterministic.
    return tuple(np.concatenate(arrs) for arrs in zip(*parts))


def _intersect_mask(p: HomPair, R, N: int, workers: int):
    L, dtype, exact = _setup(p, (R,), N)
    img, img_p = _Images(p.rho, L, dtype), _Images(p.rho_prime, L, dtype)
    RL = int(R * L) if exact else float(R)
    bound = 4 * RL * L if exact else 4.0 * RL

    def chunk(m_values):
        m, n, k = _grid(m_values, N, dtype)
        P, Q, C = img(m, n, k)
        Pp, Qp, Cp = img_p(m, n, k)
        dP, dQ = P - Pp, Q - Qp
        ok = (np.abs(dP) <= 2 * RL) & (np.abs(dQ) <= 2 * RL)
        x_lo, x_hi = np.maximum(-RL, -RL - dP), np.minimum(RL, RL - dP)
        y_lo, y_hi = np.maximum(-RL, -RL - dQ), np.minimum(RL, RL - dQ)
        const = C - Cp - 2 * P * Qp + 2 * Pp * Qp
        py_lo, py_hi = P * y_lo, P * y_hi
        qx_lo, qx_hi = -Qp * x_lo, -Qp * x_hi
        f_lo = const + 2 * (np.minimum(py_lo, py_hi) + np.minimum(qx_lo, qx_hi))
        f_hi = const + 2 * (np.maximum(py_lo, py_hi) + np.maximum(qx_lo, qx_hi))
        ok &= (f_lo <= bound) & (f_hi >= -bound)
        return m, n, k, ok.astype(bool)

    return _run_chunks(chunk, N, workers)


def _classify(counts: list) -> str:
    top = counts[len(counts) // 2:]
    if len(counts) >= 2 and len(top) >= 2 and len(set(top)) == 1:
        return "stable"
    if len(counts) >= 2 and all(x < y for x, y in zip(counts, counts[1:])):
        return "growing"
    return "inconclusive"


def _words(m, n, k, mask) -> list:
    return sorted(GammaWord(int(a), int(b), int(c)) for a, b, c in zip(m[mask], n[mask], k[mask]))


def properness_probe(p: HomPair, R=2, N_list=(8, 12, 16, 20), max_witnesses: int = 32,
                     workers=None) -> ProbeReport:
    """Count non-identity words ``w`` with ``w . B`` meeting ``B`` for each ``N``.

    ``stable`` means the counts agree over the top half of ``N_list``;
    ``growing`` means they increase strictly throughout.
    """
    R = Box(R).R
    N_list = sorted(int(N) for N in N_list)
    if not N_list:
        raise ValueError("N_list must not be empty")
    m, n, k, ok = _intersect_mask(p, R, N_list[-1], workers or default_workers())
    ok &= ~((m == 0) & (n == 0) & (k == 0))
    size = np.maximum(np.maximum(np.abs(m), np.abs(n)), np.abs(k))
    counts = [int(np.count_nonzero(ok & (size <= N))) for N in N_list]
    hits = _words(m, n, k, ok)
    hits.sort(key=lambda w: (max(map(abs, w)), w))
    return ProbeReport(R, N_list, counts, _classify(counts), sorted(hits[:max_witnesses]))


def freeness_probe(p: HomPair, N: int = 10, tol: float = DEFAULT_TOL, workers=None) -> list:
    """Non-identity words with a fixed point, i.e. ``rho(w)`` conjugate to ``rho'(w)``."""
    L, dtype, exact = _setup(p, (), N)
    img, img_p = _Images(p.rho, L, dtype), _Images(p.rho_prime, L, dtype)

    def equal(x, y):
        return (x == y) if exact else (np.abs(x - y) <= tol)

    def chunk(m_values):
        m, n, k = _grid(m_values, N, dtype)
        P, Q, C = img(m, n, k)
        Pp, Qp, Cp = img_p(m, n, k)
        same_ab = equal(P, Pp) & equal(Q, Qp)
        central = equal(P, 0 * P) & equal(Q, 0 * Q)
        fixed = same_ab & (~central | equal(C, Cp))
        return m, n, k, fixed.astype(bool)

    m, n, k, fixed = _run_chunks(chunk, N, workers or default_workers())
    fixed &= ~((m == 0) & (n == 0) & (k == 0))
    return _words(m, n, k, fixed)


def kernel_probe(rho: HeisHom, N: int = 10, workers=None) -> list:
    """Non-identity words ``w`` with ``rho(w) = e`` exactly (rational homs only)."""
    if not rho.exact:
        raise ValueError("kernel_probe needs exact rational entries")
    p = HomPair(rho, rho)
    L, dtype, _ = _setup(p, (), N)
    img = _Images(rho, L, dtype)

    def chunk(m_values):
        m, n, k = _grid(m_values, N, dtype)
        P, Q, C = img(m, n, k)
        return m, n, k, ((P == 0) & (Q == 0) & (C == 0)).astype(bool)

    m, n, k, hit = _run_chunks(chunk, N, workers or default_workers())
    hit &= ~((m == 0) & (n == 0) & (k == 0))
    return _words(m, n, k, hit)


def fixed_point(p: HomPair, w: GammaWord) -> HeisPoint | None:
    """A point ``x`` with ``rho(w) x = x rho'(w)``, or ``None``; exact scalar version."""
    g, gp = apply(p.rho, w), apply(p.rho_prime, w)
    if g.a != gp.a or g.b != gp.b:
        return None
    if g.a == 0 and g.b == 0:
        return heis.IDENTITY if g.c == gp.c else None
    # Need x^-1 rho(w) x = rho'(w); conjugating by y = [u, v, 0] shifts c by u*b - v*a.
    delta = gp.c - g.c
    zero = 0 * delta
    y = HeisPoint(delta / g.b, zero, zero) if g.b != 0 else HeisPoint(zero, -delta / g.a, zero)
    return heis.inv(y)
