"""Singular points of ``A y = 0``: classification, indicial data, series solutions.

At a point ``w`` let ``s = ord_w(c_n)``.  The point is regular singular when
every ``c_k`` vanishes to order at least ``s - (n - k)``; then
``B = (z - w)^(n - s) A`` has ``D^k`` coefficient divisible by
``(z - w)^k`` and the values ``b_k`` of the quotients at ``w`` give the
indicial polynomial ``sum_k b_k lam (lam - 1) ... (lam - k + 1)``.

At an algebraic (irrational) point each ``b_k`` is the value of an exact
polynomial ``E_k(z)``, so ``P(t)`` for an integer ``t`` is the value of the
exact polynomial ``sum_k E_k t^(k)``; integer roots are therefore decided
exactly by a gcd test even though the roots themselves are approximated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .errors import NotRegular, ResonanceObstruction
from .scalarpoly import (
    ZERO_TOL, AlgebraicPoint, GaussQ, Point, Poly, cauchy_bound, falling_factorial,
    is_exact_point, order_at, point_str, roots, to_complex, value_at, vanishes_at,
)
from .weylops import DiffOp

#: Above this Cauchy bound integer candidates come from approximate roots
#: instead of exhaustive trial evaluation.
TRIAL_LIMIT = 5000


def _orders(a: DiffOp, w: Point) -> list[int | None]:
    return [None if c.is_zero() else order_at(c, w) for c in a.coeffs]


def classify(a: DiffOp, w: Point) -> bool:
    """Is ``w`` an ordinary or regular singular point of ``a y = 0``?"""
    n = a.order
    if n < 0:
        raise ValueError("zero operator")
    ords = _orders(a, w)
    s = ords[n]
    return all(o is None or o >= s - (n - k) for k, o in enumerate(ords))


@dataclass(frozen=True)
class IndicialData:
    point: Point
    regular: bool
    indicial_poly: Poly
    all_roots: tuple[complex, ...]
    nonneg_integer_roots: tuple[int, ...]
    exact: bool
    #: exact polynomials whose values at ``point`` are the essential coefficients
    essential: tuple[Poly, ...] = field(default=(), repr=False)

    @property
    def distinct_nonneg_count(self) -> int:
        return len(self.nonneg_integer_roots)

    def to_dict(self) -> dict:
        return {
            "point": point_str(self.point),
            "point_approx": [to_complex(self.point).real, to_complex(self.point).imag],
            "regular": self.regular,
            "indicial_poly": [str(c) for c in self.indicial_poly.coeffs],
            "all_roots": [[r.real, r.imag] for r in self.all_roots],
            "nonneg_integer_roots": list(self.nonneg_integer_roots),
            "distinct_nonneg_count": self.distinct_nonneg_count,
            "confidence": "exact" if self.exact else "numeric-confidence",
        }


def essential_polys(a: DiffOp, w: Point) -> list[Poly]:
    """``E_k`` with ``b_k = E_k(w)``; raises ``NotRegular`` at irregular points."""
    n = a.order
    ords = _orders(a, w)
    s = ords[n]
    out = []
    for k, c in enumerate(a.coeffs):
        j = s - n + k          # required vanishing order of c_k
        if ords[k] is not None and ords[k] < j:
            raise NotRegular(f"irregular singular point at {point_str(w)}")
        if c.is_zero() or j < 0 or ords[k] > j:
            out.append(Poly([]))
        else:
            out.append(c.deriv(j) * (Fraction(1, math.factorial(j)) if c.exact else 1.0 / math.factorial(j)))
    return out


def integer_roots(p: Poly, lower_bound: int = 0, *,
                  check: Callable[[int], bool] | None = None) -> list[int]:
    """Integer roots ``>= lower_bound`` of a nonzero polynomial in ``lam``.

    Exact polynomials: trial evaluation up to the Cauchy bound.  Float
    polynomials: integers within ``ZERO_TOL`` of an approximate root; a
    ``check`` callback, when supplied, replaces the proximity test with an
    exact confirmation.
    """
    if p.is_zero():
        raise ValueError("integer_roots of the zero polynomial")
    if p.degree == 0:
        return []
    bound = cauchy_bound(p)
    if p.exact:
        hi = math.floor(bound)
        if hi - lower_bound <= TRIAL_LIMIT:
            cands = range(lower_bound, hi + 1)
        else:
            cands = sorted(_near_integers(p, lower_bound, 0.5))
        return [k for k in cands if not p(GaussQ(k))]
    if check is not None:
        hi = math.floor(bound * (1 + 1e-9)) + 1
        if hi - lower_bound <= TRIAL_LIMIT:
            cands = range(lower_bound, hi + 1)
        else:
            cands = sorted(_near_integers(p, lower_bound, 1e-3))
        return [k for k in cands if check(k)]
    return sorted(_near_integers(p, lower_bound, ZERO_TOL))


def _near_integers(p: Poly, lower_bound: int, tol: float) -> set[int]:
    out = set()
    for r, _ in roots(p):
        k = round(r.real)
        if k >= lower_bound and abs(r - k) <= tol * max(1.0, abs(r)):
            out.add(k)
    return out


def indicial(a: DiffOp, w: Point) -> IndicialData:
    """Indicial polynomial and its nonnegative integer roots at ``w``."""
    es = essential_polys(a, w)
    exact_coeffs = all(e.exact for e in es)
    if type(w) is GaussQ and exact_coeffs:
        bs = [value_at(e, w) for e in es]
        poly = Poly([])
        for k, b in enumerate(bs):
            if b:
                poly = poly + falling_factorial(k) * b
        nonneg = integer_roots(poly, 0)
        exact = True
    else:
        wc = to_complex(w)
        poly = Poly([])
        for k, e in enumerate(es):
            b = complex(e(wc)) if not e.is_zero() else 0j
            if b:
                poly = poly + falling_factorial(k).to_complex() * b
        if isinstance(w, AlgebraicPoint) and exact_coeffs:
            def check(t: int) -> bool:
                q = Poly([])
                for k, e in enumerate(es):
                    ff = math.perm(t, k) if t >= k else 0
                    if ff and not e.is_zero():
                        q = q + e * ff
                return vanishes_at(q, w)
            nonneg = integer_roots(poly, 0, check=check)
            exact = True
        else:
            nonneg = integer_roots(poly, 0)
            exact = False
    all_r = tuple(r for r, _ in roots(poly)) if poly.degree > 0 else ()
    return IndicialData(w, True, poly, all_r, tuple(nonneg), exact, tuple(es))


@dataclass(frozen=True)
class SeriesSolution:
    """``sum_t coefficients[t] (z - center)^t`` truncated at exponent ``M``."""

    center: Point
    leading_exponent: int
    coefficients: tuple

    @property
    def truncation(self) -> int:
        return len(self.coefficients) - 1

    def as_poly_u(self) -> Poly:
        """The truncated series as a polynomial in ``u = z - center``."""
        return Poly(self.coefficients)

    def as_poly_z(self) -> Poly:
        """The truncated series re-expanded in ``z`` (exact at rational centers)."""
        c = self.center if type(self.center) is GaussQ else to_complex(self.center)
        return self.as_poly_u().shift(-c)


def shifted_operator(a: DiffOp, w: Point) -> DiffOp:
    """``a`` written in the local coordinate ``u = z - w``."""
    c = w if type(w) is GaussQ else to_complex(w)
    return DiffOp([p.shift(c) for p in a.coeffs])


def series_solution(a: DiffOp, w: Point, lam0: int, M: int) -> SeriesSolution:
    """Frobenius power series with leading exponent ``lam0`` through ``(z - w)^M``.

    Raises ``ResonanceObstruction`` when a later indicial root blocks the
    recurrence with a nonzero right-hand side.
    """
    if not classify(a, w):
        raise NotRegular(f"irregular singular point at {point_str(w)}")
    n = a.order
    s = order_at(a.coeffs[n], w)
    exact = type(w) is GaussQ and all(c.exact for c in a.coeffs)
    local = shifted_operator(a, w)
    if not exact:
        local = DiffOp([c.to_complex() for c in local.coeffs])
    # B = u^(n-s) * local; beta[k][j] = coefficient of u^j D^k in B
    shift = n - s
    beta = [[0] * shift + list(c.coeffs) for c in local.coeffs]
    emax = max((len(b) - k - 1 for k, b in enumerate(beta)), default=0)

    def pe(e: int, lam: int):
        acc = 0
        for k, b in enumerate(beta):
            j = k + e
            if j < len(b) and b[j]:
                ff = math.perm(lam, k) if lam >= k else 0
                if ff:
                    acc = acc + b[j] * ff
        return acc

    def is_zero(x, scale) -> bool:
        if exact:
            return not x
        return abs(complex(x)) <= 1e-9 * max(scale, 1e-300)

    if not is_zero(pe(0, lam0), 1.0 + abs(complex(pe(0, lam0 + 1)))):
        raise ValueError(f"{lam0} is not an indicial root at {point_str(w)}")
    zero = GaussQ(0) if exact else 0j
    y = [zero] * (M + 1)
    if lam0 > M:
        return SeriesSolution(w, lam0, tuple(y))
    y[lam0] = GaussQ(1) if exact else 1 + 0j
    for t in range(lam0 + 1, M + 1):
        rhs = zero
        scale = 0.0
        for e in range(1, min(emax, t - lam0) + 1):
            term = pe(e, t - e) * y[t - e]
            rhs = rhs - term
            scale += abs(complex(term))
        d = pe(0, t)
        if is_zero(d, 1.0 + abs(complex(pe(0, t + 1)))):
            if is_zero(rhs, scale):
                y[t] = zero
                continue
            raise ResonanceObstruction(
                f"leading exponent {lam0} at {point_str(w)} is blocked at exponent {t}")
        y[t] = rhs / d
    return SeriesSolution(w, lam0, tuple(y))


def series_residual(a: DiffOp, sol: SeriesSolution) -> Poly:
    """``a`` applied to the truncated series, in the local coordinate."""
    from .weylops import apply

    return apply(shifted_operator(a, sol.center), sol.as_poly_u())
