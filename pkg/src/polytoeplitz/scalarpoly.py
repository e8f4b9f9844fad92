"""Scalars, univariate polynomials, root location and Laurent expansions.

Two scalar backends coexist:

* ``GaussQ`` -- exact Gaussian rationals ``re + i*im`` with ``Fraction`` parts.
  Every identity and every integrality decision is made here when the input
  is rational.
* Python ``complex`` -- the float backend, used for root localization,
  boundary sampling and the finite-section oracle.

Points at which polynomials are examined come in three kinds: an exact
``GaussQ``, an ``AlgebraicPoint`` (a simple root of an exact squarefree
polynomial, located numerically but tested for vanishing exactly through
gcds), or a bare ``complex`` (float backend, tolerance based).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import IllConditioned, NonFiniteScalar, ZeroDenominatorIdentically

#: Relative radius under which float roots are merged into one multiple root.
CLUSTER_RADIUS = 1e-7
#: A root with ``||r| - 1| < BOUNDARY_TOL`` cannot be placed inside/outside the disc.
BOUNDARY_TOL = 1e-9
#: Relative tolerance for float-backend vanishing and integer-proximity tests.
ZERO_TOL = 1e-7
#: Residual test used to certify numerically located roots.
RESIDUAL_TOL = 1e-9
#: Degree reported for the zero polynomial (stands in for minus infinity).
ZERO_DEGREE = -1


class GaussQ:
    """Exact Gaussian rational ``re + i*im``.

    Instances are treated as immutable; arithmetic with ``int`` and
    ``Fraction`` stays exact, arithmetic with ``float``/``complex``
    degrades to ``complex``.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> "GaussQ":
        obj = object.__new__(cls)
        obj.re = re
        obj.im = im
        return obj

    @classmethod
    def parse(cls, re: str | int = "0", im: str | int = "0") -> "GaussQ":
        """Build from decimal/fraction strings such as ``"0.25"`` or ``"-3/7"``."""
        return cls(Fraction(str(re).strip()), Fraction(str(im).strip()))

    # -- arithmetic -----------------------------------------------------
    def __add__(self, o):
        if type(o) is GaussQ:
            return GaussQ._make(self.re + o.re, self.im + o.im)
        if isinstance(o, Rational):
            return GaussQ._make(self.re + o, self.im)
        if isinstance(o, (float, complex)):
            return complex(self) + o
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussQ._make(-self.re, -self.im)

    def __sub__(self, o):
        if type(o) is GaussQ:
            return GaussQ._make(self.re - o.re, self.im - o.im)
        if isinstance(o, Rational):
            return GaussQ._make(self.re - o, self.im)
        if isinstance(o, (float, complex)):
            return complex(self) - o
        return NotImplemented

    def __rsub__(self, o):
        if isinstance(o, Rational):
            return GaussQ._make(o - self.re, -self.im)
        if isinstance(o, (float, complex)):
            return o - complex(self)
        return NotImplemented

    def __mul__(self, o):
        if type(o) is GaussQ:
            a, b, c, d = self.re, self.im, o.re, o.im
            if not b and not d:
                return GaussQ._make(a * c, b)
            return GaussQ._make(a * c - b * d, a * d + b * c)
        if isinstance(o, Rational):
            return GaussQ._make(self.re * o, self.im * o)
        if isinstance(o, (float, complex)):
            return complex(self) * o
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, o):
        if type(o) is GaussQ:
            c, d = o.re, o.im
            if not d:
                if not c:
                    raise ZeroDivisionError("GaussQ division by zero")
                return GaussQ._make(self.re / c, self.im / c)
            den = c * c + d * d
            a, b = self.re, self.im
            return GaussQ._make((a * c + b * d) / den, (b * c - a * d) / den)
        if isinstance(o, Rational):
            if not o:
                raise ZeroDivisionError("GaussQ division by zero")
            return GaussQ._make(self.re / o, self.im / o)
        if isinstance(o, (float, complex)):
            return complex(self) / o
        return NotImplemented

    def __rtruediv__(self, o):
        if isinstance(o, Rational):
            return GaussQ(o) / self
        if isinstance(o, (float, complex)):
            return o / complex(self)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return ONE / (self ** -k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "GaussQ":
        return GaussQ._make(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return math.hypot(self.re, self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def is_integer(self) -> bool:
        return not self.im and self.re.denominator == 1

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, o):
        if type(o) is GaussQ:
            return self.re == o.re and self.im == o.im
        if isinstance(o, Rational):
            return not self.im and self.re == o
        if isinstance(o, (float, complex)):
            return complex(self) == o
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __reduce__(self):
        return (GaussQ, (self.re, self.im))

    def __repr__(self):
        return f"GaussQ({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


ZERO = GaussQ(0)
ONE = GaussQ(1)

Scalar = Union[GaussQ, complex]


def scalar(x) -> Scalar:
    """Coerce a number into one of the two backends."""
    if type(x) is GaussQ:
        return x
    if isinstance(x, Rational):
        return GaussQ(x)
    if isinstance(x, (float, complex)):
        c = complex(x)
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            raise NonFiniteScalar(f"non-finite scalar {x!r}")
        return c
    if isinstance(x, np.number):
        return scalar(complex(x))
    raise TypeError(f"cannot interpret {x!r} as a scalar")


def is_exact(x) -> bool:
    return type(x) is GaussQ or isinstance(x, Rational)


def to_complex(x) -> complex:
    if isinstance(x, AlgebraicPoint):
        return x.approx
    return complex(x)


class Poly:
    """Univariate polynomial with ascending coefficients.

    Coefficients are all ``GaussQ`` (exact) or all ``complex`` (float);
    trailing zeros are never stored.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [scalar(c) for c in coeffs]
        if any(type(c) is complex for c in cs):
            cs = [complex(c) for c in cs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, cs: list) -> "Poly":
        # cs already holds backend scalars of a single kind
        while cs and not cs[-1]:
            cs.pop()
        obj = object.__new__(cls)
        obj.coeffs = tuple(cs)
        return obj

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def z(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        p = cls([1])
        for r in roots:
            p = p * cls([-scalar(r), 1])
        return p

    # -- basic data -----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def exact(self) -> bool:
        return all(type(c) is GaussQ for c in self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def lead(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, k: int) -> Scalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO if self.exact else 0j

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, o):
        if isinstance(o, Poly):
            return self.coeffs == o.coeffs
        try:
            return self.coeffs == Poly([o]).coeffs
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            terms.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(terms)

    # -- arithmetic -----------------------------------------------------
    def _lift(self, o) -> "Poly":
        return o if isinstance(o, Poly) else Poly([o])

    def __add__(self, o):
        o = self._lift(o)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly(out) if self.exact != o.exact else Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        if not isinstance(o, Poly):
            s = scalar(o)
            out = [c * s for c in self.coeffs]
            return Poly(out) if (type(s) is complex) != (not self.exact) else Poly._raw(out)
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly._raw([])
        out = [None] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                t = x * y
                out[i + j] = t if out[i + j] is None else out[i + j] + t
        zero = ZERO if (self.exact and o.exact) else 0j
        out = [zero if c is None else c for c in out]
        return Poly(out) if self.exact != o.exact else Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative polynomial power")
        result, base = Poly([1]) if self.exact else Poly([1.0]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        if isinstance(x, AlgebraicPoint):
            x = x.approx
        acc = ZERO if self.exact and is_exact(x) else 0j
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_many(self, xs: np.ndarray) -> np.ndarray:
        """Vectorized float evaluation."""
        cs = np.array([complex(c) for c in self.coeffs] or [0j])
        return np.polynomial.polynomial.polyval(np.asarray(xs, dtype=complex), cs)

    def deriv(self, k: int = 1) -> "Poly":
        cs = self.coeffs
        for _ in range(k):
            cs = [c * j for j, c in enumerate(cs)][1:]
        return Poly._raw(list(cs))

    def divmod(self, o: "Poly") -> tuple["Poly", "Poly"]:
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = o.degree
        lead = o.coeffs[-1]
        if len(rem) - 1 < dq:
            return Poly._raw([]), self
        quot = [None] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            quot[k - dq] = c
            if c:
                for j, y in enumerate(o.coeffs):
                    rem[k - dq + j] = rem[k - dq + j] - c * y
        rem = rem[:dq]
        return Poly(quot), Poly(rem)

    def __floordiv__(self, o):
        return self.divmod(self._lift(o))[0]

    def __mod__(self, o):
        return self.divmod(self._lift(o))[1]

    def exact_div(self, o: "Poly") -> "Poly":
        q, r = self.divmod(o)
        if not r.is_zero():
            raise ArithmeticError("polynomial division is not exact")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self * (1 / self.coeffs[-1] if not self.exact else ONE / self.coeffs[-1])

    def shift(self, w) -> "Poly":
        """Return ``q`` with ``q(u) = self(u + w)``."""
        if isinstance(w, AlgebraicPoint):
            w = w.approx
        w = scalar(w)
        cs = list(self.coeffs)
        if (type(w) is complex) and self.exact:
            cs = [complex(c) for c in cs]
        n = len(cs)
        # repeated synthetic division (Horner's Taylor shift)
        for i in range(n - 1):
            for k in range(n - 2, i - 1, -1):
                cs[k] = cs[k] + w * cs[k + 1]
        return Poly(cs)

    def conjugate_coeffs(self) -> "Poly":
        return Poly._raw([c.conjugate() for c in self.coeffs])

    def to_complex(self) -> "Poly":
        return Poly._raw([complex(c) for c in self.coeffs])

    def as_array(self) -> np.ndarray:
        """Ascending complex coefficient array."""
        return np.array([complex(c) for c in self.coeffs], dtype=complex)

    def scale_bound(self, x) -> float:
        """``sum |c_k| |x|^k``: the magnitude scale for residual tests at ``x``."""
        r = abs(to_complex(x))
        return sum(abs(complex(c)) * r**k for k, c in enumerate(self.coeffs))


def poly_shift(p: Poly, w) -> Poly:
    return p.shift(w)


def falling_factorial(k: int) -> Poly:
    """``lam (lam - 1) ... (lam - k + 1)`` as an exact polynomial in ``lam``."""
    p = Poly([1])
    for j in range(k):
        p = p * Poly([-j, 1])
    return p


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd of two exact polynomials (gcd(0, 0) = 0)."""
    if not (a.exact and b.exact):
        raise TypeError("poly_gcd requires exact polynomials")
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: ``p = lead * prod f_i^i`` with monic squarefree ``f_i``."""
    if p.is_zero():
        raise ValueError("zero polynomial has no squarefree decomposition")
    if p.degree == 0:
        return []
    dp = p.deriv()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.deriv()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a, i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.deriv()
        i += 1
    return out


# -- numerical root finding ---------------------------------------------

def _residual_ok(cs: np.ndarray, r: complex, tol: float) -> bool:
    val = np.polynomial.polynomial.polyval(r, cs)
    scale = np.sum(np.abs(cs) * np.abs(r) ** np.arange(len(cs)))
    return abs(val) <= tol * max(scale, np.finfo(float).tiny)


def _newton_polish(cs: np.ndarray, zs: np.ndarray, steps: int = 3) -> np.ndarray:
    dcs = np.polynomial.polynomial.polyder(cs)
    zs = zs.copy()
    for _ in range(steps):
        with np.errstate(all="ignore"):
            p = np.polynomial.polynomial.polyval(zs, cs)
            dp = np.polynomial.polynomial.polyval(zs, dcs)
            step = p / dp
        ok = np.isfinite(step)
        cand = np.where(ok, zs - step, zs)
        # accept a step only when it does not increase the residual
        better = np.abs(np.polynomial.polynomial.polyval(cand, cs)) <= np.abs(p)
        zs = np.where(better, cand, zs)
    return zs


def _aberth(cs: np.ndarray, max_iter: int) -> np.ndarray | None:
    deg = len(cs) - 1
    a = cs / cs[-1]
    dcs = np.polynomial.polynomial.polyder(a)
    r0 = abs(a[0]) ** (1.0 / deg) if a[0] != 0 else 0.5
    r0 = r0 if r0 > 0 else 0.5
    zs = r0 * np.exp(1j * (2 * np.pi * np.arange(deg) / deg + 0.4))
    for _ in range(max_iter):
        with np.errstate(all="ignore"):
            p = np.polynomial.polynomial.polyval(zs, a)
            dp = np.polynomial.polynomial.polyval(zs, dcs)
            ratio = p / dp
            diff = zs[:, None] - zs[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            s = inv.sum(axis=1)
            w = ratio / (1.0 - ratio * s)
        if not np.all(np.isfinite(w)):
            # exact hit or coincident iterates: nudge and continue
            bad = ~np.isfinite(w)
            w = np.where(bad, -1e-8 * (1 + np.abs(zs)) * np.exp(1j * 0.7), w)
        zs = zs - w
        if np.all(np.abs(w) <= 4 * np.finfo(float).eps * np.maximum(1.0, np.abs(zs))):
            break
    if not np.all(np.isfinite(zs)):
        return None
    return zs


def _simple_roots(cs: np.ndarray, *, tol: float = RESIDUAL_TOL, max_iter: int = 500) -> np.ndarray:
    deg = len(cs) - 1
    if deg <= 0:
        return np.zeros(0, dtype=complex)
    if deg == 1:
        return np.array([-cs[0] / cs[1]])
    zs = _aberth(cs, max_iter)
    if zs is not None:
        zs = _newton_polish(cs, zs)
        if all(_residual_ok(cs, r, tol) for r in zs):
            return zs
    # companion-matrix fallback
    zs = _newton_polish(cs, np.roots(cs[::-1]).astype(complex))
    if not all(_residual_ok(cs, r, tol) for r in zs):
        raise IllConditioned(f"roots failed the residual test (degree {deg})")
    return zs


def _sort_key(r: complex) -> tuple[float, float]:
    return (round(r.real, 9), round(r.imag, 9))


def roots(p: Poly, *, tol: float = RESIDUAL_TOL, max_iter: int = 500) -> list[tuple[complex, int]]:
    """All complex roots of ``p`` with multiplicities.

    Exact polynomials get exact multiplicities from a squarefree
    decomposition.  Float polynomials are solved directly and roots closer
    than ``CLUSTER_RADIUS`` (relative) are merged.
    """
    if p.is_zero():
        raise ValueError("roots of the zero polynomial are undefined")
    out: list[tuple[complex, int]] = []
    if p.exact:
        for factor, mult in squarefree_decomposition(p):
            for r in _simple_roots(factor.as_array(), tol=tol, max_iter=max_iter):
                out.append((complex(r), mult))
    else:
        zs = [complex(r) for r in _simple_roots(p.as_array(), tol=tol, max_iter=max_iter)]
        out = _cluster(zs)
    return sorted(out, key=lambda t: _sort_key(t[0]))


def _cluster(zs: list[complex]) -> list[tuple[complex, int]]:
    parent = list(range(len(zs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            if abs(zs[i] - zs[j]) <= CLUSTER_RADIUS * max(1.0, abs(zs[i]), abs(zs[j])):
                parent[find(i)] = find(j)
    groups: dict[int, list[complex]] = {}
    for i, z in enumerate(zs):
        groups.setdefault(find(i), []).append(z)
    return [(sum(g) / len(g), len(g)) for g in groups.values()]


def cauchy_bound(p: Poly) -> float:
    """Every root of ``p`` has modulus below this value."""
    lead = abs(complex(p.lead()))
    return 1.0 + max((abs(complex(c)) / lead for c in p.coeffs[:-1]), default=0.0)


# -- points -------------------------------------------------------------

@dataclass(frozen=True)
class AlgebraicPoint:
    """A simple root of an exact squarefree polynomial.

    ``approx`` pins down which root is meant; vanishing of an exact
    polynomial at the point is decided through a gcd with ``minpoly``.
    """

    minpoly: Poly
    approx: complex
    separation: float

    @classmethod
    def of(cls, minpoly: Poly, approx: complex) -> "AlgebraicPoint":
        if not minpoly.exact:
            raise TypeError("AlgebraicPoint needs an exact defining polynomial")
        minpoly = minpoly.monic()
        rs = [complex(r) for r in _simple_roots(minpoly.as_array())]
        nearest = min(rs, key=lambda r: abs(r - approx))
        others = [abs(r - nearest) for r in rs if r is not nearest]
        sep = min(others) if others else math.inf
        return cls(minpoly, nearest, sep)

    def vanishes(self, p: Poly) -> bool:
        if p.is_zero():
            return True
        if not p.exact:
            return abs(p(self.approx)) <= ZERO_TOL * max(p.scale_bound(self.approx), 1e-300)
        g = poly_gcd(p, self.minpoly)
        if g.degree <= 0:
            return False
        if g.degree == self.minpoly.degree:
            return True
        rs = _simple_roots(g.as_array())
        return bool(np.min(np.abs(rs - self.approx)) < self.separation / 2)

    def __complex__(self):
        return self.approx

    def __str__(self):
        return f"root({self.approx:.12g} of {self.minpoly})"


Point = Union[GaussQ, AlgebraicPoint, complex]


def is_exact_point(w) -> bool:
    return type(w) is GaussQ or isinstance(w, AlgebraicPoint)


def vanishes_at(p: Poly, w: Point) -> bool:
    """Does ``p`` vanish at ``w``?  Exact for exact points and exact ``p``."""
    if p.is_zero():
        return True
    if isinstance(w, AlgebraicPoint):
        return w.vanishes(p)
    if type(w) is GaussQ and p.exact:
        return not p(w)
    wc = complex(w)
    return abs(p(wc)) <= ZERO_TOL * max(p.scale_bound(wc), 1e-300)


def order_at(p: Poly, w: Point) -> int:
    """Vanishing order of a nonzero polynomial at ``w``."""
    if p.is_zero():
        raise ValueError("order of the zero polynomial is infinite")
    k = 0
    while vanishes_at(p, w):
        p = p.deriv()
        k += 1
    return k


def value_at(p: Poly, w: Point) -> Scalar:
    """Exact value at a rational point, otherwise a float approximation."""
    if type(w) is GaussQ and p.exact:
        return p(w)
    return p(to_complex(w))


def integer_ratio_at(num: Poly, den: Poly, w: Point) -> int | None:
    """If ``num(w)/den(w)`` is an integer return it, else ``None``.

    Exact points give exact answers: a float estimate proposes the integer
    and ``num - k*den`` vanishing at ``w`` confirms it.
    """
    if type(w) is GaussQ and num.exact and den.exact:
        v = num(w) / den(w)
        return int(v.re) if v.is_integer() else None
    dv = den(to_complex(w))
    v = num(to_complex(w)) / dv
    k = round(v.real)
    if abs(v - k) > 1e-6 * max(1.0, abs(v)):
        return None
    if isinstance(w, AlgebraicPoint) and num.exact and den.exact:
        return k if w.vanishes(num - den * k) else None
    return k if abs(v - k) <= ZERO_TOL * max(1.0, abs(v)) else None


def point_str(w: Point) -> str:
    return str(w) if type(w) is GaussQ else (str(w) if isinstance(w, AlgebraicPoint) else f"{complex(w):.12g}")


def point_abs2_vs_one(w: Point) -> int | None:
    """Exact sign of ``|w|^2 - 1`` for rational points; ``None`` otherwise."""
    if type(w) is GaussQ:
        d = w.abs2() - 1
        return (d > 0) - (d < 0)
    return None


@dataclass(frozen=True)
class Zero:
    point: Point
    multiplicity: int

    @property
    def approx(self) -> complex:
        return to_complex(self.point)

    def location(self) -> str:
        """``'inside'``, ``'outside'`` or ``'boundary'`` relative to the unit circle."""
        s = point_abs2_vs_one(self.point)
        if s is not None:
            return {-1: "inside", 0: "boundary", 1: "outside"}[s]
        r = abs(self.approx)
        if abs(r - 1.0) < BOUNDARY_TOL:
            return "boundary"
        return "inside" if r < 1.0 else "outside"


def _rationalize(factor: Poly, r: complex) -> GaussQ | None:
    for bound in (10**3, 10**6):
        q = GaussQ(Fraction(r.real).limit_denominator(bound), Fraction(r.imag).limit_denominator(bound))
        if not factor(q):
            return q
    return None


def locate_zeros(p: Poly) -> list[Zero]:
    """Zeros of ``p`` as points: exact where rational, algebraic otherwise."""
    if p.is_zero():
        raise ValueError("zeros of the zero polynomial are undefined")
    out: list[Zero] = []
    if p.exact:
        for factor, mult in squarefree_decomposition(p):
            rs = [complex(r) for r in _simple_roots(factor.as_array())]
            for r in rs:
                q = _rationalize(factor, r)
                if q is not None:
                    out.append(Zero(q, mult))
                else:
                    out.append(Zero(AlgebraicPoint.of(factor, r), mult))
    else:
        out = [Zero(r, m) for r, m in roots(p)]
    return sorted(out, key=lambda z: _sort_key(z.approx))


# -- Laurent expansions --------------------------------------------------

@dataclass(frozen=True)
class LaurentExpansion:
    """``sum_k coeffs[k - order] (z - center)^k`` for ``order <= k <= order + len - 1``."""

    center: Point
    order: int
    coeffs: tuple

    def coefficient(self, k: int) -> Scalar:
        i = k - self.order
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return ZERO if all(type(c) is GaussQ for c in self.coeffs) else 0j

    @property
    def residue(self) -> Scalar:
        return self.coefficient(-1)

    @property
    def pole_order(self) -> int:
        return max(0, -self.order) if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs


def _leading_zeros(cs: Sequence) -> int:
    k = 0
    while k < len(cs) and not cs[k]:
        k += 1
    return k


def _series_divide(num: Sequence, den: Sequence, count: int) -> list:
    out = []
    d0 = den[0]
    for k in range(count):
        acc = num[k] if k < len(num) else 0 * d0
        for j in range(1, min(k, len(den) - 1) + 1):
            acc = acc - den[j] * out[k - j]
        out.append(acc / d0)
    return out


def laurent(num: Poly, den: Poly, w: Point, upto: int, *,
            den_order: int | None = None, num_order: int | None = None) -> LaurentExpansion:
    """Laurent expansion of ``num/den`` at ``w`` through exponent ``upto``.

    At rational points with exact inputs the expansion is exact.  Elsewhere
    the coefficients are floats, but the vanishing orders (and so the pole
    order) are still decided exactly at algebraic points.
    """
    if den.is_zero():
        raise ZeroDenominatorIdentically("Laurent expansion with zero denominator")
    if num.is_zero():
        return LaurentExpansion(w, 0, ())
    if type(w) is GaussQ and num.exact and den.exact:
        ns, ds = num.shift(w).coeffs, den.shift(w).coeffs
        no, do = _leading_zeros(ns), _leading_zeros(ds)
    else:
        no = order_at(num, w) if num_order is None else num_order
        do = order_at(den, w) if den_order is None else den_order
        wc = to_complex(w)
        ns, ds = num.to_complex().shift(wc).coeffs, den.to_complex().shift(wc).coeffs
    order = no - do
    count = max(0, upto - order + 1)
    coeffs = _series_divide(list(ns[no:]), list(ds[do:]), count)
    return LaurentExpansion(w, order, tuple(coeffs))
