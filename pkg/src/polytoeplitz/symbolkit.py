"""Polyanalytic symbols ``phi = sum_i a_i(z) zbar^i`` and their index data."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

import numpy as np

from .errors import OrderTooSmall, ParseError, ValidationError, WindingDisagreement
from .scalarpoly import GaussQ, Poly, Zero, locate_zeros, scalar

#: Initial number of boundary samples for the winding computation.
WINDING_SAMPLES = 512
#: Doubling stops once every sampled argument step is below this.
WINDING_MAX_STEP = math.pi / 4
WINDING_MAX_SAMPLES = 1 << 20


@dataclass(frozen=True)
class PolyanalyticSymbol:
    """``phi(z) = sum_{i=0}^{n} coeffs[i](z) * zbar^i`` at declared order ``n``."""

    n: int
    coeffs: tuple[Poly, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("declared order must be nonnegative")
        coeffs = tuple(c if isinstance(c, Poly) else Poly(c) for c in self.coeffs)
        if len(coeffs) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} coefficient polynomials, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    # -- constructors ---------------------------------------------------
    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> "PolyanalyticSymbol":
        coeffs = [c if isinstance(c, Poly) else Poly(c) for c in coeffs]
        return cls(len(coeffs) - 1, tuple(coeffs))

    @classmethod
    def holomorphic(cls, a0) -> "PolyanalyticSymbol":
        return cls(0, (a0 if isinstance(a0, Poly) else Poly.const(a0),))

    @classmethod
    def zbar(cls, k: int = 1) -> "PolyanalyticSymbol":
        return cls(k, tuple(Poly([1]) if i == k else Poly([]) for i in range(k + 1)))

    # -- structure ------------------------------------------------------
    @property
    def exact(self) -> bool:
        return all(c.exact for c in self.coeffs)

    @property
    def effective_order(self) -> int:
        for i in range(self.n, -1, -1):
            if not self.coeffs[i].is_zero():
                return i
        return 0

    def is_canonical(self) -> bool:
        return not self.coeffs[self.n].is_zero()

    def canonical(self) -> "PolyanalyticSymbol":
        k = self.effective_order
        return PolyanalyticSymbol(k, self.coeffs[: k + 1])

    def at_order(self, order: int) -> "PolyanalyticSymbol":
        if order < self.effective_order:
            raise OrderTooSmall(f"order {order} below effective order {self.effective_order}")
        cs = list(self.coeffs[: order + 1]) + [Poly([])] * (order - self.n)
        return PolyanalyticSymbol(order, tuple(cs))

    @property
    def z_degree(self) -> int:
        return max((c.degree for c in self.coeffs), default=0)

    # -- algebra ---------------------------------------------------------
    def __add__(self, o):
        if not isinstance(o, PolyanalyticSymbol):
            return shift_by_scalar(self, -scalar(o))
        n = max(self.n, o.n)
        a, b = self.at_order(n), o.at_order(n)
        return PolyanalyticSymbol(n, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return PolyanalyticSymbol(self.n, tuple(-c for c in self.coeffs))

    def __sub__(self, o):
        return self + (-o if isinstance(o, PolyanalyticSymbol) else -scalar(o))

    def __mul__(self, o):
        if isinstance(o, PolyanalyticSymbol):
            cs = [Poly([]) for _ in range(self.n + o.n + 1)]
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(o.coeffs):
                    cs[i + j] = cs[i + j] + a * b
            return PolyanalyticSymbol(self.n + o.n, tuple(cs))
        return PolyanalyticSymbol(self.n, tuple(c * o for c in self.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = PolyanalyticSymbol.holomorphic(Poly([1]))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, z):
        """Float evaluation at a point or an array of points."""
        z = np.asarray(z, dtype=complex)
        zb = np.conj(z)
        acc = np.zeros_like(z)
        for i in range(self.n, -1, -1):
            acc = acc * zb + self.coeffs[i].evaluate_many(z)
        return acc

    # -- transforms -----------------------------------------------------
    def tilde(self, order: int | None = None) -> Poly:
        return tilde(self, order)

    def dz(self) -> "PolyanalyticSymbol":
        return dz_derivative(self)

    # -- serialization --------------------------------------------------
    def to_json(self) -> dict:
        def enc(c):
            if isinstance(c, GaussQ):
                return [str(c.re), str(c.im)]
            return [repr(c.real), repr(c.imag)]

        return {"n": self.n, "coeffs": [[enc(c) for c in p.coeffs] for p in self.coeffs]}

    @classmethod
    def from_json(cls, data: Any, *, backend: str = "exact") -> "PolyanalyticSymbol":
        return parse_symbol(data, backend=backend)


def _parse_component(x: Any, where: str, backend: str):
    if isinstance(x, bool):
        raise ParseError(f"{where}: booleans are not numbers")
    if backend == "exact":
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            try:
                return Fraction(x.strip())
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"{where}: cannot parse {x!r} as an exact rational") from None
        if isinstance(x, float):
            raise ParseError(f"{where}: float literal {x!r} requires --backend float "
                             "(use a decimal string for exact input)")
        raise ParseError(f"{where}: expected a decimal string, got {type(x).__name__}")
    try:
        v = float(Fraction(x.strip())) if isinstance(x, str) else float(x)
    except (ValueError, TypeError, ZeroDivisionError):
        raise ParseError(f"{where}: cannot parse {x!r} as a number") from None
    if not math.isfinite(v):
        raise ParseError(f"{where}: non-finite value")
    return v


def parse_symbol(data: Any, *, backend: str = "exact") -> PolyanalyticSymbol:
    """Decode ``{"n": n, "coeffs": [[[re, im], ...], ...]}``.

    ``coeffs[i][k]`` is the coefficient of ``zbar^i z^k``.  Raises
    ``ParseError`` for malformed input and ``ValidationError`` when the
    top coefficient vanishes identically.
    """
    if backend not in ("exact", "float"):
        raise ParseError(f"unknown backend {backend!r}")
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("symbol must be a JSON object with keys 'n' and 'coeffs'")
    if "n" not in data or "coeffs" not in data:
        raise ParseError("symbol is missing 'n' or 'coeffs'")
    n = data["n"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise ParseError(f"'n' must be a nonnegative integer, got {n!r}")
    rows = data["coeffs"]
    if not isinstance(rows, list):
        raise ParseError("'coeffs' must be a list")
    if len(rows) != n + 1:
        raise ParseError(f"'coeffs' has {len(rows)} entries, expected n+1 = {n + 1}")
    polys = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise ParseError(f"coeffs[{i}]: expected a list of [re, im] pairs")
        cs = []
        for k, pair in enumerate(row):
            where = f"coeffs[{i}][{k}]"
            if not isinstance(pair, list) or len(pair) != 2:
                raise ParseError(f"{where}: expected [re, im] pair, got {pair!r}")
            re = _parse_component(pair[0], where + "[0]", backend)
            im = _parse_component(pair[1], where + "[1]", backend)
            cs.append(GaussQ(re, im) if backend == "exact" else complex(re, im))
        polys.append(Poly(cs))
    sym = PolyanalyticSymbol(n, tuple(polys))
    if not sym.is_canonical():
        raise ValidationError(f"coeffs[{n}] (coefficient of zbar^{n}) vanishes identically; "
                              "declared order exceeds the effective order")
    return sym


def tilde(sym: PolyanalyticSymbol, order: int | None = None) -> Poly:
    """``sum_i a_i(z) z^(order - i)``; agrees with ``z^order * phi`` on the circle."""
    if order is None:
        order = sym.n
    if order < sym.effective_order:
        raise OrderTooSmall(f"order {order} below effective order {sym.effective_order}")
    out = Poly([])
    for i, a in enumerate(sym.coeffs[: order + 1]):
        if not a.is_zero():
            out = out + Poly([0] * (order - i) + list(a.coeffs))
    return out


def dz_derivative(sym: PolyanalyticSymbol) -> PolyanalyticSymbol:
    """Coefficient-wise ``d/dz``, kept at the same declared order."""
    return PolyanalyticSymbol(sym.n, tuple(a.deriv() for a in sym.coeffs))


def shift_by_scalar(sym: PolyanalyticSymbol, mu) -> PolyanalyticSymbol:
    """``phi - mu``."""
    mu = scalar(mu)
    return PolyanalyticSymbol(sym.n, (sym.coeffs[0] - mu,) + sym.coeffs[1:])


@dataclass(frozen=True)
class IndexData:
    winding: int
    fredholm_index: int | None
    tilde_zeros_in_disc: tuple[tuple[complex, int], ...]
    boundary_zero_flag: bool
    sampled_winding: int | None = None
    zeros: tuple[Zero, ...] = field(default=(), repr=False)

    @property
    def zero_count_in_disc(self) -> int:
        return sum(m for _, m in self.tilde_zeros_in_disc)

    def to_dict(self) -> dict:
        return {
            "winding": self.winding,
            "fredholm_index": self.fredholm_index,
            "tilde_zeros_in_disc": [[[r.real, r.imag], m] for r, m in self.tilde_zeros_in_disc],
            "boundary_zero_flag": self.boundary_zero_flag,
            "sampled_winding": self.sampled_winding,
        }


def boundary_winding(sym: PolyanalyticSymbol, samples: int = WINDING_SAMPLES) -> int:
    """Winding number of ``phi(e^{i t})`` about 0 by adaptive sampling.

    Sampling doubles until every argument increment is below ``pi/4``.
    Raises ``ZeroDivisionError`` if a sample lands on a zero of ``phi``.
    """
    m = samples
    while True:
        t = 2 * np.pi * np.arange(m + 1) / m
        vals = sym(np.exp(1j * t))
        if np.any(vals == 0):
            raise ZeroDivisionError("symbol vanishes at a boundary sample")
        steps = np.angle(vals[1:] / vals[:-1])
        if np.max(np.abs(steps)) < WINDING_MAX_STEP:
            return int(round(float(np.sum(steps)) / (2 * np.pi)))
        if m >= WINDING_MAX_SAMPLES:
            raise WindingDisagreement(f"argument steps did not resolve at {m} samples")
        m *= 2


def index_data(sym: PolyanalyticSymbol) -> IndexData:
    """Winding and Fredholm index, computed by zero counting and by sampling.

    The zero count of the tilde polynomial inside the disc minus ``n`` must
    agree with the sampled boundary winding; otherwise
    ``WindingDisagreement`` is raised.  Boundary-ambiguous zeros set the
    flag and leave the index undefined.
    """
    if not sym.is_canonical():
        raise ValidationError("index_data needs a canonical symbol")
    tz = tilde(sym)
    if tz.is_zero():
        # phi vanishes identically on the circle
        return IndexData(-sym.n, None, (), True)
    zeros = locate_zeros(tz)
    inside = tuple((z.approx, z.multiplicity) for z in zeros if z.location() == "inside")
    flag = any(z.location() == "boundary" for z in zeros)
    count = sum(m for _, m in inside) - sym.n
    if flag:
        return IndexData(count, None, inside, True, None, tuple(zeros))
    sampled = boundary_winding(sym)
    if sampled != count:
        raise WindingDisagreement(f"sampled winding {sampled} != zero count {count}")
    return IndexData(count, -count, inside, False, sampled, tuple(zeros))
