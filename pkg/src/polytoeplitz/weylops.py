"""Differential operators with polynomial coefficients in normal form.

An operator is stored as ``sum_k c_k(z) D^k`` (coefficients to the left of
powers of ``D = d/dz``).  Composition reduces immediately through the
commutator rule ``D g = g D + g'``, in its iterated Leibniz form
``D^i g = sum_k C(i, k) g^(k) D^(i-k)``.
"""

from __future__ import annotations

from functools import reduce
from math import comb
from typing import Iterable

from .scalarpoly import Poly
from .symbolkit import PolyanalyticSymbol


class DiffOp:
    """Normal-form differential operator ``sum_k coeffs[k](z) D^k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, Poly) else Poly(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def identity(cls) -> "DiffOp":
        return cls([Poly([1])])

    @classmethod
    def d(cls, k: int = 1) -> "DiffOp":
        return cls([Poly([])] * k + [Poly([1])])

    @classmethod
    def mult(cls, g) -> "DiffOp":
        return cls([g if isinstance(g, Poly) else Poly.const(g)])

    @classmethod
    def euler(cls, i) -> "DiffOp":
        """``z D + i``."""
        return cls([Poly.const(i), Poly.z()])

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Poly:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Poly([])

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, o):
        return isinstance(o, DiffOp) and self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"DiffOp({[str(c) for c in self.coeffs]})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            terms.append(f"[{c}]" + ("" if k == 0 else ("D" if k == 1 else f"D^{k}")))
        return " + ".join(terms) or "0"

    def __add__(self, o: "DiffOp") -> "DiffOp":
        n = max(len(self.coeffs), len(o.coeffs))
        return DiffOp([self.coeff(k) + o.coeff(k) for k in range(n)])

    def __neg__(self):
        return DiffOp([-c for c in self.coeffs])

    def __sub__(self, o: "DiffOp") -> "DiffOp":
        return self + (-o)

    def __mul__(self, s) -> "DiffOp":
        """Scalar (or left polynomial) multiple."""
        return DiffOp([c * s for c in self.coeffs])

    __rmul__ = __mul__

    def __matmul__(self, o: "DiffOp") -> "DiffOp":
        return compose(self, o)

    def __call__(self, f: Poly) -> Poly:
        return apply(self, f)


def compose(a: DiffOp, b: DiffOp) -> DiffOp:
    """Normal form of ``a . b``."""
    if a.is_zero() or b.is_zero():
        return DiffOp()
    out = [Poly([]) for _ in range(a.order + b.order + 1)]
    # derivatives of each b_j up to the order of a
    derivs = []
    for bj in b.coeffs:
        ds = [bj]
        for _ in range(a.order):
            ds.append(ds[-1].deriv())
        derivs.append(ds)
    for i, ai in enumerate(a.coeffs):
        if ai.is_zero():
            continue
        for j, ds in enumerate(derivs):
            for k in range(i + 1):
                g = ds[k]
                if g.is_zero():
                    continue
                out[i + j - k] = out[i + j - k] + ai * g * comb(i, k)
    return DiffOp(out)


def apply(a: DiffOp, f: Poly) -> Poly:
    """``sum_k c_k f^(k)``."""
    out = Poly([])
    fk = f
    for c in a.coeffs:
        if fk.is_zero():
            break
        if not c.is_zero():
            out = out + c * fk
        fk = fk.deriv()
    return out


def euler_product(start: int, stop: int) -> DiffOp:
    """``prod_{i=start}^{stop} (z D + i)``; the empty product is the identity."""
    return reduce(compose, (DiffOp.euler(i) for i in range(start, stop + 1)), DiffOp.identity())


def build_lambda(n: int) -> DiffOp:
    """``prod_{i=2}^{n+1} (z D + i)``, the left factor clearing ``T_phi``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return euler_product(2, n + 1)


def build_dphi(sym: PolyanalyticSymbol) -> DiffOp:
    """The order-``n`` operator ``D_phi`` with ``Lambda_n . T_phi = D_phi`` on polynomials.

    ``D_phi = Lambda_n a_0 + sum_{i=1}^{n} prod_{k=i+2}^{n+1}(z D + k) D^i a_i``.
    """
    n = sym.n
    # suffix[i] = prod_{k=i}^{n+1} (zD + k)
    suffix = {n + 2: DiffOp.identity()}
    for k in range(n + 1, 1, -1):
        suffix[k] = compose(DiffOp.euler(k), suffix[k + 1])
    total = compose(suffix[2], DiffOp.mult(sym.coeffs[0]))
    for i in range(1, n + 1):
        a = sym.coeffs[i]
        if a.is_zero():
            continue
        total = total + compose(suffix[i + 2], compose(DiffOp.d(i), DiffOp.mult(a)))
    return total


def leading_terms(a: DiffOp) -> tuple[Poly, Poly]:
    """``(c_n, c_{n-1})`` for an operator of order ``n >= 1``."""
    if a.order < 1:
        raise ValueError("leading_terms needs an operator of order >= 1")
    return a.coeffs[-1], a.coeffs[-2]
