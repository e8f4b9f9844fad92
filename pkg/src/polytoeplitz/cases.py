"""Seeded generators of random exact inputs for self-checks and tests."""

from __future__ import annotations

import random
from fractions import Fraction

from .scalarpoly import GaussQ, Poly, locate_zeros, scalar
from .symbolkit import PolyanalyticSymbol

#: Distance from the unit circle that generated tilde zeros must keep.
CIRCLE_MARGIN = 0.05


def rand_rational(rng: random.Random, num: int = 9, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_scalar(rng: random.Random, *, complex_prob: float = 0.5, nonzero: bool = False) -> GaussQ:
    while True:
        im = rand_rational(rng) if rng.random() < complex_prob else Fraction(0)
        c = GaussQ(rand_rational(rng), im)
        if c or not nonzero:
            return c


def rand_poly(rng: random.Random, deg: int, *, nonzero: bool = False) -> Poly:
    while True:
        p = Poly([rand_scalar(rng) for _ in range(deg + 1)])
        if not (nonzero and p.is_zero()):
            return p


def rand_symbol(rng: random.Random, max_order: int = 4, max_deg: int = 4) -> PolyanalyticSymbol:
    """A canonical symbol with ``n <= max_order`` and coefficient degrees ``<= max_deg``."""
    n = rng.randint(0, max_order)
    coeffs = [rand_poly(rng, rng.randint(0, max_deg)) for _ in range(n)]
    coeffs.append(rand_poly(rng, rng.randint(0, max_deg), nonzero=True))
    return PolyanalyticSymbol(n, tuple(coeffs))


def rand_point_in_disc(rng: random.Random, radius: float = 0.85) -> GaussQ:
    """Nonzero rational point with modulus at most ``radius``."""
    while True:
        w = GaussQ(Fraction(rng.randint(-9, 9), 10), Fraction(rng.randint(-9, 9), 10))
        if w and float(w.abs2()) <= radius ** 2:
            return w


def clear_of_circle(p: Poly, margin: float = CIRCLE_MARGIN) -> bool:
    return all(abs(abs(z.approx) - 1) > margin for z in locate_zeros(p))


def rand_fredholm_symbol(rng: random.Random, max_order: int = 3, max_deg: int = 3,
                         margin: float = CIRCLE_MARGIN) -> PolyanalyticSymbol:
    """Random canonical symbol whose tilde zeros stay ``margin`` away from the circle."""
    while True:
        sym = rand_symbol(rng, max_order, max_deg)
        tz = sym.tilde()
        if not tz.is_zero() and clear_of_circle(tz, margin):
            return sym


def _rand_small(rng: random.Random, bound: float) -> GaussQ:
    """Nonzero rational point of modulus below ``bound``."""
    while True:
        t = GaussQ(Fraction(rng.randint(-19, 19), 20), Fraction(rng.randint(-19, 19), 20))
        if t and float(t.abs2()) < bound ** 2:
            return t


def first_order_symbol(rng: random.Random, residue, *, max_other: int = 5,
                       max_tries: int = 300) -> tuple[PolyanalyticSymbol, GaussQ] | None:
    """``zbar + f`` where ``h = 1 + z f`` has one simple zero ``w`` in the disc.

    ``h = (1 - z/w) prod_j (1 - t_j z/w)`` with ``|t_j| < |w|``, so the other
    zeros ``w/t_j`` lie outside the closed disc and the index is 0.  The
    residue of ``(2f + z f')/h`` at ``w`` equals ``1 + 1/prod_j (1 - t_j)``;
    all but the last ``t_j`` are random and the last one is solved for.
    Each factor ``1 - t_j`` has argument below ``pi/2``, so residues in
    ``Z<=0`` need at least three outside zeros.
    """
    r = scalar(residue)
    if r == GaussQ(1):
        raise ValueError("residue 1 is unreachable")
    target = GaussQ(1) / (r - 1)
    for _ in range(max_tries):
        w = rand_point_in_disc(rng, 0.95)
        k = rng.randint(1, max_other)
        bound = abs(w) / (1 + CIRCLE_MARGIN)
        ts = [_rand_small(rng, bound) for _ in range(k - 1)]
        prod = GaussQ(1)
        for t in ts:
            prod = prod * (1 - t)
        last = 1 - target / prod
        if not last or float(last.abs2()) >= bound ** 2:
            continue
        ts.append(last)
        h = Poly([1, -GaussQ(1) / w])
        for t in ts:
            h = h * Poly([1, -t / w])
        f = Poly((h - Poly([1])).coeffs[1:])
        return PolyanalyticSymbol(1, (f, Poly([1]))), w
    return None


def first_order_suite(rng: random.Random, count: int) -> list[tuple[PolyanalyticSymbol, GaussQ, GaussQ]]:
    """``count`` first-order cases with prescribed residues, integer and not."""
    out = []
    while len(out) < count:
        if rng.random() < 0.6:
            res = GaussQ(rng.choice([-3, -2, -1, 0, 2, 3, 4]))
        else:
            res = GaussQ(Fraction(rng.randint(-20, 20), rng.choice([3, 7])),
                         Fraction(rng.randint(-4, 4), 5) if rng.random() < 0.3 else 0)
            if res.is_integer():
                continue
        made = first_order_symbol(rng, res)
        if made is not None:
            out.append((made[0], made[1], res))
    return out
