"""Exact identity suites over seeded random inputs.

Each suite returns a ``SuiteResult``; ``run_selftest`` runs them all.  The
``fault`` hook perturbs one side of the operator identity on purpose so the
harness can confirm a suite is able to fail.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .cases import first_order_suite, rand_point_in_disc, rand_poly, rand_symbol
from .criteria import analyze, first_order_criterion
from .oracle import apply_toeplitz_poly
from .scalarpoly import GaussQ, Poly
from .symbolkit import PolyanalyticSymbol, tilde
from .weylops import DiffOp, apply, build_dphi, build_lambda, compose

FAULTS = ("lemma-key",)


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: int = 0
    first_failure: str | None = None
    digest: str = ""
    _hash: object = field(default_factory=hashlib.sha256, repr=False)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, label: str, ok: bool) -> None:
        self.cases += 1
        self._hash.update(label.encode())
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = label

    def close(self) -> "SuiteResult":
        self.digest = self._hash.hexdigest()[:16]
        return self

    def to_dict(self) -> dict:
        return {"suite": self.name, "cases": self.cases, "failures": self.failures,
                "passed": self.passed, "first_failure": self.first_failure, "digest": self.digest}


def _perturbed(sym: PolyanalyticSymbol) -> PolyanalyticSymbol:
    a0 = sym.coeffs[0] + Poly([Fraction(1, 1000)])
    return PolyanalyticSymbol(sym.n, (a0,) + sym.coeffs[1:])


def lemma_key_suite(rng: random.Random, cases: int, *, fault: str | None = None) -> SuiteResult:
    """``Lambda_n (T_phi f) == D_phi f`` exactly."""
    out = SuiteResult("lemma-key")
    for _ in range(cases):
        sym = rand_symbol(rng, 4, 4)
        f = rand_poly(rng, rng.randint(0, 6))
        lhs = apply(build_lambda(sym.n), apply_toeplitz_poly(sym, f))
        rhs = apply(build_dphi(_perturbed(sym) if fault == "lemma-key" else sym), f)
        out.record(f"{sym.to_json()} f={f}", lhs == rhs)
    return out.close()


def leading_term_suite(rng: random.Random, cases: int) -> SuiteResult:
    """Top coefficients of ``D_phi``: ``tilde`` and ``(n+1) tilde' - tilde(dphi/dz)``."""
    out = SuiteResult("leading-term")
    for _ in range(cases):
        sym = rand_symbol(rng, 4, 4)
        if sym.n == 0:
            sym = sym + PolyanalyticSymbol.zbar(1)
        d = build_dphi(sym)
        tz = tilde(sym)
        sub = tz.deriv() * (sym.n + 1) - tilde(sym.dz(), sym.n)
        out.record(str(sym.to_json()), d.coeff(sym.n) == tz and d.coeff(sym.n - 1) == sub)
    return out.close()


def dn_expansion(n: int, w) -> DiffOp:
    """``(z-w)^n D^n + sum_{i<n} n!^2/(i!^2 (n-i)!) (z-w)^i D^i``."""
    u = Poly([-w, 1])
    cs = []
    for i in range(n + 1):
        c = 1 if i == n else Fraction(math.factorial(n) ** 2,
                                      math.factorial(i) ** 2 * math.factorial(n - i))
        cs.append(u ** i * c)
    return DiffOp(cs)


def dn_identity_suite(rng: random.Random, points: int = 5, max_n: int = 4) -> SuiteResult:
    """``D^n (z-w)^n`` in normal form against the closed expansion."""
    out = SuiteResult("dn-identity")
    for n in range(1, max_n + 1):
        for _ in range(points):
            w = rand_point_in_disc(rng)
            lhs = compose(DiffOp.d(n), DiffOp.mult(Poly([-w, 1]) ** n))
            out.record(f"n={n} w={w}", lhs == dn_expansion(n, w))
    return out.close()


def factorized_form(n: int, w) -> DiffOp:
    """``(-1/w)^n prod_{i=1}^{n} (L + i - 1)`` with ``L = (z-w) D + 2``."""
    acc = DiffOp.identity()
    for i in range(1, n + 1):
        acc = compose(acc, DiffOp([Poly([i + 1]), Poly([-w, 1])]))
    return acc * ((GaussQ(-1) / w) ** n)


def factorization_suite(rng: random.Random, points: int = 5, max_n: int = 4) -> SuiteResult:
    """``Lambda_n (T_zbar - 1/w)^n`` equals the factorized form, as operators and on polynomials."""
    out = SuiteResult("factorization")
    for n in range(1, max_n + 1):
        for _ in range(points):
            w = rand_point_in_disc(rng)
            sym = (PolyanalyticSymbol.zbar(1) - GaussQ(1) / w) ** n
            target = factorized_form(n, w)
            f = rand_poly(rng, 6)
            on_f = apply(build_lambda(n), apply_toeplitz_poly(sym, f)) == apply(target, f)
            out.record(f"n={n} w={w}", build_dphi(sym) == target and on_f)
    return out.close()


def three_route_suite(rng: random.Random, cases: int) -> SuiteResult:
    """First-order criterion, simple-zero route and generic route give one verdict."""
    out = SuiteResult("three-route")
    for sym, w, res in first_order_suite(rng, cases):
        fo = first_order_criterion(sym.coeffs[0])
        a = analyze(sym, route="simple-zero")
        b = analyze(sym, route="generic")
        ok = (fo.verdict == a.verdict == b.verdict
              and fo.kernel_dim == a.kernel_dim_exact == b.kernel_dim_exact)
        out.record(f"{sym.to_json()} w={w} res={res}", ok)
    return out.close()


def run_selftest(seed: int = 0, cases: int = 200, *, fault: str | None = None) -> list[SuiteResult]:
    """Run every suite from one seeded generator.

    ``cases`` sizes the lemma-key and leading-term suites; the three-route
    suite uses a tenth of it (at least 10).
    """
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}")
    rng = random.Random(seed)
    return [
        lemma_key_suite(rng, cases, fault=fault),
        leading_term_suite(rng, cases),
        dn_identity_suite(rng),
        factorization_suite(rng),
        three_route_suite(rng, max(10, cases // 10)),
    ]


def format_table(results: list[SuiteResult]) -> str:
    rows = [f"{'suite':<14} {'cases':>6} {'fail':>5}  status  digest"]
    for r in results:
        rows.append(f"{r.name:<14} {r.cases:>6} {r.failures:>5}  {'PASS' if r.passed else 'FAIL':<6}  {r.digest}")
        if r.first_failure:
            rows.append(f"  first failure: {r.first_failure}")
    return "\n".join(rows)
