"""Kernel, cokernel and invertibility verdicts for ``T_phi``.

``analyze`` dispatches on the zeros of the tilde polynomial:

* a zero on the circle: not Fredholm;
* ``n = 0``: ``T_phi`` is multiplication by ``a_0``;
* no zero in the closed disc: surjective with ``n``-dimensional kernel;
* one simple zero ``w`` in the disc: residue of ``tilde(dphi/dz)/tilde`` at ``w``;
* an ``n``-fold zero of the shape ``(z-w)^n psi + (zbar - 1/w)^n``:
  closed-form indicial polynomial;
* anything else: per-zero Frobenius data, which bounds the kernel.

Every numeric fact in the report carries a ``Claim`` naming the rule used.
The index, once known, fixes the cokernel through
``dim coker = dim ker - index``.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import (
    InternalInconsistency, NotRegular, ResonanceObstruction, ValidationError,
    WindingDisagreement, WZeroExcluded,
)
from .frobenius import IndicialData, classify, indicial, series_solution
from .oracle import ProbeThresholds, kernel_probe
from .scalarpoly import (
    ONE, GaussQ, Poly, Zero, falling_factorial, integer_ratio_at, is_exact_point, laurent,
    locate_zeros, order_at, point_str, scalar, to_complex, value_at, vanishes_at,
)
from .symbolkit import IndexData, PolyanalyticSymbol, index_data, shift_by_scalar, tilde
from .weylops import DiffOp, build_dphi


class Verdict(str, Enum):
    INVERTIBLE = "Invertible"
    NOT_INVERTIBLE = "NotInvertible"
    NOT_FREDHOLM = "NotFredholm"
    INCONCLUSIVE = "Inconclusive"


# Rule anchors attached to claims.
A_INDEX = "index lemma: Fredholm iff phi has no zero on the circle; index = -winding"
A_ORDER_BOUND = "kernel of T_phi lies in the solution space of D_phi y = 0, so dim ker <= n"
A_ZERO_FREE = "tilde zero-free on the closed disc: T_phi onto with n-dimensional kernel"
A_SIMPLE_ZERO = "single simple tilde zero w: T_phi onto iff res_w(tilde(dphi/dz)/tilde) not in Z>=n+1"
A_MULTI_ZERO = "n-fold zero pattern (z-w)^n psi + (zbar - 1/w)^n: injective iff no indicial root in Z>=0"
A_FUCHS = "Fuchs: local holomorphic solutions at a regular singular point <-> nonnegative integer indicial roots"
A_FIRST_ORDER = "first-order symbol zbar + f: kernel iff every disc zero of 1+zf is a simple pole of (2f+zf')/(1+zf) with residue in Z<=0"
A_FREDHOLM = "Fredholm arithmetic: dim coker = dim ker - index; invertible iff index 0 and injective"
A_MULTIPLICATION = "holomorphic symbol: T_phi is multiplication by a_0"
A_IRREGULAR_FIRST = "first-order equation at an irregular point: the solution has an essential singularity"


@dataclass(frozen=True)
class Claim:
    claim: str
    rule: str
    anchor: str

    def to_dict(self) -> dict:
        return {"claim": self.claim, "rule": self.rule, "anchor": self.anchor}


@dataclass(frozen=True)
class AnalysisReport:
    n: int
    index: IndexData | None
    kernel_dim_lower: int
    kernel_dim_upper: int
    kernel_dim_exact: int | None
    surjective: bool | None
    verdict: Verdict
    route: str
    per_zero_indicial: tuple[IndicialData, ...] = ()
    provenance: tuple[Claim, ...] = ()
    warnings: tuple[str, ...] = ()
    confidence: str = "exact"
    oracle: dict | None = None

    @property
    def fredholm_index(self) -> int | None:
        return None if self.index is None else self.index.fredholm_index

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "index": None if self.index is None else self.index.to_dict(),
            "kernel_dim_lower": self.kernel_dim_lower,
            "kernel_dim_upper": self.kernel_dim_upper,
            "kernel_dim_exact": self.kernel_dim_exact,
            "surjective": self.surjective,
            "verdict": self.verdict.value,
            "route": self.route,
            "confidence": self.confidence,
            "per_zero_indicial": [d.to_dict() for d in self.per_zero_indicial],
            "provenance": [c.to_dict() for c in self.provenance],
            "warnings": list(self.warnings),
            "oracle": self.oracle,
        }


@dataclass
class RouteResult:
    route: str
    kernel_exact: int | None = None
    kernel_upper: int | None = None
    surjective: bool | None = None
    claims: list[Claim] = field(default_factory=list)
    per_zero: list[IndicialData] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    residue: complex | None = None


@dataclass(frozen=True)
class FirstOrderResult:
    kernel_dim: int | None
    index: int | None
    verdict: Verdict
    residues: tuple[tuple[str, complex | None, int | None, int], ...]
    claims: tuple[Claim, ...]


@dataclass(frozen=True)
class PatternMatch:
    """``phi = kappa ((z - w)^n psi + (zbar - 1/w)^n)``; only ``psi(w)`` is kept."""

    w: object
    kappa: object
    psi_at_w: object


# -- helpers -------------------------------------------------------------

def _zeros_by_location(tz: Poly) -> dict[str, list[Zero]]:
    out: dict[str, list[Zero]] = {"inside": [], "boundary": [], "outside": []}
    for z in locate_zeros(tz):
        out[z.location()].append(z)
    return out


def _local_solution_count(a: DiffOp, w, ind: IndicialData, warnings: list[str]) -> int:
    """Local holomorphic solutions at ``w``: nonnegative roots whose series exists."""
    if not ind.nonneg_integer_roots:
        return 0
    M = max(ind.nonneg_integer_roots) + 1
    count = 0
    for lam in ind.nonneg_integer_roots:
        try:
            series_solution(a, w, lam, M)
            count += 1
        except ResonanceObstruction as exc:
            warnings.append(f"resonance: {exc}")
    return count


def multiple_zero_indicial(n: int, psi_w, w) -> Poly:
    """``prod_{i=1}^{n} (lam+i+1) + psi(w) (-w)^n w^n sum_i n!^2/(i!^2 (n-i)!) lam^(i)``.

    This is the indicial polynomial, up to the nonzero factor ``(-1/w)^n``,
    of ``D_phi`` at ``w`` for ``phi = (z-w)^n psi + (zbar - 1/w)^n``.
    """
    exact = type(psi_w) is GaussQ and type(w) is GaussQ
    prod = Poly([1])
    for i in range(1, n + 1):
        prod = prod * Poly([i + 1, 1])
    s = Poly([])
    for i in range(n + 1):
        s = s + falling_factorial(i) * Fraction(math.factorial(n) ** 2,
                                                math.factorial(i) ** 2 * math.factorial(n - i))
    fac = psi_w * (-w) ** n * w ** n
    if not exact:
        prod, s = prod.to_complex(), s.to_complex()
        fac = complex(fac)
    return prod + s * fac


def match_multiple_zero_pattern(sym: PolyanalyticSymbol, inside: Sequence[Zero]) -> PatternMatch | None:
    """Recognize ``kappa ((z-w)^n psi + (zbar - 1/w)^n)`` with ``0 != w`` in the disc."""
    n = sym.n
    if n < 1 or any(sym.coeffs[i].degree > 0 for i in range(1, n + 1)):
        return None
    kappa = sym.coeffs[n].lead()
    if not kappa:
        return None
    if n >= 2:
        an1 = sym.coeffs[n - 1]
        if an1.is_zero():
            return None
        cands = [-kappa * n / an1.lead()]
        cands = [z.point for z in inside if _same_point(z.point, cands[0])]
    else:
        cands = [z.point for z in inside]
    for w in cands:
        if type(w) is GaussQ and not w:
            continue
        if not is_exact_point(w) and abs(to_complex(w)) < 1e-12:
            continue
        if _pattern_holds(sym, w, kappa):
            a0 = sym.coeffs[0]
            psi_w = value_at(a0.deriv(n), w) / (kappa * math.factorial(n))
            return PatternMatch(w, kappa, psi_w)
    return None


def _same_point(w, c) -> bool:
    if type(w) is GaussQ and type(c) is GaussQ:
        return w == c
    return abs(to_complex(w) - complex(c)) <= 1e-9 * max(1.0, abs(complex(c)))


def _pattern_holds(sym: PolyanalyticSymbol, w, kappa) -> bool:
    n = sym.n
    exact = type(w) is GaussQ and sym.exact
    if exact:
        inv = -ONE / w
        for i in range(1, n):
            want = kappa * math.comb(n, i) * inv ** (n - i)
            if sym.coeffs[i] != Poly([want]):
                return False
        rest = sym.coeffs[0] - Poly([kappa * inv ** n])
        return rest.is_zero() or order_at(rest, w) >= n
    wc = to_complex(w)
    inv = -1 / wc
    for i in range(1, n):
        want = complex(kappa) * math.comb(n, i) * inv ** (n - i)
        have = complex(sym.coeffs[i].lead()) if not sym.coeffs[i].is_zero() else 0j
        if abs(have - want) > 1e-9 * max(1.0, abs(want)):
            return False
    if n == 1:
        # the only condition is tilde(w) = 0, which holds for disc zeros
        return True
    rest = sym.coeffs[0].to_complex() - Poly([complex(kappa) * inv ** n])
    return rest.is_zero() or order_at(rest, wc) >= n


# -- routes --------------------------------------------------------------

def multiplication_route(sym: PolyanalyticSymbol) -> RouteResult:
    r = RouteResult("multiplication", kernel_exact=0)
    r.claims.append(Claim("kernel is trivial (multiplication by a nonzero holomorphic function)",
                          "multiplication", A_MULTIPLICATION))
    return r


def zero_free_route(sym: PolyanalyticSymbol) -> RouteResult:
    r = RouteResult("zero-free", kernel_exact=sym.n, surjective=True)
    r.claims.append(Claim(f"tilde has no zeros in the closed disc: kernel dimension {sym.n}, surjective",
                          "zero-free-tilde", A_ZERO_FREE))
    return r


def simple_zero_residue(sym: PolyanalyticSymbol, w) -> tuple[complex, int | None, object]:
    """``res_w(tilde(dphi/dz)/tilde)`` at a simple zero: (approx, integer value or None, exact value or None)."""
    tz = tilde(sym)
    tdz = tilde(sym.dz(), sym.n)
    if type(w) is GaussQ and tz.exact and tdz.exact:
        res = laurent(tdz, tz, w, -1).residue
        return complex(res), (int(res.re) if res.is_integer() else None), res
    approx = complex(value_at(tdz, w)) / complex(value_at(tz.deriv(), w))
    return approx, integer_ratio_at(tdz, tz.deriv(), w), None


def simple_zero_route(sym: PolyanalyticSymbol, zero: Zero, dphi: DiffOp | None = None) -> RouteResult:
    n = sym.n
    w = zero.point
    dphi = dphi if dphi is not None else build_dphi(sym)
    approx, k, _ = simple_zero_residue(sym, w)
    r = RouteResult("simple-zero", residue=approx)
    blocked = k is not None and k >= n + 1
    if blocked:
        r.kernel_exact, r.surjective = n, False
        r.claims.append(Claim(f"residue {k} at {point_str(w)} lies in Z>=n+1: not onto, kernel dimension {n}",
                              "simple-zero-residue", A_SIMPLE_ZERO))
    else:
        r.kernel_exact, r.surjective = n - 1, True
        shown = k if k is not None else f"{approx:.6g}"
        r.claims.append(Claim(f"residue {shown} at {point_str(w)} not in Z>=n+1: onto, kernel dimension {n - 1}",
                              "simple-zero-residue", A_SIMPLE_ZERO))
    # the Frobenius data must reproduce {0, ..., n-2} together with residue - 2
    ind = indicial(dphi, w)
    r.per_zero.append(ind)
    expected = set(range(n - 1))
    if k is not None and k - 2 >= 0:
        expected.add(k - 2)
    if set(ind.nonneg_integer_roots) != expected:
        raise InternalInconsistency(
            f"indicial roots {ind.nonneg_integer_roots} at {point_str(w)} disagree with residue route {sorted(expected)}")
    return r


def multiple_zero_route(sym: PolyanalyticSymbol, match: PatternMatch, zones: dict[str, list[Zero]],
                        dphi: DiffOp | None = None) -> RouteResult:
    n = sym.n
    w = match.w
    dphi = dphi if dphi is not None else build_dphi(sym)
    r = RouteResult("multiple-zero")
    if not classify(dphi, w):
        raise InternalInconsistency(f"n-fold zero pattern at {point_str(w)} is not regular singular")
    ind = indicial(dphi, w)
    r.per_zero.append(ind)
    closed = multiple_zero_indicial(n, match.psi_at_w, w if type(w) is GaussQ else to_complex(w))
    if not _proportional(ind.indicial_poly, closed):
        raise InternalInconsistency(f"indicial polynomial at {point_str(w)} does not match the closed form")
    roots = ind.nonneg_integer_roots
    if not roots:
        r.kernel_exact = 0
        r.claims.append(Claim(f"closed-form indicial polynomial at {point_str(w)} has no roots in Z>=0: injective",
                              "multiple-zero-indicial", A_MULTI_ZERO))
        return r
    local = _local_solution_count(dphi, w, ind, r.warnings)
    only = len(zones["inside"]) == 1
    if only:
        r.kernel_exact = local
        r.claims.append(Claim(f"{point_str(w)} is the only tilde zero in the closed disc: kernel dimension "
                              f"{local} from indicial roots {list(roots)}", "multiple-zero-indicial", A_MULTI_ZERO))
    else:
        r.kernel_upper = min(n, local)
        r.claims.append(Claim(f"local solutions at {point_str(w)} bound the kernel by {r.kernel_upper}",
                              "frobenius-local-bound", A_FUCHS))
    return r


def _proportional(p: Poly, q: Poly) -> bool:
    if p.degree != q.degree or p.is_zero():
        return False
    if p.exact and q.exact:
        ratio = p.lead() / q.lead()
        return p == q * ratio
    pc, qc = p.to_complex(), q.to_complex()
    ratio = pc.lead() / qc.lead()
    diff = pc - qc * ratio
    scale = max(abs(c) for c in pc.coeffs)
    return all(abs(c) <= 1e-7 * scale for c in diff.coeffs)


def generic_route(sym: PolyanalyticSymbol, zones: dict[str, list[Zero]], dphi: DiffOp | None = None) -> RouteResult:
    n = sym.n
    dphi = dphi if dphi is not None else build_dphi(sym)
    r = RouteResult("generic")
    locals_: list[int] = []
    for zero in zones["inside"]:
        w = zero.point
        if not classify(dphi, w):
            if dphi.order == 1:
                locals_.append(0)
                r.claims.append(Claim(f"irregular point {point_str(w)} of a first-order equation: "
                                      "no nonzero holomorphic solution", "first-order-irregular", A_IRREGULAR_FIRST))
            else:
                r.warnings.append(f"irregular singular point at {point_str(w)}: no local bound")
                locals_.append(n)
            continue
        ind = indicial(dphi, w)
        r.per_zero.append(ind)
        local = _local_solution_count(dphi, w, ind, r.warnings)
        locals_.append(local)
        r.claims.append(Claim(f"{local} local holomorphic solution(s) at {point_str(w)} "
                              f"(indicial roots in Z>=0: {list(ind.nonneg_integer_roots)})",
                              "frobenius-local", A_FUCHS))
    bound = min([n] + locals_)
    if len(zones["inside"]) == 1:
        r.kernel_exact = bound
        r.claims.append(Claim(f"single singular point in the closed disc: local solutions extend, kernel dimension {bound}",
                              "frobenius-global", A_FUCHS))
    else:
        r.kernel_upper = bound
        if bound == 0:
            r.kernel_exact = 0
    return r


def first_order_criterion(f: Poly) -> FirstOrderResult:
    """Kernel and verdict for ``T_{zbar + f}`` from the first-order equation.

    ``T_{zbar+f} y = 0`` iff ``(1 + z f) y' = -(2 f + z f') y``.  A nonzero
    holomorphic solution exists iff at every zero of ``1 + z f`` in the disc
    the coefficient ``(2f + z f')/(1 + z f)`` has at most a simple pole with
    residue in ``Z<=0``.
    """
    z = Poly.z()
    h = Poly([1]) + z * f
    g = f * 2 + z * f.deriv()
    claims = []
    zones = _zeros_by_location(h) if h.degree > 0 else {"inside": [], "boundary": [], "outside": []}
    if zones["boundary"]:
        return FirstOrderResult(None, None, Verdict.NOT_FREDHOLM, (), (
            Claim("1 + z f vanishes on the circle", "index", A_INDEX),))
    index = 1 - sum(zr.multiplicity for zr in zones["inside"])
    residues = []
    holomorphic = True
    for zr in zones["inside"]:
        w, m = zr.point, zr.multiplicity
        og = order_at(g, w) if not g.is_zero() else m
        pole = max(0, m - og)
        if pole == 0:
            residues.append((point_str(w), 0j, 0, 0))
            continue
        if pole >= 2:
            holomorphic = False
            residues.append((point_str(w), None, None, pole))
            continue
        if type(w) is GaussQ and h.exact:
            res = laurent(g, h, w, -1).residue
            k = int(res.re) if res.is_integer() else None
            approx = complex(res)
        else:
            # simple pole of g/h at an m-fold zero of h: res = m g^(m-1)(w) / h^(m)(w)
            num, den = g.deriv(m - 1) * m, h.deriv(m)
            approx = complex(value_at(num, w)) / complex(value_at(den, w))
            k = integer_ratio_at(num, den, w)
        residues.append((point_str(w), approx, k, 1))
        if k is None or k > 0:
            holomorphic = False
    kernel = 1 if holomorphic else 0
    claims.append(Claim(f"first-order equation has {'a' if kernel else 'no'} nonzero holomorphic solution on the disc",
                        "first-order-residue", A_FIRST_ORDER))
    if kernel:
        verdict = Verdict.NOT_INVERTIBLE
    else:
        verdict = Verdict.INVERTIBLE if index == 0 else Verdict.NOT_INVERTIBLE
    return FirstOrderResult(kernel, index, verdict, tuple(residues), tuple(claims))


def _first_order_normal_form(sym: PolyanalyticSymbol) -> Poly | None:
    """``f`` with ``phi = kappa (zbar + f)``, when ``a_1`` is a nonzero constant."""
    if sym.n != 1 or sym.coeffs[1].degree != 0:
        return None
    kappa = sym.coeffs[1].lead()
    return sym.coeffs[0] * (ONE / kappa if type(kappa) is GaussQ else 1 / kappa)


# -- analysis ------------------------------------------------------------

ROUTES = ("auto", "simple-zero", "multiple-zero", "generic", "first-order")


def analyze(sym: PolyanalyticSymbol, *, route: str = "auto", sizes: Sequence[int] | None = None,
            thresholds: ProbeThresholds | None = None) -> AnalysisReport:
    """Kernel bounds and an invertibility verdict for ``T_phi``.

    ``route`` forces one derivation (raising ``ValueError`` when its
    hypotheses fail); ``sizes`` attaches finite-section corroboration.
    """
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}")
    if not sym.is_canonical():
        raise ValidationError("analyze needs a canonical symbol (top coefficient not identically zero)")
    n = sym.n
    claims: list[Claim] = []
    warnings: list[str] = []
    confidence = "exact" if sym.exact else "numeric-confidence"
    try:
        idx = index_data(sym)
    except WindingDisagreement as exc:
        warnings.append(f"winding disagreement: {exc}")
        return AnalysisReport(n, None, 0, n, None, None, Verdict.INCONCLUSIVE, "degenerate",
                              (), tuple(claims), tuple(warnings), confidence)
    if idx.boundary_zero_flag:
        claims.append(Claim("phi vanishes (or may vanish) on the circle", "index", A_INDEX))
        warnings.append("tilde has a boundary-ambiguous zero: Fredholm property undecidable or false")
        return _attach_oracle(AnalysisReport(n, idx, 0, n, None, None, Verdict.NOT_FREDHOLM, "not-fredholm",
                                             (), tuple(claims), tuple(warnings), confidence),
                              sym, sizes, thresholds)
    index = idx.fredholm_index
    claims.append(Claim(f"winding {idx.winding}, Fredholm index {index}", "index", A_INDEX))
    claims.append(Claim(f"kernel dimension at most {n}", "order-bound", A_ORDER_BOUND))

    tz = tilde(sym)
    zones = _zeros_by_location(tz) if tz.degree > 0 else {"inside": [], "boundary": [], "outside": []}
    inside = zones["inside"]
    dphi = build_dphi(sym) if n >= 1 else None
    fo_f = _first_order_normal_form(sym)

    result: RouteResult
    if route == "first-order":
        if fo_f is None:
            raise ValueError("first-order route needs phi = kappa (zbar + f)")
        result = _first_order_as_route(first_order_criterion(fo_f))
    elif route == "auto":
        if n == 0:
            result = multiplication_route(sym)
        elif not inside:
            result = zero_free_route(sym)
        elif len(inside) == 1 and inside[0].multiplicity == 1:
            result = simple_zero_route(sym, inside[0], dphi)
        else:
            match = match_multiple_zero_pattern(sym, inside)
            if match is not None and classify(dphi, match.w):
                result = multiple_zero_route(sym, match, zones, dphi)
            else:
                result = generic_route(sym, zones, dphi)
    elif route == "simple-zero":
        if n < 1 or len(inside) != 1 or inside[0].multiplicity != 1:
            raise ValueError("simple-zero route needs exactly one simple tilde zero in the disc")
        result = simple_zero_route(sym, inside[0], dphi)
    elif route == "multiple-zero":
        match = match_multiple_zero_pattern(sym, inside) if n >= 1 else None
        if match is None:
            raise ValueError("symbol does not have the n-fold zero pattern")
        result = multiple_zero_route(sym, match, zones, dphi)
    else:
        if n < 1:
            raise ValueError("generic route needs n >= 1")
        result = generic_route(sym, zones, dphi)

    if fo_f is not None and route in ("auto",):
        fo = first_order_criterion(fo_f)
        result = _reconcile_first_order(result, fo)

    report = _finalize(sym, idx, result, claims, warnings, confidence)
    return _attach_oracle(report, sym, sizes, thresholds)


def _first_order_as_route(fo: FirstOrderResult) -> RouteResult:
    r = RouteResult("first-order", kernel_exact=fo.kernel_dim)
    r.claims.extend(fo.claims)
    return r


def _reconcile_first_order(result: RouteResult, fo: FirstOrderResult) -> RouteResult:
    if fo.kernel_dim is None:
        return result
    if result.kernel_exact is not None:
        if result.kernel_exact != fo.kernel_dim:
            raise InternalInconsistency(
                f"{result.route} route gives kernel {result.kernel_exact}, first-order criterion {fo.kernel_dim}")
        result.claims.extend(fo.claims)
        return result
    upper = result.kernel_upper
    if upper is not None and fo.kernel_dim > upper:
        raise InternalInconsistency(f"first-order kernel {fo.kernel_dim} exceeds {result.route} bound {upper}")
    adopted = RouteResult(f"{result.route}+first-order", kernel_exact=fo.kernel_dim,
                          claims=result.claims + list(fo.claims), per_zero=result.per_zero,
                          warnings=result.warnings)
    return adopted


def _finalize(sym: PolyanalyticSymbol, idx: IndexData, result: RouteResult, claims: list[Claim],
              warnings: list[str], confidence: str) -> AnalysisReport:
    n = sym.n
    index = idx.fredholm_index
    lower = max(0, index)
    upper = n if result.kernel_upper is None else min(n, result.kernel_upper)
    exact = result.kernel_exact
    if exact is not None:
        if not lower <= exact <= upper:
            raise InternalInconsistency(f"kernel {exact} outside [{lower}, {upper}] from index/order bounds")
        lower = upper = exact
    elif lower > upper:
        raise InternalInconsistency(f"index lower bound {lower} exceeds kernel upper bound {upper}")
    elif lower == upper:
        exact = lower
    claims = claims + result.claims
    surjective = None
    if exact is not None:
        coker = exact - index
        if coker < 0:
            raise InternalInconsistency(f"negative cokernel dimension {coker}")
        surjective = coker == 0
        if result.surjective is not None and result.surjective != surjective:
            raise InternalInconsistency("route surjectivity contradicts index arithmetic")
        claims.append(Claim(f"cokernel dimension {coker}", "fredholm-arithmetic", A_FREDHOLM))
    if index != 0:
        verdict = Verdict.NOT_INVERTIBLE
    elif exact == 0:
        verdict = Verdict.INVERTIBLE
    elif lower > 0:
        verdict = Verdict.NOT_INVERTIBLE
    else:
        verdict = Verdict.INCONCLUSIVE
    claims.append(Claim(f"verdict {verdict.value}", "fredholm-arithmetic", A_FREDHOLM))
    return AnalysisReport(n, idx, lower, upper, exact, surjective, verdict, result.route,
                          tuple(result.per_zero), tuple(claims), tuple(warnings + result.warnings), confidence)


def _attach_oracle(report: AnalysisReport, sym: PolyanalyticSymbol, sizes, thresholds) -> AnalysisReport:
    if not sizes:
        return report
    probe = kernel_probe(sym, sizes, thresholds, strict=False)
    info = probe.to_dict()
    info["sigma_min_stable"] = probe.sigma_min_stable()
    warnings = list(report.warnings)
    expected = None
    if report.kernel_dim_exact is not None and report.fredholm_index is not None:
        # a square section pairs each near-kernel vector with a near-cokernel one,
        # so it sees max(ker, coker) small singular values; the surplus over the
        # kernel shows up as right vectors at the truncation edge
        coker = report.kernel_dim_exact - report.fredholm_index
        expected = max(report.kernel_dim_exact, coker)
    info["expected_defect"] = expected
    if probe.estimated_kernel_dim is None or expected is None:
        info["agrees"] = None
    else:
        info["agrees"] = (probe.estimated_kernel_dim == min(expected, len(probe.sigmas[0]))
                          and (expected > len(probe.sigmas[0])
                               or probe.defect_split == (report.kernel_dim_exact,
                                                         expected - report.kernel_dim_exact)))
        if not info["agrees"]:
            warnings.append(f"oracle disagreement (flagged for review): oracle defect "
                            f"{probe.estimated_kernel_dim} split {probe.defect_split}, engine predicts "
                            f"kernel {report.kernel_dim_exact} and cokernel {coker}")
    if report.verdict is Verdict.INVERTIBLE and not info["sigma_min_stable"]:
        warnings.append("oracle disagreement (flagged for review): sigma_min not stable for an Invertible verdict")
    return replace(report, oracle=info, warnings=tuple(warnings))


def spectrum_probe(sym: PolyanalyticSymbol, grid: Sequence, *, workers: int | None = None) -> list[tuple[object, Verdict]]:
    """Verdict for ``T_{phi - mu}`` at every ``mu`` in ``grid`` (input order preserved)."""
    mus = [scalar(m) for m in grid]
    shifted = [shift_by_scalar(sym, m) for m in mus]
    if workers and workers > 1 and len(mus) > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            verdicts = list(ex.map(_verdict_of, shifted))
    else:
        verdicts = [_verdict_of(s) for s in shifted]
    return list(zip(mus, verdicts))


def _verdict_of(sym: PolyanalyticSymbol) -> Verdict:
    return analyze(sym).verdict


def corollary_symbol(a, w, n: int, m: int) -> PolyanalyticSymbol:
    """``a z^n (z - w)^m + (zbar - 1/w)^m``."""
    a, w = scalar(a), scalar(w)
    if not w:
        raise WZeroExcluded("w = 0 is excluded")
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    exact = type(a) is GaussQ and type(w) is GaussQ
    if (w.abs2() >= 1) if type(w) is GaussQ else (abs(w) >= 1):
        raise ValueError("w must lie in the open unit disc")
    z = Poly.z()
    inv = (ONE / w) if exact else 1 / complex(w)
    hol = Poly([0] * n + [a]) * (z - Poly([w])) ** m
    bar = (PolyanalyticSymbol.zbar(1) - inv) ** m
    return PolyanalyticSymbol.holomorphic(hol) + bar


def corollary_example(a, w, n: int, m: int, *, sizes: Sequence[int] | None = None) -> AnalysisReport:
    """Analyze ``a z^n (z-w)^m + (zbar - 1/w)^m``.

    Its tilde polynomial is ``(-1/w)^m (z-w)^m (1 + a (-w)^m z^(n+m))``, so
    the index vanishes exactly when ``|a| |w|^m < 1``.
    """
    return analyze(corollary_symbol(a, w, n, m), sizes=sizes)
