"""Independent ground truth for ``T_phi`` on the Bergman space.

Everything here rests on the action of ``T_{zbar^k}`` on monomials:
``T_{zbar^k} z^m = (m - k + 1)/(m + 1) z^(m - k)`` for ``m >= k`` and ``0``
otherwise.  From it we get an exact symbolic ``T_phi`` on polynomials and
the ``N x N`` finite section in the orthonormal basis
``e_k = sqrt(k + 1) z^k`` (normalized area measure).
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import ConvergenceAmbiguous
from .scalarpoly import GaussQ, Poly
from .symbolkit import PolyanalyticSymbol


def tzbar_monomial(k: int, n: int) -> Fraction:
    """Scalar coefficient of ``T_{zbar^k} z^n`` (the monomial has degree ``n - k``)."""
    if k < 0 or n < 0:
        raise ValueError("k and n must be nonnegative")
    if k > n:
        return Fraction(0)
    return Fraction(n - k + 1, n + 1)


def _tzbar_poly(k: int, f: Poly) -> Poly:
    if k == 0:
        return f
    out = [c * tzbar_monomial(k, m) for m, c in enumerate(f.coeffs) if m >= k]
    return Poly(out)


def apply_toeplitz_poly(sym: PolyanalyticSymbol, f: Poly) -> Poly:
    """Exact ``T_phi(f) = sum_i T_{zbar^i}(a_i f)`` for a polynomial ``f``."""
    out = Poly([])
    for i, a in enumerate(sym.coeffs):
        if not a.is_zero():
            out = out + _tzbar_poly(i, a * f)
    return out


@dataclass(frozen=True)
class TruncatedToeplitz:
    """Finite section of ``T_phi`` on ``span{z^0, ..., z^(N-1)}`` (orthonormal basis)."""

    N: int
    entries: np.ndarray = field(repr=False)
    symbol: PolyanalyticSymbol = field(repr=False)

    def singular_values(self) -> np.ndarray:
        """All singular values, ascending."""
        return np.sort(np.linalg.svd(self.entries, compute_uv=False))

    def bandwidth(self) -> tuple[int, int]:
        """``(below, above)``: largest ``q - p`` and ``p - q`` over nonzero entries."""
        q, p = np.nonzero(self.entries)
        if q.size == 0:
            return (0, 0)
        return (int(max(0, np.max(q - p))), int(max(0, np.max(p - q))))


def truncate(sym: PolyanalyticSymbol, N: int) -> TruncatedToeplitz:
    """``N x N`` matrix whose column ``p`` is ``T_phi(e_p)`` cut to rows ``< N``."""
    if N < 1:
        raise ValueError("N must be at least 1")
    mat = np.zeros((N, N), dtype=complex)
    p = np.arange(N)
    for i, a in enumerate(sym.coeffs):
        for k, c in enumerate(a.coeffs):
            if not c:
                continue
            m = p + k          # z^i-bar z^k z^p -> T_{zbar^i} z^m
            q = m - i
            ok = (q >= 0) & (q < N)
            pp, mm, qq = p[ok], m[ok], q[ok]
            t = (mm - i + 1) / (mm + 1)
            mat[qq, pp] += complex(c) * t * np.sqrt((pp + 1) / (qq + 1))
    return TruncatedToeplitz(N, mat, sym)


@dataclass(frozen=True)
class ProbeThresholds:
    decay_factor: float = 4.0
    final_max: float = 1e-6
    gap_min: float = 1e-3
    #: below ``noise_floor * sigma_max`` a singular value is numerically zero
    noise_floor: float = 1e-12
    count: int = 4


@dataclass(frozen=True)
class ProbeReport:
    sizes: tuple[int, ...]
    sigmas: tuple[tuple[float, ...], ...]
    sigma_max: tuple[float, ...]
    estimated_kernel_dim: int | None
    ambiguous: str | None = None
    tag: str = "numeric-confidence"
    #: decaying directions at the largest size split as (kernel-like, cokernel-like)
    defect_split: tuple[int, int] | None = None

    def sigma_min(self) -> list[float]:
        return [s[0] for s in self.sigmas]

    def sigma_min_stable(self, rel: float = 0.2) -> bool:
        """``sigma_min`` stays within ``rel`` of its last value across all sizes."""
        s = self.sigma_min()
        ref = s[-1]
        return ref > 0 and all(abs(x - ref) <= rel * ref for x in s)

    def to_dict(self) -> dict:
        return {
            "sizes": list(self.sizes),
            "sigmas": [list(s) for s in self.sigmas],
            "estimated_kernel_dim": self.estimated_kernel_dim,
            "ambiguous": self.ambiguous,
            "defect_split": None if self.defect_split is None else list(self.defect_split),
            "tag": self.tag,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        k = len(self.sigmas[0]) if self.sigmas else 4
        w.writerow(["N"] + [f"sigma_{j + 1}" for j in range(k)])
        for n, s in zip(self.sizes, self.sigmas):
            w.writerow([n] + [f"{x:.6e}" for x in s])
        return buf.getvalue()


def _decays(trace: Sequence[float], floors: Sequence[float], th: ProbeThresholds) -> bool:
    for a, b, fa, fb in zip(trace, trace[1:], floors, floors[1:]):
        if a <= fa and b <= fb:
            continue  # both already at machine-noise level
        if b * th.decay_factor > a:
            return False
    return trace[-1] < th.final_max


def estimate_kernel_dim(sizes: Sequence[int], sigmas: Sequence[Sequence[float]],
                        sigma_max: Sequence[float], th: ProbeThresholds) -> tuple[int | None, str | None]:
    floors = [th.noise_floor * s for s in sigma_max]
    k = len(sigmas[0])
    decaying = [_decays([s[j] for s in sigmas], floors, th) for j in range(k)]
    dim = 0
    while dim < k and decaying[dim]:
        dim += 1
    if any(decaying[dim:]):
        return None, "decaying singular values are not the smallest ones"
    if dim < k and sigmas[-1][dim] <= th.gap_min:
        return None, (f"sigma_{dim + 1} = {sigmas[-1][dim]:.3e} neither decays "
                      f"nor stays above {th.gap_min:g}")
    return dim, None


def kernel_probe(sym: PolyanalyticSymbol, sizes: Sequence[int],
                 thresholds: ProbeThresholds | None = None, *, strict: bool = True) -> ProbeReport:
    """Smallest singular values of finite sections and a kernel-dimension estimate.

    A singular value counts toward the kernel when it shrinks by
    ``decay_factor`` at each size step (or sits at the noise floor) and
    ends below ``final_max``, while the next one ends above ``gap_min``.
    With ``strict`` a failed gap test raises ``ConvergenceAmbiguous``;
    otherwise the report carries the reason.
    """
    th = thresholds or ProbeThresholds()
    sizes = tuple(int(s) for s in sizes)
    if any(b <= a for a, b in zip(sizes, sizes[1:])) or not sizes:
        raise ValueError("sizes must be nonempty and strictly increasing")
    sig, smax = [], []
    for n in sizes[:-1]:
        sv = truncate(sym, n).singular_values()
        sig.append(tuple(float(x) for x in sv[: th.count]))
        smax.append(float(sv[-1]))
    u, sv, vh = np.linalg.svd(truncate(sym, sizes[-1]).entries)
    sig.append(tuple(float(x) for x in sv[::-1][: th.count]))
    smax.append(float(sv[0]))
    dim, why = estimate_kernel_dim(sizes, sig, smax, th)
    if why is not None and strict:
        raise ConvergenceAmbiguous(why)
    split = None
    if dim is not None:
        split = defect_split(u, vh, dim)
    return ProbeReport(sizes, tuple(sig), tuple(smax), dim, why, defect_split=split)


def defect_split(u: np.ndarray, vh: np.ndarray, k: int) -> tuple[int, int]:
    """Classify the ``k`` smallest singular directions as kernel- or cokernel-like.

    A genuine kernel element has its right singular vectors concentrated on
    low-degree basis elements; a cokernel element shows up as a right
    vector living at the truncation edge (its left vector is the
    low-degree one).  Counts eigenvalues of the head projection of the
    near-null right subspace above 1/2.
    """
    if k == 0:
        return (0, 0)
    N = vh.shape[0]
    V = vh[N - k:].conj().T          # N x k, near-null right subspace
    head = V[: N // 2]
    mass = np.linalg.eigvalsh(head.conj().T @ head)
    ker = int(np.sum(mass > 0.5))
    return (ker, k - ker)


#: Gauss-Legendre rule on [0, 1]; exact for polynomial integrands of degree < 32.
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(16)
_GL_T = 0.5 * (_GL_NODES + 1.0)
_GL_W = 0.5 * _GL_WEIGHTS


def integral_tzbar(f: Poly, z: np.ndarray) -> np.ndarray:
    """``(1/z^2) int_0^z w f'(w) dw`` by quadrature along the segment ``w = t z``.

    The substitution gives ``int_0^1 t f'(t z) dt``, which is regular at 0.
    """
    z = np.asarray(z, dtype=complex)
    df = f.deriv()
    vals = df.evaluate_many(np.multiply.outer(z, _GL_T))
    return vals @ (_GL_W * _GL_T)


def quadrature_check(f: Poly, *, radii: Sequence[float] = (0.0, 0.3, 0.6, 0.9), angles: int = 12) -> float:
    """Max discrepancy between the integral formula for ``T_zbar f`` and the monomial formula."""
    pts = np.array([r * np.exp(2j * np.pi * k / angles) for r in radii for k in range(angles)])
    exact = apply_toeplitz_poly(PolyanalyticSymbol.zbar(1), f)
    return float(np.max(np.abs(integral_tzbar(f, pts) - exact.evaluate_many(pts))))
