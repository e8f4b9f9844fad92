"""Command-line front end.

Exit codes: 0 analysis completed (any verdict), 1 selftest failure,
2 input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .criteria import ROUTES, AnalysisReport, Verdict, analyze, spectrum_probe
from .errors import ParseError, ValidationError
from .oracle import ProbeThresholds, kernel_probe, truncate
from .scalarpoly import GaussQ, point_str
from .selftest import FAULTS, format_table, run_selftest
from .symbolkit import PolyanalyticSymbol, parse_symbol

EXIT_OK, EXIT_SELFTEST, EXIT_INPUT = 0, 1, 2

#: Grid points are rounded to rationals with this denominator bound on the exact backend.
GRID_DENOMINATOR = 10 ** 6


class InputError(Exception):
    pass


@dataclass(frozen=True)
class GridSpec:
    center: complex
    radius: float
    n_radii: int
    n_angles: int

    def points(self) -> list[complex]:
        """Radii ``r (j + 1/2)/n_radii`` times angles ``2 pi k / n_angles``."""
        out = []
        for j in range(self.n_radii):
            rho = self.radius * (j + 0.5) / self.n_radii
            for k in range(self.n_angles):
                out.append(self.center + rho * complex(math.cos(2 * math.pi * k / self.n_angles),
                                                       math.sin(2 * math.pi * k / self.n_angles)))
        return out


def parse_sizes(text: str) -> list[int]:
    try:
        sizes = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise InputError(f"--truncate: expected comma-separated integers, got {text!r}") from None
    if not sizes or any(s < 1 for s in sizes):
        raise InputError("--truncate: sizes must be positive")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise InputError("--truncate: sizes must be strictly increasing")
    return sizes


def parse_grid(text: str) -> GridSpec:
    parts = text.split(",")
    if len(parts) != 5:
        raise InputError("--grid: expected cx,cy,r,nr,ntheta")
    try:
        cx, cy, r = (float(p) for p in parts[:3])
        nr, nt = int(parts[3]), int(parts[4])
    except ValueError:
        raise InputError(f"--grid: cannot parse {text!r}") from None
    if not all(math.isfinite(x) for x in (cx, cy, r)) or r < 0:
        raise InputError("--grid: center and radius must be finite, radius nonnegative")
    if nr < 1 or nt < 1:
        raise InputError("--grid: empty grid (nr and ntheta must be at least 1)")
    return GridSpec(complex(cx, cy), r, nr, nt)


def load_symbol(path: str, backend: str) -> PolyanalyticSymbol:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read symbol file: {exc}") from None
    return parse_symbol(text, backend=backend)


def thresholds_from(args) -> ProbeThresholds:
    base = ProbeThresholds()
    return ProbeThresholds(
        decay_factor=args.decay_factor if args.decay_factor is not None else base.decay_factor,
        final_max=args.final_max if args.final_max is not None else base.final_max,
        gap_min=args.gap_min if args.gap_min is not None else base.gap_min,
        noise_floor=args.noise_floor if args.noise_floor is not None else base.noise_floor,
    )


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def report_text(rep: AnalysisReport) -> str:
    lines = [f"verdict: {rep.verdict.value}", f"order n: {rep.n}", f"route: {rep.route}"]
    if rep.index is not None:
        lines.append(f"winding: {rep.index.winding}  fredholm index: {rep.fredholm_index}")
    exact = "unknown" if rep.kernel_dim_exact is None else rep.kernel_dim_exact
    lines.append(f"kernel dim: {exact} (bounds {rep.kernel_dim_lower}..{rep.kernel_dim_upper})")
    lines.append(f"surjective: {'unknown' if rep.surjective is None else rep.surjective}")
    lines.append(f"confidence: {rep.confidence}")
    for d in rep.per_zero_indicial:
        lines.append(f"indicial at {point_str(d.point)}: nonnegative integer roots "
                     f"{list(d.nonneg_integer_roots)}")
    lines.append("claims:")
    lines.extend(f"  - {c.claim}  [{c.rule}]" for c in rep.provenance)
    for w in rep.warnings:
        lines.append(f"warning: {w}")
    if rep.oracle is not None:
        o = rep.oracle
        lines.append(f"oracle: estimated defect {o['estimated_kernel_dim']} split {o['defect_split']}, "
                     f"expected {o['expected_defect']}, agrees {o['agrees']}")
        for n, s in zip(o["sizes"], o["sigmas"]):
            lines.append(f"  N={n}: " + " ".join(f"{x:.3e}" for x in s))
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    sym = load_symbol(args.symbol, args.backend)
    sizes = parse_sizes(args.truncate) if args.truncate else None
    try:
        rep = analyze(sym, route=args.route, sizes=sizes, thresholds=thresholds_from(args))
    except ValueError as exc:
        if args.route != "auto":
            raise InputError(str(exc)) from None
        raise
    _emit(_dump_json(rep.to_dict()) if args.format == "json" else report_text(rep), args.out)
    return EXIT_OK


def _grid_scalar(c: complex, backend: str):
    if backend == "float":
        return c
    return GaussQ(Fraction(c.real).limit_denominator(GRID_DENOMINATOR),
                  Fraction(c.imag).limit_denominator(GRID_DENOMINATOR))


def cmd_spectrum(args) -> int:
    sym = load_symbol(args.symbol, args.backend)
    if not args.grid:
        raise InputError("spectrum needs --grid cx,cy,r,nr,ntheta")
    grid = parse_grid(args.grid)
    mus = [_grid_scalar(c, args.backend) for c in grid.points()]
    rows = spectrum_probe(sym, mus, workers=args.workers)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["re", "im", "verdict"])
    counts = Counter()
    for mu, verdict in rows:
        c = complex(mu)
        w.writerow([f"{c.real:.12g}", f"{c.imag:.12g}", verdict.value])
        counts[verdict.value] += 1
    _emit(buf.getvalue(), args.out)
    summary = ", ".join(f"{v.value}={counts.get(v.value, 0)}" for v in Verdict)
    sys.stderr.write(f"summary: {len(rows)} points: {summary}\n")
    return EXIT_OK


def cmd_truncate(args) -> int:
    sym = load_symbol(args.symbol, args.backend)
    sizes = parse_sizes(args.truncate or "32,64,128")
    if args.format == "text":
        rep = kernel_probe(sym, sizes, thresholds_from(args), strict=False)
        _emit(rep.to_csv(), args.out)
        return EXIT_OK
    out = []
    for n in sizes:
        t = truncate(sym, n)
        out.append({
            "N": n,
            "bandwidth": list(t.bandwidth()),
            "matrix": [[[float(x.real), float(x.imag)] for x in row] for row in t.entries],
            "singular_values": [float(x) for x in t.singular_values()],
        })
    _emit(_dump_json({"sections": out}), args.out)
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = run_selftest(args.seed, args.cases, fault=args.inject_fault)
    if args.format == "json":
        text = _dump_json({"seed": args.seed, "cases": args.cases,
                           "suites": [r.to_dict() for r in results]})
    else:
        text = format_table(results) + "\n"
    _emit(text, args.out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_SELFTEST


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polytoeplitz", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, *, symbol=True):
        if symbol:
            sp.add_argument("--symbol", required=True, help="symbol JSON file ('-' for stdin)")
            sp.add_argument("--backend", choices=("exact", "float"), default="exact")
        sp.add_argument("--out", help="write output here instead of stdout")
        sp.add_argument("--format", choices=("json", "text"), default="json")

    def probe_opts(sp):
        sp.add_argument("--truncate", help="finite-section sizes N1,N2,... (strictly increasing)")
        sp.add_argument("--decay-factor", type=float)
        sp.add_argument("--final-max", type=float)
        sp.add_argument("--gap-min", type=float)
        sp.add_argument("--noise-floor", type=float)

    sp = sub.add_parser("analyze", help="kernel, cokernel and invertibility report")
    common(sp)
    probe_opts(sp)
    sp.add_argument("--route", choices=ROUTES, default="auto")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("spectrum", help="verdict of T_(phi - mu) over a polar grid of mu")
    common(sp)
    sp.add_argument("--grid", help="cx,cy,r,nr,ntheta")
    sp.add_argument("--workers", type=int, default=None)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("truncate", help="finite-section matrices and singular values")
    common(sp)
    probe_opts(sp)
    sp.set_defaults(func=cmd_truncate)

    sp = sub.add_parser("selftest", help="exact identity suites on seeded random inputs")
    common(sp, symbol=False)
    sp.set_defaults(format="text")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--cases", type=int, default=200)
    sp.add_argument("--inject-fault", choices=FAULTS, default=None, help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "cases", 1) < 1:
        sys.stderr.write("error: --cases must be positive\n")
        return EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, ParseError, ValidationError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
