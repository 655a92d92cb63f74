"""Command-line front end.

Exit codes: 0 success, 1 no certificate holds (or an example mismatches),
2 unreadable input or unknown example id, 3 degenerate curve (a straight
segment), 4 a held certificate contradicts the numerical oracle.
"""

from __future__ import annotations

import argparse
import io
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import certifier as cert
from . import farin
from .closed_form import build_model
from .curve import VanishingSpeed, curvature_numeric, evaluate, generate_polygon
from .linalg import LinalgError, decompose
from .plot import render_svg
from .registry import UnknownExample, select
from .specdoc import DocumentError, read_document, to_spec

EXIT_OK, EXIT_NO_CERT, EXIT_INPUT, EXIT_DEGENERATE, EXIT_ALARM = 0, 1, 2, 3, 4
SAMPLES = 1001


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load(path):
    try:
        doc = read_document(path)
        spec = to_spec(doc)
    except (DocumentError, LinalgError, ValueError) as exc:
        raise CliError(f"{path}: {exc}", EXIT_INPUT) from exc
    if build_model(spec).degenerate:
        raise CliError(f"{path}: degenerate spec, the curve is a straight segment", EXIT_DEGENERATE)
    return spec


def _num(x: float) -> str:
    return "%.17g" % x


def samples_csv(spec, samples: int = SAMPLES) -> str:
    poly = generate_polygon(spec)
    ts = np.linspace(0.0, 1.0, samples)
    pts = evaluate(poly, ts)
    try:
        kappa = curvature_numeric(poly, ts)
    except VanishingSpeed as exc:
        raise CliError(f"degenerate spec: {exc}", EXIT_DEGENERATE) from exc
    buf = io.StringIO(newline="")
    buf.write("t,x,y,kappa\n")
    for t, (x, y), k in zip(ts, pts, kappa):
        buf.write(f"{_num(t)},{_num(x)},{_num(y)},{_num(k)}\n")
    return buf.getvalue()


def polygon_csv(spec) -> str:
    lines = ["j,x,y"]
    for j, (x, y) in enumerate(generate_polygon(spec).points):
        lines.append(f"{j},{_num(x)},{_num(y)}")
    return "\n".join(lines) + "\n"


def plot_svg(spec, title: str = "", samples: int = SAMPLES) -> str:
    poly = generate_polygon(spec)
    ts = np.linspace(0.0, 1.0, samples)
    pts = evaluate(poly, ts)
    try:
        kappa = curvature_numeric(poly, ts)
    except VanishingSpeed:
        kappa = np.zeros_like(ts)
    return render_svg(pts, poly.points, ts, np.asarray(kappa), title)


def _write(path: Path, text: str) -> None:
    path.write_bytes(text.encode("utf-8"))


def cmd_generate(args) -> int:
    spec = _load(args.input)
    if args.format == "svg":
        text = plot_svg(spec, title=Path(args.input).name)
    else:
        text = samples_csv(spec)
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    out = Path(args.out)
    _write(out, text)
    if args.format == "csv":
        _write(out.with_name(f"{out.stem}_polygon.csv"), polygon_csv(spec))
    return EXIT_OK


def cmd_plot(args) -> int:
    try:
        spec = to_spec(read_document(args.input))
    except (DocumentError, LinalgError, ValueError) as exc:
        raise CliError(f"{args.input}: {exc}", EXIT_INPUT) from exc
    text = plot_svg(spec, title=Path(args.input).name)
    if args.out is None:
        sys.stdout.write(text)
    else:
        _write(Path(args.out), text)
    return EXIT_OK


def _fmt_value(v) -> str:
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def format_certificate(c: cert.Certificate) -> str:
    status = "holds" if c.holds else "fails"
    qty = " ".join(f"{k}={_fmt_value(v)}" for k, v in c.details)
    return f"  {c.name:<17} {status:<6} {c.direction:<30} {qty}".rstrip()


def cmd_certify(args) -> int:
    spec = _load(args.input)
    model = build_model(spec)
    certs = cert.certify(spec)
    verdict = cert.numeric_monotonicity(spec, args.grid)
    out = sys.stdout
    out.write(f"spectral: {decompose(spec.M).kind}\n")
    out.write(f"degree: {spec.degree}\n")
    out.write(f"kappa0: {model.kappa0:.17g}\n")
    out.write("certificates:\n")
    for c in certs:
        out.write(format_certificate(c) + "\n")
    extrema = ", ".join(f"{t:.10f}" for t in verdict.extrema_locations)
    out.write(f"oracle: {verdict.kind} (grid {verdict.grid_size})")
    out.write(f" extrema at t = {extrema}\n" if extrema else "\n")
    bad = cert.contradictions(certs, verdict, model.kappa0)
    if bad:
        for c in bad:
            sys.stderr.write(f"SOUNDNESS ALARM: {c.name} claims {cert.expected_kind(c, model.kappa0)}, "
                             f"oracle says {verdict.kind}\n")
        return EXIT_ALARM
    return EXIT_OK if any(c.holds for c in certs) else EXIT_NO_CERT


@dataclass(frozen=True)
class ExampleRow:
    key: str
    degree: int
    expected: str
    observed: str
    certificates: tuple
    passed: bool


def run_examples(example_id=None, grid: int = cert.DEFAULT_GRID) -> list[ExampleRow]:
    rows = []
    for rec in select(example_id):
        spec = rec.spec
        verdict = cert.classify(spec, grid)
        held = tuple(c.name for c in cert.certify(spec) if c.holds)
        rows.append(ExampleRow(rec.key, spec.degree, rec.expected_verdict, verdict.kind, held,
                               rec.matches(verdict.kind)))
    return rows


def cmd_examples(args) -> int:
    try:
        rows = run_examples(args.id, args.grid)
    except UnknownExample as exc:
        raise CliError(f"unknown example id {exc.args[0]!r}", EXIT_INPUT) from exc
    out = sys.stdout
    out.write(f"{'id':<6} {'n':>2}  {'expected':<20} {'observed':<20} {'result':<6} certificates\n")
    for r in rows:
        res = "pass" if r.passed else "FAIL"
        out.write(f"{r.key:<6} {r.degree:>2}  {r.expected:<20} {r.observed:<20} {res:<6} "
                  f"{', '.join(r.certificates) or '-'}\n")
    failed = sum(not r.passed for r in rows)
    out.write(f"{len(rows) - failed}/{len(rows)} passed\n")
    return EXIT_OK if failed == 0 else EXIT_NO_CERT


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def _report_sigmas(out, lo: float, hi: float, grid: int) -> None:
    prof = farin.subdivision_sv_profile(lo, hi, grid)
    tmin, fmin = prof.minimum
    corrected, misprint = farin.sigma_conditions(lo, hi)
    out.write(f"sigma_min: {lo!r}\nsigma_max: {hi!r}\n")
    out.write(f"corrected condition sigma_min^3 >= sigma_max: {_yes(corrected)}"
              f" ({lo**3:.10g} vs {hi:.10g})\n")
    out.write(f"misprint condition sigma_min^2 >= sigma_max: {_yes(misprint)}"
              f" ({lo**2:.10g} vs {hi:.10g})\n")
    out.write(f"f'(0) = 3 sigma_min - sigma_max - 2: {prof.f_prime_at_zero:.12g}\n")
    out.write(f"min f on [0,1] (grid {grid}): {fmin:.12g} at t = {tmin:.6g}\n")
    if fmin >= 0:
        out.write("corrected condition survives subdivision (min f >= 0)\n")
    witness = farin.negative_witness(lo, hi)
    if witness is not None:
        out.write(f"witness: f({witness:.12g}) = {float(farin.profile_value(lo, hi, witness)):.6g} < 0\n")


def cmd_farin_audit(args) -> int:
    out = sys.stdout
    if args.sigma is not None:
        lo, hi = sorted(args.sigma)
        if lo <= 0:
            raise CliError("singular values must be positive", EXIT_INPUT)
        _report_sigmas(out, lo, hi, args.grid)
        return EXIT_OK
    if args.matrix is not None:
        k = len(args.matrix)
        dim = {4: 2, 9: 3}.get(k)
        if dim is None:
            raise CliError("--matrix needs 4 or 9 entries (row-major)", EXIT_INPUT)
        m = np.array(args.matrix, dtype=float).reshape(dim, dim)
        v = None if args.vector is None else np.array(args.vector, dtype=float)
        if v is not None and v.shape != (dim,):
            raise CliError(f"--vector needs {dim} entries", EXIT_INPUT)
        n = args.degree or 3
    elif args.input is not None:
        try:
            spec = to_spec(read_document(args.input))
        except (DocumentError, LinalgError, ValueError) as exc:
            raise CliError(f"{args.input}: {exc}", EXIT_INPUT) from exc
        m, v, n = np.array(spec.M), np.array(spec.w), args.degree or max(3, spec.degree)
    else:
        raise CliError("farin-audit needs an input document, --matrix or --sigma", EXIT_INPUT)
    if n < 3:
        raise CliError("--degree must be at least 3", EXIT_INPUT)

    rep = farin.audit(m, v, n, args.grid)
    out.write(f"expansion condition (min eig of symmetric part >= 1): {_yes(rep.expansion_holds)}"
              f" (min eigenvalue {rep.min_symmetric_eigenvalue:.10g})\n")
    out.write("singular values: " + ", ".join(f"{s:.10g}" for s in rep.sv) + "\n")
    lo, hi = rep.sv[-1], rep.sv[0]
    if lo > 0:
        _report_sigmas(out, lo, hi, args.grid)
    if rep.zhao_ratio is not None:
        out.write(f"ratio v.Mv / v.v: {rep.zhao_ratio:.10g}\n")
        if rep.proposition1 is None:
            out.write("triangle chain is degenerate (v and Mv parallel)\n")
        else:
            p = rep.proposition1
            out.write(f"proposition (n={p.n}): lhs sigma_min^(3(n-1)) = {p.lhs:.10g}, "
                      f"rhs = {p.rhs:.10g}, hypothesis {_yes(p.hypothesis_holds)}, "
                      f"conclusion {_yes(p.conclusion_holds)}\n")
            out.write("  areas: " + ", ".join(f"{a:.10g}" for a in p.areas) + "\n")
            out.write("  angles: " + ", ".join(f"{a:.10g}" for a in p.angles) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="classa", description="Matrix-generated Bezier curves and curvature certificates.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="sample a curve to CSV (or SVG)")
    g.add_argument("input")
    g.add_argument("--out")
    g.add_argument("--format", choices=("csv", "svg"), default="csv")
    g.set_defaults(func=cmd_generate)

    c = sub.add_parser("certify", help="evaluate every certificate and the numerical oracle")
    c.add_argument("input")
    c.add_argument("--grid", type=int, default=cert.DEFAULT_GRID)
    c.set_defaults(func=cmd_certify)

    e = sub.add_parser("examples", help="replay the example registry")
    e.add_argument("id", nargs="?")
    e.add_argument("--grid", type=int, default=cert.DEFAULT_GRID)
    e.set_defaults(func=cmd_examples)

    f = sub.add_parser("farin-audit", help="singular-value Class A conditions")
    f.add_argument("input", nargs="?")
    f.add_argument("--sigma", nargs=2, type=float, metavar=("S1", "S2"))
    f.add_argument("--matrix", nargs="+", type=float)
    f.add_argument("--vector", nargs="+", type=float)
    f.add_argument("--degree", type=int)
    f.add_argument("--grid", type=int, default=10001)
    f.set_defaults(func=cmd_farin_audit)

    pl = sub.add_parser("plot", help="curve and curvature as SVG")
    pl.add_argument("input")
    pl.add_argument("--out")
    pl.add_argument("--format", choices=("svg",), default="svg")
    pl.set_defaults(func=cmd_plot)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "grid", None) is not None and args.command in ("certify", "examples") and args.grid < 101:
        sys.stderr.write("error: --grid must be at least 101\n")
        return EXIT_INPUT
    try:
        return args.func(args)
    except CliError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
