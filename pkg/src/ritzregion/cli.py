"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 hypothesis
violation (interior eigenvalue, mu1 outside W, collinear spectrum). Errors are
reported on stderr as a one-line JSON object.

Spectra are moved to the frame z' = (z - centroid) / diameter before any
geometry; region output is mapped back to the input frame.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import svg
from .errors import (
    DegenerateTriangle,
    HypothesisViolation,
    InputError,
    OutsideTriangle,
    RitzError,
    VertexInput,
)
from .io import RegionFile, emit_spectrum, parse_spectrum
from .ritz import isogonal_formula, isogonal_geometric, partner_region, region_R
from .spectrum import Spectrum
from .verify import SpectrumMode, TheoremConfig, check_theorem, random_spectrum, sample_partners, t_hash
from .weights import extreme_matrix

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_HYPOTHESIS = 0, 1, 2, 3


class _Exit(Exception):
    def __init__(self, code: int, exc: Exception | None = None):
        super().__init__(code)
        self.code = code
        self.exc = exc


def _fail(code: int, exc: Exception):
    raise _Exit(code, exc)


def parse_point(text: str) -> complex:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"expected RE,IM but got {text!r}")
    try:
        re, im = (float(p) for p in parts)
    except ValueError:
        raise InputError(f"expected two decimal numbers in {text!r}") from None
    if not (math.isfinite(re) and math.isfinite(im)):
        raise InputError("coordinates must be finite")
    return complex(re, im)


def parse_triangle(text: str) -> list:
    pts = text.split(";")
    if len(pts) != 3:
        raise InputError("a triangle is three points x,y;x,y;x,y")
    return [parse_point(p) for p in pts]


def fmt_point(z: complex) -> str:
    return f"{float(z.real)!r},{float(z.imag)!r}"


class Frame:
    """The similarity z -> (z - c) / d that gives the spectrum unit diameter."""

    def __init__(self, S: Spectrum):
        self.c = S.centroid
        self.d = S.diameter if S.diameter > 0 else 1.0

    def to_unit(self, z):
        return (z - self.c) / self.d

    def back(self, z):
        return self.c + self.d * z

    def spectrum(self, S: Spectrum) -> Spectrum:
        return Spectrum([self.to_unit(v) for v in S.values], S.mults)

    def to_dict(self) -> dict:
        return {"centroid": [self.c.real, self.c.imag], "diameter": self.d}


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc.strerror}") from None


def _load(args):
    S = parse_spectrum(_read(args.spectrum))
    mu1 = parse_point(args.mu1)
    fr = Frame(S)
    return S, fr, fr.spectrum(S), complex(fr.to_unit(mu1))


def cmd_region(args) -> int:
    if args.angles < 16:
        raise InputError("--angles must be at least 16")
    S, fr, U, mu1 = _load(args)
    report = region_R(U, mu1)
    rf = RegionFile.from_report(report, U, fr.back)
    _write(args.out, rf.emit())
    if args.svg:
        parts = [partner_region(U, mu1, t, args.angles) for t in extreme_matrix(U, mu1)]
        text = svg.render(
            report.W, report.L2, report.region, mu1,
            [g.point for g in report.generating_points], list(U.values),
            [p for p in parts if not p.is_empty],
        )
        _write(args.svg, text)
    return EXIT_OK


def _positive(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def cmd_verify(args) -> int:
    if args.samples < 1:
        raise InputError("--samples must be at least 1")
    S, fr, U, mu1 = _load(args)
    rep = check_theorem(U, mu1, TheoremConfig(samples=args.samples, seed=args.seed))
    doc = rep.to_dict()
    doc["frame"] = fr.to_dict()
    text = json.dumps(doc, indent=2) + "\n"
    if args.report:
        _write(args.report, text)
    else:
        sys.stdout.write(text)
    if rep.error and rep.error["hypothesis"]:
        return EXIT_HYPOTHESIS
    return EXIT_OK if rep.verdict == "Pass" else EXIT_FAIL


def cmd_sample(args) -> int:
    S, fr, U, mu1 = _load(args)
    smp = sample_partners(U, mu1, args.samples, args.seed, merge_extremes=False)
    lines = ["re,im,t_hash"]
    for z, t in zip(smp.points, smp.weights):
        w = fr.back(complex(z))
        lines.append(f"{float(w.real)!r},{float(w.imag)!r},{t_hash(t)}")
    _write(args.csv, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_random(args) -> int:
    mode = SpectrumMode.WITH_INTERIOR if args.with_interior else SpectrumMode.CONVEX_POSITION
    S = random_spectrum(args.n, args.seed, mode)
    _write(args.out, emit_spectrum(S))
    print(f"centroid={fmt_point(S.centroid)}")
    print(f"diameter={S.diameter!r}")
    return EXIT_OK


def cmd_isogonal(args) -> int:
    tri = parse_triangle(args.triangle)
    mu = parse_point(args.mu)
    try:
        if args.method in ("formula", "both"):
            wf = isogonal_formula(tri, mu)
            print(fmt_point(wf))
        if args.method in ("geometric", "both"):
            wg = isogonal_geometric(tri, mu)
            print(fmt_point(wg))
    except (DegenerateTriangle, OutsideTriangle, VertexInput) as exc:
        _fail(EXIT_HYPOTHESIS, exc)
    if args.method == "both":
        print(repr(abs(wf - wg)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ritzregion", description="Second Ritz value regions of normal matrices.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("region", help="compute R_A(mu1) and its generating points")
    r.add_argument("--spectrum", required=True)
    r.add_argument("--mu1", required=True)
    r.add_argument("--out", required=True)
    r.add_argument("--svg")
    r.add_argument("--angles", type=int, default=720,
                   help="sweep resolution for the partner regions drawn in the SVG")
    r.set_defaults(func=cmd_region)

    v = sub.add_parser("verify", help="check the region against sampled compressions")
    v.add_argument("--spectrum", required=True)
    v.add_argument("--mu1", required=True)
    v.add_argument("--samples", type=int, default=10_000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--report")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sample", help="dump sampled second Ritz values as CSV")
    s.add_argument("--spectrum", required=True)
    s.add_argument("--mu1", required=True)
    s.add_argument("--samples", type=_positive, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--csv", required=True)
    s.set_defaults(func=cmd_sample)

    n = sub.add_parser("random", help="write a random spectrum file")
    n.add_argument("--n", type=int, required=True)
    n.add_argument("--seed", type=int, default=0)
    n.add_argument("--with-interior", action="store_true")
    n.add_argument("--out", required=True)
    n.set_defaults(func=cmd_random)

    i = sub.add_parser("isogonal", help="isogonal conjugate of a point in a triangle")
    i.add_argument("--triangle", required=True)
    i.add_argument("--mu", required=True)
    i.add_argument("--method", choices=["formula", "geometric", "both"], default="formula")
    i.set_defaults(func=cmd_isogonal)
    return p


def _report(exc: Exception) -> None:
    sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")


_POINT_FLAGS = ("--mu1", "--mu", "--triangle")


def _glue_points(argv: list) -> list:
    """Attach values such as "-0.5,0.2" to their flag so argparse keeps them."""
    out, k = [], 0
    while k < len(argv):
        if argv[k] in _POINT_FLAGS and k + 1 < len(argv):
            out.append(f"{argv[k]}={argv[k + 1]}")
            k += 2
        else:
            out.append(argv[k])
            k += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _glue_points(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except _Exit as ex:
        _report(ex.exc)
        return ex.code
    except HypothesisViolation as exc:
        _report(exc)
        return EXIT_HYPOTHESIS
    except InputError as exc:
        _report(exc)
        return EXIT_INPUT
    except RitzError as exc:
        _report(exc)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
