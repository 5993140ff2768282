"""Command-line front end.

Subcommands: ``analyze`` (invariant reports for image files), ``verify``
(randomized and exhaustive consistency sweeps of the counter machinery),
``classify`` (curve predicates for one file) and ``gen`` (seeded test
objects).  Exit codes: 0 success, 1 a counter inconsistency was detected
(an implementation alarm, not bad input), 2 input or parse error, 3 usage
error.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from typing import List, Optional

from .curves import curve_report
from .generate import GenerationError, SplitMix64, generate_curve, generate_random
from .grid import Adjacency, DigitalObject
from .incremental import CaseId, Tracker, classify_case
from .invariants import analyze
from .io import ParseError, ReportDocument, emit_report, parse_ascii_grid, parse_pbm, to_ascii_grid

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_INPUT = 2
EXIT_USAGE = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; we reserve that
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_object(path: str, fmt: str) -> DigitalObject:
    with open(path, "rb") as fh:
        data = fh.read()
    if fmt == "auto":
        fmt = "pbm" if data[:2] in (b"P1", b"P4") else "ascii"
    if fmt == "pbm":
        return parse_pbm(data)
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"not valid text: {exc}") from None
    return parse_ascii_grid(text)


def _cmd_analyze(args) -> int:
    status = EXIT_OK
    outputs = []
    for path in args.files:
        try:
            obj = _read_object(path, args.format)
        except (OSError, ParseError) as exc:
            print(f"{path}: {exc}", file=sys.stderr)
            return EXIT_INPUT
        report = analyze(obj)
        curves = None
        if args.curve is not None:
            alpha = Adjacency(args.curve)
            curves = {alpha: curve_report(obj, alpha)}
        doc = ReportDocument(source=path, report=report, curves=curves)
        outputs.append(emit_report(doc, "json" if args.json else "text"))
        if not report.consistent:
            status = EXIT_INCONSISTENT
    print("\n".join(outputs))
    return status


def _cmd_classify(args) -> int:
    try:
        obj = _read_object(args.file, args.format)
    except (OSError, ParseError) as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    alpha = Adjacency(args.adjacency)
    doc = ReportDocument(source=args.file, report=analyze(obj), curves={alpha: curve_report(obj, alpha)})
    print(emit_report(doc, "json" if args.json else "text"))
    return EXIT_OK


def _parse_dims(value: str) -> tuple:
    try:
        w, h = value.lower().split("x")
        return int(w), int(h)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected WxH, got {value!r}")


def _verify_exhaustive(width: int, height: int) -> int:
    cells = [(x, y) for y in range(height) for x in range(width)]
    n = len(cells)
    failures = 0
    for mask in range(1 << n):
        obj = DigitalObject(cells[i] for i in range(n) if mask >> i & 1)
        report = analyze(obj)
        if not report.consistent:
            failures += 1
            print(f"INCONSISTENT subset mask={mask:#x}: {report}", file=sys.stderr)
    print(f"exhaustive {width}x{height}: {1 << n} subsets checked, {failures} inconsistent")
    return failures


def _cmd_verify(args) -> int:
    width, height = args.grid
    failures = 0
    if args.exhaustive:
        ew, eh = args.exhaustive
        if ew * eh > 16:
            print("exhaustive grid larger than 16 cells is impractical", file=sys.stderr)
            return EXIT_USAGE
        failures += _verify_exhaustive(ew, eh)

    rng = SplitMix64(args.seed)
    cases: Counter = Counter()
    for run in range(args.runs):
        obj = generate_random(width, height, args.density, seed=rng.next_u64())
        report = analyze(obj)
        if not report.consistent:
            failures += 1
            print(f"INCONSISTENT random object (run {run}): {report}", file=sys.stderr)
        # rebuild the same object incrementally, in seeded random order
        pixels = list(obj)
        for i in range(len(pixels) - 1, 0, -1):
            j = rng.below(i + 1)
            pixels[i], pixels[j] = pixels[j], pixels[i]
        tracker = Tracker()
        for pix in pixels:
            cases[classify_case(tracker.add_pixel(pix))] += 1
        snap = tracker.snapshot()
        if (snap.p, snap.v, snap.c0, snap.h, snap.b, snap.t_direct) != (
            report.p, report.v, report.c0, report.h, report.b, report.t_direct,
        ):
            failures += 1
            print(f"TRACKER MISMATCH (run {run}): {snap} vs {report}", file=sys.stderr)

    total = sum(cases.values())
    print(f"random sweep: {args.runs} objects on {width}x{height} at density {args.density}")
    print(f"insertions classified: {total}")
    print("case frequency:")
    for case in CaseId:
        if cases[case]:
            print(f"  {case.value:>9}  {cases[case]:>8}  {cases[case] / total:7.2%}")
    if cases[CaseId.UNMATCHED]:
        failures += cases[CaseId.UNMATCHED]
    print(f"failures: {failures}")
    return EXIT_OK if failures == 0 else EXIT_INCONSISTENT


def _cmd_gen(args) -> int:
    if args.curve is not None:
        if args.width is not None or args.height is not None or args.density is not None:
            print("gen: --curve excludes --width/--height/--density", file=sys.stderr)
            return EXIT_USAGE
        try:
            obj = generate_curve(
                args.curve, Adjacency(args.adjacency), args.steps, args.seed
            )
        except GenerationError as exc:
            print(f"gen: {exc}", file=sys.stderr)
            return EXIT_INPUT
    else:
        width = args.width if args.width is not None else 16
        height = args.height if args.height is not None else 16
        density = args.density if args.density is not None else 0.5
        try:
            obj = generate_random(width, height, density, args.seed)
        except ValueError as exc:
            print(f"gen: {exc}", file=sys.stderr)
            return EXIT_USAGE
    grid = to_ascii_grid(obj)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(grid + "\n")
    else:
        print(grid)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pixtopo", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="invariant report for image files")
    p_analyze.add_argument("files", nargs="+")
    p_analyze.add_argument("--format", choices=("ascii", "pbm", "auto"), default="auto")
    p_analyze.add_argument("--json", action="store_true")
    p_analyze.add_argument("--curve", type=int, choices=(0, 1), default=None,
                           help="add curve classification under this adjacency")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_verify = sub.add_parser("verify", help="consistency sweeps over generated objects")
    p_verify.add_argument("--grid", type=_parse_dims, default=(20, 20), metavar="WxH")
    p_verify.add_argument("--density", type=float, default=0.5)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--runs", type=int, default=100)
    p_verify.add_argument("--exhaustive", type=_parse_dims, default=None, metavar="WxH",
                          help="also check every subset of a small WxH grid")
    p_verify.set_defaults(func=_cmd_verify)

    p_classify = sub.add_parser("classify", help="curve classification for one file")
    p_classify.add_argument("file")
    p_classify.add_argument("--adjacency", type=int, choices=(0, 1), required=True)
    p_classify.add_argument("--format", choices=("ascii", "pbm", "auto"), default="auto")
    p_classify.add_argument("--json", action="store_true")
    p_classify.set_defaults(func=_cmd_classify)

    p_gen = sub.add_parser("gen", help="emit a seeded test object as an ASCII grid")
    p_gen.add_argument("--width", type=int, default=None)
    p_gen.add_argument("--height", type=int, default=None)
    p_gen.add_argument("--density", type=float, default=None)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--curve", choices=("closed", "arc"), default=None)
    p_gen.add_argument("--adjacency", type=int, choices=(0, 1), default=0)
    p_gen.add_argument("--steps", type=int, default=12)
    p_gen.add_argument("-o", "--output", default=None)
    p_gen.set_defaults(func=_cmd_gen)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
