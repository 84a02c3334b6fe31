"""Command line front end.

Subcommands:

    cycle ortho C D --sigma-cycle S [--s S]     inner product and orthogonality
    point map --g MATRIX --p U,V --sigma e|p|h  compactified image of a point
    cover path --family F --z U,V --sheet +|-   sheet-tracked parameter sweep
             --t A:B:STEPS                      (CSV on stdout)
    render cycle --q K,L,N,M --sigma ... --out FILE.svg
    render invert-grid --sigma ... --spacing R --out FILE.svg
    render timelapse --out-dir DIR [--points ...] [--cycles ...]

Rationals are written without decimal points ("3", "-1/2").  Matrices are
eight comma-separated rationals, real and imaginary part per entry, row by
row.  Exit status is 0 on success and 2 on argument errors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .compact import INFINITY, act, embed, unembed
from .cover import continue_path, path_csv, sheeted
from .cycle import Cycle, CycleContext
from .moebius import moebius, time_reversal
from .products import inner, is_orthogonal
from .render import Viewport, invert_grid, render_cycle, svg_document, timelapse

_SIGMAS = {
    "e": -1, "p": 0, "h": 1,
    "-1": -1, "0": 0, "1": 1, "+1": 1,
    "elliptic": -1, "parabolic": 0, "hyperbolic": 1,
}


def _sigma(text: str) -> int:
    try:
        return _SIGMAS[text.lower()]
    except KeyError:
        raise argparse.ArgumentTypeError(
            f"unknown geometry {text!r}; use e|p|h or -1|0|1"
        ) from None


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _rationals(text: str, count: int) -> list[Fraction]:
    parts = text.split(",")
    if len(parts) != count:
        raise argparse.ArgumentTypeError(
            f"expected {count} comma-separated rationals, got {len(parts)}"
        )
    return [_rational(p) for p in parts]


def _cycle_arg(text: str) -> Cycle:
    k, l, n, m = _rationals(text, 4)
    try:
        return Cycle(k, l, n, m)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _point_arg(text: str) -> tuple[Fraction, Fraction]:
    u, v = _rationals(text, 2)
    return (u, v)


def _matrix_arg(text: str):
    vals = _rationals(text, 8)
    return [(vals[0], vals[1]), (vals[2], vals[3]), (vals[4], vals[5]), (vals[6], vals[7])]


def _sheet_arg(text: str) -> int:
    if text in ("+", "+1", "1"):
        return 1
    if text in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError(f"sheet must be + or -, got {text!r}")


def _grid_arg(text: str) -> list[Fraction]:
    try:
        a_text, b_text, steps_text = text.split(":")
        a, b = Fraction(a_text), Fraction(b_text)
        steps = int(steps_text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected A:B:STEPS, got {text!r}"
        ) from None
    if steps < 1 or b <= a:
        raise argparse.ArgumentTypeError("need B > A and at least one step")
    h = (b - a) / steps
    return [a + i * h for i in range(steps + 1)]


def _viewport_arg(text: str) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    try:
        x0, x1, y0, y1 = (Fraction(p) for p in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected X0:X1:Y0:Y1, got {text!r}"
        ) from None
    return (x0, x1, y0, y1)


def _make_viewport(args) -> Viewport:
    x0, x1, y0, y1 = args.viewport
    try:
        return Viewport(x0, x1, y0, y1, samples=args.samples)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_render_common(p: argparse.ArgumentParser):
    p.add_argument(
        "--viewport",
        type=_viewport_arg,
        default=(Fraction(-3), Fraction(3), Fraction(-3), Fraction(3)),
        metavar="X0:X1:Y0:Y1",
        help="plot window (default -3:3:-3:3)",
    )
    p.add_argument("--samples", type=int, default=256, help="vertices per curve")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cycleplane", description=__doc__.split("\n")[0])
    top = parser.add_subparsers(dest="group", required=True)

    cyc = top.add_parser("cycle", help="cycle-space computations")
    cyc_sub = cyc.add_subparsers(dest="command", required=True)
    ortho = cyc_sub.add_parser("ortho", help="inner product and orthogonality test")
    ortho.add_argument("first", type=_cycle_arg, metavar="K,L,N,M")
    ortho.add_argument("second", type=_cycle_arg, metavar="K,L,N,M")
    ortho.add_argument("--sigma-cycle", type=_sigma, required=True)
    ortho.add_argument("--s", type=_rational, default=Fraction(1))

    pnt = top.add_parser("point", help="compactified point computations")
    pnt_sub = pnt.add_subparsers(dest="command", required=True)
    pmap = pnt_sub.add_parser("map", help="image of a point under a map")
    pmap.add_argument("--g", type=_matrix_arg, required=True, metavar="8 RATIONALS")
    pmap.add_argument("--p", type=_point_arg, required=True, metavar="U,V")
    pmap.add_argument("--sigma", type=_sigma, required=True)

    cov = top.add_parser("cover", help="double-cover computations")
    cov_sub = cov.add_subparsers(dest="command", required=True)
    path = cov_sub.add_parser("path", help="sweep a map family, tracking sheets")
    path.add_argument("--family", choices=("shear", "timereversal"), required=True)
    path.add_argument("--z", type=_point_arg, required=True, metavar="U,V")
    path.add_argument("--sheet", type=_sheet_arg, default=1)
    path.add_argument("--t", type=_grid_arg, required=True, metavar="A:B:STEPS")

    ren = top.add_parser("render", help="SVG output")
    ren_sub = ren.add_subparsers(dest="command", required=True)
    rcyc = ren_sub.add_parser("cycle", help="draw one cycle")
    rcyc.add_argument("--q", type=_cycle_arg, required=True, metavar="K,L,N,M")
    rcyc.add_argument("--sigma", type=_sigma, required=True)
    rcyc.add_argument("--out", type=Path, required=True)
    _add_render_common(rcyc)
    rgrid = ren_sub.add_parser("invert-grid", help="reflect a grid in the unit cycle")
    rgrid.add_argument("--sigma", type=_sigma, required=True)
    rgrid.add_argument("--spacing", type=_rational, default=Fraction(1, 2))
    rgrid.add_argument("--out", type=Path, required=True)
    _add_render_common(rgrid)
    rtime = ren_sub.add_parser("timelapse", help="the eight time-reversal frames")
    rtime.add_argument("--out-dir", type=Path, required=True)
    rtime.add_argument(
        "--points",
        default="0,1;0,2",
        help='semicolon-separated points, e.g. "0,1;1,0" (default "0,1;0,2")',
    )
    rtime.add_argument(
        "--cycles",
        default="1,0,0,1",
        help='semicolon-separated quadruples (default "1,0,0,1", the unit conic)',
    )
    _add_render_common(rtime)
    return parser


def _run_cycle_ortho(args) -> int:
    cctx = CycleContext(args.sigma_cycle, args.s)
    value = inner(args.first, args.second, cctx)
    print(f"inner: {value}")
    print(f"orthogonal: {'true' if is_orthogonal(args.first, args.second, cctx) else 'false'}")
    return 0


def _run_point_map(args) -> int:
    (a, b), (c, d) = args.g[0:2], args.g[2:4]
    g = moebius(a, b, c, d, sigma=args.sigma)
    image = act(g, embed(args.p, args.sigma))
    k, l, n, m = image.q.quadruple()
    print(f"cpoint: {k},{l},{n},{m}")
    w = unembed(image)
    if w is INFINITY:
        print("point: infinity")
    else:
        print(f"point: {w[0]},{w[1]}")
    return 0


def _run_cover_path(args) -> int:
    if args.family == "shear":
        family = lambda t: moebius(1, 0, t, 1, sigma=1)  # noqa: E731
    else:
        family = time_reversal
    result = continue_path(family, sheeted(args.z[0], args.z[1], args.sheet), args.t)
    sys.stdout.write(path_csv(result))
    return 0


def _run_render(args, parser) -> int:
    vp = _make_viewport(args)
    if args.command == "cycle":
        args.out.write_text(
            svg_document([("cycle", render_cycle(args.q, args.sigma, vp))], vp,
                         title="cycle"),
            encoding="utf-8",
        )
        print(f"wrote {args.out}")
        return 0
    if args.command == "invert-grid":
        if args.spacing <= 0:
            parser.error("--spacing must be positive")
        args.out.write_text(invert_grid(args.sigma, args.spacing, vp), encoding="utf-8")
        print(f"wrote {args.out}")
        return 0
    # timelapse
    z_set = []
    if args.points:
        z_set.extend(_point_arg(p) for p in args.points.split(";") if p)
    if args.cycles:
        z_set.extend(_cycle_arg(c) for c in args.cycles.split(";") if c)
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for i, (label, doc) in enumerate(timelapse(z_set, vp)):
        target = args.out_dir / f"frame{i}.svg"
        target.write_text(doc, encoding="utf-8")
        print(f"wrote {target} ({label})")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.group == "cycle":
            return _run_cycle_ortho(args)
        if args.group == "point":
            return _run_point_map(args)
        if args.group == "cover":
            return _run_cover_path(args)
        return _run_render(args, parser)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))
    return 0


if __name__ == "__main__":
    sys.exit(main())
