"""Command-line interface: ``legendrian <command> ...`` or ``python -m legendrian``.

Exit codes: 0 success or verified, 1 domain error or refuted, 2 usage error.
Domain errors are printed to stderr as ``ErrorName: message``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import curve_io
from .errors import InvalidInput, LegendrianError


def _precision_bits():
    raw = os.environ.get("PRECISION_BITS", "53")
    try:
        bits = int(raw)
    except ValueError:
        raise InvalidInput(f"PRECISION_BITS must be an integer, got {raw!r}") from None
    if bits < 53:
        raise InvalidInput("PRECISION_BITS must be at least 53")
    return bits


def _emit(args, text):
    out = getattr(args, "output", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _emit_curve(args, C):
    _emit(args, curve_io.dumps(C))
    return 0


def _dump(obj):
    return json.dumps(obj, indent=1, ensure_ascii=False, default=str)


def cmd_bryant(args):
    from .curves import bryant_curve
    from .parser import parse_expression

    return _emit_curve(args, bryant_curve(parse_expression(args.f), parse_expression(args.g)))


def cmd_fcurve(args):
    from .curves import f_curve
    from .parser import parse_expression, parse_scalar

    c = parse_scalar(args.c) if args.c else 0
    return _emit_curve(args, f_curve(parse_expression(args.h), parse_expression(args.g), c))


def cmd_exceptional(args):
    from .curves import exceptional_line
    from .parser import parse_scalar

    return _emit_curve(args, exceptional_line(parse_scalar(args.a), parse_scalar(args.b)))


def cmd_verify(args):
    from .contact import is_legendrian

    ok, witness = is_legendrian(curve_io.load(args.curve))
    print(_dump({"legendrian": ok, "pullback": str(witness)}))
    return 0 if ok else 1


def cmd_analyze(args):
    from .analysis import analyze

    print(_dump(analyze(curve_io.load(args.curve)).to_json()))
    return 0


def cmd_residues(args):
    from .analysis import exactness_check
    from .parser import parse_expression

    rep = exactness_check(parse_expression(args.h), parse_expression(args.g))
    print(_dump(rep.to_json()))
    return 0 if rep.passed else 1


def cmd_invert(args):
    from .curves import invert_bryant

    f, g = invert_bryant(curve_io.load(args.curve))
    print(_dump({"f": str(f), "g": str(g)}))
    return 0


def cmd_chart(args):
    from .contact import chart_change
    from .parser import parse_scalar

    ch = chart_change(parse_scalar(args.a1), parse_scalar(args.a2), parse_scalar(args.a3))
    return _emit_curve(args, ch.apply_curve(curve_io.load(args.apply)))


def _sample(args):
    from .numeric import DomainSpec, sample_surface

    C = curve_io.load(args.curve)
    return sample_surface(C, DomainSpec.parse(args.domain), args.h, precision_bits=_precision_bits())


def cmd_project(args):
    from .numeric import export_mesh

    S = _sample(args)
    fmt = "obj" if args.output.endswith(".obj") else "json"
    projection = "stereo3" if fmt == "obj" else "r5"
    export_mesh(S, fmt, projection, path=args.output, pole=args.pole)
    print(_dump({"vertices": S.n_points, "output": args.output, "format": fmt}))
    return 0


def cmd_report(args):
    from .numeric import DomainSpec, geometry_report, observed_orders, sample_surface

    C = curve_io.load(args.curve)
    dom = DomainSpec.parse(args.domain)
    bits = _precision_bits()
    coarse = geometry_report(sample_surface(C, dom, 2 * args.h, precision_bits=bits), args.richardson)
    rep = geometry_report(sample_surface(C, dom, args.h, precision_bits=bits), args.richardson)
    hs = [2 * args.h, args.h]
    for name in ("conformality_max", "minimality_max", "supermin_circle_max"):
        rep.rates[name] = observed_orders([getattr(coarse, name), getattr(rep, name)], hs)[0]
    print(_dump(rep.to_json()))
    return 0


def cmd_radius(args):
    from .numeric import intrinsic_radius

    try:
        x, y = (float(t) for t in args.center.split(","))
    except ValueError:
        raise InvalidInput(f"center must be X,Y, got {args.center!r}") from None
    rep = intrinsic_radius(_sample(args), complex(x, y), arc=args.arc)
    print(_dump(rep.to_json()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="legendrian", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("bryant", help="curve B(f, g)")
    s.add_argument("--f", required=True)
    s.add_argument("--g", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_bryant)

    s = sub.add_parser("fcurve", help="curve F(h, g, c)")
    s.add_argument("--h", required=True)
    s.add_argument("--g", required=True)
    s.add_argument("--c")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_fcurve)

    s = sub.add_parser("exceptional", help="line [1 : a + bt : b : -t]")
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_exceptional)

    for name, func, helptext in (
        ("verify", cmd_verify, "exact Legendrian check (exit 1 if refuted)"),
        ("analyze", cmd_analyze, "orders, immersion and transversality report"),
        ("invert", cmd_invert, "recover (f, g) from B(f, g)"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("curve")
        s.set_defaults(func=func)

    s = sub.add_parser("residues", help="residues of h dg at every pole")
    s.add_argument("--h", required=True)
    s.add_argument("--g", required=True)
    s.set_defaults(func=cmd_residues)

    s = sub.add_parser("chart", help="apply the contact chart change adapted to z0 = a.z")
    s.add_argument("--a1", required=True)
    s.add_argument("--a2", required=True)
    s.add_argument("--a3", required=True)
    s.add_argument("--apply", required=True, metavar="CURVE")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_chart)

    def sampled(name, func, helptext):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("curve")
        s.add_argument("--domain", required=True, help="rect:x0,x1,y0,y1 | disk:cx,cy,r | annulus:cx,cy,r0,r1")
        s.add_argument("--h", required=True, type=float)
        s.set_defaults(func=func)
        return s

    s = sampled("project", cmd_project, "export the sampled surface as a mesh")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--pole", type=int, choices=(1, -1), default=1)
    s = sampled("report", cmd_report, "geometry certificates at h with rates from 2h")
    s.add_argument("--richardson", action="store_true")
    s = sampled("radius", cmd_radius, "intrinsic radius estimate")
    s.add_argument("--center", required=True)
    s.add_argument("--arc", action="store_true")
    return p


def run_command(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except LegendrianError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"InvalidInput: {exc}", file=sys.stderr)
        return 1


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
