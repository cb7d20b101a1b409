"""Command line interface.

Subcommands (every one except gen reads a DSL diagram file argument or
builds a chain diagram with --family N):

    gen       write a generated family diagram to a DSL file
    lk        linking numbers of the components with the virtual components
    fibered   test a cohomology class for fiberedness
    norm      weighted-tree norm of a class
    slopes    boundary slopes of a class on both components
    alex      Alexander polynomial
    ball      norm unit ball: rays, faces, dual vertices (--svg, --log-scale)
    hull      Newton polygon of the Alexander polynomial (--svg)
    sw        SW polynomial, basic classes, evenness
    orbits    orbit count of fibered faces under lattice symmetries
    report    everything above as text, or as JSON with --json FILE

Exit codes: 0 success, 1 usage error, 2 computation error (the
module-qualified error name is printed on stderr).  Output is always plain
text, so NO_COLOR needs no special handling.  Classes are passed as
``-m a,b``; use the ``-m=-1,2`` form when the first coordinate is negative.
"""

import argparse
import json
import sys
from dataclasses import asdict, dataclass

from .errors import ComputationError
from .invariants import (alexander_polynomial, boundary_slope, is_fibered,
                         nonfibered_rays, thurston_norm)
from .laurent import LaurentPoly
from .orbits import face_orbits, lattice_symmetries
from .polytope import unit_ball
from .splice import (SpliceDiagram, VertexKind, build_k2n, linking_number,
                     parse_diagram, render_diagram)
from .svg import ball_svg, hull_svg
from .swtheory import basic_classes, sw_polynomial


class UsageError(Exception):
    """Bad command line; exit code 1."""


class IoError(ComputationError):
    """File could not be read or written."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("%r is not an integer" % text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _parse_class(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected a class 'a,b', got %r"
                                         % text)
    try:
        return (int(parts[0]), int(parts[1]))
    except ValueError:
        raise argparse.ArgumentTypeError("class coordinates must be integers,"
                                         " got %r" % text)


def _read_text(path):
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise IoError(str(exc)) from exc


def _write_text(path, text):
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        raise IoError(str(exc)) from exc


def recognize_family(d):
    """The family parameter n when the diagram is structurally the
    generated 2n-node chain (same vertex ids, kinds and weighted edges),
    else None.  Used only to pretty-print polynomials in factored form."""
    node_count = len(d.nodes)
    if node_count == 0 or node_count % 2:
        return None
    n = node_count // 2
    ref = build_k2n(n)
    if {(v.id, v.kind) for v in d.vertices} != \
            {(v.id, v.kind) for v in ref.vertices}:
        return None

    def edge_key(e):
        return frozenset(((e.a, e.weight_a), (e.b, e.weight_b)))

    if sorted(map(sorted, map(edge_key, d.edges))) != \
            sorted(map(sorted, map(edge_key, ref.edges))):
        return None
    if d.arrowheads[0].id != "K1":
        return None
    return n


def _load_diagram(args):
    if args.family is not None and args.diagram is not None:
        raise UsageError("give either a diagram file or --family, not both")
    if args.family is not None:
        return build_k2n(args.family), args.family
    if args.diagram is None:
        raise UsageError("a diagram file or --family N is required")
    d = parse_diagram(_read_text(args.diagram))
    return d, recognize_family(d)


def _family_factored(n, power=1):
    parts = []
    for i in range(1, 2 * n + 1):
        a = power * 3 ** (i - 1)
        b = power * 3 ** (2 * n - i)
        parts.append("(%s + 1 + %s)" % (LaurentPoly.monomial(a, b),
                                        LaurentPoly.monomial(-a, -b)))
    return "".join(parts)


def _poly_text(poly, family_n, power=1):
    if family_n is not None:
        return _family_factored(family_n, power)
    return str(poly)


# --------------------------------------------------------------------- report

@dataclass
class Report:
    """Machine-readable summary of every computed invariant.

    All potentially large integers are decimal strings; polynomial terms
    are [e1, e2, coefficient-as-decimal-string] triples in ascending
    graded-lex order.
    """
    diagram: str
    family_n: object
    lk: dict
    rays: list
    faces: list
    alexander: list
    sw_basic_classes: list
    canonical_classes: list
    orbit_count: int
    homotopy_k3: bool

    def to_json(self):
        return json.dumps(asdict(self), indent=2) + "\n"

    @classmethod
    def from_json(cls, text):
        return cls(**json.loads(text))


def build_report(d, family_n):
    from .swtheory import canonical_classes as _canonical

    k1, k2 = d.arrowheads
    lk12 = linking_number(d, k1.id, k2.id)
    delta = alexander_polynomial(d)
    ball = unit_ball(d)
    sw = sw_polynomial(delta)
    canon = _canonical(ball)
    orbit_count = face_orbits(ball, lattice_symmetries(ball)).orbit_count
    even = all(e1 % 2 == 0 and e2 % 2 == 0 for e1, e2 in sw.support())
    return Report(
        diagram=d.name,
        family_n=family_n,
        lk={
            "k1_k2": str(lk12),
            "virtual": [
                {"vertex": v.id, "kind": v.kind.value,
                 "lk_k1": str(a), "lk_k2": str(b)}
                for v, a, b, _deg in d.virtual_forms()
            ],
        },
        rays=[{"primitive": [str(x) for x in r.primitive], "norm": str(r.norm)}
              for r in nonfibered_rays(d)],
        faces=[{"lo": [str(x) for x in f.ray_lo.primitive],
                "hi": [str(x) for x in f.ray_hi.primitive],
                "dual": [str(f.dual[0]), str(f.dual[1])]}
               for f in ball.faces],
        alexander=delta.to_json_terms(),
        sw_basic_classes=sw.to_json_terms(),
        canonical_classes=[{"class": [str(x) for x in c.klass],
                            "divisibility": str(c.divisibility)}
                           for c in canon],
        orbit_count=orbit_count,
        homotopy_k3=(lk12 % 2 == 1) and even,
    )


# ------------------------------------------------------------------- commands

def cmd_gen(args):
    _write_text(args.output, render_diagram(build_k2n(args.n)))
    return 0


def cmd_lk(args):
    d, _n = _load_diagram(args)
    k1, k2 = d.arrowheads
    print("lk(%s,%s) = %d" % (k1.id, k2.id, linking_number(d, k1.id, k2.id)))
    for v, a, b, _deg in d.virtual_forms():
        print("lk(%s,%s) = %d  lk(%s,%s) = %d" % (k1.id, v.id, a, k2.id, v.id, b))
    return 0


def cmd_fibered(args):
    d, _n = _load_diagram(args)
    print("fibered" if is_fibered(d, args.m) else "non-fibered")
    return 0


def cmd_norm(args):
    d, _n = _load_diagram(args)
    print(thurston_norm(d, args.m))
    return 0


def cmd_slopes(args):
    d, _n = _load_diagram(args)
    for i in (1, 2):
        s = boundary_slope(d, args.m, i)
        print("sigma_%d = %d mu + %d lambda  (divisibility %d, "
              "primitive (%d,%d))"
              % (i, s.meridian_coeff, s.longitude_coeff, s.divisibility,
                 s.beta_primitive[0], s.beta_primitive[1]))
    return 0


def cmd_alex(args):
    d, family_n = _load_diagram(args)
    print(_poly_text(alexander_polynomial(d), family_n))
    return 0


def cmd_ball(args):
    d, _n = _load_diagram(args)
    ball = unit_ball(d)
    for r in ball.rays:
        print("ray (%d,%d)  norm %d" % (r.primitive[0], r.primitive[1], r.norm))
    for f in ball.faces:
        print("face (%d,%d)-(%d,%d)  dual (%s,%s)"
              % (f.ray_lo.primitive[0], f.ray_lo.primitive[1],
                 f.ray_hi.primitive[0], f.ray_hi.primitive[1],
                 f.dual[0], f.dual[1]))
    if args.svg:
        _write_text(args.svg, ball_svg(ball, log_scale=args.log_scale))
    return 0


def cmd_hull(args):
    d, _n = _load_diagram(args)
    hull = alexander_polynomial(d).newton_polygon()
    for e1, e2 in hull:
        print("vertex (%d,%d)" % (e1, e2))
    if args.svg:
        _write_text(args.svg, hull_svg(hull))
    return 0


def cmd_sw(args):
    d, family_n = _load_diagram(args)
    sw = sw_polynomial(alexander_polynomial(d))
    bcs = basic_classes(sw)
    print("SW polynomial: %s" % _poly_text(sw, family_n, power=2))
    print("basic classes: %d" % len(bcs))
    print("hull vertices: %s"
          % " ".join("(%d,%d)" % v for v in bcs.hull()))
    even = all(e1 % 2 == 0 and e2 % 2 == 0 for e1, e2 in bcs.classes)
    print("all classes even: %s" % ("yes" if even else "no"))
    return 0


def cmd_orbits(args):
    d, _n = _load_diagram(args)
    ball = unit_ball(d)
    print(face_orbits(ball, lattice_symmetries(ball)).orbit_count)
    return 0


def cmd_report(args):
    d, family_n = _load_diagram(args)
    report = build_report(d, family_n)
    print("diagram %s%s" % (report.diagram,
                            "  (family n=%d)" % family_n
                            if family_n is not None else ""))
    print("lk(K1,K2) = %s" % report.lk["k1_k2"])
    print("rays:")
    for r in report.rays:
        print("  (%s,%s)  norm %s" % (r["primitive"][0], r["primitive"][1],
                                      r["norm"]))
    print("faces and dual vertices:")
    for f in report.faces:
        print("  (%s,%s)-(%s,%s) -> (%s,%s)"
              % (f["lo"][0], f["lo"][1], f["hi"][0], f["hi"][1],
                 f["dual"][0], f["dual"][1]))
    print("alexander polynomial: %s"
          % _poly_text(LaurentPoly.from_json_terms(report.alexander),
                       family_n))
    print("sw basic classes: %d" % len(report.sw_basic_classes))
    print("canonical classes:")
    for c in report.canonical_classes:
        print("  (%s,%s)  divisibility %s"
              % (c["class"][0], c["class"][1], c["divisibility"]))
    print("orbit count: %d" % report.orbit_count)
    print("homotopy K3: %s" % ("yes" if report.homotopy_k3 else "no"))
    if args.json:
        _write_text(args.json, report.to_json())
    return 0


# --------------------------------------------------------------------- parser

def build_parser():
    parser = _Parser(prog="splicelink",
                     description="Exact invariants of 2-component graph "
                                 "links given by splice diagrams.")
    sub = parser.add_subparsers(dest="command", required=True,
                                metavar="command", parser_class=_Parser)

    gen = sub.add_parser("gen", help="write a family diagram to a DSL file")
    gen.add_argument("--n", type=_positive_int, required=True,
                     help="family parameter: the chain has 2n nodes")
    gen.add_argument("-o", "--output", required=True, help="output DSL file")
    gen.set_defaults(func=cmd_gen)

    def common(name, help_text, with_class=False, with_svg=False,
               with_json=False):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("diagram", nargs="?", help="DSL diagram file")
        sp.add_argument("--family", type=_positive_int, metavar="N",
                        help="use the generated 2N-node chain instead of a file")
        if with_class:
            sp.add_argument("-m", type=_parse_class, required=True,
                            metavar="a,b", help="cohomology class")
        if with_svg:
            sp.add_argument("--svg", metavar="FILE", help="write an SVG figure")
        if with_json:
            sp.add_argument("--json", metavar="FILE", help="write JSON")
        return sp

    common("lk", "linking numbers").set_defaults(func=cmd_lk)
    common("fibered", "fiberedness of a class",
           with_class=True).set_defaults(func=cmd_fibered)
    common("norm", "norm of a class", with_class=True).set_defaults(
        func=cmd_norm)
    common("slopes", "boundary slopes of a class",
           with_class=True).set_defaults(func=cmd_slopes)
    common("alex", "Alexander polynomial").set_defaults(func=cmd_alex)
    ball = common("ball", "norm unit ball", with_svg=True)
    ball.add_argument("--log-scale", action="store_true",
                      help="compress radii logarithmically in the SVG")
    ball.set_defaults(func=cmd_ball)
    common("hull", "Newton polygon of the Alexander polynomial",
           with_svg=True).set_defaults(func=cmd_hull)
    common("sw", "SW polynomial and basic classes").set_defaults(func=cmd_sw)
    common("orbits", "orbit count of fibered faces").set_defaults(
        func=cmd_orbits)
    common("report", "full report", with_json=True).set_defaults(
        func=cmd_report)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return 1
    except (ComputationError, OSError, ValueError) as exc:
        module = type(exc).__module__.rsplit(".", 1)[-1]
        print("%s.%s: %s" % (module, type(exc).__name__, exc),
              file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
