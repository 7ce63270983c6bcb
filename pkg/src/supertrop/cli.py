"""Command-line front end.

    supertrop VERB -n N EXPR [EXPR2] [--at POINT] [--format json|svg]

Every result is one JSON document on stdout (or an SVG for --format svg).
Exit status: 0 success, 1 domain error (JSON error object), 2 usage error.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import expr as E
from . import kernel as K
from .complex import complex_to_json, corn_complex, skel_complex
from .decompose import classify, ho_decompose, wedge_decompose
from .dimension import (EmptySkeletonError, NotHSError, condeg, convex_basis,
                        hdim, hdim_witness, hs_monomials, jh_chain,
                        quotient_condeg)
from .parser import ParseError, parse, parse_point
from .render import DEFAULT_BOX, render_svg
from .scalar import t

VERBS = ("eval", "skel", "corn", "hat", "phici", "ci", "regular", "member",
         "kop", "decompose", "wedge", "classify", "dim", "chain", "polar",
         "render")

# verbs taking (minimum, maximum) expressions
ARITY = {"member": (2, 2), "kop": (2, 2), "polar": (2, 2), "dim": (0, 2)}

PREFIXES = {"hat": E.hat, "phici": E.phi_ci}


class UsageError(Exception):
    pass


def read_expr(text, n):
    """Parse an expression, applying any ``hat:`` / ``phici:`` prefixes."""
    head, sep, rest = text.partition(":")
    if sep and head.strip() in PREFIXES:
        return PREFIXES[head.strip()](read_expr(rest, n))
    return parse(text, n)


def _q(v):
    return str(Fraction(v))


def _corn(f):
    # a monomial denominator does not move ghost roots
    if len(f.den.terms) == 1:
        return corn_complex(f.num)
    return corn_complex(E.underline(f))


def _complex_out(cx, args):
    if args.format == "svg":
        return render_svg(cx, args.box)
    return complex_to_json(cx)


def _point(args, n, required=True):
    if args.at is None:
        if required:
            raise UsageError("--at is required for this verb")
        return None
    return parse_point(args.at, n)


def run(args):
    """Dispatch one parsed command line; returns a JSON-able object or str."""
    n = args.n
    exprs = [read_expr(s, n) for s in args.exprs]
    f = exprs[0] if exprs else None
    v = args.verb

    if v == "eval":
        x = _point(args, n)
        return {"value": str(f.evaluate(x))}
    if v == "skel":
        return _complex_out(skel_complex(f), args)
    if v == "corn":
        return _complex_out(_corn(f), args)
    if v == "render":
        what = skel_complex(f)
        return render_svg(what, args.box)
    if v in ("hat", "phici"):
        g = PREFIXES[v](f)
        out = {"expr": str(g)}
        if args.at is not None:
            out["value"] = str(g.evaluate(_point(args, n)))
        return out
    if v == "ci":
        return {"corner_internal": bool(K.corner_internal(f))}
    if v == "regular":
        if args.at is None:
            return {"regular": bool(K.regular(f))}
        x = [s.mag for s in _point(args, n)]
        return {"regular_at": bool(K.regular_at(f, x)),
                "point": [_q(c) for c in x]}
    if v == "member":
        g, h = exprs
        m = K.member(g, h)
        return {"member": m.result, "witness_k": m.witness_k}
    if v == "kop":
        a, b = exprs
        if args.op == "product":
            P = K.kernel_product(a, b)
        elif args.op == "intersection":
            P = K.kernel_intersection(a, b)
        elif args.op == "equal":
            return {"kernel_equal": bool(K.kernel_equal(a, b))}
        else:
            return {"equiv_mod_F": bool(K.equiv_mod_F(a, b, args.alpha))}
        return {"generator": str(P.generator),
                "skeleton": complex_to_json(P.skeleton)}
    if v == "decompose":
        dec = ho_decompose(f)
        if args.format == "svg":
            return render_svg(dec.skeleton(), args.box)
        return dec.to_json()
    if v == "wedge":
        return {"terms": [str(u) for u in wedge_decompose(f)]}
    if v == "classify":
        return {"class": classify(f)}
    if v == "dim":
        if f is None:
            w = hdim_witness(n)
            return {"condeg": condeg(n), "hdim": hdim(n),
                    "witness": w.to_json()}
        if len(exprs) == 2:
            return {"quotient_condeg": quotient_condeg(f, exprs[1])}
        basis = convex_basis(hs_monomials(f))
        return {"condeg": condeg(f),
                "basis": [str(m) for m in basis.monomials]}
    if v == "chain":
        order = None
        if args.order:
            order = [int(i) for i in args.order.split(",")]
        return jh_chain(f, order).to_json()
    if v == "polar":
        a, b = exprs
        return {"orthogonal": bool(K.orthogonal(a, b)),
                "in_double_polar": bool(K.in_double_polar(a, b))}
    raise UsageError("unknown verb %r" % v)


def _box(text):
    parts = [Fraction(p) for p in text.split(",")]
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("box needs x0,x1,y0,y1")
    return tuple(parts)


def _alpha(text):
    return t(Fraction(text))


def build_parser():
    p = argparse.ArgumentParser(
        prog="supertrop",
        description="Exact supertropical kernels, skeletons and decompositions.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("exprs", nargs="*", metavar="EXPR")
    p.add_argument("-n", type=int, required=True, help="number of variables")
    p.add_argument("--at", help="point, e.g. 't(2),g(1)' or '2,1/2'")
    p.add_argument("--format", choices=("json", "svg"), default="json")
    p.add_argument("--budget", type=int, help="monomial cap (env SKL_BUDGET)")
    p.add_argument("--alpha", type=_alpha, default=t(1),
                   help="bounding constant of <F> as a log magnitude (default 1)")
    p.add_argument("--op", choices=("product", "intersection", "equal", "equiv"),
                   default="product", help="kernel operation for kop")
    p.add_argument("--order", help="basis ordering for chain, e.g. 1,0")
    p.add_argument("--box", type=_box, default=DEFAULT_BOX,
                   help="render bounds x0,x1,y0,y1")
    return p


def _error(exc):
    err = {"type": type(exc).__name__, "message": str(exc)}
    if isinstance(exc, ParseError):
        err["position"] = exc.pos
    if isinstance(exc, E.BudgetError):
        err["limit"] = exc.limit
    return {"error": err}


DOMAIN_ERRORS = (ParseError, E.BudgetError, E.GhostDenominatorError,
                 E.DegenerateError, NotHSError, EmptySkeletonError,
                 ValueError, ZeroDivisionError)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_intermixed_args(argv)
    lo, hi = ARITY.get(args.verb, (1, 1))
    if not lo <= len(args.exprs) <= hi:
        parser.error("%s takes %s expression(s)" % (
            args.verb, lo if lo == hi else "%d to %d" % (lo, hi)))
    if args.n < 1:
        parser.error("-n must be positive")
    if args.verb == "render" or args.format == "svg":
        if args.n != 2:
            parser.error("svg output needs -n 2")
    if args.budget is not None:
        E.set_budget(args.budget)
    try:
        out = run(args)
    except UsageError as exc:
        parser.error(str(exc))
    except DOMAIN_ERRORS as exc:
        sys.stdout.write(json.dumps(_error(exc), sort_keys=True) + "\n")
        return 1
    if isinstance(out, str):
        sys.stdout.write(out)
    else:
        sys.stdout.write(json.dumps(out, sort_keys=True) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
