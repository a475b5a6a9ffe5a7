"""Command-line front end.

Exit status: 0 for a definitive answer, 2 for Inconclusive (or an unsupported
classification), 1 for any error.
"""

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import exact, flat, yflat
from .certify import (
    NORMAL_FORM_IDS,
    Strategy,
    Verdict,
    certify_point,
    normal_form,
    verify_fourth_secant_suite,
)
from .classify import SubsecantQuery, Tag, classify_fourth_secant, classify_subsecant, expected_secant_dim
from .errors import DomainError, ParseError, PreconditionError
from .gpoly import DUAL, PRIMAL, GradedForm, divided_to_ordinary, ordinary_to_divided
from .parse import parse_expression
from .tangent import CurveFamily, moving_tangent_span, tangent_excess_verdict, tangent_frame

ORDINARY = "ordinary"
DIVIDED = "divided-power"


@dataclass(frozen=True)
class PolySource:
    text: str
    nvars: int | None = None
    var_names: tuple | None = None
    coefficient_convention: str = ORDINARY


def parse_poly(src):
    """Parse a homogeneous form; ordinary coefficients become divided powers."""
    if isinstance(src, str):
        src = PolySource(src)
    if src.coefficient_convention not in (ORDINARY, DIVIDED):
        raise DomainError(f"unknown coefficient convention {src.coefficient_convention!r}")
    names = tuple(src.var_names) if src.var_names else None
    if names is not None and src.nvars is not None and len(names) != src.nvars:
        raise DomainError("nvars disagrees with the variable list")
    parsed = parse_expression(src.text, var_names=names, nvars=src.nvars)
    degrees = {}
    for key, pos in parsed.written:
        degrees.setdefault(sum(key), []).append((key, pos))
    if len(degrees) > 1:
        shown = "; ".join(
            f"degree {deg}: " + ", ".join(_render_monomial(k, parsed.var_names) or "1" for k, _ in items)
            for deg, items in sorted(degrees.items())
        )
        raise ParseError(f"expression is not homogeneous ({shown})")
    (deg,) = degrees
    nv = len(parsed.var_names)
    if src.coefficient_convention == ORDINARY:
        return ordinary_to_divided(nv, deg, parsed.terms)
    return GradedForm(nv, deg, parsed.terms, PRIMAL)


def _render_monomial(index, names):
    parts = []
    for name, e in zip(names, index):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def render_terms(terms, nvars, degree, names=None):
    """Inverse of the parser on canonical input: graded-lex order, explicit '*'."""
    names = names or tuple(f"x{i}" for i in range(nvars))
    items = sorted(((k, v) for k, v in terms.items() if v), reverse=True)
    if not items:
        return "0*" + (_render_monomial((degree,) + (0,) * (nvars - 1), names) or "1") if degree else "0"
    out = []
    for i, (k, c) in enumerate(items):
        mono = _render_monomial(k, names)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def render(f, names=None):
    """A form of S in ordinary coefficients, or a form of T as written."""
    if f.convention is PRIMAL:
        return render_terms(divided_to_ordinary(f), f.nvars, f.degree, names)
    names = names or tuple(f"y{i}" for i in range(f.nvars))
    return render_terms(dict(f.coeffs), f.nvars, f.degree, names)


# -- output helpers ---------------------------------------------------------------


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _dump(args, matrix):
    if not getattr(args, "dump", None):
        return
    text = matrix.to_text()
    if args.dump == "-":
        sys.stdout.write(text)
    else:
        with open(args.dump, "w") as fh:
            fh.write(text)


def _form(args):
    names = tuple(v.strip() for v in args.vars.split(",")) if args.vars else None
    conv = DIVIDED if args.divided else ORDINARY
    return parse_poly(PolySource(args.poly, args.nvars, names, conv))


# -- commands ---------------------------------------------------------------------


def cmd_cat(args):
    f = _form(args)
    c = flat.catalecticant(f, args.a)
    r = c.rank
    rows, cols = c.matrix.shape
    payload = {"command": "cat", "a": args.a, "degree": f.degree, "nvars": f.nvars, "rows": rows, "cols": cols, "rank": r}
    _emit(args, payload, [f"catalecticant ({f.degree - args.a},{args.a}): {rows} x {cols}, rank {r}"])
    _dump(args, c.matrix)
    return 0


def cmd_apolar(args):
    f = _form(args)
    space = flat.apolar_piece(f, args.degree)
    basis = [GradedForm(f.nvars, args.degree, v, DUAL) for v in space.labeled_vectors()]
    shown = [render(g) for g in basis]
    payload = {"command": "apolar", "degree": args.degree, "dim": space.dim, "basis": shown}
    _emit(args, payload, [f"dim (f^perp)_{args.degree} = {space.dim}"] + ["  " + s for s in shown])
    _dump(args, space.basis_matrix())
    return 0


def cmd_young(args):
    f = _form(args)
    if args.d1 is None and args.d2 is None and args.a is None:
        d1, d2, a = yflat.default_params(f.degree)
    else:
        if None in (args.d1, args.d2, args.a):
            raise DomainError("give all of --d1, --d2, --a or none of them")
        d1, d2, a = args.d1, args.d2, args.a
    yf = yflat.young_flattening(f, d1, d2, a)
    r = yflat.yf_rank(yf)
    rows, cols = yf.matrix.shape
    bound = -(-r // yf.decomposable_rank)
    payload = {
        "command": "young",
        "d1": d1,
        "d2": d2,
        "a": a,
        "rows": rows,
        "cols": cols,
        "rank": r,
        "rank_of_a_power": yf.decomposable_rank,
        "border_rank_lower_bound": bound,
    }
    _emit(args, payload, [f"Young flattening ({d1},{d2},{a}): {rows} x {cols}, rank {r}, border rank >= {bound}"])
    _dump(args, yf.matrix)
    return 0


def _verdict_exit(v):
    return 2 if v is Verdict.INCONCLUSIVE else 0


def cmd_certify(args):
    f = _form(args)
    cert = certify_point(f, args.k, Strategy.parse(args.strategy))
    payload = dict(cert.to_dict(), command="certify")
    lines = [f"verdict: {cert.verdict.value}"]
    for s in cert.steps:
        res = ", ".join(f"{k}={v}" for k, v in s.result.items())
        lines.append(f"  {s.op}: {res}")
    _emit(args, payload, lines)
    return _verdict_exit(cert.verdict)


def cmd_classify(args):
    v = classify_subsecant(SubsecantQuery(args.k, args.d, args.m, args.n))
    payload = dict(v.to_dict(), command="classify", query={"k": args.k, "d": args.d, "m": args.m, "n": args.n})
    _emit(args, payload, [f"{v.tag.value}: {v.justification}"])
    return 2 if v.tag is Tag.UNSUPPORTED else 0


def cmd_classify4(args):
    rep = classify_fourth_secant(args.d, args.n)
    payload = dict(rep.to_dict(), command="classify4")
    _emit(args, payload, rep.lines())
    return 0


def cmd_normal_forms(args):
    if args.verify:
        rep = verify_fourth_secant_suite(args.d)
        payload = dict(rep.to_dict(), command="normal-forms")
        lines = [
            f"{r.name}: young rank {r.yf_rank}, conormal dim {r.conormal_dim} (expected {r.expected})"
            + ("" if r.computed else " [informational]")
            for r in rep.rows
        ]
        ok = sum(1 for r in rep.rows if r.computed and r.ok)
        total = sum(1 for r in rep.rows if r.computed)
        lines.append(f"{ok}/{total} conormal dims = {rep.rows[0].expected}: {'PASS' if rep.passed else 'FAIL'}")
        _emit(args, payload, lines)
        return 0 if rep.passed else 1
    forms = {name: render(normal_form(name, args.d)) for name in NORMAL_FORM_IDS}
    _emit(args, {"command": "normal-forms", "d": args.d, "forms": forms}, [f"{k} = {v}" for k, v in forms.items()])
    return 0


def cmd_tangent_span(args):
    fam = CurveFamily.parse(args.family)
    n = fam.nvars - 1
    spans = [moving_tangent_span(fam, args.d)]
    labels = [f"family [{args.family}]"]
    for p in args.point or []:
        pt = [Fraction(c) for c in p.split(",")]
        if len(pt) != fam.nvars:
            raise DomainError("point and family have different numbers of coordinates")
        spans.append(tangent_frame(pt, args.d).span)
        labels.append(f"frame at [{p}]")
    total = exact.span_sum(*spans).dim
    payload = {
        "command": "tangent-span",
        "d": args.d,
        "n": n,
        "components": [{"label": lab, "affine_dim": s.dim, "projective_dim": s.dim - 1} for lab, s in zip(labels, spans)],
        "total_affine": total,
        "total_projective": total - 1,
    }
    lines = [f"{lab}: affine {s.dim}, projective {s.dim - 1}" for lab, s in zip(labels, spans)]
    lines.append(f"total: affine {total}, projective {total - 1}")
    code = 0
    if args.k is not None:
        rep = tangent_excess_verdict(spans, args.k, args.d, n)
        payload["excess"] = rep.to_dict()
        lines.append(
            f"sigma_{args.k}: dim {expected_secant_dim(args.k, args.d, n)}; verdict {rep.verdict}"
        )
        code = 0 if rep.excess else 2
    _emit(args, payload, lines)
    return code


def build_parser():
    p = _Parser(prog="secsing", description="Exact flattenings and singularity certificates for secant varieties of Veronese varieties.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, poly=True):
        sp.add_argument("--json", action="store_true", help="emit a JSON report")
        if poly:
            sp.add_argument("--poly", required=True, help='form, e.g. "x0^2*x1 + x2^3"')
            sp.add_argument("--nvars", type=int, help="number of variables (default: largest index + 1)")
            sp.add_argument("--vars", help="comma-separated variable names")
            sp.add_argument("--divided", action="store_true", help="coefficients are divided-power coordinates")

    sp = sub.add_parser("cat", help="catalecticant matrix and rank")
    common(sp)
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--dump", help="write the matrix in text form to a file ('-' for stdout)")
    sp.set_defaults(func=cmd_cat)

    sp = sub.add_parser("apolar", help="basis of a graded piece of the apolar ideal")
    common(sp)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--dump")
    sp.set_defaults(func=cmd_apolar)

    sp = sub.add_parser("young", help="Young flattening statistics")
    common(sp)
    sp.add_argument("--d1", type=int)
    sp.add_argument("--d2", type=int)
    sp.add_argument("--a", type=int)
    sp.add_argument("--dump")
    sp.set_defaults(func=cmd_young)

    sp = sub.add_parser("certify", help="certify a point of sigma_k")
    common(sp)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--strategy", default="auto", help="sym:A | young:D1,D2,A | auto")
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("classify", help="verdict for an m-subsecant variety")
    common(sp, poly=False)
    for name in ("k", "d", "m", "n"):
        sp.add_argument(f"--{name}", type=int, required=True)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("classify4", help="singular-locus report for sigma_4")
    common(sp, poly=False)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_classify4)

    sp = sub.add_parser("normal-forms", help="four-variable normal forms")
    common(sp, poly=False)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--verify", action="store_true", help="run the Young flattening suite")
    sp.set_defaults(func=cmd_normal_forms)

    sp = sub.add_parser("tangent-span", help="span of tangent spaces along a curve family")
    common(sp, poly=False)
    sp.add_argument("--family", required=True, help='coordinates in t, e.g. "1,t,0,0"')
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--point", action="append", help="extra fixed frame, e.g. 0,0,1,0 (repeatable)")
    sp.add_argument("--k", type=int, help="compare against dim sigma_k")
    sp.set_defaults(func=cmd_tangent_span)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except SystemExit as e:
        # --help
        return 0 if e.code in (0, None) else 1
    try:
        return args.func(args)
    except (DomainError, ParseError, PreconditionError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
