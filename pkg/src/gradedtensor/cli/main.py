"""Command-line interface.

Exit codes: 0 success (or the claim holds), 1 the claim fails, 2 usage
error, 3 parse error. Errors go to stderr as one line ``error: <kind>: ...``.
"""

from __future__ import annotations

import argparse
import sys

from ..errors import GradedTensorError
from ..ideals import MonomialIdeal, congruent, reduce
from ..lemmas import ORIGINAL, certificate, claim_id, sweep, verify
from ..algebra import Generator
from ..scalars import parse_field
from . import output
from .parser import ContextSpec, ParseError, parse_element, parse_word

EXIT_OK, EXIT_FAILS, EXIT_USAGE, EXIT_PARSE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common() -> argparse.ArgumentParser:
    p = _ArgumentParser(add_help=False)
    p.add_argument("--ctx", help='context, e.g. "n=4;field=f2;gens=a:1,b:2"')
    p.add_argument("--json", action="store_true", help="emit JSON")
    enc = p.add_mutually_exclusive_group()
    enc.add_argument("--ascii", dest="utf8", action="store_false", help="write tensors as (x) (default)")
    enc.add_argument("--utf8", dest="utf8", action="store_true", help="write tensors as ⊗")
    p.set_defaults(utf8=False)
    return p


def _claim_args(p: argparse.ArgumentParser):
    p.add_argument("--claim", required=True, help="original-first | corrected-first | second")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--deg", default="a=1", help="degrees, e.g. a=1 or a=1,b=2")
    p.add_argument("--field", default="q", help="q | f2 | f3 | fp:P")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _ArgumentParser(prog="gradedtensor", description="Graded tensor power computations.")
    sub = parser.add_subparsers(dest="command", metavar="command", parser_class=_ArgumentParser)
    sub.required = True

    p = sub.add_parser("expand", parents=[common], help="evaluate and print an expression")
    p.add_argument("expr")

    p = sub.add_parser("reduce", parents=[common], help="reduce an expression modulo a monomial ideal")
    p.add_argument("expr")
    p.add_argument("--ideal", nargs="+", required=True, metavar="WORD", help="tensor-literal generators")

    p = sub.add_parser("congruent", parents=[common], help="test congruence modulo a monomial ideal")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--ideal", nargs="+", required=True, metavar="WORD")

    p = sub.add_parser("verify", parents=[common], help="verify one claim instance")
    _claim_args(p)

    p = sub.add_parser("certificate", parents=[common], help="print the term-by-term certificate")
    _claim_args(p)

    p = sub.add_parser("sweep", parents=[common], help="verify claims over ranges of parameters")
    p.add_argument("--claim", nargs="+", default=["corrected-first", "second"])
    p.add_argument("--n", default="2..10", help="range like 2..8, or a comma list")
    p.add_argument("--degrees", default="1,2", help="degree values to combine for a and b")
    p.add_argument("--fields", default="q,f2,f3")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def parse_range(text: str) -> list[int]:
    text = text.strip()
    if ".." in text:
        lo, _, hi = text.partition("..")
        try:
            lo_i, hi_i = int(lo), int(hi)
        except ValueError:
            raise UsageError(f"bad range {text!r}") from None
        if lo_i > hi_i:
            raise UsageError(f"empty range {text!r}")
        return list(range(lo_i, hi_i + 1))
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def parse_degrees(text: str) -> dict[str, int]:
    degrees = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        name, eq, value = part.partition("=")
        if not eq:
            raise UsageError(f"degree {part!r} is not name=value")
        try:
            degrees[name.strip()] = int(value)
        except ValueError:
            raise UsageError(f"degree of {name.strip()!r} must be an integer") from None
        if degrees[name.strip()] < 0:
            raise UsageError("degrees must be nonnegative")
    return degrees


def _warn_degree_zero(degrees: dict[str, int], err):
    for name, d in degrees.items():
        if d == 0:
            print(f"warning: generator {name} has degree 0", file=err)


def _context(args) -> ContextSpec:
    if not args.ctx:
        raise UsageError("this command needs --ctx")
    try:
        return ContextSpec.parse(args.ctx)
    except ValueError as e:
        raise UsageError(f"bad --ctx: {e}") from None


def _ideal(words, ctx) -> MonomialIdeal:
    return MonomialIdeal([parse_word(w, ctx) for w in words], ctx.arity)


def _field(text):
    try:
        return parse_field(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def run(argv, out=sys.stdout, err=sys.stderr) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _dispatch(args, out, err)
    except UsageError as e:
        print(f"error: usage: {e}", file=err)
        return EXIT_USAGE
    except ParseError as e:
        print(f"error: parse: {e}", file=err)
        return EXIT_PARSE
    except (GradedTensorError, ValueError, ZeroDivisionError) as e:
        print(f"error: usage: {e}", file=err)
        return EXIT_USAGE


def _dispatch(args, out, err) -> int:
    cmd = args.command
    if cmd in ("expand", "reduce", "congruent"):
        ctx = _context(args)
        _warn_degree_zero(ctx.generators, err)
        if cmd == "expand":
            x = parse_element(args.expr, ctx)
            _emit_element(x, args, out)
            return EXIT_OK
        ideal = _ideal(args.ideal, ctx)
        if cmd == "reduce":
            _emit_element(reduce(parse_element(args.expr, ctx), ideal), args, out)
            return EXIT_OK
        left, right = parse_element(args.left, ctx), parse_element(args.right, ctx)
        ok = congruent(left, right, ideal)
        if args.json:
            data = {"congruent": ok, "difference": output.to_structured(reduce(left - right, ideal))}
            print(output.dumps(data), file=out)
        elif ok:
            print("CONGRUENT", file=out)
        else:
            diff = output.to_text(reduce(left - right, ideal), args.utf8)
            print(f"NOT CONGRUENT: reduced difference = {diff}", file=out)
        return EXIT_OK if ok else EXIT_FAILS

    if cmd in ("verify", "certificate"):
        claim = claim_id(args.claim)
        degrees = parse_degrees(args.deg)
        if "a" not in degrees:
            raise UsageError("--deg must give a degree for a")
        _warn_degree_zero(degrees, err)
        field = _field(args.field)
        if args.n < 2:
            raise UsageError("--n must be at least 2")
        if cmd == "verify":
            report = verify(claim, args.n, degrees, field)
            _emit_report(report, args, out)
            return EXIT_OK if report.holds else EXIT_FAILS
        a = Generator("a", degrees["a"])
        b = Generator("b", degrees["b"]) if "b" in degrees else None
        records = certificate(claim, a, args.n, field, b)
        if args.json:
            print(output.dumps([output.to_structured(r) for r in records]), file=out)
        else:
            for r in records:
                print(output.record_line(r, args.utf8), file=out)
            survivors = sum(r.survives for r in records)
            print(f"{len(records)} terms, {survivors} survive", file=out)
        return EXIT_OK

    if cmd == "sweep":
        claims = [claim_id(c) for c in args.claim]
        ns = parse_range(args.n)
        if not ns or min(ns) < 2:
            raise UsageError("--n values must be at least 2")
        degs = parse_range(args.degrees)
        fields = [_field(f) for f in args.fields.split(",") if f.strip()]
        cells = sweep(claims, ns, degs, fields, jobs=max(1, args.jobs))
        all_ok = all(c.holds and c.certificate_ok for c in cells)
        if args.json:
            data = [{
                "claim": c.claim, "n": c.n, "degrees": dict(c.degrees), "field": str(c.field),
                "holds": c.holds, "residual_terms": c.residual_terms, "certificate_ok": c.certificate_ok,
            } for c in cells]
            print(output.dumps(data), file=out)
        else:
            print(f"{'claim':<22} {'n':>3}  {'degrees':<10} {'field':<5} {'result':<17} certificate", file=out)
            for c in cells:
                degs_txt = ",".join(f"{k}={v}" for k, v in c.degrees)
                result = "HOLDS" if c.holds else "FAILS"
                if not c.holds and c.claim == ORIGINAL and c.n >= 4:
                    result += " (expected)"
                cert = "ok" if c.certificate_ok else "MISMATCH"
                print(f"{c.claim:<22} {c.n:>3}  {degs_txt:<10} {str(c.field):<5} {result:<17} {cert}", file=out)
            held = sum(c.holds for c in cells)
            print(f"{held}/{len(cells)} cells hold", file=out)
        return EXIT_OK if all_ok else EXIT_FAILS
    raise UsageError(f"unknown command {cmd!r}")


def _emit_element(x, args, out):
    if args.json:
        print(output.dumps(output.to_structured(x)), file=out)
    else:
        print(output.to_text(x, args.utf8), file=out)


def _emit_report(report, args, out):
    if args.json:
        print(output.dumps(output.to_structured(report)), file=out)
        return
    if report.holds:
        print("HOLDS", file=out)
    else:
        print(f"FAILS: residual = {output.to_text(report.residual, args.utf8)}", file=out)
    degs = ", ".join(f"{k}={v}" for k, v in sorted(report.degrees.items()))
    survivors = len(report.survivors)
    print(f"claim {report.claim}, n={report.n}, degrees {degs}, field {report.field}", file=out)
    print(f"{len(report.certificate)} expansion terms, {survivors} survive reduction", file=out)
    if not report.holds and report.claim == ORIGINAL and report.n >= 4:
        print("note: this is the known counterexample; the original first-part claim fails for n >= 4", file=out)
    for note in report.notes:
        print(f"note: {note}", file=out)


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
