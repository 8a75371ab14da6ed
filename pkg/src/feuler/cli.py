"""Command-line front end: tables, expansions, and identity verification.

The polynomial expression grammar shared by ``convert`` and the tests:

    expr     := term (('+' | '-') term)*
    term     := factor (('*' | '/') factor)*
    factor   := base ('^' uint)?
    base     := rational | 'x' | 'L' | '(' expr ')' | '-' base
    rational := int ('/' uint)?

Rationals bind greedily ('3/2^2' is (3/2)^2), division only accepts
divisors free of x, and everything the canonical printers emit parses
back to an equal value.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import frobenius, suite as suite_mod
from .scalar import LAMBDA, LambdaPoly, LambdaRat, lrat
from .xpoly import X, XPoly


class PolyParseError(ValueError):
    """Malformed polynomial expression, with the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def _tokenize(text: str) -> list:
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("int", text[i:j], i))
            i = j
            continue
        if ch in ("x", "L"):
            toks.append((ch, ch, i))
            i += 1
            continue
        if ch in "+-*/^()":
            toks.append((ch, ch, i))
            i += 1
            continue
        raise PolyParseError(f"unexpected character {ch!r}", i)
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def advance(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expr(self) -> XPoly:
        v = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.advance()[0]
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self) -> XPoly:
        v = self.factor()
        while self.peek()[0] in ("*", "/"):
            kind, _, pos = self.advance()
            rhs = self.factor()
            if kind == "*":
                v = v * rhs
            else:
                if rhs.degree > 0:
                    raise PolyParseError("division by a polynomial in x", pos)
                if rhs.is_zero:
                    raise PolyParseError("division by zero", pos)
                v = v * rhs.coeff(0).inverse()
        return v

    def factor(self) -> XPoly:
        v = self.base()
        if self.peek()[0] == "^":
            self.advance()
            kind, text, pos = self.peek()
            if kind != "int":
                raise PolyParseError("expected a nonnegative integer exponent", pos)
            self.advance()
            v = v ** int(text)
        return v

    def base(self) -> XPoly:
        kind, text, pos = self.peek()
        if kind == "-":
            self.advance()
            return -self.base()
        if kind == "int":
            return XPoly.const(self.rational())
        if kind == "x":
            self.advance()
            return X
        if kind == "L":
            self.advance()
            return XPoly.const(LAMBDA)
        if kind == "(":
            self.advance()
            v = self.expr()
            k2, _, p2 = self.peek()
            if k2 != ")":
                raise PolyParseError("expected ')'", p2)
            self.advance()
            return v
        if kind == "end":
            raise PolyParseError("unexpected end of input", pos)
        raise PolyParseError(f"unexpected {text!r}", pos)

    def rational(self) -> Fraction:
        _, text, _ = self.advance()
        num = int(text)
        if self.peek()[0] == "/" and self.toks[self.i + 1][0] == "int":
            self.advance()
            _, dtext, dpos = self.advance()
            den = int(dtext)
            if den == 0:
                raise PolyParseError("zero denominator", dpos)
            return Fraction(num, den)
        return Fraction(num)


def parse_poly_expr(text: str) -> XPoly:
    """Parse the expression grammar above into a polynomial over Q(L)."""
    parser = _Parser(text)
    v = parser.expr()
    kind, text_, pos = parser.peek()
    if kind != "end":
        raise PolyParseError(f"unexpected {text_!r}", pos)
    return v


# ---------------------------------------------------------------------------
# LaTeX rendering

def latex_fraction(fr: Fraction) -> str:
    if fr.denominator == 1:
        return str(fr.numerator)
    sign = "-" if fr < 0 else ""
    return f"{sign}\\frac{{{abs(fr.numerator)}}}{{{fr.denominator}}}"


def latex_lpoly(p: LambdaPoly) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = latex_fraction(mag)
        else:
            lam = "\\lambda" if k == 1 else f"\\lambda^{{{k}}}"
            body = lam if mag == 1 else latex_fraction(mag) + lam
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def latex_lrat(v: LambdaRat) -> str:
    if v.is_poly:
        return latex_lpoly(v.num)
    return f"\\frac{{{latex_lpoly(v.num)}}}{{{latex_lpoly(v.den)}}}"


def latex_xpoly(p: XPoly) -> str:
    if p.is_zero:
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c.is_zero:
            continue
        xpow = "" if k == 0 else ("x" if k == 1 else f"x^{{{k}}}")
        body = latex_lrat(c)
        if xpow:
            if c == 1:
                body = xpow
            else:
                if not c.is_poly or len([t for t in c.num.coeffs if t]) > 1:
                    body = f"\\left({body}\\right){xpow}"
                else:
                    body = f"{body}\\,{xpow}"
        parts.append(body)
    return " + ".join(parts)


# ---------------------------------------------------------------------------

def _fraction_arg(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc
    if value == 1:
        raise argparse.ArgumentTypeError("lambda = 1 is outside the field")
    return value


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit_table(args, header, rows, latex_lines, json_obj) -> str:
    if args.format == "plain":
        return "\n".join("\t".join(str(v) for v in row) for row in rows) + "\n"
    if args.format == "csv":
        return _csv_text(header, rows)
    if args.format == "latex":
        return "\n".join(latex_lines) + "\n"
    return json.dumps(json_obj) + "\n"


def _cmd_numbers(args) -> int:
    r = args.order
    values = frobenius.fe_numbers(args.n_max, r)
    if args.lam is not None:
        shown = [str(v.evaluate(args.lam)) for v in values]
        latex = [f"H_{{{n}}}^{{({r})}} = {latex_fraction(v.evaluate(args.lam))} \\\\"
                 for n, v in enumerate(values)]
    else:
        shown = [str(v) for v in values]
        latex = [f"H_{{{n}}}^{{({r})}}(\\lambda) = {latex_lrat(v)} \\\\"
                 for n, v in enumerate(values)]
    rows = [(n, s) for n, s in enumerate(shown)]
    obj = {"order": r, "values": [{"n": n, "value": s} for n, s in rows]}
    sys.stdout.write(_emit_table(args, ("n", "value"), rows, latex, obj))
    return 0


def _cmd_poly(args) -> int:
    p = frobenius.fe_poly(args.n, args.order)
    if args.lam is not None:
        p = XPoly([lrat(c.evaluate(args.lam)) for c in p.coeffs])
    text = str(p)
    if args.format == "latex":
        out = f"H_{{{args.n}}}^{{({args.order})}}(x\\mid\\lambda) = {latex_xpoly(p)}\n"
    elif args.format == "csv":
        out = _csv_text(("n", "order", "poly"), [(args.n, args.order, text)])
    elif args.format == "json":
        out = json.dumps({"n": args.n, "order": args.order, "poly": text}) + "\n"
    else:
        out = text + "\n"
    sys.stdout.write(out)
    return 0


def _cmd_convert(args) -> int:
    try:
        p = parse_poly_expr(args.poly)
    except PolyParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    e = frobenius.to_fe_basis(p, args.order)
    coeffs = list(e.coefficients)
    if args.lam is not None:
        shown = [str(c.evaluate(args.lam)) for c in coeffs]
        latex = [f"C_{{{k}}} = {latex_fraction(c.evaluate(args.lam))} \\\\"
                 for k, c in enumerate(coeffs)]
    else:
        shown = [str(c) for c in coeffs]
        latex = [f"C_{{{k}}} = {latex_lrat(c)} \\\\" for k, c in enumerate(coeffs)]
    rows = [(k, s) for k, s in enumerate(shown)]
    obj = {"order": args.order, "poly": str(p),
           "coefficients": [{"k": k, "value": s} for k, s in rows]}
    sys.stdout.write(_emit_table(args, ("k", "value"), rows, latex, obj))
    return 0


def _cmd_stirling(args) -> int:
    v = frobenius.stirling_lambda(args.n, args.k)
    if args.lam is not None:
        text = str(v.evaluate(args.lam))
        tex = latex_fraction(v.evaluate(args.lam))
    else:
        text = str(v)
        tex = latex_lrat(v)
    if args.format == "latex":
        out = f"S_{{\\lambda}}({args.n},{args.k}) = {tex}\n"
    elif args.format == "csv":
        out = _csv_text(("n", "k", "value"), [(args.n, args.k, text)])
    elif args.format == "json":
        out = json.dumps({"n": args.n, "k": args.k, "value": text}) + "\n"
    else:
        out = text + "\n"
    sys.stdout.write(out)
    return 0


def _cell_json(cell) -> str:
    return json.dumps({
        "identity": cell.identity,
        "params": {k: cell.params[k] for k in sorted(cell.params)},
        "status": cell.status,
        "lhs": cell.lhs,
        "rhs": cell.rhs,
        "elapsed_us": cell.elapsed_us,
    })


_NEEDS = {
    "thm2": ("n", "r", "s"),
    "cor3": ("n", "r"),
    "cor4": ("n", "r"),
    "thm5": ("n", "r"),
    "thm6": ("n", "r"),
    "remark": ("n", "r"),
    "eq15_duality": ("n", "k", "r"),
    "eq12_ladder": ("n", "r"),
    "eq22_ladder": ("n", "r"),
    "thm1_roundtrip": ("index",),
}


def _cmd_verify(args, seed: int) -> int:
    needed = _NEEDS[args.identity]
    given = {"n": args.n, "r": args.r, "s": args.s, "k": args.k, "index": args.index}
    missing = [name for name in needed if given[name] is None]
    if missing:
        sys.stderr.write(
            f"error: {args.identity} needs --{', --'.join(missing)}\n")
        return 2
    if args.identity == "thm2":
        cell = suite_mod.verify_thm2(args.n, args.r, args.s)
    elif args.identity == "cor3":
        cell = suite_mod.verify_cor3(args.n, args.r)
    elif args.identity == "cor4":
        cell = suite_mod.verify_cor4(args.n, args.r)
    elif args.identity == "thm5":
        cell = suite_mod.verify_thm5(args.n, args.r)
    elif args.identity == "thm6":
        cell = suite_mod.verify_thm6(args.n, args.r)
    elif args.identity == "remark":
        cell = suite_mod.verify_remark(args.n, args.r)
    elif args.identity == "eq15_duality":
        cell = suite_mod.verify_eq15_duality(args.n, args.k, args.r)
    elif args.identity == "eq12_ladder":
        cell = suite_mod.verify_eq12_ladder(args.n, args.r)
    elif args.identity == "eq22_ladder":
        cell = suite_mod.verify_eq22_ladder(args.n, args.r)
    else:
        cell = suite_mod.verify_thm1_roundtrip(args.index, seed=seed)
    if args.format == "json":
        sys.stdout.write(_cell_json(cell) + "\n")
    elif args.format == "csv":
        sys.stdout.write(_csv_text(
            ("identity", "params", "status", "lhs", "rhs", "elapsed_us"),
            [(cell.identity, json.dumps(cell.params, sort_keys=True),
              cell.status, cell.lhs, cell.rhs, cell.elapsed_us)]))
    elif args.format == "latex":
        ps = ", ".join(f"{k}={cell.params[k]}" for k in sorted(cell.params))
        sys.stdout.write(
            f"\\texttt{{{cell.identity}}}({ps}): \\textbf{{{cell.status}}} \\\\\n")
    else:
        ps = " ".join(f"{k}={cell.params[k]}" for k in sorted(cell.params))
        sys.stdout.write(f"{cell.identity} {ps} {cell.status}\n"
                         f"lhs: {cell.lhs}\nrhs: {cell.rhs}\n")
    return 0 if cell.status != "mismatch" else 1


def _cmd_suite(args, seed: int) -> int:
    report = suite_mod.run_suite(args.n_max, args.r_max, args.s_max,
                                 seed=seed, jobs=args.jobs)
    if args.format == "json":
        sys.stdout.write(report.to_jsonl())
    elif args.format == "csv":
        rows = [(c.identity, json.dumps(c.params, sort_keys=True), c.status,
                 c.lhs, c.rhs, c.elapsed_us) for c in report.cells]
        sys.stdout.write(_csv_text(
            ("identity", "params", "status", "lhs", "rhs", "elapsed_us"), rows))
    elif args.format == "latex":
        lines = ["\\begin{tabular}{lrrrr}",
                 "identity & cells & equal & mismatch & skipped \\\\"]
        for ident in suite_mod.IDENTITY_IDS:
            group = [c for c in report.cells if c.identity == ident]
            if not group:
                continue
            eq = sum(c.status == "equal" for c in group)
            mi = sum(c.status == "mismatch" for c in group)
            sk = sum(c.status == "skipped" for c in group)
            lines.append(f"{ident.replace('_', chr(92) + '_')} & "
                         f"{len(group)} & {eq} & {mi} & {sk} \\\\")
        lines.append("\\end{tabular}")
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        totals = report.totals()
        for ident in suite_mod.IDENTITY_IDS:
            group = [c for c in report.cells if c.identity == ident]
            if not group:
                continue
            eq = sum(c.status == "equal" for c in group)
            mi = sum(c.status == "mismatch" for c in group)
            sk = sum(c.status == "skipped" for c in group)
            sys.stdout.write(
                f"{ident}: {len(group)} cells, {eq} equal, {mi} mismatch, {sk} skipped\n")
        sys.stdout.write(
            "total: {total} cells, {equal} equal, {mismatch} mismatch, "
            "{skipped} skipped\n".format(**totals))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="feuler",
        description="Exact Frobenius-Euler polynomial tables and identity checks over Q(L).")
    sub = top.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "latex", "csv", "json"),
                     default="plain", help="output format (default plain)")
    lam = argparse.ArgumentParser(add_help=False)
    lam.add_argument("--lambda", dest="lam", type=_fraction_arg, default=None,
                     metavar="P/Q", help="evaluate at a rational lambda (never 1)")

    p = sub.add_parser("numbers", parents=[fmt, lam],
                       help="table of H_n^{(r)}(L) for n = 0..n-max")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--order", type=int, default=1)

    p = sub.add_parser("poly", parents=[fmt, lam],
                       help="the polynomial H_n^{(r)}(x|L)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--order", type=int, default=1)

    p = sub.add_parser("convert", parents=[fmt, lam],
                       help="expand a polynomial expression in the order-r basis")
    p.add_argument("--poly", required=True, metavar="EXPR")
    p.add_argument("--order", type=int, default=1)

    p = sub.add_parser("stirling", parents=[fmt, lam],
                       help="the L-analogue Stirling number S_L(n,k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("verify", parents=[fmt],
                       help="run one identity cell")
    p.add_argument("--identity", required=True, choices=suite_mod.IDENTITY_IDS)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--index", type=int)
    p.add_argument("--seed", type=int, default=suite_mod.DEFAULT_SEED)

    p = sub.add_parser("suite", parents=[fmt],
                       help="run the full identity grid and report")
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--r-max", type=int, default=4)
    p.add_argument("--s-max", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=suite_mod.DEFAULT_SEED)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    seed = getattr(args, "seed", suite_mod.DEFAULT_SEED)
    env_seed = os.environ.get("FEULER_SEED")
    if env_seed is not None:
        try:
            seed = int(env_seed)
        except ValueError:
            sys.stderr.write(f"error: FEULER_SEED={env_seed!r} is not an integer\n")
            return 2
    if args.command == "numbers":
        return _cmd_numbers(args)
    if args.command == "poly":
        return _cmd_poly(args)
    if args.command == "convert":
        return _cmd_convert(args)
    if args.command == "stirling":
        return _cmd_stirling(args)
    if args.command == "verify":
        return _cmd_verify(args, seed)
    return _cmd_suite(args, seed)


def entry():  # console-script hook
    sys.exit(main())
