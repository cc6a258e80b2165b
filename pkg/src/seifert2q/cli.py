"""Command-line front end.

Exit codes: 0 on success (and, for ``verify``/``sweep``, no survivors),
1 when a survivor is found, 2 on usage or validation errors.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import __version__
from .cyclotomic import LaurentPolynomial, cyclotomic_poly, norm_d
from .dedekind import dedekind_fast
from .lescop import (
    FIGURE_EIGHT_ALEXANDER,
    SeifertCandidate,
    SurgerySpec,
    euler_number,
    h1_order,
    lescop_seifert,
    lescop_surgery_2q,
)
from .verifier import SCOPE_NOTE, CandidateRecord, VerificationReport, sweep, verify_theorem

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_SURVIVOR = 1
EXIT_USAGE = 2


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TERM = re.compile(r"(?P<coeff>\d+)?\s*(?P<t>t(?:\s*\^\s*(?P<exp>[+-]?\s*\d+))?)?")


def parse_laurent(src: str) -> LaurentPolynomial:
    """Parse text such as ``"t^2-3t+1"`` or ``"t^-1 - 3 + t"``.

    Terms are ``c``, ``t``, ``ct``, ``t^n`` or ``ct^n`` joined by + and -;
    whitespace is ignored and the Unicode minus sign is accepted.
    """
    text = src.replace("−", "-")
    if not text.strip():
        raise PolynomialSyntaxError("empty polynomial", 0)
    n = len(text)
    pos = 0
    terms = []

    def skip(i):
        while i < n and text[i].isspace():
            i += 1
        return i

    pos = skip(pos)
    first = True
    while pos < n:
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos = skip(pos + 1)
        elif not first:
            raise PolynomialSyntaxError(f"expected '+' or '-', found {text[pos]!r}", pos)
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            found = repr(text[pos]) if pos < n else "end of input"
            raise PolynomialSyntaxError(f"expected a term, found {found}", pos)
        coeff = int(m.group("coeff")) if m.group("coeff") else 1
        if m.group("t"):
            exp = int(re.sub(r"\s", "", m.group("exp"))) if m.group("exp") else 1
        else:
            exp = 0
        terms.append((exp, sign * coeff))
        pos = skip(m.end())
        first = False
    return LaurentPolynomial(terms)


def render_laurent(f: LaurentPolynomial) -> str:
    """Inverse of :func:`parse_laurent`, highest exponent first."""
    if f.is_zero():
        return "0"
    parts = []
    for exp, c in sorted(f.coeffs.items(), reverse=True):
        mag = abs(c)
        if exp == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + ("t" if exp == 1 else f"t^{exp}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def render_dense(coeffs) -> str:
    return render_laurent(LaurentPolynomial.from_dense(coeffs))


def fmt_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _record_json(rec: CandidateRecord) -> dict:
    c = rec.candidate
    return {
        "alpha": c.alpha,
        "beta": c.beta,
        "q1": c.q1,
        "q2": c.q2,
        "q3": c.q3,
        "e_sign": rec.e_sign,
        "lambda": fmt_rational(rec.lam),
        "h1": rec.h1,
        "ab_product": rec.ab_product,
        "eq2_holds": rec.eq2_holds,
    }


def _report_json(rep: VerificationReport) -> dict:
    return {
        "q": rep.q,
        "beta_max": rep.beta_max,
        "pairs_examined": rep.pairs_examined,
        "candidates_examined": rep.candidates_examined,
        "survivor_count": len(rep.survivors),
        "verified": rep.verified,
        "require_norm_bound": rep.require_norm_bound,
        "eq2_holding": rep.eq2_holding,
        "elapsed_seconds": round(rep.elapsed, 6),
        "scope": SCOPE_NOTE,
    }


def _document(command: str, inputs: dict, result, survivors=None) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
    }
    if survivors is not None:
        doc["survivors"] = survivors
    return doc


def _cmd_dedekind(args):
    value = dedekind_fast(args.q, args.p)
    return _document("dedekind", {"q": args.q, "p": args.p}, fmt_rational(value)), fmt_rational(value), EXIT_OK


def _cmd_norm(args):
    f = parse_laurent(args.poly)
    value = norm_d(f, args.d)
    inputs = {"d": args.d, "poly": render_laurent(f)}
    return _document("norm", inputs, str(value)), str(value), EXIT_OK


def _cmd_cyclotomic(args):
    phi = cyclotomic_poly(args.d)
    text = render_dense(phi)
    return _document("cyclotomic", {"d": args.d}, {"coefficients": phi, "text": text}), text, EXIT_OK


def _cmd_lescop_seifert(args):
    c = SeifertCandidate(args.alpha, args.beta, args.q1, args.q2, args.q3)
    e = euler_number(c)
    h1 = h1_order(c)
    lam = lescop_seifert(c)
    result = {
        "lambda": fmt_rational(lam),
        "euler_number": fmt_rational(e),
        "h1": h1 if isinstance(h1, int) else "infinite",
    }
    human = f"lambda = {fmt_rational(lam)}  (e = {fmt_rational(e)}, |H_1| = {result['h1']})"
    return _document("lescop-seifert", dict(zip(("alpha", "beta", "q1", "q2", "q3"), c.astuple())), result), human, EXIT_OK


def _cmd_lescop_surgery(args):
    delta = parse_laurent(args.delta) if args.delta is not None else FIGURE_EIGHT_ALEXANDER
    lam = lescop_surgery_2q(SurgerySpec(args.q, delta))
    inputs = {"q": args.q, "delta": render_laurent(delta)}
    return _document("lescop-surgery", inputs, fmt_rational(lam)), fmt_rational(lam), EXIT_OK


def _survivor_lines(records, q=None) -> list[str]:
    lines = []
    for rec in records:
        c = rec.candidate
        prefix = f"q={q} " if q is not None else ""
        lines.append(
            f"  SURVIVOR {prefix}(alpha, beta, q1, q2, q3) = {c.astuple()}  "
            f"e_sign={rec.e_sign:+d}  lambda={fmt_rational(rec.lam)}  alpha*beta={rec.ab_product}"
        )
    return lines


def _human_report(rep: VerificationReport) -> str:
    status = "no survivors" if rep.verified else f"{len(rep.survivors)} SURVIVOR(S)"
    lines = [
        f"q={rep.q}  beta_max={rep.beta_max}  pairs={rep.pairs_examined}  "
        f"candidates={rep.candidates_examined}  {status}  ({rep.elapsed:.2f}s)"
    ]
    lines += _survivor_lines(rep.survivors)
    return "\n".join(lines)


def _cmd_verify(args):
    rep = verify_theorem(args.q, args.beta_max, workers=args.workers, require_norm_bound=not args.no_norm_bound)
    inputs = {"q": args.q, "beta_max": args.beta_max}
    doc = _document("verify", inputs, _report_json(rep), [_record_json(r) for r in rep.survivors])
    human = _human_report(rep) + "\n" + SCOPE_NOTE
    return doc, human, EXIT_OK if rep.verified else EXIT_SURVIVOR


def _cmd_sweep(args):
    reps = sweep(args.q_min, args.q_max, args.beta_max, workers=args.workers, require_norm_bound=not args.no_norm_bound)
    inputs = {"q_min": args.q_min, "q_max": args.q_max, "beta_max": args.beta_max, "q_checked": [r.q for r in reps]}
    survivors = [dict(q=r.q, **_record_json(s)) for r in reps for s in r.survivors]
    doc = _document("sweep", inputs, {"reports": [_report_json(r) for r in reps]}, survivors)
    human = "\n".join(_human_report(r) for r in reps) + "\n" + SCOPE_NOTE
    return doc, human, EXIT_SURVIVOR if survivors else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seifert2q",
        description="Exact invariants and the Seifert 2/q surgery obstruction check.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="emit a JSON report document")
        p.set_defaults(func=func)
        return p

    p = add("dedekind", _cmd_dedekind, "exact Dedekind sum s(q, p)")
    p.add_argument("q", type=int)
    p.add_argument("p", type=int)

    p = add("norm", _cmd_norm, "cyclotomic norm |f(t)|_d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("poly", help='Laurent polynomial, e.g. "t^2-3t+1" (use -- before a leading minus)')

    p = add("cyclotomic", _cmd_cyclotomic, "d-th cyclotomic polynomial")
    p.add_argument("d", type=int)

    p = add("lescop-seifert", _cmd_lescop_seifert, "Lescop invariant of a Seifert candidate")
    for name in ("alpha", "beta", "q1", "q2", "q3"):
        p.add_argument(name, type=int)

    p = add("lescop-surgery", _cmd_lescop_surgery, "Lescop invariant of 2/q surgery")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--delta", default=None, help="Alexander polynomial (default t^2-3t+1)")

    for name, func, help in (
        ("verify", _cmd_verify, "search all candidates with beta <= beta-max for one q"),
        ("sweep", _cmd_sweep, "run verify for every odd q in a range"),
    ):
        p = add(name, func, help)
        if name == "verify":
            p.add_argument("--q", type=int, required=True)
        else:
            p.add_argument("--q-min", type=int, required=True)
            p.add_argument("--q-max", type=int, required=True)
        p.add_argument("--beta-max", type=int, required=True)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument(
            "--no-norm-bound",
            action="store_true",
            help="diagnostic: drop the alpha*beta > 2|q| test from the survivor criterion",
        )
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        doc, human, code = args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        out.write(human + "\n")
    return code


def main() -> None:
    sys.exit(run())
