"""
Command-line interface: roots, periods, identities and sequences at arbitrary precision.

Exit codes: 0 success or identity holds, 1 identity or cross-check fails,
2 usage error, 3 evaluation error.
"""

import argparse
import contextlib
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, TextIO

from pydantic import ValidationError

from app.config import settings
from app.models.cubic import Cubic, RcpParams
from app.models.documents import OutputDocument, report_document, terms_document, zeros_document
from app.models.precision import PrecisionPolicy, is_exact
from app.models.report import IdentityReport
from app.models.roots import ZeroTriple
from app.models.sequence import A198636
from app.services import cubic_poly, gaussian, identities, roots, sequences
from app.services.oeis_service import OEISService, cross_check
from app.utils.errors import USAGE_EXIT, CubicFieldsError, UsageError
from app.utils.expression import parse_equation, parse_value
from app.utils.helpers import bfile_rows, format_cubic, to_fixed, write_bfile
from app.utils.render import render

logger = logging.getLogger("app.cli")

FAIL_EXIT = 1


class Context:
    """Parsed arguments plus the output stream of one invocation"""

    def __init__(self, args: argparse.Namespace, out: TextIO):
        self.args = args
        self.out = out
        self.policy = PrecisionPolicy(target_digits=args.digits) if hasattr(args, "digits") else None

    def value(self, text: str):
        return parse_value(text, self.policy or PrecisionPolicy())

    def integer(self, text: str) -> int:
        return cubic_poly.as_integer(self.value(text))

    def fixed(self, value) -> str:
        return to_fixed(value, self.policy.target_digits, self.policy)

    def show(self, value) -> str:
        return str(value) if is_exact(value) else self.fixed(value)

    def emit(self, document: OutputDocument, template: str = None, **context) -> None:
        if self.args.json:
            print(document.to_json(), file=self.out)
        elif template is not None:
            print(render(template, **context), end="", file=self.out)

    def explain(self, template: str, **context) -> None:
        if getattr(self.args, "explain", False) and not self.args.json:
            print(render(template, **context), end="", file=self.out)


def _emit_zeros(ctx: Context, kind: str, title: str, inputs: Dict[str, str], zt: ZeroTriple, c: Cubic,
                checks: Dict[str, str] = None) -> None:
    residual = roots.max_residual(c, zt, ctx.policy)
    document = zeros_document(kind, inputs, zt, ctx.policy, residual)
    if checks:
        document = document.model_copy(update={"checks": checks})
    ctx.emit(
        document,
        "zeros.txt",
        title=title,
        inputs={**inputs, **(checks or {})},
        digits=document.digits,
        zeros=document.zeros,
        branches=document.branches,
        residual=document.residual,
    )


# roots

def cmd_roots_cubic(ctx: Context) -> int:
    a = ctx.args
    c = Cubic(a3=ctx.value(a.a3), a2=ctx.value(a.a2), a1=ctx.value(a.a1), a0=ctx.value(a.a0))
    zt = roots.oracle_roots(c, ctx.policy) if a.oracle else roots.solve_cubic_trig(c, ctx.policy)
    inputs = {"a3": a.a3, "a2": a.a2, "a1": a.a1, "a0": a.a0}
    _emit_zeros(ctx, "roots.cubic", f"zeros of {format_cubic(c.coeffs, ctx.policy)}", inputs, zt, c)
    return 0


def cmd_roots_scp(ctx: Context) -> int:
    h = ctx.value(ctx.args.h)
    c = cubic_poly.build_scp(h, ctx.policy)
    zt = roots.scp_zeros(h, ctx.policy)
    _emit_zeros(ctx, "roots.scp", f"zeros of {format_cubic(c.coeffs, ctx.policy)}", {"h": ctx.args.h}, zt, c)
    ctx.explain(
        "explain/scp.txt",
        h=ctx.args.h,
        tau=ctx.show(cubic_poly.tau(h, ctx.policy)),
        sign=1 if 2 * ctx.policy.high(h) + 3 >= 0 else -1,
    )
    return 0


def cmd_roots_rcp(ctx: Context) -> int:
    a = ctx.args
    s = ctx.value(a.s)
    inputs = {"s": a.s}
    checks = {}
    if a.alpha is not None:
        alpha = ctx.value(a.alpha)
        h, c = roots.rcp_through(alpha, s, ctx.policy)
        inputs["alpha"] = a.alpha
        checks["h"] = ctx.show(h)
    elif a.h is not None:
        h = ctx.value(a.h)
        inputs["h"] = a.h
        c = cubic_poly.rcp(h, s, ctx.policy)
    else:
        raise UsageError("roots rcp needs --h or --alpha")
    params = RcpParams(h=h, s=s)
    zt = roots.rcp_zeros(params, ctx.policy)
    if a.alpha is not None:
        index = roots.match_zero(zt, alpha, ctx.policy)
        checks["alpha_branch"] = f"k={zt.branch_ks[index]}"
    _emit_zeros(ctx, "roots.rcp", f"zeros of {format_cubic(c.coeffs, ctx.policy)}", inputs, zt, c, checks)
    alternative = roots.printed_zeta1(params, ctx.policy)
    ctx.explain(
        "explain/rcp.txt",
        h=ctx.show(h) if a.h is None else a.h,
        s=a.s,
        alternative=[ctx.fixed(z) for z in alternative.zeros],
        alternative_ok=roots.max_residual(c, alternative, ctx.policy) < ctx.policy.tolerance,
    )
    return 0


def cmd_roots_witula(ctx: Context) -> int:
    a = ctx.args
    gamma, r = ctx.value(a.gamma), ctx.value(a.r)
    c = cubic_poly.build_rcp_witula(gamma, r, ctx.policy)
    zt = ZeroTriple.from_values(cubic_poly.witula_zeros(gamma, r, ctx.policy), ctx.policy)
    p, q, r_coeff = c.a2, c.a1, c.a0
    checks = {"is_rcp": str(cubic_poly.is_rcp(p, q, r_coeff, ctx.policy)).lower()}
    _emit_zeros(ctx, "roots.witula", f"zeros of {format_cubic(c.coeffs, ctx.policy)}",
                {"gamma": a.gamma, "r": a.r}, zt, c, checks)
    return 0


# gaussian periods

def cmd_periods(ctx: Context) -> int:
    periods = gaussian.gaussian_periods(ctx.integer(ctx.args.p), ctx.policy)
    values = [ctx.fixed(v) for v in periods.values]
    checks = {"g": str(periods.g)}
    if periods.h is not None:
        checks.update(h=str(periods.h), L=str(periods.L))
    document = OutputDocument(
        kind="periods",
        inputs={"p": ctx.args.p},
        digits=ctx.policy.target_digits,
        values=values,
        cosets=[list(c) for c in periods.cosets],
        checks=checks,
    )
    ctx.emit(document, "periods.txt", p=periods.p, g=periods.g, h=periods.h, L=periods.L,
             rows=list(zip(periods.cosets, values)))
    return 0


def cmd_deltas(ctx: Context) -> int:
    deltas = gaussian.period_differences(ctx.integer(ctx.args.p), ctx.policy)
    values = [ctx.fixed(d) for d in deltas.deltas]
    closed = [ctx.fixed(d) for d in deltas.closed_form]
    document = OutputDocument(
        kind="deltas",
        inputs={"p": ctx.args.p},
        digits=ctx.policy.target_digits,
        values=values,
        branches=list(deltas.closed_form_ks),
        checks={
            "h": str(deltas.h),
            "orientation": str(deltas.orientation),
            "closed_form_sign": str(deltas.closed_form_sign),
            "closed_form": " ".join(closed),
        },
    )
    ctx.emit(document, "deltas.txt", p=deltas.p, h=deltas.h, orientation=deltas.orientation,
             rows=list(zip(values, closed, deltas.closed_form_ks)))
    return 0


def cmd_shanks_primes(ctx: Context) -> int:
    pairs = gaussian.shanks_primes(ctx.args.limit)
    primes = [p for _, p in pairs]
    if ctx.args.bfile:
        print(write_bfile(bfile_rows(primes, offset=1)), end="", file=ctx.out)
        return 0
    document = terms_document("shanks-primes", {"limit": str(ctx.args.limit)}, primes)
    if ctx.args.json:
        ctx.emit(document)
    else:
        for h, p in pairs:
            print(f"{h} {p}", file=ctx.out)
    return 0


def cmd_minpoly(ctx: Context) -> int:
    h = ctx.integer(ctx.args.h)
    poly = gaussian.period_minimal_poly(h)
    constants = gaussian.lehmer_constants(h)
    periods = gaussian.gaussian_periods(constants.p, ctx.policy)
    residual = max(abs(ctx.policy.high(poly.evaluate(v, ctx.policy))) for v in periods.values)
    document = OutputDocument(
        kind="minpoly",
        inputs={"h": ctx.args.h},
        digits=ctx.policy.target_digits,
        coefficients=[str(v) for v in poly.coeffs],
        checks={"p": str(constants.p), "L": str(constants.L)},
        residual=ctx.fixed(residual),
    )
    text = format_cubic(poly.coeffs, ctx.policy)
    ctx.emit(document, "minpoly.txt", h=h, p=constants.p, L=constants.L, poly=text)
    printed = gaussian.printed_lehmer_poly(h)
    ctx.explain(
        "explain/minpoly.txt",
        period_shift=constants.period_shift,
        period_sign=constants.period_sign,
        lehmer_shift=constants.lehmer_shift,
        printed=format_cubic(printed.coeffs, ctx.policy),
        printed_ok=printed == poly,
    )
    return 0


# identities

def _emit_report(ctx: Context, kind: str, inputs: Dict[str, str], report: IdentityReport) -> int:
    document = report_document(kind, inputs, report, ctx.policy)
    ctx.emit(document, "report.txt", report=document.report)
    return 0 if report.passed else FAIL_EXIT


def cmd_identity_ramanujan(ctx: Context) -> int:
    a = ctx.args
    report = identities.ramanujan_cbrt_sum_check(ctx.value(a.h), ctx.value(a.s), ctx.policy)
    return _emit_report(ctx, "identity.ramanujan", {"h": a.h, "s": a.s}, report)


def cmd_identity_extended(ctx: Context) -> int:
    a = ctx.args
    report = identities.extended_identity_check(ctx.value(a.alpha), ctx.value(a.s), ctx.policy)
    return _emit_report(ctx, "identity.extended", {"alpha": a.alpha, "s": a.s}, report)


def cmd_identity_gauss(ctx: Context) -> int:
    report = identities.gauss_period_cbrt_identity(ctx.integer(ctx.args.h), ctx.policy)
    return _emit_report(ctx, "identity.gauss", {"h": ctx.args.h}, report)


def cmd_identity_named(ctx: Context) -> int:
    if ctx.args.list:
        for name, entry in identities.CATALOG.items():
            print(f"{name}: {entry.lhs} == {entry.rhs}", file=ctx.out)
        return 0
    if ctx.args.name is None:
        raise UsageError("identity named needs a NAME or --list")
    report = identities.verify_named(ctx.args.name, ctx.policy)
    return _emit_report(ctx, "identity.named", {"name": ctx.args.name}, report)


def cmd_verify(ctx: Context) -> int:
    lhs, rhs = parse_equation(ctx.args.equation)
    report = identities.verify_expression(lhs, rhs, ctx.policy, name=ctx.args.equation)
    return _emit_report(ctx, "verify", {"equation": ctx.args.equation}, report)


# sequences

def _emit_terms(ctx: Context, kind: str, inputs: Dict[str, str], terms: List[int], offset: int = 0,
                checks: Dict[str, str] = None) -> None:
    if ctx.args.bfile:
        print(write_bfile(bfile_rows(terms, offset)), end="", file=ctx.out)
        return
    document = terms_document(kind, inputs, terms)
    if checks:
        document = document.model_copy(update={"checks": checks})
    if ctx.args.json:
        ctx.emit(document)
    else:
        print(" ".join(str(t) for t in terms), file=ctx.out)
        for key, value in (checks or {}).items():
            print(f"{key}: {value}", file=ctx.out)


def cmd_seq_a198636(ctx: Context) -> int:
    terms = sequences.recurrence_terms(A198636, ctx.args.terms)
    checks = None
    status = 0
    if ctx.args.check:
        ok = sequences.jefferey_check(ctx.args.terms - 1, ctx.policy)
        checks = {"jefferey": "pass" if ok else "fail"}
        status = 0 if ok else FAIL_EXIT
    _emit_terms(ctx, "seq.a198636", {"terms": str(ctx.args.terms)}, terms, checks=checks)
    return status


def cmd_seq_trace(ctx: Context) -> int:
    a = ctx.args
    h = ctx.integer(a.h)
    spec = sequences.char_poly_of_power(h, a.k)
    c2, c1, c0 = spec.char_coeffs
    checks = {"char_poly": format_cubic((1, -c2, c1, -c0), ctx.policy)}
    terms = sequences.trace_sequence(h, a.k, a.terms)
    _emit_terms(ctx, "seq.trace", {"h": a.h, "k": str(a.k), "terms": str(a.terms)}, terms, checks=checks)
    return 0


def cmd_seq_walks(ctx: Context) -> int:
    a = ctx.args
    terms = sequences.walk_sequence(a.n, a.terms)
    _emit_terms(ctx, "seq.walks", {"n": str(a.n), "terms": str(a.terms)}, terms)
    return 0


# OEIS

def cmd_oeis_check(ctx: Context) -> int:
    a = ctx.args
    service = OEISService(
        cache_dir=Path(a.cache_dir) if a.cache_dir else None,
        offline=True if a.offline else None,
    )
    document = cross_check(a.id, terms=a.terms, limit=a.limit, service=service)
    if a.json:
        ctx.emit(document)
    else:
        for key, value in document.checks.items():
            print(f"{key}: {value}", file=ctx.out)
    return 0 if document.checks["status"] == "pass" else FAIL_EXIT


def build_parser() -> argparse.ArgumentParser:
    json_flag = argparse.ArgumentParser(add_help=False)
    json_flag.add_argument("--json", action="store_true", help="emit a JSON document")

    bfile_flag = argparse.ArgumentParser(add_help=False)
    bfile_flag.add_argument("--bfile", action="store_true", help="emit OEIS b-file rows")

    precision = argparse.ArgumentParser(add_help=False)
    precision.add_argument("--digits", type=int, default=settings.DEFAULT_DIGITS,
                           help="target decimal digits (default %(default)s)")
    precision.add_argument("--explain", action="store_true", help="print the formulas behind the result")
    common = [precision, json_flag]

    parser = argparse.ArgumentParser(prog="cubicfields", description=__doc__.splitlines()[1])
    commands = parser.add_subparsers(dest="command", required=True)

    roots_parser = commands.add_parser("roots", help="zeros of cubics in trigonometric form")
    roots_kinds = roots_parser.add_subparsers(dest="kind", required=True)
    cubic = roots_kinds.add_parser("cubic", parents=common, help="any cubic with three real roots")
    cubic.add_argument("--a3", default="1")
    cubic.add_argument("--a2", required=True)
    cubic.add_argument("--a1", required=True)
    cubic.add_argument("--a0", required=True)
    cubic.add_argument("--oracle", action="store_true", help="use the bracketing oracle")
    cubic.set_defaults(handler=cmd_roots_cubic)
    scp = roots_kinds.add_parser("scp", parents=common, help="Shanks cubic x^3 - hx^2 - (h+3)x - 1")
    scp.add_argument("--h", required=True)
    scp.set_defaults(handler=cmd_roots_scp)
    rcp = roots_kinds.add_parser("rcp", parents=common, help="Ramanujan cubic rho(h, s, x)")
    rcp.add_argument("--h")
    rcp.add_argument("--alpha", help="build the RCP through this zero instead of giving h")
    rcp.add_argument("--s", required=True)
    rcp.set_defaults(handler=cmd_roots_rcp)
    witula = roots_kinds.add_parser("witula", parents=common, help="Witula form of an RCP")
    witula.add_argument("--gamma", required=True)
    witula.add_argument("--r", required=True)
    witula.set_defaults(handler=cmd_roots_witula)

    periods = commands.add_parser("periods", parents=common, help="cubic Gaussian periods mod p")
    periods.add_argument("p")
    periods.set_defaults(handler=cmd_periods)

    shanks = commands.add_parser("shanks-primes", parents=[json_flag, bfile_flag], help="primes h^2 + 3h + 9")
    shanks.add_argument("--limit", type=int, required=True)
    shanks.set_defaults(handler=cmd_shanks_primes)

    minpoly = commands.add_parser("minpoly", parents=common, help="period polynomial for tau(h)")
    minpoly.add_argument("--h", required=True)
    minpoly.set_defaults(handler=cmd_minpoly)

    deltas = commands.add_parser("deltas", parents=common, help="period differences for a Shanks prime")
    deltas.add_argument("p")
    deltas.set_defaults(handler=cmd_deltas)

    identity = commands.add_parser("identity", help="cube-root identities")
    identity_kinds = identity.add_subparsers(dest="kind", required=True)
    rama = identity_kinds.add_parser("ramanujan", parents=common)
    rama.add_argument("--h", required=True)
    rama.add_argument("--s", required=True)
    rama.set_defaults(handler=cmd_identity_ramanujan)
    extended = identity_kinds.add_parser("extended", parents=common)
    extended.add_argument("--alpha", required=True)
    extended.add_argument("--s", required=True)
    extended.set_defaults(handler=cmd_identity_extended)
    gauss = identity_kinds.add_parser("gauss", parents=common)
    gauss.add_argument("--h", required=True)
    gauss.set_defaults(handler=cmd_identity_gauss)
    named = identity_kinds.add_parser("named", parents=common)
    named.add_argument("name", nargs="?")
    named.add_argument("--list", action="store_true")
    named.set_defaults(handler=cmd_identity_named)

    verify = commands.add_parser("verify", parents=common, help='check "<lhs> == <rhs>"')
    verify.add_argument("equation")
    verify.set_defaults(handler=cmd_verify)

    seq = commands.add_parser("seq", help="exact integer sequences")
    seq_kinds = seq.add_subparsers(dest="kind", required=True)
    a198636 = seq_kinds.add_parser("a198636", parents=common + [bfile_flag])
    a198636.add_argument("--terms", type=int, default=10)
    a198636.add_argument("--check", action="store_true", help="also verify the trigonometric form")
    a198636.set_defaults(handler=cmd_seq_a198636)
    trace = seq_kinds.add_parser("trace", parents=common + [bfile_flag])
    trace.add_argument("--h", required=True)
    trace.add_argument("--k", type=int, default=1)
    trace.add_argument("--terms", type=int, default=10)
    trace.set_defaults(handler=cmd_seq_trace)
    walks = seq_kinds.add_parser("walks", parents=common + [bfile_flag])
    walks.add_argument("--n", type=int, required=True)
    walks.add_argument("--terms", type=int, default=10)
    walks.set_defaults(handler=cmd_seq_walks)

    oeis = commands.add_parser("oeis-check", parents=[json_flag], help="compare local terms with an OEIS b-file")
    oeis.add_argument("id")
    oeis.add_argument("--terms", type=int)
    oeis.add_argument("--limit", type=int)
    oeis.add_argument("--offline", action="store_true", help="never touch the network")
    oeis.add_argument("--cache-dir")
    oeis.set_defaults(handler=cmd_oeis_check)

    return parser


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    handler: Callable[[Context], int] = args.handler
    try:
        return handler(Context(args, out))
    except CubicFieldsError as e:
        logger.debug(f"{type(e).__name__}: {e.message}")
        print(f"error: {type(e).__name__}: {e.message}", file=err)
        return e.exit_code
    except ValidationError as e:
        print(f"error: invalid input: {e.errors()[0]['msg']}", file=err)
        return USAGE_EXIT


def main() -> None:
    logging.basicConfig(
        level=getattr(logging, settings.LOG_LEVEL.upper(), logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    sys.exit(run())


if __name__ == "__main__":
    main()
