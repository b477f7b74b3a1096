"""
High-precision checks of the cube-root identities carried by Ramanujan cubics
and Gaussian periods, plus a catalog of named closed-form identities.
"""

import logging
from typing import Any, Dict, NamedTuple

from app.models.cubic import RcpParams
from app.models.precision import PrecisionPolicy
from app.models.report import IdentityReport
from app.services.cubic_poly import tau
from app.services.gaussian import gaussian_periods, lehmer_constants
from app.services.precision import real_cbrt
from app.services.roots import orbit, rcp_through, rcp_zeros
from app.utils.errors import UnknownIdentity
from app.utils.expression import Expression, evaluate, parse_expression

logger = logging.getLogger(__name__)


class NamedIdentity(NamedTuple):
    lhs: str
    rhs: str
    description: str


CATALOG: Dict[str, NamedIdentity] = {
    "cos2pi7": NamedIdentity(
        "2*cos(2*pi/7)",
        "(1/3)*(-1+2*sqrt(7)*cos((1/3)*arctan(3*sqrt(3))))",
        "a zero of x^3 + x^2 - 2x - 1 in trigonometric form",
    ),
    "sqrt2": NamedIdentity(
        "1",
        "sqrt(7)*cos((1/3)*arctan(9*sqrt(3)/10)) - sqrt(21)*sin((1/3)*arctan(9*sqrt(3)/10))",
        "sqrt(2) as a zero of rho(1/6, 3*sqrt(2), x), rearranged",
    ),
    "sqrt2_k4": NamedIdentity(
        "sqrt(2)",
        "-(1+14*sqrt(7)*cos((arctan(9*sqrt(3)/10)+4*pi)/3))/(3*sqrt(2))",
        "sqrt(2) on the k = 4 branch of rho(1/6, 3*sqrt(2), x)",
    ),
    "pi_cos": NamedIdentity(
        "(2*pi-1)/(2*sqrt(pi^2-pi+1))",
        "cos((1/3)*arctan(3*sqrt(3)*(pi-1)*pi/(2-3*pi-3*pi^2+2*pi^3)))",
        "pi as a zero of the RCP with s = 1 through pi, cosine form",
    ),
    "pi_root": NamedIdentity(
        "pi",
        "(1-3*pi+pi^3+2*(1-pi+pi^2)*sqrt(1-pi+pi^2)"
        "*cos((1/3)*arctan(3*sqrt(3)*(pi-1)*pi/(2-3*pi-3*pi^2+2*pi^3))))/(3*(pi-1)*pi)",
        "pi as a zero of the RCP with s = 1 through pi, root form",
    ),
    "pi_cbrt": NamedIdentity(
        "pi",
        "1/cbrt(-1+pi^3) - cbrt(-1+pi^3)/pi"
        " + cbrt(3*(1-pi^3+pi^6)/(pi^2*cbrt(-1+pi^3)^2) + (1+3*pi^3-6*pi^6+pi^9)/(-pi^3+pi^6))",
        "cube-root identity generated by alpha = pi^3, s = 1",
    ),
}


def _rama_rhs(p: Any, q: Any, r: Any, policy: PrecisionPolicy):
    """(-p - 6 r^(1/3) + 3 (9r - pq)^(1/3))^(1/3) with real-branch roots"""
    p, q, r = (policy.high(v) for v in (p, q, r))
    inner = -p - 6 * real_cbrt(r, policy) + 3 * real_cbrt(9 * r - p * q, policy)
    return real_cbrt(inner, policy)


def _report(report: IdentityReport) -> IdentityReport:
    logger.info(f"identity {report.name}: {report.verdict.value} at {report.digits} digits")
    return report


def ramanujan_cbrt_sum_check(h: Any, s: Any, policy: PrecisionPolicy) -> IdentityReport:
    params = RcpParams(h=h, s=s)
    zeros = rcp_zeros(params, policy)
    lhs = policy.ctx.fsum(real_cbrt(z, policy) for z in zeros.zeros)
    hh, ss = policy.high(h), policy.high(s)
    rhs = _rama_rhs(hh * ss, -(hh + 3) * ss ** 2, ss ** 3, policy)
    return _report(IdentityReport.compare(f"ramanujan(h={h}, s={s})", lhs, rhs, policy))


def extended_identity_check(alpha: Any, s: Any, policy: PrecisionPolicy) -> IdentityReport:
    """alpha^(1/3) = -eta(alpha)^(1/3) - eta^2(alpha)^(1/3) + (bracket)^(1/3)"""
    h, _ = rcp_through(alpha, s, policy)
    alpha_h, eta1, eta2 = (policy.high(v) for v in orbit(s, alpha, policy).orbit)
    hh, ss = policy.high(h), policy.high(s)
    lhs = real_cbrt(alpha_h, policy)
    rhs = (
        -real_cbrt(eta1, policy)
        - real_cbrt(eta2, policy)
        + _rama_rhs(hh * ss, -(hh + 3) * ss ** 2, ss ** 3, policy)
    )
    return _report(IdentityReport.compare(f"extended(alpha={alpha}, s={s})", lhs, rhs, policy))


def gauss_period_cbrt_identity(h: Any, policy: PrecisionPolicy) -> IdentityReport:
    constants = lehmer_constants(h)
    periods = gaussian_periods(constants.p, policy)
    shift = policy.high(constants.period_shift)
    lhs = policy.ctx.fsum(
        real_cbrt(shift + constants.period_sign * eta, policy) for eta in periods.values
    )
    rhs = real_cbrt(6 + constants.h - 3 * real_cbrt(tau(constants.h), policy), policy)
    return _report(IdentityReport.compare(f"gauss(h={constants.h})", lhs, rhs, policy))


def verify_expression(
    lhs: Expression, rhs: Expression, policy: PrecisionPolicy, name: str = "expression"
) -> IdentityReport:
    return _report(
        IdentityReport.compare(name, evaluate(lhs, policy), evaluate(rhs, policy), policy)
    )


def verify_named(name: str, policy: PrecisionPolicy) -> IdentityReport:
    entry = CATALOG.get(name)
    if entry is None:
        raise UnknownIdentity(f"unknown identity '{name}'; known: {', '.join(sorted(CATALOG))}")
    return verify_expression(parse_expression(entry.lhs), parse_expression(entry.rhs), policy, name)
