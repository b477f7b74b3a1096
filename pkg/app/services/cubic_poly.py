"""
Construction and recognition of Ramanujan cubic polynomials (RCPs), the
Shanks family and the Witula form, plus tau(h) and the companion matrix.
"""

import logging
from fractions import Fraction
from typing import Any, Tuple

from app.models.cubic import Cubic, IntegerMatrix3, RcpParams
from app.models.precision import PrecisionPolicy
from app.services.precision import cbrt, exact, is_exact, unify
from app.utils.errors import DegenerateGamma, InvalidScale, NotAnRcp, UsageError

logger = logging.getLogger(__name__)


def _policy(policy: PrecisionPolicy = None) -> PrecisionPolicy:
    return policy if policy is not None else PrecisionPolicy()


def build_rcp(params: RcpParams, policy: PrecisionPolicy = None) -> Cubic:
    h, s = unify((params.h, params.s), _policy(policy))
    p = h * s
    q = -(h + 3) * s * s
    r = s * s * s
    if is_exact(p):
        p, q, r = exact(p), exact(q), exact(r)
    return Cubic.monic_from(p, q, r)


def rcp(h: Any, s: Any, policy: PrecisionPolicy = None) -> Cubic:
    return build_rcp(RcpParams(h=h, s=s), policy)


def is_rcp(p: Any, q: Any, r: Any, policy: PrecisionPolicy) -> bool:
    """Coefficient relation p*r^(1/3) + 3*r^(2/3) + q = 0 with real-branch roots"""
    if r == 0:
        return False
    t = cbrt(r, policy)
    p, q, t = unify((p, q, t), policy)
    relation = p * t + 3 * t * t + q
    if is_exact(relation):
        return relation == 0
    return abs(relation) < policy.tolerance


def rcp_params_from_coeffs(p: Any, q: Any, r: Any, policy: PrecisionPolicy) -> RcpParams:
    if r == 0:
        raise NotAnRcp("constant term r must be nonzero")
    s = cbrt(r, policy)
    p, q, s = unify((p, q, s), policy)
    h = p / s
    expected_q = -(h + 3) * s * s
    if is_exact(h):
        if expected_q != q:
            raise NotAnRcp(f"q = {q} does not match -(h+3)s^2 = {expected_q}")
        h, s = exact(h), exact(s)
    elif abs(expected_q - q) >= policy.tolerance:
        raise NotAnRcp("q does not satisfy q = -(h+3)s^2 within tolerance")
    logger.debug(f"recovered RCP parameters h={h}, s={s}")
    return RcpParams(h=h, s=s)


def build_scp(h: Any, policy: PrecisionPolicy = None) -> Cubic:
    """Shanks cubic x^3 - h*x^2 - (h+3)*x - 1"""
    (h,) = unify((h,), _policy(policy))
    if is_exact(h):
        return Cubic.monic_from(exact(-h), exact(-(h + 3)), -1)
    return Cubic.monic_from(-h, -(h + 3), -1)


def witula_p(gamma: Any) -> Any:
    """P(gamma) = gamma^3 - 3*gamma + 1, whose zeros are 2cos(2pi/9), 2cos(4pi/9), 2cos(8pi/9)"""
    return gamma ** 3 - 3 * gamma + 1


def _check_witula(gamma: Any, r: Any) -> None:
    if gamma == 1 or gamma == 2:
        raise DegenerateGamma(f"gamma = {gamma} makes the Witula zeros undefined")
    if r == 0:
        raise InvalidScale("r must be nonzero")


def witula_zeros(gamma: Any, r: Any, policy: PrecisionPolicy) -> Tuple[Any, Any, Any]:
    _check_witula(gamma, r)
    gamma, t = unify((gamma, cbrt(r, policy)), policy)
    zeros = (t / (2 - gamma), (gamma - 1) * t, (2 - gamma) / (1 - gamma) * t)
    return tuple(exact(z) if is_exact(z) else z for z in zeros)


def build_rcp_witula(gamma: Any, r: Any, policy: PrecisionPolicy = None) -> Cubic:
    policy = _policy(policy)
    _check_witula(gamma, r)
    gamma, t, r = unify((gamma, cbrt(r, policy), r), policy)
    a2 = -witula_p(gamma - 1) / ((gamma - 1) * (gamma - 2)) * t
    a1 = -witula_p(2 - gamma) / ((1 - gamma) * (2 - gamma)) * t * t
    if is_exact(a2):
        a2, a1, r = exact(a2), exact(a1), exact(r)
    return Cubic.monic_from(a2, a1, r)


def cubic_from_zeros(z1: Any, z2: Any, z3: Any, policy: PrecisionPolicy = None) -> Cubic:
    z1, z2, z3 = unify((z1, z2, z3), _policy(policy))
    coeffs = (-(z1 + z2 + z3), z1 * z2 + z1 * z3 + z2 * z3, -(z1 * z2 * z3))
    return Cubic.monic_from(*(exact(c) if is_exact(c) else c for c in coeffs))


def tau(h: Any, policy: PrecisionPolicy = None) -> Any:
    """h^2 + 3h + 9; inexact h is lifted to the policy before squaring"""
    if policy is not None and not is_exact(h):
        h = policy.high(h)
    value = h * h + 3 * h + 9
    return exact(value) if is_exact(value) else value


def as_integer(h: Any) -> int:
    if isinstance(h, bool) or not is_exact(h) or Fraction(h).denominator != 1:
        raise UsageError(f"expected an integer, got {h}")
    return int(h)


def companion_matrix(h: Any) -> IntegerMatrix3:
    h = as_integer(h)
    return IntegerMatrix3(entries=((0, 1, 0), (0, 0, 1), (1, 3 + h, h)))
