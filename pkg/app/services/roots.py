"""
Closed-form trigonometric zeros of cubics in the three-real-roots case, the
eta_s cyclic transform on RCP zeros, and an independent bracketing oracle.
"""

import logging
from typing import Any, Callable, Sequence, Tuple

from app.models.cubic import Cubic, RcpParams
from app.models.precision import PrecisionPolicy
from app.models.roots import ResolventData, ZeroTriple
from app.services.cubic_poly import build_rcp, tau
from app.services.precision import branch_arctan, exact, is_exact, unify
from app.utils.errors import (
    AmbiguousMatch,
    InvalidScale,
    NotThreeRealRoots,
    PoleOfTransform,
    PrecisionExhausted,
)

logger = logging.getLogger(__name__)

BRANCHES = (0, 2, 4)


def cubic_resolvent(c: Cubic, policy: PrecisionPolicy) -> ResolventData:
    ctx = policy.ctx
    a, b, cc, d = unify(c.coeffs, policy)
    e = (cc - b * b / (3 * a)) / a
    f = (d + 2 * b ** 3 / (27 * a * a) - b * cc / (3 * a)) / a
    # resolvent w^2 + f*w - e^3/27 has non-real zeros iff this is negative
    discriminant = f * f / 4 + e ** 3 / 27
    if discriminant >= 0:
        raise NotThreeRealRoots(
            "resolvent has real zeros: the cubic does not have three distinct real roots"
        )
    e, f, discriminant, shift = (policy.high(v) for v in (e, f, discriminant, -b / (3 * a)))
    alpha = -f / 2
    beta = ctx.sqrt(-discriminant)
    rho = ctx.sqrt(-e ** 3 / 27)
    theta = branch_arctan(beta, alpha, policy)
    return ResolventData(e=e, f=f, alpha=alpha, beta=beta, rho=rho, theta=theta, shift=shift)


def solve_cubic_trig(c: Cubic, policy: PrecisionPolicy) -> ZeroTriple:
    ctx = policy.ctx
    data = cubic_resolvent(c, policy)
    radius = 2 * ctx.cbrt(data.rho)
    logger.debug(f"trig solver: theta={ctx.nstr(data.theta, 10)}, sign={data.sign}")
    values = [
        data.shift + data.sign * radius * ctx.cos((data.theta + k * ctx.pi) / 3)
        for k in BRANCHES
    ]
    return ZeroTriple.from_values(values, policy, branch_ks=BRANCHES)


def scp_zeros(h: Any, policy: PrecisionPolicy) -> ZeroTriple:
    ctx = policy.ctx
    hh = policy.high(h)
    sign = 1 if 2 * hh + 3 >= 0 else -1
    theta = branch_arctan(3 * ctx.sqrt(3), 3 + 2 * hh, policy)
    radius = 2 * ctx.sqrt(tau(hh))
    values = [(hh + sign * radius * ctx.cos((theta + k * ctx.pi) / 3)) / 3 for k in BRANCHES]
    return _with_orbit(ZeroTriple.from_values(values, policy, branch_ks=BRANCHES), -1, policy)


def rcp_zeros(params: RcpParams, policy: PrecisionPolicy) -> ZeroTriple:
    """zeta(h, s) = -s * zeta(h, -1)"""
    s = policy.high(params.s)
    base = scp_zeros(params.h, policy)
    zt = ZeroTriple.from_values([-s * z for z in base.zeros], policy, branch_ks=base.branch_ks)
    return _with_orbit(zt, params.s, policy)


def _is_pole(s: Any, z: Any, policy: PrecisionPolicy) -> bool:
    if is_exact(s) and is_exact(z):
        return s == z
    return policy.close(s, z)


def eta(s: Any, z: Any, policy: PrecisionPolicy) -> Any:
    """eta_s(z) = s^2 / (s - z)"""
    if _is_pole(s, z, policy):
        raise PoleOfTransform(f"eta_s has a pole at z = s = {s}")
    s, z = unify((s, z), policy)
    value = s * s / (s - z)
    return exact(value) if is_exact(value) else value


def orbit(s: Any, alpha: Any, policy: PrecisionPolicy) -> ZeroTriple:
    if s == 0:
        raise InvalidScale("scale s must be nonzero")
    if _is_pole(0, alpha, policy) or _is_pole(s, alpha, policy):
        raise PoleOfTransform("alpha must avoid 0 and s")
    s, alpha = unify((s, alpha), policy)
    values = (alpha, s * s / (s - alpha), -s * (s - alpha) / alpha)
    return ZeroTriple.from_values(values, policy, in_orbit_order=True)


def cyclic_action(zt: ZeroTriple, s: Any, policy: PrecisionPolicy) -> Tuple[int, int, int]:
    """Permutation i -> j with eta_s(zeros[i]) = zeros[j]"""
    return tuple(match_zero(zt, eta(s, z, policy), policy) for z in zt.zeros)


def is_three_cycle(permutation: Sequence[int]) -> bool:
    return sorted(permutation) == [0, 1, 2] and all(permutation[i] != i for i in range(3))


def _with_orbit(zt: ZeroTriple, s: Any, policy: PrecisionPolicy) -> ZeroTriple:
    """Record the eta_s orbit of the largest zero; zeros too close to tell apart keep no orbit order"""
    try:
        action = cyclic_action(zt, s, policy)
    except (AmbiguousMatch, PoleOfTransform) as e:
        logger.debug(f"no orbit order for s={s}: {e}")
        return zt
    if not is_three_cycle(action):
        logger.debug(f"eta_s acts as {action}, not a 3-cycle")
        return zt
    return zt.model_copy(update={"orbit_order": (0, action[0], action[action[0]])})


def rcp_through(alpha: Any, s: Any, policy: PrecisionPolicy) -> Tuple[Any, Cubic]:
    """The h for which alpha is a zero of rho(h, s, x), and that cubic"""
    if s == 0:
        raise InvalidScale("scale s must be nonzero")
    if _is_pole(0, alpha, policy) or _is_pole(s, alpha, policy):
        raise PoleOfTransform("alpha must avoid 0 and s")
    a, s = unify((alpha, s), policy)
    h = (s ** 3 - 3 * s * s * a + a ** 3) / (s * (s - a) * a)
    if is_exact(h):
        h, s = exact(h), exact(s)
    return h, build_rcp(RcpParams(h=h, s=s), policy)


def match_zero(zt: ZeroTriple, target: Any, policy: PrecisionPolicy) -> int:
    t = policy.high(target)
    distances = sorted((abs(policy.high(z) - t), i) for i, z in enumerate(zt.zeros))
    (best, index), (runner_up, _) = distances[0], distances[1]
    if runner_up - best < policy.tolerance:
        raise AmbiguousMatch(f"two zeros are equidistant from {policy.ctx.nstr(t, 15)}")
    return index


def _refine(
    f: Callable[[Any], Any],
    df: Callable[[Any], Any],
    lo: Any,
    hi: Any,
    policy: PrecisionPolicy,
):
    """Safeguarded Newton inside a sign-changing bracket [lo, hi]"""
    ctx = policy.ctx
    eps = ctx.mpf(10) ** (-policy.working_digits)
    lo_negative = f(lo) < 0
    x = (lo + hi) / 2
    for _ in range(10 * policy.working_digits + 100):
        fx = f(x)
        if fx == 0:
            return x
        if (fx < 0) == lo_negative:
            lo = x
        else:
            hi = x
        slope = df(x)
        candidate = x - fx / slope if slope != 0 else None
        if candidate is None or not lo < candidate < hi:
            candidate = (lo + hi) / 2
        if abs(candidate - x) <= eps * (1 + abs(x)) or hi - lo <= eps:
            return candidate
        x = candidate
    raise PrecisionExhausted("root refinement did not converge")


def oracle_roots(c: Cubic, policy: PrecisionPolicy) -> ZeroTriple:
    """Roots by bracketing between the critical points and polishing; independent of the trig formulas"""
    ctx = policy.ctx
    monic = c.monic_normalize(policy)
    _, a2, a1, a0 = (policy.high(v) for v in monic.coeffs)

    def f(x):
        return ((x + a2) * x + a1) * x + a0

    def df(x):
        return (3 * x + 2 * a2) * x + a1

    critical_disc = 4 * a2 * a2 - 12 * a1
    if critical_disc <= 0:
        raise NotThreeRealRoots("cubic is monotone: fewer than three real roots")
    root = ctx.sqrt(critical_disc)
    x_max = (-2 * a2 - root) / 6
    x_min = (-2 * a2 + root) / 6
    if not (f(x_max) > 0 > f(x_min)):
        raise NotThreeRealRoots("local extrema do not straddle zero: fewer than three real roots")

    bound = 1 + max(abs(a2), abs(a1), abs(a0))
    brackets = ((-bound, x_max), (x_max, x_min), (x_min, bound))
    values = [_refine(f, df, lo, hi, policy) for lo, hi in brackets]
    return ZeroTriple.from_values(values, policy)


def residuals(c: Cubic, zt: ZeroTriple, policy: PrecisionPolicy) -> Tuple[Any, Any, Any]:
    return tuple(abs(policy.high(c.evaluate(z, policy))) for z in zt.zeros)


def max_residual(c: Cubic, zt: ZeroTriple, policy: PrecisionPolicy):
    return max(residuals(c, zt, policy))


def printed_zeta1(params: RcpParams, policy: PrecisionPolicy) -> ZeroTriple:
    """The alternative closed form -s * zeta(h, 1); it is the negation of rcp_zeros"""
    s = policy.high(params.s)
    plus_one = rcp_zeros(RcpParams(h=params.h, s=1), policy)
    return ZeroTriple.from_values([-s * z for z in plus_one.zeros], policy)
