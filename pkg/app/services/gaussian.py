"""
Cubic Gaussian periods, Shanks primes and the Lehmer correspondence between
period values and the zeros of Ramanujan cubics with integer h.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Any, List, Optional, Tuple

from app.models.cubic import Cubic
from app.models.periods import Coset, DeltaSet, LehmerConstants, PeriodSet
from app.models.precision import PrecisionPolicy
from app.models.roots import ZeroTriple
from app.services.cubic_poly import as_integer, rcp, tau
from app.services.precision import branch_arctan, exact, unify
from app.utils.errors import (
    AmbiguousMatch,
    InvalidScale,
    NoCubicCosets,
    NotLehmerCase,
    NotPrime,
    NotShanksPrime,
)
from app.utils.primes import is_prime, primitive_root

logger = logging.getLogger(__name__)


def power_residue_cosets(p: int, m: int) -> Tuple[Coset, ...]:
    """The m-th power residues C0 mod p and the cosets g^k * C0 for k < m"""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1 or (p - 1) % m != 0:
        raise NoCubicCosets(f"{p} is not 1 mod {m}")
    g = primitive_root(p)
    step = pow(g, m, p)
    base = []
    x = 1
    for _ in range((p - 1) // m):
        base.append(x)
        x = x * step % p
    cosets = []
    multiplier = 1
    for _ in range(m):
        cosets.append(tuple(sorted(multiplier * c % p for c in base)))
        multiplier = multiplier * g % p
    return tuple(cosets)


def cubic_cosets(p: int) -> Tuple[Coset, Coset, Coset]:
    return power_residue_cosets(p, 3)


def shanks_h(p: int) -> Optional[int]:
    """The h >= -1 with 3 not dividing h and tau(h) = p, if p is such a prime"""
    d = 4 * p - 27
    if d < 0:
        return None
    r = isqrt(d)
    if r * r != d or (r - 3) % 2:
        return None
    h = (r - 3) // 2
    if h % 3 == 0 or not is_prime(p):
        return None
    return h


def lehmer_L(h: int) -> int:
    return -(2 * h + 3) if h % 3 == 1 else 2 * h + 3


def check_lehmer_case(h: Any) -> Tuple[int, int]:
    h = as_integer(h)
    if h % 3 == 0:
        raise NotLehmerCase(f"h = {h} is divisible by 3")
    p = tau(h)
    if not is_prime(p):
        raise NotShanksPrime(f"tau({h}) = {p} is not prime")
    return h, p


@lru_cache(maxsize=256)
def _period_values(p: int, cosets: Tuple[Coset, ...], policy: PrecisionPolicy):
    ctx = policy.ctx
    values = []
    for coset in cosets:
        # cosets are closed under j -> p - j, so pair the cosines
        half = [j for j in coset if 2 * j < p]
        values.append(2 * ctx.fsum(ctx.cospi(ctx.mpf(2 * j) / p) for j in half))
    return tuple(values)


def gaussian_periods(p: int, policy: PrecisionPolicy) -> PeriodSet:
    cosets = cubic_cosets(p)
    values = _period_values(p, cosets, policy)
    h = shanks_h(p)
    return PeriodSet(
        p=p,
        g=primitive_root(p),
        cosets=cosets,
        values=values,
        h=h,
        L=lehmer_L(h) if h is not None else None,
    )


def shanks_primes(limit: int) -> List[Tuple[int, int]]:
    pairs = []
    h = -1
    while tau(h) <= limit:
        if h % 3 and is_prime(tau(h)):
            pairs.append((h, tau(h)))
        h += 1
    logger.info(f"found {len(pairs)} Shanks primes up to {limit}")
    return pairs


def period_minimal_poly(h: Any) -> Cubic:
    h, p = check_lehmer_case(h)
    L = lehmer_L(h)
    constant = (L + 3) * p - 1
    assert constant % 27 == 0 and (p - 1) % 3 == 0
    return Cubic.monic_from(1, -(p - 1) // 3, -constant // 27)


def printed_lehmer_poly(h: Any) -> Cubic:
    """G1/G2 with the constant terms exactly as printed, (2hp+1)/27 and -((6+2h)p+1)/27"""
    h, p = check_lehmer_case(h)
    if h % 3 == 1:
        constant = Fraction(2 * h * p + 1, 27)
    else:
        constant = -Fraction((6 + 2 * h) * p + 1, 27)
    return Cubic.monic_from(1, -(p - 1) // 3, exact(constant))


def lehmer_constants(h: Any) -> LehmerConstants:
    h, p = check_lehmer_case(h)
    L = lehmer_L(h)
    if h % 3 == 1:
        shift, sign = Fraction(h - 1, 3), -1
    else:
        shift, sign = Fraction(h + 1, 3), 1
    return LehmerConstants(
        h=h, p=p, L=L, lehmer_shift=Fraction(L - 1, 6), period_shift=shift, period_sign=sign
    )


def scp_zeros_via_periods(h: Any, policy: PrecisionPolicy) -> ZeroTriple:
    constants = lehmer_constants(h)
    periods = gaussian_periods(constants.p, policy)
    shift = policy.high(constants.period_shift)
    values = [shift + constants.period_sign * eta for eta in periods.values]
    return ZeroTriple.from_values(values, policy)


def lrcp_zeros_via_periods(h: Any, s: Any, policy: PrecisionPolicy) -> ZeroTriple:
    if s == 0:
        raise InvalidScale("scale s must be nonzero")
    scale = policy.high(s)
    base = scp_zeros_via_periods(h, policy)
    return ZeroTriple.from_values([-scale * z for z in base.zeros], policy)


def verify_idscrp(h: Any, s: Any, x: Any, policy: PrecisionPolicy, printed: bool = False):
    """|rho(h,s,x) - (+-s^3) G(theta(h,s,x))|; exact when s and x are exact"""
    if s == 0:
        raise InvalidScale("scale s must be nonzero")
    h, _ = check_lehmer_case(h)
    g = printed_lehmer_poly(h) if printed else period_minimal_poly(h)
    if h % 3 == 1:
        s, x, shift = unify((s, x, Fraction(h - 1, 3)), policy)
        theta = x / s + shift
        rhs = s ** 3 * g.evaluate(theta, policy)
    else:
        s, x, shift = unify((s, x, Fraction(h + 1, 3)), policy)
        theta = -x / s - shift
        rhs = -(s ** 3) * g.evaluate(theta, policy)
    lhs = rcp(h, s, policy).evaluate(x, policy)
    return abs(lhs - rhs)


def period_differences(p: int, policy: PrecisionPolicy) -> DeltaSet:
    ctx = policy.ctx
    h = shanks_h(p)
    if h is None:
        raise NotShanksPrime(f"{p} is not a Shanks prime")
    eta = gaussian_periods(p, policy).values
    raw = [eta[k] - eta[(k + 1) % 3] for k in range(3)]
    # the two cyclic orientations give the roots of x^3 - px + p and x^3 - px - p
    orientation = 1 if raw[0] * raw[1] * raw[2] < 0 else -1
    deltas = tuple(orientation * d for d in raw)

    phi = branch_arctan(3 + 2 * h, 3 * ctx.sqrt(3), policy)
    radius = 2 * ctx.sqrt(ctx.mpf(p) / 3)
    trig = {k: radius * ctx.cos((phi + k * ctx.pi) / 3) for k in (0, 2, 4)}
    product = trig[0] * trig[2] * trig[4]
    closed_sign = 1 if product < 0 else -1

    ks = []
    for d in deltas:
        k = min(trig, key=lambda key: abs(closed_sign * trig[key] - d))
        ks.append(k)
    if sorted(ks) != [0, 2, 4]:
        raise AmbiguousMatch(f"closed-form differences do not match the periods of {p}")
    logger.debug(f"p={p}: orientation {orientation}, closed-form sign {closed_sign}")
    return DeltaSet(
        p=p,
        h=h,
        deltas=deltas,
        orientation=orientation,
        closed_form=tuple(closed_sign * trig[k] for k in ks),
        closed_form_ks=tuple(ks),
        closed_form_sign=closed_sign,
    )
