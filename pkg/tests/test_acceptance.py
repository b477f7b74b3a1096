"""
Desk-scale sweeps over the published results; marked slow, still run by default.
"""

import random
from fractions import Fraction

import mpmath
import pytest

from app.models.cubic import RcpParams
from app.models.precision import PrecisionPolicy
from app.services.cubic_poly import build_scp, rcp, tau
from app.services.gaussian import (
    gaussian_periods,
    period_differences,
    period_minimal_poly,
    scp_zeros_via_periods,
    shanks_primes,
    verify_idscrp,
)
from app.services.identities import (
    CATALOG,
    gauss_period_cbrt_identity,
    ramanujan_cbrt_sum_check,
    verify_named,
)
from app.services.oeis_service import OEISService
from app.services.roots import (
    cyclic_action,
    eta,
    is_three_cycle,
    max_residual,
    oracle_roots,
    rcp_zeros,
    scp_zeros,
)
from app.utils.primes import is_prime
from tests.conftest import assert_same_set

pytestmark = pytest.mark.slow


def random_params(count=200, seed=20240607):
    """Half exact rationals, half mpf values made in mpmath's global 53-bit context"""
    rng = random.Random(seed)
    params = []
    for i in range(count):
        if i % 2:
            h = mpmath.mpf(rng.uniform(-50, 50))
            s = mpmath.mpf(rng.choice((-1, 1)) * rng.uniform(0.01, 5))
        else:
            h = Fraction(rng.randint(-5000, 5000), 100)
            s = Fraction(rng.choice((-1, 1)) * rng.randint(1, 500), 100)
        params.append((h, s))
    return params


def admissible_h(max_tau):
    return [h for h in range(-1, 100) if h % 3 and tau(h) < max_tau and is_prime(tau(h))]


def test_scp_zeros_at_sixty_digits():
    policy = PrecisionPolicy(target_digits=60)
    ctx = policy.ctx
    expected = [2 * ctx.cospi(ctx.mpf(2 * k) / 7) for k in (1, 2, 4)]
    assert_same_set(scp_zeros(-1, policy).zeros, expected, policy, digits=40)


def test_sign_switch_is_continuous():
    policy = PrecisionPolicy(target_digits=40)
    assert_same_set(scp_zeros(Fraction(-3, 2), policy).zeros, [1, Fraction(-1, 2), -2], policy, digits=35)
    for offset in (Fraction(1, 10 ** 6), Fraction(-1, 10 ** 6)):
        zeros = scp_zeros(Fraction(-3, 2) + offset, policy).zeros
        for got, want in zip(zeros, (1, Fraction(-1, 2), -2)):
            assert abs(got - policy.high(want)) < 1e-5


def test_trig_formulas_match_oracle_on_grid():
    policy = PrecisionPolicy(target_digits=40)
    for i in range(-200, 201):
        h = Fraction(i, 4)
        c = build_scp(h, policy)
        closed = scp_zeros(h, policy)
        assert oracle_roots(c, policy).matches(closed.zeros, policy), f"h={h}"
        assert max_residual(c, closed, policy) < policy.tolerance


def test_rcp_zeros_random_samples():
    policy = PrecisionPolicy(target_digits=40)
    for h, s in random_params():
        c = rcp(h, s, policy)
        zt = rcp_zeros(RcpParams(h=h, s=s), policy)
        assert oracle_roots(c, policy).matches(zt.zeros, policy), f"h={h}, s={s}"
        assert max_residual(c, zt, policy) < policy.tolerance
        assert is_three_cycle(cyclic_action(zt, s, policy))
        for z in zt.zeros:
            back = eta(s, eta(s, eta(s, z, policy), policy), policy)
            assert abs(back - z) < policy.tolerance


def test_ramanujan_identity_random_samples():
    policy = PrecisionPolicy(target_digits=40)
    for h, s in random_params():
        assert ramanujan_cbrt_sum_check(h, s, policy).passed, f"h={h}, s={s}"


def test_periods_for_shanks_primes_below_20000():
    policy = PrecisionPolicy(target_digits=30)
    for h, p in shanks_primes(20000):
        poly = period_minimal_poly(h)
        for value in gaussian_periods(p, policy).values:
            assert abs(poly.evaluate(value, policy)) < policy.tolerance, f"p={p}"
        assert scp_zeros_via_periods(h, policy).matches(scp_zeros(h, policy).zeros, policy)


def test_shanks_primes_match_fixture(offline_service):
    fixture = [p for p in offline_service.fetch_bfile("A005471").values if p < 10 ** 5]
    assert [p for _, p in shanks_primes(10 ** 5 - 1)] == fixture


def test_lehmer_differences_below_20000():
    policy = PrecisionPolicy(target_digits=30)
    tolerance = policy.ctx.mpf(10) ** -30
    for h, p in shanks_primes(20000):
        result = period_differences(p, policy)
        deltas = result.deltas
        for d in deltas:
            assert abs(d ** 3 - p * d + p) < tolerance
        assert abs(sum(deltas)) < tolerance
        assert abs(sum(d * d for d in deltas) - 2 * p) < tolerance
        for closed, d in zip(result.closed_form, deltas):
            assert abs(closed - d) < tolerance


def test_idscrp_exact_for_admissible_h():
    policy = PrecisionPolicy(target_digits=30)
    for h in admissible_h(5000):
        for s in (-2, -1, 1, 3):
            for x in (-2, 0, Fraction(1, 2), 5):
                assert verify_idscrp(h, s, x, policy) == 0, f"h={h}, s={s}, x={x}"


def test_gauss_identities_for_admissible_h():
    policy = PrecisionPolicy(target_digits=30)
    for h in admissible_h(5000):
        assert gauss_period_cbrt_identity(h, policy).passed, f"h={h}"


def test_named_catalog_tightens_with_precision():
    for name in CATALOG:
        at_50 = verify_named(name, PrecisionPolicy(target_digits=50))
        at_80 = verify_named(name, PrecisionPolicy(target_digits=80))
        assert at_50.passed and at_80.passed
        assert at_80.residual <= at_50.residual
