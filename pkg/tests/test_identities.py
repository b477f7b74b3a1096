import random
from fractions import Fraction

import pytest

from app.models.precision import PrecisionPolicy
from app.models.report import Verdict
from app.services.identities import (
    CATALOG,
    extended_identity_check,
    gauss_period_cbrt_identity,
    ramanujan_cbrt_sum_check,
    verify_expression,
    verify_named,
)
from app.services.precision import real_cbrt
from app.utils.errors import EvaluationDomainError, NotLehmerCase, UnknownIdentity
from app.utils.expression import parse_expression
from tests.conftest import assert_close


def closed_rama_value(policy):
    return real_cbrt(5 - 3 * real_cbrt(7, policy), policy)


def test_ramanujan_seventh_roots(policy):
    report = ramanujan_cbrt_sum_check(-1, -1, policy)
    assert report.passed
    assert_close(report.rhs, closed_rama_value(policy), policy, digits=45)
    assert abs(report.lhs - policy.ctx.mpf("-0.904084")) < 1e-6


def test_ramanujan_irrational_scale(policy):
    root2 = policy.ctx.sqrt(2)
    assert ramanujan_cbrt_sum_check(Fraction(1, 6), 3 * root2, policy).passed


@pytest.mark.parametrize("h, s", [(1, 1), (Fraction(5, 2), -3), (-7, Fraction(1, 2))])
def test_ramanujan_random_parameters(policy, h, s):
    assert ramanujan_cbrt_sum_check(h, s, policy).passed


def test_extended_identity(policy):
    ctx = policy.ctx
    assert extended_identity_check(ctx.pi ** 3, 1, policy).passed
    assert extended_identity_check(ctx.sqrt(2), 3 * ctx.sqrt(2), policy).passed
    assert extended_identity_check(8, 1, policy).passed


def test_gauss_period_identity(policy):
    report = gauss_period_cbrt_identity(-1, policy)
    assert report.passed
    assert_close(report.lhs, closed_rama_value(policy), policy, digits=45)
    for h in (1, 2, 4):
        assert gauss_period_cbrt_identity(h, policy).passed


def test_gauss_period_identity_rejects():
    with pytest.raises(NotLehmerCase):
        gauss_period_cbrt_identity(3, PrecisionPolicy(target_digits=20))


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_named_identities(policy, name):
    report = verify_named(name, policy)
    assert report.passed, f"{name}: residual {report.residual}"
    assert report.digits == 50


def test_unknown_identity(policy):
    with pytest.raises(UnknownIdentity):
        verify_named("nope", policy)


def test_verify_expression_verdicts():
    policy = PrecisionPolicy(target_digits=50)
    assert verify_expression(parse_expression("cbrt(-8)"), parse_expression("-2"), policy).passed
    low = PrecisionPolicy(target_digits=4)
    report = verify_expression(parse_expression("pi"), parse_expression("22/7"), low)
    assert report.verdict == Verdict.FAIL


def test_verify_expression_domain_errors(policy):
    with pytest.raises(EvaluationDomainError):
        verify_expression(parse_expression("sqrt(-1)"), parse_expression("1"), policy)
    with pytest.raises(EvaluationDomainError):
        verify_expression(parse_expression("1/(1-1)"), parse_expression("1"), policy)


@pytest.mark.slow
def test_named_identities_at_high_precision():
    policy = PrecisionPolicy(target_digits=300)
    for name in CATALOG:
        assert verify_named(name, policy).passed


def random_orbit_seeds(count=50, seed=11):
    rng = random.Random(seed)
    seeds = []
    while len(seeds) < count:
        alpha = Fraction(rng.choice((-1, 1)) * rng.randint(1, 400), 20)
        s = Fraction(rng.choice((-1, 1)) * rng.randint(1, 200), 20)
        if alpha != s:
            seeds.append((alpha, s))
    return seeds


@pytest.mark.parametrize("alpha, s", random_orbit_seeds())
def test_extended_identity_random_seeds(policy, alpha, s):
    assert extended_identity_check(alpha, s, policy).passed
