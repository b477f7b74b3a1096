from fastapi import APIRouter, Depends, Query

from app.models.documents import OutputDocument, fixed_list, terms_document
from app.models.precision import PrecisionPolicy
from app.routes.deps import get_policy
from app.services import gaussian

router = APIRouter(prefix="/periods", tags=["Gaussian periods"])


@router.get("/shanks-primes", response_model=OutputDocument, response_model_exclude_none=True)
def shanks_primes(limit: int = Query(..., ge=0, le=10 ** 8)):
    primes = [p for _, p in gaussian.shanks_primes(limit)]
    return terms_document("shanks-primes", {"limit": str(limit)}, primes)


@router.get("/minpoly", response_model=OutputDocument, response_model_exclude_none=True)
def minimal_polynomial(h: int):
    """Minimal polynomial of the cubic periods of tau(h), Lehmer's normalization"""
    poly = gaussian.period_minimal_poly(h)
    constants = gaussian.lehmer_constants(h)
    return OutputDocument(
        kind="minpoly",
        inputs={"h": str(h)},
        coefficients=[str(c) for c in poly.coeffs],
        checks={
            "p": str(constants.p),
            "L": str(constants.L),
            "period_shift": str(constants.period_shift),
            "period_sign": str(constants.period_sign),
        },
    )


@router.get("/{p}", response_model=OutputDocument, response_model_exclude_none=True)
def periods(p: int, policy: PrecisionPolicy = Depends(get_policy)):
    result = gaussian.gaussian_periods(p, policy)
    checks = {"g": str(result.g)}
    if result.h is not None:
        checks.update(h=str(result.h), L=str(result.L))
    return OutputDocument(
        kind="periods",
        inputs={"p": str(p)},
        digits=policy.target_digits,
        values=fixed_list(result.values, policy.target_digits, policy),
        cosets=[list(c) for c in result.cosets],
        checks=checks,
    )


@router.get("/{p}/deltas", response_model=OutputDocument, response_model_exclude_none=True)
def deltas(p: int, policy: PrecisionPolicy = Depends(get_policy)):
    result = gaussian.period_differences(p, policy)
    return OutputDocument(
        kind="deltas",
        inputs={"p": str(p)},
        digits=policy.target_digits,
        values=fixed_list(result.deltas, policy.target_digits, policy),
        branches=list(result.closed_form_ks),
        checks={
            "h": str(result.h),
            "orientation": str(result.orientation),
            "closed_form_sign": str(result.closed_form_sign),
        },
    )
