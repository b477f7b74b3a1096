from typing import Dict

from fastapi import APIRouter, Depends
from pydantic import BaseModel

from app.models.documents import OutputDocument, report_document
from app.models.precision import PrecisionPolicy
from app.routes.deps import get_policy, value
from app.services import identities
from app.utils.expression import parse_equation

router = APIRouter(prefix="/identities", tags=["Identities"])


class EquationRequest(BaseModel):
    equation: str


@router.get("/ramanujan", response_model=OutputDocument, response_model_exclude_none=True)
def ramanujan(h: str, s: str, policy: PrecisionPolicy = Depends(get_policy)):
    report = identities.ramanujan_cbrt_sum_check(value(h, policy), value(s, policy), policy)
    return report_document("identity.ramanujan", {"h": h, "s": s}, report, policy)


@router.get("/extended", response_model=OutputDocument, response_model_exclude_none=True)
def extended(alpha: str, s: str, policy: PrecisionPolicy = Depends(get_policy)):
    report = identities.extended_identity_check(value(alpha, policy), value(s, policy), policy)
    return report_document("identity.extended", {"alpha": alpha, "s": s}, report, policy)


@router.get("/gauss", response_model=OutputDocument, response_model_exclude_none=True)
def gauss(h: int, policy: PrecisionPolicy = Depends(get_policy)):
    report = identities.gauss_period_cbrt_identity(h, policy)
    return report_document("identity.gauss", {"h": str(h)}, report, policy)


@router.get("/named", response_model=Dict[str, str])
def list_named():
    """Catalog of named identities as 'lhs == rhs'"""
    return {name: f"{entry.lhs} == {entry.rhs}" for name, entry in identities.CATALOG.items()}


@router.get("/named/{name}", response_model=OutputDocument, response_model_exclude_none=True)
def named(name: str, policy: PrecisionPolicy = Depends(get_policy)):
    report = identities.verify_named(name, policy)
    return report_document("identity.named", {"name": name}, report, policy)


@router.post("/verify", response_model=OutputDocument, response_model_exclude_none=True)
def verify(request: EquationRequest, policy: PrecisionPolicy = Depends(get_policy)):
    lhs, rhs = parse_equation(request.equation)
    report = identities.verify_expression(lhs, rhs, policy, name=request.equation)
    return report_document("verify", {"equation": request.equation}, report, policy)
