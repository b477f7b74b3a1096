from typing import Optional

from fastapi import APIRouter, Depends
from pydantic import BaseModel

from app.models.cubic import Cubic, RcpParams
from app.models.documents import OutputDocument, zeros_document
from app.models.precision import PrecisionPolicy, is_exact
from app.models.roots import ZeroTriple
from app.routes.deps import get_policy, value
from app.services import cubic_poly, roots
from app.utils.errors import UsageError
from app.utils.helpers import to_fixed

router = APIRouter(prefix="/roots", tags=["Roots"])


class CubicRequest(BaseModel):
    a3: str = "1"
    a2: str
    a1: str
    a0: str
    oracle: bool = False


def _document(kind: str, inputs: dict, zt: ZeroTriple, c: Cubic, policy: PrecisionPolicy) -> OutputDocument:
    return zeros_document(kind, inputs, zt, policy, roots.max_residual(c, zt, policy))


@router.post("/cubic", response_model=OutputDocument, response_model_exclude_none=True)
def cubic_zeros(request: CubicRequest, policy: PrecisionPolicy = Depends(get_policy)):
    """Zeros of a cubic with three real roots"""
    c = Cubic(
        a3=value(request.a3, policy),
        a2=value(request.a2, policy),
        a1=value(request.a1, policy),
        a0=value(request.a0, policy),
    )
    zt = roots.oracle_roots(c, policy) if request.oracle else roots.solve_cubic_trig(c, policy)
    inputs = request.model_dump(exclude={"oracle"})
    return _document("roots.cubic", inputs, zt, c, policy)


@router.get("/scp", response_model=OutputDocument, response_model_exclude_none=True)
def scp_zeros(h: str, policy: PrecisionPolicy = Depends(get_policy)):
    hv = value(h, policy)
    return _document("roots.scp", {"h": h}, roots.scp_zeros(hv, policy), cubic_poly.build_scp(hv, policy), policy)


@router.get("/rcp", response_model=OutputDocument, response_model_exclude_none=True)
def rcp_zeros(
    s: str,
    h: Optional[str] = None,
    alpha: Optional[str] = None,
    policy: PrecisionPolicy = Depends(get_policy),
):
    """Zeros of rho(h, s, x), either from h or from a prescribed zero alpha"""
    sv = value(s, policy)
    if alpha is not None:
        hv, c = roots.rcp_through(value(alpha, policy), sv, policy)
        inputs = {"alpha": alpha, "s": s}
    elif h is not None:
        hv = value(h, policy)
        c = cubic_poly.rcp(hv, sv, policy)
        inputs = {"h": h, "s": s}
    else:
        raise UsageError("pass h or alpha")
    document = _document("roots.rcp", inputs, roots.rcp_zeros(RcpParams(h=hv, s=sv), policy), c, policy)
    if alpha is not None:
        document.checks = {"h": str(hv) if is_exact(hv) else to_fixed(hv, policy.target_digits, policy)}
    return document


@router.get("/witula", response_model=OutputDocument, response_model_exclude_none=True)
def witula_zeros(gamma: str, r: str, policy: PrecisionPolicy = Depends(get_policy)):
    gv, rv = value(gamma, policy), value(r, policy)
    c = cubic_poly.build_rcp_witula(gv, rv, policy)
    zt = ZeroTriple.from_values(cubic_poly.witula_zeros(gv, rv, policy), policy)
    return _document("roots.witula", {"gamma": gamma, "r": r}, zt, c, policy)
