from typing import Optional

from fastapi import APIRouter, Depends, Query

from app.models.documents import OutputDocument, terms_document
from app.models.precision import PrecisionPolicy
from app.models.sequence import A198636
from app.routes.deps import get_policy
from app.services import sequences
from app.services.oeis_service import OEISService, cross_check

router = APIRouter(prefix="/sequences", tags=["Sequences"])

MAX_TERMS = 5000


@router.get("/a198636", response_model=OutputDocument, response_model_exclude_none=True)
def a198636(
    terms: int = Query(10, ge=0, le=MAX_TERMS),
    check: bool = False,
    policy: PrecisionPolicy = Depends(get_policy),
):
    document = terms_document("seq.a198636", {"terms": str(terms)}, sequences.recurrence_terms(A198636, terms))
    if check and terms:
        document.checks = {"jefferey": "pass" if sequences.jefferey_check(terms - 1, policy) else "fail"}
    return document


@router.get("/trace", response_model=OutputDocument, response_model_exclude_none=True)
def trace(h: int, k: int = Query(1, ge=1), terms: int = Query(10, ge=0, le=MAX_TERMS)):
    spec = sequences.char_poly_of_power(h, k)
    document = terms_document(
        "seq.trace", {"h": str(h), "k": str(k), "terms": str(terms)}, sequences.trace_sequence(h, k, terms)
    )
    document.coefficients = [str(c) for c in spec.char_coeffs]
    return document


@router.get("/walks", response_model=OutputDocument, response_model_exclude_none=True)
def walks(n: int = Query(..., ge=1), terms: int = Query(10, ge=0, le=MAX_TERMS)):
    return terms_document("seq.walks", {"n": str(n), "terms": str(terms)}, sequences.walk_sequence(n, terms))


def get_oeis_service() -> OEISService:
    return OEISService()


@router.get("/oeis/{seq_id}", response_model=OutputDocument, response_model_exclude_none=True)
def oeis_check(
    seq_id: str,
    terms: Optional[int] = Query(None, ge=1),
    limit: Optional[int] = Query(None, ge=1),
    service: OEISService = Depends(get_oeis_service),
):
    """Cross-check local terms against an OEIS b-file"""
    return cross_check(seq_id, terms=terms, limit=limit, service=service)
