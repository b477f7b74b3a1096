"""
JSON documents shared by the CLI (--json) and the HTTP API.

Numbers are carried as strings: reals in fixed point with exactly `digits`
decimals, integers in full. Key order is kind, inputs, digits, then the
payload fields, then residual.
"""

import re
from typing import Any, Dict, Iterable, List, Optional, Tuple

from pydantic import BaseModel, field_validator

from app.models.precision import PrecisionPolicy
from app.models.report import IdentityReport
from app.models.roots import ZeroTriple
from app.utils.helpers import to_fixed, write_bfile

SEQUENCE_ID = re.compile(r"^A\d{6}$")


class ReportDocument(BaseModel):
    name: str
    lhs: str
    rhs: str
    residual: str
    digits: int
    verdict: str


class OutputDocument(BaseModel):
    kind: str
    inputs: Dict[str, str]
    digits: Optional[int] = None
    zeros: Optional[List[str]] = None
    terms: Optional[List[str]] = None
    values: Optional[List[str]] = None
    coefficients: Optional[List[str]] = None
    cosets: Optional[List[List[int]]] = None
    branches: Optional[List[int]] = None
    checks: Optional[Dict[str, str]] = None
    report: Optional[ReportDocument] = None
    residual: Optional[str] = None

    def to_json(self) -> str:
        return self.model_dump_json(exclude_none=True, indent=2)


class BFile(BaseModel):
    sequence_id: str
    rows: List[Tuple[int, int]]

    @field_validator("sequence_id")
    @classmethod
    def _check_id(cls, v: str) -> str:
        if not SEQUENCE_ID.match(v):
            raise ValueError(f"sequence id must look like A000000, got {v!r}")
        return v

    @property
    def values(self) -> List[int]:
        return [a for _, a in self.rows]

    @property
    def offset(self) -> int:
        return self.rows[0][0] if self.rows else 0

    def to_text(self) -> str:
        return write_bfile(self.rows)


def fixed_list(values: Iterable[Any], digits: int, policy: PrecisionPolicy) -> List[str]:
    return [to_fixed(v, digits, policy) for v in values]


def zeros_document(
    kind: str,
    inputs: Dict[str, str],
    zt: ZeroTriple,
    policy: PrecisionPolicy,
    residual: Any = None,
) -> OutputDocument:
    digits = policy.target_digits
    return OutputDocument(
        kind=kind,
        inputs=inputs,
        digits=digits,
        zeros=fixed_list(zt.zeros, digits, policy),
        branches=list(zt.branch_ks) if zt.branch_ks is not None else None,
        residual=to_fixed(residual, digits, policy) if residual is not None else None,
    )


def report_document(
    kind: str, inputs: Dict[str, str], report: IdentityReport, policy: PrecisionPolicy
) -> OutputDocument:
    digits = report.digits
    residual = to_fixed(report.residual, digits, policy)
    return OutputDocument(
        kind=kind,
        inputs=inputs,
        digits=digits,
        report=ReportDocument(
            name=report.name,
            lhs=to_fixed(report.lhs, digits, policy),
            rhs=to_fixed(report.rhs, digits, policy),
            residual=residual,
            digits=digits,
            verdict=report.verdict.value,
        ),
        residual=residual,
    )


def terms_document(kind: str, inputs: Dict[str, str], terms: Iterable[int]) -> OutputDocument:
    return OutputDocument(kind=kind, inputs=inputs, terms=[str(t) for t in terms])
