from enum import Enum
from typing import Any

from pydantic import BaseModel

from app.models.precision import PrecisionPolicy, RealValue


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"


class IdentityReport(BaseModel):
    name: str
    lhs: RealValue
    rhs: RealValue
    residual: RealValue
    digits: int
    verdict: Verdict

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @classmethod
    def compare(cls, name: str, lhs: Any, rhs: Any, policy: PrecisionPolicy) -> "IdentityReport":
        lhs, rhs = policy.high(lhs), policy.high(rhs)
        residual = abs(lhs - rhs)
        verdict = Verdict.PASS if residual < policy.tolerance else Verdict.FAIL
        return cls(
            name=name,
            lhs=lhs,
            rhs=rhs,
            residual=residual,
            digits=policy.target_digits,
            verdict=verdict,
        )

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS
