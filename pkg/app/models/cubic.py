from fractions import Fraction
from typing import Any, Tuple

from pydantic import BaseModel, model_validator

from app.models.precision import PrecisionPolicy, RealValue, exact, is_exact, unify
from app.utils import intmatrix
from app.utils.errors import InvalidScale, NotCubic


class Cubic(BaseModel):
    """a3*x^3 + a2*x^2 + a1*x + a0, exact when every coefficient is int/Fraction"""

    a3: RealValue
    a2: RealValue
    a1: RealValue
    a0: RealValue

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @model_validator(mode="after")
    def _check_leading(self):
        if self.a3 == 0:
            raise NotCubic("leading coefficient a3 must be nonzero")
        return self

    @classmethod
    def monic_from(cls, a2: Any, a1: Any, a0: Any) -> "Cubic":
        return cls(a3=1, a2=a2, a1=a1, a0=a0)

    @property
    def coeffs(self) -> Tuple[Any, Any, Any, Any]:
        return (self.a3, self.a2, self.a1, self.a0)

    @property
    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.coeffs)

    @property
    def is_monic(self) -> bool:
        return self.a3 == 1

    def monic_normalize(self, policy: PrecisionPolicy = None) -> "Cubic":
        if self.is_monic:
            return self
        if self.is_exact:
            lead = Fraction(self.a3)
            return Cubic(
                a3=1,
                a2=exact(Fraction(self.a2) / lead),
                a1=exact(Fraction(self.a1) / lead),
                a0=exact(Fraction(self.a0) / lead),
            )
        if policy is None:
            raise ValueError("a precision policy is required to normalize inexact coefficients")
        a3, a2, a1, a0 = unify(self.coeffs, policy)
        return Cubic(a3=1, a2=a2 / a3, a1=a1 / a3, a0=a0 / a3)

    def evaluate(self, x: Any, policy: PrecisionPolicy = None):
        """Horner evaluation; exact when the cubic and x are exact"""
        values = self.coeffs + (x,)
        if all(is_exact(v) for v in values):
            a3, a2, a1, a0, x = (Fraction(v) for v in values)
            return exact(((a3 * x + a2) * x + a1) * x + a0)
        if policy is None:
            raise ValueError("a precision policy is required to evaluate inexact values")
        a3, a2, a1, a0, x = unify(values, policy)
        return ((a3 * x + a2) * x + a1) * x + a0

    def derivative(self, x: Any, policy: PrecisionPolicy):
        a3, a2, a1, _, x = unify(self.coeffs + (x,), policy)
        return (3 * a3 * x + 2 * a2) * x + a1


class RcpParams(BaseModel):
    """(h, s) parametrization of x^3 + h*s*x^2 - (h+3)*s^2*x + s^3"""

    h: RealValue
    s: RealValue

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @model_validator(mode="after")
    def _check_scale(self):
        if self.s == 0:
            raise InvalidScale("scale s must be nonzero")
        return self


class IntegerMatrix3(BaseModel):
    entries: Tuple[Tuple[int, int, int], Tuple[int, int, int], Tuple[int, int, int]]

    class Config:
        frozen = True

    def __matmul__(self, other: "IntegerMatrix3") -> "IntegerMatrix3":
        return IntegerMatrix3(entries=intmatrix.mat_mul(self.entries, other.entries))

    def __pow__(self, e: int) -> "IntegerMatrix3":
        return IntegerMatrix3(entries=intmatrix.mat_pow(self.entries, e))

    @property
    def trace(self) -> int:
        return intmatrix.trace(self.entries)

    @property
    def det(self) -> int:
        return intmatrix.det3(self.entries)

    @property
    def adjugate_trace(self) -> int:
        return intmatrix.principal_minor_sum(self.entries)

    def tolist(self):
        return [list(row) for row in self.entries]
