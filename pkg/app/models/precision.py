from fractions import Fraction
from functools import lru_cache
from numbers import Real
from typing import Annotated, Any, Iterable, Tuple, Union

import mpmath
from pydantic import AfterValidator, BaseModel, Field, model_validator

from app.config import settings

# Values are made by a policy's own MPContext, so never isinstance-check against this alias.
HighReal = mpmath.mpf

Exact = Union[int, Fraction]


def _ensure_real(value: Any) -> Any:
    if isinstance(value, (bool, float)) or not isinstance(value, Real):
        raise ValueError(f"expected an int, Fraction or mpf, got {type(value).__name__}")
    return value


# Exact rational (int / Fraction) or an mpmath real
RealValue = Annotated[Any, AfterValidator(_ensure_real)]


@lru_cache(maxsize=None)
def _context(dps: int) -> mpmath.MPContext:
    ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


class PrecisionPolicy(BaseModel):
    target_digits: int = Field(default_factory=lambda: settings.DEFAULT_DIGITS, ge=1)
    guard_digits: int = Field(default_factory=lambda: settings.GUARD_DIGITS, ge=1)

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_working_precision(self):
        if self.working_digits < settings.MIN_DIGITS:
            raise ValueError(f"working precision must be at least {settings.MIN_DIGITS} digits")
        return self

    @property
    def working_digits(self) -> int:
        return self.target_digits + self.guard_digits

    @property
    def ctx(self) -> mpmath.MPContext:
        return _context(self.working_digits)

    @property
    def tolerance(self) -> HighReal:
        return self.ctx.mpf(10) ** (-self.target_digits)

    def high(self, value: Any) -> HighReal:
        """Convert int, Fraction, str or any mpf into this policy's context"""
        if isinstance(value, Fraction):
            return self.ctx.mpf(value.numerator) / value.denominator
        return self.ctx.mpf(value)

    def close(self, a: Any, b: Any) -> bool:
        return abs(self.high(a) - self.high(b)) < self.tolerance

    def with_digits(self, target_digits: int) -> "PrecisionPolicy":
        return PrecisionPolicy(target_digits=target_digits, guard_digits=self.guard_digits)


def is_exact(value: Any) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def exact(value: Exact) -> Exact:
    """Normalize an exact value: integral Fractions collapse to int"""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def unify(values: Iterable[Any], policy: PrecisionPolicy) -> Tuple[Any, ...]:
    """All values become Fractions when every one of them is exact, otherwise all are lifted"""
    values = tuple(values)
    if all(is_exact(v) for v in values):
        return tuple(Fraction(v) for v in values)
    return tuple(policy.high(v) for v in values)


def policy_for(digits: int = None) -> PrecisionPolicy:
    if digits is None:
        return PrecisionPolicy()
    return PrecisionPolicy(target_digits=digits)
