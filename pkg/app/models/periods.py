from fractions import Fraction
from typing import Optional, Tuple

from pydantic import BaseModel, Field

from app.models.precision import RealValue

Coset = Tuple[int, ...]


class PeriodSet(BaseModel):
    p: int
    g: int
    cosets: Tuple[Coset, Coset, Coset]
    values: Tuple[RealValue, RealValue, RealValue]
    h: Optional[int] = None
    L: Optional[int] = None

    class Config:
        frozen = True
        arbitrary_types_allowed = True


class DeltaSet(BaseModel):
    """Cyclic period differences, oriented so they are roots of x^3 - p*x + p"""

    p: int
    h: int
    deltas: Tuple[RealValue, RealValue, RealValue]
    orientation: int = Field(..., description="+1 keeps eta(k) - eta(k+1), -1 negates it")
    closed_form: Tuple[RealValue, RealValue, RealValue]
    closed_form_ks: Tuple[int, int, int]
    closed_form_sign: int

    class Config:
        frozen = True
        arbitrary_types_allowed = True


class LehmerConstants(BaseModel):
    h: int
    p: int
    L: int
    lehmer_shift: Fraction  # (L - 1) / 6
    period_shift: Fraction  # (h - 1)/3 or (h + 1)/3
    period_sign: int  # zeros are period_shift + period_sign * eta

    class Config:
        frozen = True
        arbitrary_types_allowed = True
