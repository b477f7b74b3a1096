from typing import Optional

from fastapi import Query

from app.config import settings
from app.models.precision import PrecisionPolicy
from app.utils.expression import parse_value


def get_policy(
    digits: Optional[int] = Query(None, ge=1, le=10000, description="target decimal digits")
) -> PrecisionPolicy:
    return PrecisionPolicy(target_digits=digits or settings.DEFAULT_DIGITS)


def value(text: str, policy: PrecisionPolicy):
    """Numeric query parameters use the same expression grammar as the CLI"""
    return parse_value(text, policy)
