"""
Real-branch conventions shared by every computation: exact/high-precision
coercion, real cube roots and the arctangent limits used by the trig formulas.
"""

from fractions import Fraction
from typing import Any, Optional

from app.models.precision import Exact, PrecisionPolicy, exact, is_exact, unify
from app.utils.errors import DegenerateAngle


def sign(value: Any) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def is_zero(value: Any, policy: PrecisionPolicy) -> bool:
    if is_exact(value):
        return value == 0
    return abs(policy.high(value)) < policy.tolerance


def integer_cbrt(n: int) -> int:
    """Floor of the real cube root of n >= 0"""
    if n < 0:
        raise ValueError("integer_cbrt expects a nonnegative integer")
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + 2) // 3)
    while True:
        y = (2 * x + n // (x * x)) // 3
        if y >= x:
            break
        x = y
    while x ** 3 > n:
        x -= 1
    while (x + 1) ** 3 <= n:
        x += 1
    return x


def exact_cbrt(value: Exact) -> Optional[Exact]:
    """Rational cube root of a perfect rational cube, else None"""
    q = Fraction(value)
    negative = q < 0
    q = abs(q)
    num = integer_cbrt(q.numerator)
    den = integer_cbrt(q.denominator)
    if num ** 3 != q.numerator or den ** 3 != q.denominator:
        return None
    root = Fraction(num, den)
    return exact(-root if negative else root)


def real_cbrt(value: Any, policy: PrecisionPolicy):
    x = policy.high(value)
    if x == 0:
        return x
    root = policy.ctx.cbrt(abs(x))
    return root if x > 0 else -root


def cbrt(value: Any, policy: PrecisionPolicy):
    """Real cube root that stays exact on perfect rational cubes"""
    if is_exact(value):
        root = exact_cbrt(value)
        if root is not None:
            return root
    return real_cbrt(value, policy)


def branch_arctan(num: Any, den: Any, policy: PrecisionPolicy):
    ctx = policy.ctx
    n = policy.high(num)
    d = policy.high(den)
    if n == 0 and d == 0:
        raise DegenerateAngle("arctangent of 0/0 is undefined")
    if d == 0:
        return sign(n) * ctx.pi / 2
    return ctx.atan(n / d)
