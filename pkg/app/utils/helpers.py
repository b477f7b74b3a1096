from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple

from app.models.precision import PrecisionPolicy, is_exact
from app.utils.errors import BFileFormatError

Row = Tuple[int, int]


def _from_scaled(scaled: int, digits: int) -> str:
    sign = "-" if scaled < 0 else ""
    text = str(abs(scaled))
    if digits == 0:
        return sign + text
    text = text.rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def to_fixed(value: Any, digits: int, policy: PrecisionPolicy = None) -> str:
    """Fixed-point text with exactly `digits` decimals, rounded half to even"""
    if is_exact(value):
        return _from_scaled(round(Fraction(value) * 10 ** digits), digits)
    if policy is None:
        policy = PrecisionPolicy(target_digits=digits)
    ctx = policy.ctx
    scaled = int(ctx.nint(policy.high(value) * ctx.mpf(10) ** digits))
    return _from_scaled(scaled, digits)


def format_coefficient(value: Any, policy: PrecisionPolicy, digits: int = 12) -> str:
    if is_exact(value):
        return str(value)
    return policy.ctx.nstr(policy.high(value), digits)


def format_cubic(coeffs: Sequence[Any], policy: PrecisionPolicy, digits: int = 12) -> str:
    """'x^3 + x^2 - 2*x - 1' from (a3, a2, a1, a0)"""
    terms = []
    for power, c in zip((3, 2, 1, 0), coeffs):
        if c == 0:
            continue
        text = format_coefficient(c, policy, digits)
        negative = text.startswith("-")
        text = text.lstrip("-")
        if "/" in text and power:
            text = f"({text})"
        monomial = {3: "x^3", 2: "x^2", 1: "x", 0: ""}[power]
        if monomial and text == "1":
            body = monomial
        elif monomial:
            body = f"{text}*{monomial}"
        else:
            body = text
        if not terms:
            terms.append(("-" if negative else "") + body)
        else:
            terms.append(("- " if negative else "+ ") + body)
    return " ".join(terms) or "0"


def bfile_rows(values: Iterable[int], offset: int = 0) -> List[Row]:
    return [(offset + i, int(v)) for i, v in enumerate(values)]


def write_bfile(rows: Iterable[Row]) -> str:
    return "".join(f"{n} {a}\n" for n, a in rows)


def parse_bfile(text: str) -> List[Row]:
    """Rows of an OEIS b-file; '#' comments and blank lines are skipped"""
    rows: List[Row] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise BFileFormatError(f"line {lineno}: expected 'n a(n)', got {stripped!r}")
        try:
            n, a = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileFormatError(f"line {lineno}: non-integer field in {stripped!r}")
        if rows and n != rows[-1][0] + 1:
            raise BFileFormatError(f"line {lineno}: index {n} does not follow {rows[-1][0]}")
        rows.append((n, a))
    if not rows:
        raise BFileFormatError("b-file has no data rows")
    return rows
