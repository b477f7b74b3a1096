"""
Exact integer trace sequences of companion-matrix powers, closed walks on
path graphs, and the trigonometric form of A198636.
"""

import logging
from functools import lru_cache
from typing import List

from app.config import settings
from app.models.precision import PrecisionPolicy
from app.models.sequence import A198636, RecurrenceSpec, WalkTable
from app.services.cubic_poly import companion_matrix
from app.utils.errors import PrecisionExhausted, UsageError

logger = logging.getLogger(__name__)


def trace_power_sum(h: int, k: int, n: int) -> int:
    """A(k, n) = Tr(M^(kn)), the sum of the kn-th powers of the Shanks cubic zeros"""
    if k < 1 or n < 0:
        raise UsageError("need k >= 1 and n >= 0")
    return (companion_matrix(h) ** (k * n)).trace


def trace_sequence(h: int, k: int, terms: int) -> List[int]:
    return [trace_power_sum(h, k, n) for n in range(terms)]


def char_poly_of_power(h: int, k: int) -> RecurrenceSpec:
    if k < 1:
        raise UsageError("k must be at least 1")
    mk = companion_matrix(h) ** k
    # det M = 1, so the second symmetric function of the k-th powers is Tr(adj M^k)
    return RecurrenceSpec(
        char_coeffs=(mk.trace, mk.adjugate_trace, mk.det),
        initial=(3, mk.trace, (mk ** 2).trace),
    )


def recurrence_eval(spec: RecurrenceSpec, n: int) -> int:
    if n < 0:
        raise UsageError("n must be nonnegative")
    window = spec.initial
    if n < 3:
        return window[n]
    for _ in range(n - 2):
        window = (window[1], window[2], spec.step(window))
    return window[2]


def recurrence_terms(spec: RecurrenceSpec, terms: int) -> List[int]:
    values = list(spec.initial[:terms])
    while len(values) < terms:
        values.append(spec.step(tuple(values[-3:])))
    return values


@lru_cache(maxsize=64)
def walk_table(n: int) -> WalkTable:
    return WalkTable.for_path(n)


def path_walks(n: int, l: int) -> int:
    if n < 1 or l < 0:
        raise UsageError("need N >= 1 and l >= 0")
    return walk_table(n).walks(l)


def walk_sequence(n: int, terms: int) -> List[int]:
    return [path_walks(n, l) for l in range(terms)]


def chebyshev_path_eigenvalues(n: int, policy: PrecisionPolicy) -> list:
    """Zeros of S_N(x) = U_N(x/2): 2cos(j*pi/(N+1)) for j = 1..N"""
    if n < 1:
        raise UsageError("N must be at least 1")
    ctx = policy.ctx
    return [2 * ctx.cospi(ctx.mpf(j) / (n + 1)) for j in range(1, n + 1)]


def jefferey_trig_term(n: int, policy: PrecisionPolicy):
    """2^(2n) * (cos^(2n)(pi/7) + cos^(2n)(2pi/7) + cos^(2n)(3pi/7))"""
    ctx = policy.ctx
    return ctx.fsum((2 * ctx.cospi(ctx.mpf(j) / 7)) ** (2 * n) for j in (1, 2, 3))


def jefferey_check(n_max: int, policy: PrecisionPolicy) -> bool:
    ctx = policy.ctx
    if n_max < 0:
        raise UsageError("n_max must be nonnegative")
    threshold = ctx.mpf(10) ** (-max(policy.target_digits - settings.ROUNDING_MARGIN, 1))
    for n in range(n_max + 1):
        exact = recurrence_eval(A198636, n)
        trig = jefferey_trig_term(n, policy)
        nearest = int(ctx.nint(trig))
        if abs(trig - nearest) >= threshold:
            raise PrecisionExhausted(
                f"trig sum for n={n} is not within {ctx.nstr(threshold, 3)} of an integer; raise --digits"
            )
        walks = path_walks(6, 2 * n)
        if nearest != exact or walks != 2 * exact or trace_power_sum(-1, 2, n) != exact:
            logger.warning(f"A198636 disagreement at n={n}: exact={exact}, trig={nearest}, walks={walks}")
            return False
    logger.info(f"A198636 trig, walk and trace forms agree for n <= {n_max}")
    return True
