from .precision import PrecisionPolicy, policy_for
from .cubic import Cubic, RcpParams, IntegerMatrix3
from .roots import ZeroTriple, ResolventData
from .periods import PeriodSet, DeltaSet, LehmerConstants
from .report import IdentityReport, Verdict
from .sequence import RecurrenceSpec, WalkTable, A198636

__all__ = [
    "PrecisionPolicy", "policy_for",
    "Cubic", "RcpParams", "IntegerMatrix3",
    "ZeroTriple", "ResolventData",
    "PeriodSet", "DeltaSet", "LehmerConstants",
    "IdentityReport", "Verdict",
    "RecurrenceSpec", "WalkTable", "A198636",
]
