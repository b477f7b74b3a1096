from typing import Any, Iterable, Optional, Sequence, Tuple

from pydantic import BaseModel

from app.models.precision import PrecisionPolicy, RealValue, exact, is_exact, unify


class ZeroTriple(BaseModel):
    """Three real zeros in descending order.

    orbit_order lists the positions of (alpha, eta_s(alpha), eta_s^2(alpha))
    inside zeros; branch_ks records the k in {0, 2, 4} of the trig formula
    that produced each zero.
    """

    zeros: Tuple[RealValue, RealValue, RealValue]
    orbit_order: Optional[Tuple[int, int, int]] = None
    branch_ks: Optional[Tuple[int, int, int]] = None

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @classmethod
    def from_values(
        cls,
        values: Sequence[Any],
        policy: PrecisionPolicy,
        branch_ks: Optional[Sequence[int]] = None,
        in_orbit_order: bool = False,
    ) -> "ZeroTriple":
        values = tuple(exact(v) if is_exact(v) else v for v in unify(values, policy))
        order = sorted(range(3), key=lambda i: values[i], reverse=True)
        position = {original: rank for rank, original in enumerate(order)}
        return cls(
            zeros=tuple(values[i] for i in order),
            orbit_order=tuple(position[i] for i in range(3)) if in_orbit_order else None,
            branch_ks=tuple(branch_ks[i] for i in order) if branch_ks is not None else None,
        )

    @property
    def orbit(self) -> Tuple[Any, Any, Any]:
        if self.orbit_order is None:
            raise ValueError("this zero triple carries no orbit order")
        return tuple(self.zeros[i] for i in self.orbit_order)

    def matches(self, other: Iterable[Any], policy: PrecisionPolicy) -> bool:
        """Multiset equality within tolerance after descending sort"""
        theirs = sorted(unify(other, policy), reverse=True)
        mine = unify(self.zeros, policy)
        return all(policy.close(a, b) for a, b in zip(mine, theirs))


class ResolventData(BaseModel):
    """Vieta-substitution data: depressed coefficients e, f and the resolvent zero alpha + i*beta"""

    e: RealValue
    f: RealValue
    alpha: RealValue
    beta: RealValue
    rho: RealValue
    theta: RealValue
    shift: RealValue

    class Config:
        frozen = True
        arbitrary_types_allowed = True

    @property
    def sign(self) -> int:
        return 1 if self.alpha >= 0 else -1
