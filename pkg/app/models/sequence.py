import threading
from typing import Dict, Tuple

from pydantic import BaseModel, PrivateAttr

from app.utils import intmatrix


class RecurrenceSpec(BaseModel):
    """a(n+3) = c2*a(n+2) - c1*a(n+1) + c0*a(n), characteristic polynomial x^3 - c2x^2 + c1x - c0"""

    char_coeffs: Tuple[int, int, int]
    initial: Tuple[int, int, int]

    class Config:
        frozen = True

    def step(self, window: Tuple[int, int, int]) -> int:
        c2, c1, c0 = self.char_coeffs
        a0, a1, a2 = window
        return c2 * a2 - c1 * a1 + c0 * a0


A198636 = RecurrenceSpec(char_coeffs=(5, 6, 1), initial=(3, 5, 13))


POWER_CACHE_LIMIT = 256


class WalkTable(BaseModel):
    """Adjacency matrix J_N of the path graph P_N with a shared cache of at most POWER_CACHE_LIMIT powers"""

    N: int
    adjacency: Tuple[Tuple[int, ...], ...]

    _powers: Dict[int, intmatrix.Matrix] = PrivateAttr(default_factory=dict)
    _lock: threading.Lock = PrivateAttr(default_factory=threading.Lock)

    class Config:
        frozen = True

    @classmethod
    def for_path(cls, n: int) -> "WalkTable":
        return cls(N=n, adjacency=intmatrix.path_adjacency(n))

    def power(self, l: int) -> intmatrix.Matrix:
        cached = self._powers.get(l)
        if cached is not None:
            return cached
        value = intmatrix.mat_pow(self.adjacency, l)
        with self._lock:
            if len(self._powers) >= POWER_CACHE_LIMIT:
                return value
            return self._powers.setdefault(l, value)

    def walks(self, l: int) -> int:
        return intmatrix.trace(self.power(l))
