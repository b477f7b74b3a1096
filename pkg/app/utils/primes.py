from functools import lru_cache
from typing import List

# (bound, witnesses): the witness set is deterministic for every n below bound
_WITNESS_TABLE = [
    (2047, (2,)),
    (1373653, (2, 3)),
    (25326001, (2, 3, 5)),
    (3215031751, (2, 3, 5, 7)),
    (2152302898747, (2, 3, 5, 7, 11)),
    (3474749660383, (2, 3, 5, 7, 11, 13)),
    (341550071728321, (2, 3, 5, 7, 11, 13, 17)),
    (3825123056546413051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (18446744073709551616, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
    (318665857834031151167461, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)),
]

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n below 3.18e23"""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False

    witnesses = None
    for bound, bases in _WITNESS_TABLE:
        if n < bound:
            witnesses = bases
            break
    if witnesses is None:
        raise ValueError(f"{n} is beyond the deterministic Miller-Rabin range")

    d = n - 1
    r = 0
    while d % 2 == 0:
        r += 1
        d //= 2

    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = pow(x, 2, n)
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> List[int]:
    """Distinct prime factors by trial division"""
    factors = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            factors.append(q)
            while n % q == 0:
                n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


@lru_cache(maxsize=1024)
def primitive_root(p: int) -> int:
    """Smallest generator of the multiplicative group mod prime p"""
    if p == 2:
        return 1
    order = p - 1
    factors = prime_factors(order)
    for g in range(2, p):
        if all(pow(g, order // q, p) != 1 for q in factors):
            return g
    raise ValueError(f"no primitive root found mod {p}")
