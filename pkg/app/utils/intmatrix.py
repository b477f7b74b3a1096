"""
Exact big-integer square matrices as tuples of row tuples.

Powers are computed by binary exponentiation so that A(k, n) style traces
stay exact at any n.
"""

from typing import Sequence, Tuple

Matrix = Tuple[Tuple[int, ...], ...]


def freeze(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = tuple(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_pow(m: Matrix, e: int) -> Matrix:
    if e < 0:
        raise ValueError("negative matrix powers are not supported")
    result = identity(len(m))
    base = m
    while e:
        if e & 1:
            result = mat_mul(result, base)
        e >>= 1
        if e:
            base = mat_mul(base, base)
    return result


def trace(m: Matrix) -> int:
    return sum(m[i][i] for i in range(len(m)))


def det3(m: Matrix) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def principal_minor_sum(m: Matrix) -> int:
    """Sum of the 2x2 principal minors, i.e. the trace of the adjugate"""
    n = len(m)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            total += m[i][i] * m[j][j] - m[i][j] * m[j][i]
    return total


def path_adjacency(n: int) -> Matrix:
    """Adjacency matrix of the path graph on n vertices"""
    return tuple(tuple(1 if abs(i - j) == 1 else 0 for j in range(n)) for i in range(n))
