"""Exact rational vectors and matrices as lists of ``Fraction``.

Row reduction is delegated to sympy's domain matrices over ``QQ``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .magma import StructureError

Vector = List[Fraction]
Matrix = List[List[Fraction]]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise StructureError(f"rational must be [num, den], got {value!r}", "rational")
        num, den = value
        if int(den) == 0:
            raise StructureError("rational with zero denominator", "rational")
        return Fraction(int(num), int(den))
    if isinstance(value, (float, bool)):
        raise StructureError(f"{value!r} is not accepted; use an integer, [num, den] or a string", "rational")
    try:
        return Fraction(value)
    except (ValueError, TypeError) as err:
        raise StructureError(f"not a rational: {value!r}", "rational") from err


def zeros(n: int) -> Vector:
    return [ZERO] * n


def unit(n: int, i: int) -> Vector:
    v = zeros(n)
    v[i] = ONE
    return v


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return [a + b for a, b in zip(u, v)]


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return [a - b for a, b in zip(u, v)]


def scale(c: Fraction, v: Sequence[Fraction]) -> Vector:
    return [c * a for a in v]


def is_zero(v: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in v)


def identity_matrix(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def zero_matrix(r: int, c: int) -> Matrix:
    return [[ZERO] * c for _ in range(r)]


def matvec(m: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector:
    return [sum((a * b for a, b in zip(row, v)), ZERO) for row in m]


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), ZERO) for col in cols] for row in a]


def transpose(m: Sequence[Sequence[Fraction]]) -> Matrix:
    return [list(col) for col in zip(*m)]


def _to_domain(rows: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    data = [[QQ(int(x.numerator), int(x.denominator)) for x in row] for row in rows]
    return DomainMatrix(data, (len(data), ncols), QQ)


def _from_domain(m: DomainMatrix) -> Matrix:
    return [[Fraction(int(QQ.numer(x)), int(QQ.denom(x))) for x in row] for row in m.to_list()]


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> Tuple[Matrix, Tuple[int, ...]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns."""
    if not rows:
        return [], ()
    reduced, pivots = _to_domain(rows, ncols).rref()
    out = _from_domain(reduced)
    return out[: len(pivots)], tuple(pivots)


def rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def in_span(v: Sequence[Fraction], rows: Sequence[Sequence[Fraction]]) -> bool:
    n = len(v)
    return rank(list(rows) + [list(v)], n) == rank(rows, n)


def inverse(m: Sequence[Sequence[Fraction]]) -> Matrix:
    n = len(m)
    aug = [list(row) + unit(n, i) for i, row in enumerate(m)]
    reduced, pivots = rref(aug, 2 * n)
    if pivots != tuple(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in reduced]
