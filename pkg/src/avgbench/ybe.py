"""Set-theoretical solutions of the Yang-Baxter equation on finite sets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .magma import FiniteMagma, PASS, SetMap, StructureError, Verdict, fail, first_nonbijective_row


@dataclass(frozen=True)
class SetSolution:
    """``r[x][y] = (u, v)`` encodes ``r(x, y) = (u, v)``."""

    size: int
    r: tuple

    def __post_init__(self):
        n = self.size
        r = tuple(tuple((int(p[0]), int(p[1])) for p in row) for row in self.r)
        if len(r) != n or any(len(row) != n for row in r):
            raise StructureError(f"solution table must be {n}x{n}", "shape")
        for x, row in enumerate(r):
            for y, (u, v) in enumerate(row):
                if not (0 <= u < n and 0 <= v < n):
                    raise StructureError(f"r[{x}][{y}] = {(u, v)} is out of range", "range", (x, y))
        object.__setattr__(self, "r", r)

    def __call__(self, x: int, y: int) -> tuple:
        return self.r[x][y]

    @classmethod
    def swap(cls, n: int) -> "SetSolution":
        return cls(n, tuple(tuple((y, x) for y in range(n)) for x in range(n)))


def is_ybe_solution(s: SetSolution) -> Verdict:
    """``(Id×r)(r×Id)(Id×r) = (r×Id)(Id×r)(r×Id)`` on every triple."""
    r = s.r
    for x, y, z in product(range(s.size), repeat=3):
        # left side: apply Id×r first
        b, c = r[y][z]
        a, b = r[x][b]
        b, c = r[b][c]
        lhs = (a, b, c)
        a2, b2 = r[x][y]
        b2, c2 = r[b2][z]
        a2, b2 = r[a2][b2]
        if lhs != (a2, b2, c2):
            return fail((x, y, z), "braid")
    return PASS


def is_invertible(s: SetSolution) -> bool:
    return len({p for row in s.r for p in row}) == s.size * s.size


def braided_from_rack(q: FiniteMagma) -> SetSolution:
    """``r(x, y) = (x ⋄ y, x)``; left translations must be bijective."""
    row = first_nonbijective_row(q)
    if row is not None:
        raise StructureError(f"left translation of {row} is not bijective", "bijective_translations", (row,))
    t = q.table
    return SetSolution(q.size, tuple(tuple((t[x][y], x) for y in range(q.size)) for x in range(q.size)))


def is_braided_averaging(s: SetSolution, a: SetMap) -> Verdict:
    """``r(A x, A y) = (A × Id) r(A x, y)`` for all pairs."""
    if a.size != s.size:
        raise StructureError("operator size does not match the solution", "size")
    a.check_codomain(s.size)
    r = s.r
    for x, y in product(range(s.size), repeat=2):
        u, v = r[a(x)][y]
        if r[a(x)][a(y)] != (a(u), v):
            return fail((x, y), "braided_averaging")
    return PASS
