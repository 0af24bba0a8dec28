"""Random rational instances for the linear checks.

Random instances come from frozen small-integer catalogues (found by an
exhaustive search over entries in {-1, 0, 1} and re-checked against the
oracles in the tests), moved by random changes of basis and scalings.  Both
moves preserve every identity involved.
"""

import random
from fractions import Fraction

import sympy

from avgbench.leibniz import (
    BiRepresentation,
    LinearMap,
    StructureConstants,
    abelian,
    adjoint_representation,
    heisenberg,
    leibniz_2d,
    nonabelian_2d,
    sl2,
    so3,
    zero_representation,
)

# relative averaging operators for the adjoint representation, as rows
ADJOINT_CATALOGUE = {
    "sl2": (sl2, [
        [[-1, 0, 0], [0, -1, 0], [0, 0, -1]], [[-1, 0, 0], [0, 0, 0], [0, 0, 0]],
        [[0, 0, 0], [0, -1, -1], [0, -1, -1]], [[0, 0, 0], [0, -1, 1], [0, 1, -1]],
        [[0, 0, 0], [0, 0, -1], [0, 0, 0]], [[0, 0, 0], [0, 0, 0], [0, -1, 0]],
        [[0, 0, 0], [0, 0, 0], [0, 0, 0]], [[0, 0, 0], [0, 0, 0], [0, 1, 0]],
        [[0, 0, 0], [0, 0, 1], [0, 0, 0]], [[0, 0, 0], [0, 1, -1], [0, -1, 1]],
        [[0, 0, 0], [0, 1, 1], [0, 1, 1]], [[1, 0, 0], [0, 0, 0], [0, 0, 0]],
        [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
    ]),
    "heisenberg": (heisenberg, [
        [[-1, -1, 0], [-1, -1, 0], [-1, -1, 0]], [[-1, 0, 0], [-1, 0, 0], [-1, -1, 0]],
        [[-1, 0, 0], [1, 0, 0], [-1, -1, 0]], [[-1, 1, 0], [1, -1, 0], [-1, -1, 0]],
        [[0, -1, 0], [0, 1, 0], [-1, -1, 0]], [[0, 0, 0], [-1, 1, 0], [-1, -1, 0]],
        [[0, 0, 0], [0, 0, 0], [0, -1, -1]], [[0, 0, 0], [1, -1, 0], [-1, -1, 0]],
        [[0, 1, 0], [0, -1, 0], [-1, -1, 0]], [[1, -1, 0], [-1, 1, 0], [-1, -1, 0]],
        [[1, 0, 0], [-1, 0, 0], [-1, -1, 0]], [[1, 0, 0], [1, 0, 0], [-1, -1, 0]],
    ]),
    "nonabelian_2d": (nonabelian_2d, [
        [[-1, 0], [-1, 0]], [[-1, 0], [0, -1]], [[-1, 0], [0, 0]], [[-1, 0], [1, 0]],
        [[0, 0], [-1, 0]], [[0, 0], [0, 0]], [[0, 0], [1, 0]], [[1, 0], [-1, 0]],
        [[1, 0], [0, 0]], [[1, 0], [0, 1]], [[1, 0], [1, 0]],
    ]),
    "leibniz_2d": (leibniz_2d, [
        [[-1, 0], [-1, -1]], [[-1, 0], [0, -1]], [[-1, 0], [1, -1]], [[0, 0], [-1, -1]],
        [[0, 0], [-1, 0]], [[0, 0], [-1, 1]], [[0, 0], [0, -1]], [[0, 0], [0, 0]],
        [[0, 0], [0, 1]], [[0, 0], [1, -1]], [[0, 0], [1, 0]], [[0, 0], [1, 1]],
        [[1, 0], [-1, 1]], [[1, 0], [0, 1]], [[1, 0], [1, 1]],
    ]),
}

LIE_ALGEBRAS = {"sl2": sl2, "so3": so3, "heisenberg": heisenberg, "abelian3": lambda: abelian(3)}


def frac_matrix(rows):
    return [[Fraction(v) for v in row] for row in rows]


def random_invertible(rng: random.Random, n: int):
    while True:
        m = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        if sympy.Matrix(m).det() != 0:
            return frac_matrix(m)


def inverse(m):
    inv = sympy.Matrix(m).inv()
    return [[Fraction(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1])) for v in inv.row(i)] for i in range(inv.rows)]


def mat_vec(m, v):
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in m]


def col(m, j):
    return [row[j] for row in m]


def mat_mul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))] for i in range(len(a))]


def transform_bracket(h: StructureConstants, t):
    """Constants of the same bracket in the basis given by the columns of ``t``."""
    ti = inverse(t)
    d = h.dim
    return StructureConstants(d, [[mat_vec(ti, h.bracket(col(t, i), col(t, j))) for j in range(d)] for i in range(d)])


def transform_instance(h, rep, p_rows, th, tv, scale):
    thi, tvi = inverse(th), inverse(tv)
    dh, dv = h.dim, rep.dv
    h2 = transform_bracket(h, th)
    rho_l = [[mat_vec(tvi, rep.left(col(th, i), col(tv, j))) for j in range(dv)] for i in range(dh)]
    rho_r = [[mat_vec(tvi, rep.right(col(tv, j), col(th, i))) for i in range(dh)] for j in range(dv)]
    p = mat_mul(mat_mul(thi, frac_matrix(p_rows)), tv)
    p = [[scale * v for v in row] for row in p]
    return h2, BiRepresentation(dh, dv, rho_l, rho_r), LinearMap(dh, dv, p)


def random_relative_instance(rng: random.Random):
    """A valid (bracket, representation, operator) with dimensions at most 3."""
    kind = rng.choice(list(ADJOINT_CATALOGUE) + ["zero_rep"])
    scale = Fraction(rng.choice([1, -1, 2, 3]), rng.choice([1, 2, 5]))
    if kind == "zero_rep":
        # any operator into an abelian algebra is relative averaging for the zero action
        dh, dv = rng.randint(1, 3), rng.randint(1, 3)
        h, rep = abelian(dh), zero_representation(abelian(dh), dv)
        rows = [[rng.randint(-3, 3) for _ in range(dv)] for _ in range(dh)]
    else:
        make, cat = ADJOINT_CATALOGUE[kind]
        h = make()
        rep = adjoint_representation(h)
        rows = rng.choice(cat)
    th, tv = random_invertible(rng, h.dim), random_invertible(rng, rep.dv)
    return transform_instance(h, rep, rows, th, tv, scale)


def random_skew_bracket(rng: random.Random, mode: str) -> StructureConstants:
    """mode: 'lie' (basis change of a Lie algebra), 'perturbed' or 'random'."""
    if mode == "random":
        c = [[[Fraction(0)] * 3 for _ in range(3)] for _ in range(3)]
        for i in range(3):
            for j in range(i + 1, 3):
                for k in range(3):
                    v = Fraction(rng.randint(-2, 2))
                    c[i][j][k], c[j][i][k] = v, -v
        return StructureConstants(3, c)
    g = transform_bracket(LIE_ALGEBRAS[rng.choice(sorted(LIE_ALGEBRAS))](), random_invertible(rng, 3))
    if mode == "lie":
        return g
    c = [[list(v) for v in row] for row in g.c]
    i, j = rng.choice([(0, 1), (0, 2), (1, 2)])
    k = rng.randrange(3)
    delta = Fraction(rng.choice([1, -1, 2]))
    c[i][j][k] += delta
    c[j][i][k] -= delta
    return StructureConstants(3, c)


SL2_AVERAGING = ADJOINT_CATALOGUE["sl2"][1]


def random_sl2_operator(rng: random.Random, averaging: bool):
    """Constants of sl2 in a random basis, with a random (or averaging) operator."""
    t = random_invertible(rng, 3)
    g = transform_bracket(sl2(), t)
    if averaging:
        p = mat_mul(mat_mul(inverse(t), frac_matrix(rng.choice(SL2_AVERAGING))), t)
        scale = Fraction(rng.choice([1, 2, -3]), rng.choice([1, 4]))
        p = [[scale * v for v in row] for row in p]
    else:
        p = [[Fraction(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)]
    return g, LinearMap(3, 3, p)
