"""Brute-force reference implementations used only by the tests.

Each oracle evaluates a definition quantifier by quantifier on plain lists,
sharing no code with the library's search or propagation paths.
"""

from fractions import Fraction
from itertools import permutations, product


def rack_axioms(table):
    n = len(table)
    op = lambda x, y: table[x][y]
    # unique solvability of x ⋄ c = y
    solvable = all(sum(1 for c in range(n) if op(x, c) == y) == 1 for x in range(n) for y in range(n))
    distributive = all(
        op(x, op(y, z)) == op(op(x, y), op(x, z)) for x in range(n) for y in range(n) for z in range(n)
    )
    return solvable and distributive


def all_tables(n):
    for flat in product(range(n), repeat=n * n):
        yield [list(flat[i * n:(i + 1) * n]) for i in range(n)]


def all_racks(n):
    return [t for t in all_tables(n) if rack_axioms(t)]


def all_maps(n):
    return [list(m) for m in product(range(n), repeat=n)]


def rack_averaging(table, a):
    n = len(table)
    return all(table[a[x]][a[y]] == a[table[a[x]][y]] for x in range(n) for y in range(n))


def group_averaging(mul, inv, a):
    n = len(mul)
    for g in range(n):
        for h in range(n):
            ag = a[g]
            if mul[mul[ag][a[h]]][inv[ag]] != a[mul[mul[ag][h]][inv[ag]]]:
                return False
    return True


def averaging_maps_rack(table):
    return [m for m in all_maps(len(table)) if rack_averaging(table, m)]


def averaging_maps_group(mul, inv):
    return [m for m in all_maps(len(mul)) if group_averaging(mul, inv, m)]


def flip_characterized(n):
    """Maps φ on the flip rack with φ(i) + φ(n - 1 - i) = n - 1 (0-based)."""
    return [m for m in all_maps(n) if all(m[i] + m[n - 1 - i] == n - 1 for i in range(n))]


def homomorphisms(src, dst, bijective=False):
    n, m = len(src), len(dst)
    maps = permutations(range(n)) if bijective else product(range(m), repeat=n)
    return [
        list(f) for f in maps
        if all(f[src[x][y]] == dst[f[x]][f[y]] for x in range(n) for y in range(n))
    ]


def is_pairing(d, b):
    n = len(d)
    if not (rack_axioms(d) and rack_axioms(b)):
        return False
    return all(b[x][d[y][z]] == d[b[x][y]][b[x][z]] for x, y, z in product(range(n), repeat=3))


def pairings_over(d):
    return [b for b in all_racks(len(d)) if is_pairing(d, b)]


def ybe(r):
    n = len(r)
    for x, y, z in product(range(n), repeat=3):
        t = (x, y, z)

        def r12(t):
            u, v = r[t[0]][t[1]]
            return (u, v, t[2])

        def r23(t):
            u, v = r[t[1]][t[2]]
            return (t[0], u, v)

        if r23(r12(r23(t))) != r12(r23(r12(t))):
            return False
    return True


def cyclic(n):
    mul = [[(a + b) % n for b in range(n)] for a in range(n)]
    inv = [(-a) % n for a in range(n)]
    return mul, inv


def perm_group(perms):
    perms = [tuple(p) for p in perms]
    idx = {p: i for i, p in enumerate(perms)}
    mul = [[idx[tuple(p[x] for x in q)] for q in perms] for p in perms]
    e = next(i for i, p in enumerate(perms) if list(p) == sorted(p))
    inv = [next(j for j in range(len(perms)) if mul[i][j] == e) for i in range(len(perms))]
    return mul, inv


def s3():
    return perm_group(sorted(permutations(range(3))))


# rational linear algebra for Leibniz-type identities


def bracket(c, u, v):
    d = len(c)
    return [sum(u[i] * v[j] * c[i][j][k] for i in range(d) for j in range(d)) for k in range(d)]


def matvec(m, v):
    return [sum(Fraction(a) * b for a, b in zip(row, v)) for row in m]


def basis_vec(d, i):
    return [Fraction(int(k == i)) for k in range(d)]


def jacobi(c):
    """Skew-symmetry and the Jacobi identity, evaluated on basis triples."""
    d = len(c)
    e = [basis_vec(d, i) for i in range(d)]
    for i in range(d):
        for j in range(d):
            if any(c[i][j][k] != -c[j][i][k] for k in range(d)):
                return False
    for x in e:
        for y in e:
            for z in e:
                s = [
                    a + b + w
                    for a, b, w in zip(
                        bracket(c, x, bracket(c, y, z)),
                        bracket(c, y, bracket(c, z, x)),
                        bracket(c, z, bracket(c, x, y)),
                    )
                ]
                if any(s):
                    return False
    return True


def act(rho, x, v):
    """sum x_i v_j rho[i][j] for a table rho[i][j] of vectors."""
    out = [Fraction(0)] * len(rho[0][0])
    for i, a in enumerate(x):
        for j, b in enumerate(v):
            if a and b:
                out = [o + a * b * r for o, r in zip(out, rho[i][j])]
    return out


def relative_averaging(c, rho_l, rho_r, p):
    """{Pu, Pv} = P rhoL(Pu, v) = P rhoR(u, Pv); p is a list of rows."""
    dv = len(p[0])
    cols = [[row[j] for row in p] for j in range(dv)]
    e = [basis_vec(dv, j) for j in range(dv)]
    for u in range(dv):
        for v in range(dv):
            lhs = bracket(c, cols[u], cols[v])
            if lhs != matvec(p, act(rho_l, cols[u], e[v])):
                return False
            # rho_r is indexed [v][x]
            right = act(rho_r, e[u], cols[v])
            if lhs != matvec(p, right):
                return False
    return True


def lie_averaging(c, p):
    d = len(c)
    cols = [[row[j] for row in p] for j in range(d)]
    e = [basis_vec(d, j) for j in range(d)]
    return all(
        bracket(c, cols[x], cols[y]) == matvec(p, bracket(c, cols[x], e[y])) for x in range(d) for y in range(d)
    )
