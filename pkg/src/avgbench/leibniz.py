"""Lie, Leibniz, Lie-Leibniz and di-Leibniz algebras over the rationals.

Brackets are structure constants ``c[i][j][k]`` with
``[e_i, e_j] = sum_k c[i][j][k] e_k``.  All identities are multilinear, so
checks run over basis tuples.  Leibniz algebras are left Leibniz:
``{x, {y, z}} = {{x, y}, z} + {y, {x, z}}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .linalg import ONE, ZERO, add, in_span, is_zero, rref, sub, to_fraction, unit, zeros
from .magma import PASS, StructureError, Verdict, fail


def _frac_array(data, shape: Tuple[int, ...], what: str):
    if len(shape) == 1:
        if len(data) != shape[0]:
            raise StructureError(f"{what}: expected length {shape[0]}, got {len(data)}", "shape")
        return tuple(to_fraction(v) for v in data)
    if len(data) != shape[0]:
        raise StructureError(f"{what}: expected length {shape[0]}, got {len(data)}", "shape")
    return tuple(_frac_array(row, shape[1:], what) for row in data)


def _sparse(v: Sequence[Fraction]) -> List[Tuple[int, Fraction]]:
    return [(i, a) for i, a in enumerate(v) if a != 0]


@dataclass(frozen=True)
class StructureConstants:
    dim: int
    c: tuple

    def __post_init__(self):
        d = self.dim
        object.__setattr__(self, "c", _frac_array(self.c, (d, d, d), "structure constants"))
        object.__setattr__(
            self, "_nz", tuple(tuple(_sparse(self.c[i][j]) for j in range(d)) for i in range(d))
        )

    @classmethod
    def from_dict(cls, dim: int, entries: Dict[Tuple[int, int], Dict[int, object]]) -> "StructureConstants":
        c = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), out in entries.items():
            for k, v in out.items():
                c[i][j][k] = to_fraction(v)
        return cls(dim, c)

    @classmethod
    def zero(cls, dim: int) -> "StructureConstants":
        return cls.from_dict(dim, {})

    @classmethod
    def from_bilinear(cls, dim: int, op: Callable) -> "StructureConstants":
        return cls(dim, [[op(unit(dim, i), unit(dim, j)) for j in range(dim)] for i in range(dim)])

    def bracket(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> List[Fraction]:
        out = [ZERO] * self.dim
        su, sv = _sparse(u), _sparse(v)
        for i, a in su:
            row = self._nz[i]
            for j, b in sv:
                ab = a * b
                for k, c in row[j]:
                    out[k] += ab * c
        return out

    def basis(self, i: int, j: int) -> List[Fraction]:
        return list(self.c[i][j])

    def is_skew(self) -> bool:
        d = self.dim
        return all(self.c[i][j][k] == -self.c[j][i][k] for i in range(d) for j in range(d) for k in range(d))

    def to_dict(self) -> dict:
        return {"dim": self.dim, "c": [[[_pair(v) for v in cell] for cell in row] for row in self.c]}


def _pair(v: Fraction) -> list:
    return [v.numerator, v.denominator]


@dataclass(frozen=True)
class LinearMap:
    """A ``rows x cols`` matrix; column ``j`` is the image of the ``j``-th basis vector."""

    rows: int
    cols: int
    m: tuple

    def __post_init__(self):
        object.__setattr__(self, "m", _frac_array(self.m, (self.rows, self.cols), "linear map"))

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(n, n, [unit(n, i) for i in range(n)])

    @classmethod
    def zero(cls, rows: int, cols: int) -> "LinearMap":
        return cls(rows, cols, [[ZERO] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Sequence[Fraction]]) -> "LinearMap":
        cols = len(columns)
        return cls(rows, cols, [[columns[j][i] for j in range(cols)] for i in range(rows)])

    def __call__(self, v: Sequence[Fraction]) -> List[Fraction]:
        if len(v) != self.cols:
            raise StructureError(f"vector of length {len(v)} given to a map with {self.cols} columns", "dimension")
        sv = _sparse(v)
        return [sum((row[j] * a for j, a in sv), ZERO) for row in self.m]

    def column(self, j: int) -> List[Fraction]:
        return [row[j] for row in self.m]

    def compose(self, other: "LinearMap") -> "LinearMap":
        """``self ∘ other``."""
        return LinearMap.from_columns(self.rows, [self(other.column(j)) for j in range(other.cols)])

    def scaled(self, s) -> "LinearMap":
        s = to_fraction(s)
        return LinearMap(self.rows, self.cols, [[s * a for a in row] for row in self.m])

    def is_injective(self) -> bool:
        from .linalg import rank

        return rank([self.column(j) for j in range(self.cols)], self.rows) == self.cols

    def to_dict(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "m": [[_pair(v) for v in row] for row in self.m]}


@dataclass(frozen=True)
class BiRepresentation:
    """Left and right actions of a ``dh``-dimensional algebra on a ``dv``-dimensional space.

    ``rhoL[i][j]`` is ``ρL(x_i, v_j)`` and ``rhoR[j][i]`` is ``ρR(v_j, x_i)``,
    each a vector of length ``dv``.
    """

    dh: int
    dv: int
    rhoL: tuple
    rhoR: tuple

    def __post_init__(self):
        object.__setattr__(self, "rhoL", _frac_array(self.rhoL, (self.dh, self.dv, self.dv), "rhoL"))
        object.__setattr__(self, "rhoR", _frac_array(self.rhoR, (self.dv, self.dh, self.dv), "rhoR"))

    def left(self, x: Sequence[Fraction], v: Sequence[Fraction]) -> List[Fraction]:
        out = [ZERO] * self.dv
        for i, a in _sparse(x):
            for j, b in _sparse(v):
                ab = a * b
                for k, c in _sparse(self.rhoL[i][j]):
                    out[k] += ab * c
        return out

    def right(self, v: Sequence[Fraction], x: Sequence[Fraction]) -> List[Fraction]:
        out = [ZERO] * self.dv
        for j, b in _sparse(v):
            for i, a in _sparse(x):
                ab = a * b
                for k, c in _sparse(self.rhoR[j][i]):
                    out[k] += ab * c
        return out


@dataclass(frozen=True)
class DiLeibniz:
    """``left`` is ``{ , }_⊣`` and ``right`` is ``{ , }_⊢``."""

    dim: int
    left: StructureConstants
    right: StructureConstants

    def __post_init__(self):
        if self.left.dim != self.dim or self.right.dim != self.dim:
            raise StructureError("both brackets must have the declared dimension", "dimension")


@dataclass(frozen=True)
class LieLeibniz:
    """A Lie bracket ``lie`` and a Leibniz bracket ``leib`` on one space."""

    lie: StructureConstants
    leib: StructureConstants

    def __post_init__(self):
        if self.lie.dim != self.leib.dim:
            raise StructureError("both brackets must have the same dimension", "dimension")

    @property
    def dim(self) -> int:
        return self.lie.dim


# Identity checks


def _basis(d: int) -> List[List[Fraction]]:
    return [unit(d, i) for i in range(d)]


def _leibniz_identity(b: StructureConstants, name: str) -> Verdict:
    e = _basis(b.dim)
    br = b.bracket
    for x, y, z in product(range(b.dim), repeat=3):
        lhs = br(e[x], b.basis(y, z))
        rhs = add(br(b.basis(x, y), e[z]), br(e[y], b.basis(x, z)))
        if lhs != rhs:
            return fail((x, y, z), name)
    return PASS


def check_lie(g: StructureConstants) -> Verdict:
    d = g.dim
    for i, j in product(range(d), repeat=2):
        if any(g.c[i][j][k] != -g.c[j][i][k] for k in range(d)):
            return fail((i, j), "skew_symmetry")
    return _leibniz_identity(g, "jacobi")


def check_leibniz(h: StructureConstants) -> Verdict:
    return _leibniz_identity(h, "leibniz")


DI_LEIBNIZ_AXIOMS = ("dl1", "dl2", "dl3", "dl4", "dl5")


def check_di_leibniz(d: DiLeibniz) -> Verdict:
    L, R = d.left.bracket, d.right.bracket
    e = _basis(d.dim)
    for x, y, z in product(range(d.dim), repeat=3):
        X, Y, Z = e[x], e[y], e[z]
        yzL, yzR = d.left.basis(y, z), d.right.basis(y, z)
        xyL, xyR = d.left.basis(x, y), d.right.basis(x, y)
        xzL, xzR = d.left.basis(x, z), d.right.basis(x, z)
        checks = (
            (L(X, yzL), add(L(xyL, Z), R(Y, xzL))),
            (L(X, yzR), add(L(xyL, Z), R(Y, xzL))),
            (R(X, yzL), add(L(xyR, Z), L(Y, xzL))),
            (R(X, yzR), add(R(xyL, Z), R(Y, xzR))),
            (R(X, yzR), add(R(xyR, Z), R(Y, xzR))),
        )
        for name, (lhs, rhs) in zip(DI_LEIBNIZ_AXIOMS, checks):
            if lhs != rhs:
                return fail((x, y, z), name)
    return PASS


def check_lie_leibniz(ll: LieLeibniz) -> Verdict:
    v = check_lie(ll.lie)
    if not v:
        return Verdict(False, v.witness, "lie_" + v.axiom)
    v = check_leibniz(ll.leib)
    if not v:
        return v
    lie, leib = ll.lie, ll.leib
    e = _basis(ll.dim)
    for x, y, z in product(range(ll.dim), repeat=3):
        lhs = leib.bracket(e[x], lie.basis(y, z))
        rhs = add(lie.bracket(leib.basis(x, y), e[z]), lie.bracket(e[y], leib.basis(x, z)))
        if lhs != rhs:
            return fail((x, y, z), "lie_leibniz")
    return PASS


def validate_algebra(kind: str, data) -> Verdict:
    if kind == "lie":
        return check_lie(data)
    if kind == "leibniz":
        return check_leibniz(data)
    if kind == "di_leibniz":
        return check_di_leibniz(data)
    if kind == "lie_leibniz":
        return check_lie_leibniz(data)
    raise StructureError(f"unknown algebra kind {kind!r}", "kind")


def _require(v: Verdict, what: str) -> None:
    if not v:
        raise StructureError(f"{what} check failed ({v.axiom} at {v.witness})", v.axiom, v.witness)


def _check_square(p: LinearMap, d: int) -> None:
    if p.rows != d or p.cols != d:
        raise StructureError(f"operator must be {d}x{d}, got {p.rows}x{p.cols}", "dimension")


def is_linear_averaging(kind: str, algebra: StructureConstants, p: LinearMap) -> Verdict:
    """Averaging-type identities on basis pairs.

    lie: ``[Px, Py] = P[Px, y]``; leibniz_left: ``{Px, Py} = P{Px, y}``;
    leibniz: additionally ``= P{x, Py}``; ad_invariant: ``C[x, y] = [x, Cy]``.
    """
    if kind not in ("lie", "leibniz_left", "leibniz", "ad_invariant"):
        raise StructureError(f"unknown averaging kind {kind!r}", "kind")
    d = algebra.dim
    _check_square(p, d)
    br = algebra.bracket
    cols = [p.column(j) for j in range(d)]
    e = _basis(d)
    for x, y in product(range(d), repeat=2):
        if kind == "ad_invariant":
            if p(algebra.basis(x, y)) != br(e[x], cols[y]):
                return fail((x, y), "ad_invariance")
            continue
        lhs = br(cols[x], cols[y])
        if lhs != p(br(cols[x], e[y])):
            return fail((x, y), "averaging")
        if kind == "leibniz" and lhs != p(br(e[x], cols[y])):
            return fail((x, y), "averaging_right")
    return PASS


def validate_representation(h: StructureConstants, rep: BiRepresentation) -> Verdict:
    """The three bimodule axioms on basis triples ``(x, y, v)``."""
    if rep.dh != h.dim:
        raise StructureError("representation and algebra dimensions differ", "dimension")
    eh, ev = _basis(h.dim), _basis(rep.dv)
    L, R = rep.left, rep.right
    for x, y, v in product(range(h.dim), range(h.dim), range(rep.dv)):
        X, Y, V = eh[x], eh[y], ev[v]
        xy = h.basis(x, y)
        if L(X, L(Y, V)) != add(L(xy, V), L(Y, L(X, V))):
            return fail((x, y, v), "left_left")
        if L(X, R(V, Y)) != add(R(L(X, V), Y), R(V, xy)):
            return fail((x, y, v), "left_right")
        if R(V, xy) != add(R(R(V, X), Y), L(X, R(V, Y))):
            return fail((x, y, v), "right_right")
    return PASS


def _check_relative(h: StructureConstants, rep: BiRepresentation, p: LinearMap) -> None:
    if rep.dh != h.dim or p.rows != h.dim or p.cols != rep.dv:
        raise StructureError(f"operator must be {h.dim}x{rep.dv}", "dimension")


def is_relative_averaging_linear(h: StructureConstants, rep: BiRepresentation, p: LinearMap) -> Verdict:
    """``{Pu, Pv} = P ρL(Pu, v) = P ρR(u, Pv)`` on basis pairs of ``V``."""
    _check_relative(h, rep, p)
    ev = _basis(rep.dv)
    cols = [p.column(j) for j in range(rep.dv)]
    for u, v in product(range(rep.dv), repeat=2):
        lhs = h.bracket(cols[u], cols[v])
        if lhs != p(rep.left(cols[u], ev[v])):
            return fail((u, v), "left_action")
        if lhs != p(rep.right(ev[u], cols[v])):
            return fail((u, v), "right_action")
    return PASS


def hemi_semidirect(h: StructureConstants, rep: BiRepresentation) -> DiLeibniz:
    """On ``h ⊕ V``: ``⊣`` gives ``({x, y}, ρR(u, y))`` and ``⊢`` gives ``({x, y}, ρL(x, v))``."""
    _require(validate_representation(h, rep), "representation")
    dh, dv = h.dim, rep.dv
    n = dh + dv

    def split(w):
        return w[:dh], w[dh:]

    def left(a, b):
        x, u = split(a)
        y, _ = split(b)
        return h.bracket(x, y) + rep.right(u, y)

    def right(a, b):
        x, _ = split(a)
        y, v = split(b)
        return h.bracket(x, y) + rep.left(x, v)

    return DiLeibniz(n, StructureConstants.from_bilinear(n, left), StructureConstants.from_bilinear(n, right))


def induced_di_leibniz(h: StructureConstants, rep: BiRepresentation, p: LinearMap) -> DiLeibniz:
    """``u ⊣ v = ρR(u, Pv)`` and ``u ⊢ v = ρL(Pu, v)``."""
    _require(is_relative_averaging_linear(h, rep, p), "relative averaging")
    n = rep.dv
    return DiLeibniz(
        n,
        StructureConstants.from_bilinear(n, lambda u, v: rep.right(u, p(v))),
        StructureConstants.from_bilinear(n, lambda u, v: rep.left(p(u), v)),
    )


class _Span:
    """Membership in a fixed subspace via one reduced row echelon form."""

    def __init__(self, rows: Sequence[Sequence[Fraction]], n: int):
        self.rows, self.pivots = rref(rows, n) if rows else ([], ())

    def contains(self, v: Sequence[Fraction]) -> bool:
        w = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = w[p]
            if c != 0:
                w = [a - c * b for a, b in zip(w, row)]
        return is_zero(w)


def graph_check_linear(h: StructureConstants, rep: BiRepresentation, p: LinearMap) -> bool:
    """Whether ``{(Pv, v)}`` is closed under both hemi-semidirect brackets."""
    _check_relative(h, rep, p)
    hs = hemi_semidirect(h, rep)
    n = hs.dim
    graph = [p.column(j) + unit(rep.dv, j) for j in range(rep.dv)]
    span = _Span(graph, n)
    for a, b in product(graph, repeat=2):
        if not span.contains(hs.left.bracket(a, b)) or not span.contains(hs.right.bracket(a, b)):
            return False
    return True


# Leibnizification


@dataclass(frozen=True)
class Quotient:
    """``V / K`` with ``K`` in reduced row echelon form.

    The quotient basis is the images of the non-pivot basis vectors;
    ``project`` is the quotient map and ``lift`` picks those basis vectors.
    """

    dim: int
    kernel: tuple
    pivots: tuple
    complement: tuple

    @classmethod
    def of(cls, vectors: Sequence[Sequence[Fraction]], dim: int) -> "Quotient":
        rows, pivots = rref([list(v) for v in vectors], dim) if vectors else ([], ())
        comp = tuple(j for j in range(dim) if j not in pivots)
        return cls(dim, tuple(tuple(r) for r in rows), tuple(pivots), comp)

    @property
    def size(self) -> int:
        return len(self.complement)

    def project(self, v: Sequence[Fraction]) -> List[Fraction]:
        out = []
        for j in self.complement:
            a = v[j]
            for row, p in zip(self.kernel, self.pivots):
                a -= v[p] * row[j]
            out.append(a)
        return out

    def lift(self, w: Sequence[Fraction]) -> List[Fraction]:
        v = zeros(self.dim)
        for a, j in zip(w, self.complement):
            v[j] = a
        return v

    def projection_map(self) -> LinearMap:
        return LinearMap.from_columns(self.size, [self.project(unit(self.dim, j)) for j in range(self.dim)])


@dataclass(frozen=True)
class Leibnizification:
    quotient: Quotient
    bracket: StructureConstants
    q: LinearMap
    rep: BiRepresentation


def leibnizification(d: DiLeibniz) -> Leibnizification:
    """Quotient by the span of ``x ⊣ y - x ⊢ y``, with ``d`` as a representation of it."""
    _require(check_di_leibniz(d), "di-Leibniz")
    n = d.dim
    diffs = [sub(d.left.basis(i, j), d.right.basis(i, j)) for i, j in product(range(n), repeat=2)]
    quo = Quotient.of([v for v in diffs if not is_zero(v)], n)
    m = quo.size
    lifts = [quo.lift(unit(m, a)) for a in range(m)]
    bracket = StructureConstants(
        m, [[quo.project(d.left.bracket(lifts[a], lifts[b])) for b in range(m)] for a in range(m)]
    )
    rep = BiRepresentation(
        m, n,
        [[d.right.bracket(lifts[a], unit(n, y)) for y in range(n)] for a in range(m)],
        [[d.left.bracket(unit(n, y), lifts[a]) for a in range(m)] for y in range(n)],
    )
    q = quo.projection_map()
    out = Leibnizification(quo, bracket, q, rep)
    _require(check_leibniz(bracket), "quotient Leibniz")
    _require(validate_representation(bracket, rep), "quotient representation")
    _require(is_relative_averaging_linear(bracket, rep, q), "quotient map relative averaging")
    induced = induced_di_leibniz(bracket, rep, q)
    if induced.left.c != d.left.c or induced.right.c != d.right.c:
        raise StructureError("internal error: induced structure differs from the input", "leibnizification")
    return out


def semidirect_leibniz(h: StructureConstants, rep: BiRepresentation) -> StructureConstants:
    """``h ⊕ V`` with ``{(x, u), (y, v)} = ({x, y}, ρL(x, v) + ρR(u, y))``."""
    dh = h.dim
    n = dh + rep.dv

    def op(a, b):
        x, u = a[:dh], a[dh:]
        y, v = b[:dh], b[dh:]
        return h.bracket(x, y) + add(rep.left(x, v), rep.right(u, y))

    return StructureConstants.from_bilinear(n, op)


@dataclass(frozen=True)
class Embedding:
    ambient: StructureConstants
    operator: LinearMap
    inclusion: LinearMap


def _block_operator(m: int, n: int, q: LinearMap) -> LinearMap:
    # (<x>, y) -> (q(y), 0) on the direct sum of an m- and an n-dimensional space
    cols = [zeros(m + n) for _ in range(m)]
    cols += [q.column(j) + zeros(n) for j in range(n)]
    return LinearMap.from_columns(m + n, cols)


def _inclusion(m: int, n: int) -> LinearMap:
    return LinearMap.from_columns(m + n, [zeros(m) + unit(n, j) for j in range(n)])


def embed_di_leibniz(d: DiLeibniz) -> Embedding:
    """Embed ``d`` in an averaging Leibniz algebra ``d_Leib ⋉ d``.

    ``P(<x>, y) = (<y>, 0)`` and ``i(x) = (0, x)``, which carries ``⊣``
    and ``⊢`` to ``{a, Pb}`` and ``{Pa, b}``.
    """
    lz = leibnizification(d)
    m, n = lz.bracket.dim, d.dim
    ambient = semidirect_leibniz(lz.bracket, lz.rep)
    emb = Embedding(ambient, _block_operator(m, n, lz.q), _inclusion(m, n))
    _require(check_leibniz(ambient), "ambient Leibniz")
    _require(is_linear_averaging("leibniz", ambient, emb.operator), "ambient averaging")
    problem = _morphism_problem(emb, lambda a, b: ambient.bracket(a, emb.operator(b)), d.left, n)
    problem = problem or _morphism_problem(emb, lambda a, b: ambient.bracket(emb.operator(a), b), d.right, n)
    if problem or not emb.inclusion.is_injective():
        raise StructureError(f"internal error: embedding check failed {problem}", "embedding")
    return emb


def _morphism_problem(emb: Embedding, target_op, source: StructureConstants, n: int) -> str:
    i = emb.inclusion
    for x, y in product(range(n), repeat=2):
        if i(source.basis(x, y)) != target_op(i.column(x), i.column(y)):
            return f"at {(x, y)}"
    return ""


def descendent_leibniz(g: StructureConstants, p: LinearMap) -> StructureConstants:
    """``{x, y}_P = [Px, y]`` for a Lie averaging operator ``P``."""
    _require(is_linear_averaging("lie", g, p), "Lie averaging")
    out = StructureConstants.from_bilinear(g.dim, lambda x, y: g.bracket(p(x), y))
    _require(check_leibniz(out), "descendent Leibniz")
    return out


def lie_leibniz_bundle(g: StructureConstants, p: LinearMap) -> LieLeibniz:
    ll = LieLeibniz(g, descendent_leibniz(g, p))
    _require(check_lie_leibniz(ll), "Lie-Leibniz")
    return ll


def leibniz_kernel(h: StructureConstants) -> Quotient:
    """``h`` modulo the span of all ``{x, x}``."""
    d = h.dim
    gens = [h.basis(i, i) for i in range(d)]
    gens += [add(h.basis(i, j), h.basis(j, i)) for i in range(d) for j in range(i + 1, d)]
    return Quotient.of([v for v in gens if not is_zero(v)], d)


def embed_lie_leibniz(ll: LieLeibniz) -> Embedding:
    """Embed a Lie-Leibniz algebra in an averaging Lie algebra ``g_Lie ⋉ g``.

    ``g_Lie`` is ``g`` modulo the span of ``{x, x}``; it acts on ``g`` by
    ``ρ(<x>, y) = {x, y}``.  The ambient bracket is
    ``([<x>, <x'>], ρ(<x>, y') - ρ(<x'>, y) + [y, y'])``,
    ``P(<x>, y) = (<y>, 0)`` and ``i(x) = (0, x)``.
    """
    _require(check_lie_leibniz(ll), "Lie-Leibniz")
    n = ll.dim
    quo = leibniz_kernel(ll.leib)
    m = quo.size

    def rho(a, y):
        return ll.leib.bracket(quo.lift(a), y)

    def op(s, t):
        a, y = s[:m], s[m:]
        b, z = t[:m], t[m:]
        head = quo.project(ll.leib.bracket(quo.lift(a), quo.lift(b)))
        return head + add(sub(rho(a, z), rho(b, y)), ll.lie.bracket(y, z))

    ambient = StructureConstants.from_bilinear(m + n, op)
    emb = Embedding(ambient, _block_operator(m, n, quo.projection_map()), _inclusion(m, n))
    _require(check_lie(ambient), "ambient Lie")
    _require(is_linear_averaging("lie", ambient, emb.operator), "ambient averaging")
    problem = _morphism_problem(emb, ambient.bracket, ll.lie, n)
    problem = problem or _morphism_problem(emb, lambda a, b: ambient.bracket(emb.operator(a), b), ll.leib, n)
    if problem or not emb.inclusion.is_injective():
        raise StructureError(f"internal error: embedding check failed {problem}", "embedding")
    return emb


# Braided vector space k ⊕ g


def braided_from_lie(g: StructureConstants) -> LinearMap:
    """``S((a, x) ⊗ (b, y)) = (b, y) ⊗ (a, x) + (0, [x, y]) ⊗ (1, 0)``.

    Basis of ``k ⊕ g``: index 0 is ``(1, 0)``, index ``1 + i`` is ``(0, e_i)``;
    the tensor basis vector ``e_a ⊗ e_b`` has index ``a * (1 + d) + b``.
    """
    if not g.is_skew():
        raise StructureError("the bracket must be skew-symmetric", "skew_symmetry")
    d = g.dim
    n = 1 + d
    cols = []
    for a, b in product(range(n), repeat=2):
        col = zeros(n * n)
        col[b * n + a] += ONE
        if a and b:
            for k, c in enumerate(g.c[a - 1][b - 1]):
                col[(1 + k) * n] += c
        cols.append(col)
    return LinearMap.from_columns(n * n, cols)


def _sparse_columns(s: LinearMap) -> List[Dict[int, Fraction]]:
    return [{i: a for i, a in enumerate(s.column(j)) if a != 0} for j in range(s.cols)]


def _apply_pair(cols, n: int, vec: Dict[tuple, Fraction], pos: int) -> Dict[tuple, Fraction]:
    # apply S to tensor slots pos, pos+1 of a sparse element of the tensor cube
    out: Dict[tuple, Fraction] = {}
    for key, c in vec.items():
        for idx, s in cols[key[pos] * n + key[pos + 1]].items():
            new = key[:pos] + divmod(idx, n) + key[pos + 2:]
            out[new] = out.get(new, ZERO) + c * s
    return {k: v for k, v in out.items() if v != 0}


def ybe_linear_check(s: LinearMap) -> bool:
    """Braid identity ``S12 S23 S12 = S23 S12 S23`` on the tensor cube.

    Both sides are evaluated exactly on every basis vector of the cube, with
    operators stored as sparse columns.
    """
    n = round(s.rows ** 0.5)
    if n * n != s.rows or s.rows != s.cols:
        raise StructureError("operator must act on a tensor square", "dimension")
    cols = _sparse_columns(s)
    for key in product(range(n), repeat=3):
        v = {key: ONE}
        lhs = _apply_pair(cols, n, _apply_pair(cols, n, _apply_pair(cols, n, v, 1), 0), 1)
        rhs = _apply_pair(cols, n, _apply_pair(cols, n, _apply_pair(cols, n, v, 0), 1), 0)
        if lhs != rhs:
            return False
    return True


def braided_averaging_check(g: StructureConstants, p: LinearMap) -> bool:
    """``S(A x ⊗ A y) = (A ⊗ Id) S(A x ⊗ y)`` on basis pairs, with ``A = 1 ⊕ P``."""
    d = g.dim
    _check_square(p, d)
    s = braided_from_lie(g)
    n = 1 + d
    cols = _sparse_columns(s)
    a_cols = [{0: ONE}] + [{1 + i: c for i, c in enumerate(p.column(j)) if c != 0} for j in range(d)]

    def tensor(u: Dict[int, Fraction], v: Dict[int, Fraction]) -> Dict[tuple, Fraction]:
        return {(i, j): a * b for i, a in u.items() for j, b in v.items()}

    def apply_first(vec):
        out: Dict[tuple, Fraction] = {}
        for (i, j), c in vec.items():
            for k, a in a_cols[i].items():
                out[(k, j)] = out.get((k, j), ZERO) + c * a
        return {k: v for k, v in out.items() if v != 0}

    for x, y in product(range(n), repeat=2):
        lhs = _apply_pair(cols, n, tensor(a_cols[x], a_cols[y]), 0)
        rhs = apply_first(_apply_pair(cols, n, tensor(a_cols[x], {y: ONE}), 0))
        if lhs != rhs:
            return False
    return True


# Example builders


def adjoint_representation(h: StructureConstants) -> BiRepresentation:
    d = h.dim
    return BiRepresentation(
        d, d,
        [[h.basis(i, j) for j in range(d)] for i in range(d)],
        [[h.basis(j, i) for i in range(d)] for j in range(d)],
    )


def zero_representation(h: StructureConstants, dv: int) -> BiRepresentation:
    d = h.dim
    return BiRepresentation(d, dv, [[zeros(dv)] * dv] * d, [[zeros(dv)] * d] * dv)


def copies_representation(h: StructureConstants, n: int) -> BiRepresentation:
    """``h ⊕ ... ⊕ h`` (``n`` copies) with the adjoint actions in each slot."""
    d = h.dim
    dv = n * d

    def block(r: int, vec: List[Fraction]) -> List[Fraction]:
        out = zeros(dv)
        out[r * d:(r + 1) * d] = vec
        return out

    rho_l = [[block(j // d, h.basis(i, j % d)) for j in range(dv)] for i in range(d)]
    rho_r = [[block(j // d, h.basis(j % d, i)) for i in range(d)] for j in range(dv)]
    return BiRepresentation(d, dv, rho_l, rho_r)


def sum_map(d: int, n: int) -> LinearMap:
    """``(x_1, ..., x_n) -> x_1 + ... + x_n``."""
    return LinearMap.from_columns(d, [unit(d, j % d) for j in range(n * d)])


def projection_map(d: int, n: int, i: int) -> LinearMap:
    """``(x_1, ..., x_n) -> x_i``."""
    return LinearMap.from_columns(d, [unit(d, j % d) if j // d == i else zeros(d) for j in range(n * d)])


def is_square_zero_derivation(h: StructureConstants, dmap: LinearMap) -> Verdict:
    dim = h.dim
    _check_square(dmap, dim)
    for j in range(dim):
        if not is_zero(dmap(dmap.column(j))):
            return fail((j,), "square_zero")
    e = _basis(dim)
    for x, y in product(range(dim), repeat=2):
        if dmap(h.basis(x, y)) != add(h.bracket(dmap.column(x), e[y]), h.bracket(e[x], dmap.column(y))):
            return fail((x, y), "derivation")
    return PASS


def differential_di_leibniz(h: StructureConstants, dmap: LinearMap) -> DiLeibniz:
    """``x ⊣ y = {x, dy}`` and ``x ⊢ y = {dx, y}``."""
    _require(check_leibniz(h), "Leibniz")
    _require(is_square_zero_derivation(h, dmap), "square-zero derivation")
    n = h.dim
    out = DiLeibniz(
        n,
        StructureConstants.from_bilinear(n, lambda x, y: h.bracket(x, dmap(y))),
        StructureConstants.from_bilinear(n, lambda x, y: h.bracket(dmap(x), y)),
    )
    _require(check_di_leibniz(out), "di-Leibniz")
    return out


def direct_sum_di_leibniz(h: StructureConstants, n: int) -> DiLeibniz:
    """On ``n`` copies of ``h``: ``x ⊣ y = ({x_i, Σ y})_i`` and ``x ⊢ y = ({Σ x, y_i})_i``."""
    _require(check_leibniz(h), "Leibniz")
    out = induced_di_leibniz(h, copies_representation(h, n), sum_map(h.dim, n))
    _require(check_di_leibniz(out), "di-Leibniz")
    return out


def example_builders(kind: str, **params) -> DiLeibniz:
    if kind == "differential":
        return differential_di_leibniz(params["algebra"], params["d"])
    if kind == "direct_sum":
        return direct_sum_di_leibniz(params["algebra"], params["n"])
    raise StructureError(f"unknown example kind {kind!r}", "kind")


def diagonal_di_leibniz(h: StructureConstants) -> DiLeibniz:
    """A Leibniz algebra viewed as a di-Leibniz algebra with ``⊣ = ⊢``."""
    return DiLeibniz(h.dim, h, h)


# Named algebras


def sl2() -> StructureConstants:
    """Basis ``h, e, f`` with ``[h, e] = 2e``, ``[h, f] = -2f``, ``[e, f] = h``."""
    return StructureConstants.from_dict(3, {
        (0, 1): {1: 2}, (1, 0): {1: -2},
        (0, 2): {2: -2}, (2, 0): {2: 2},
        (1, 2): {0: 1}, (2, 1): {0: -1},
    })


def so3() -> StructureConstants:
    """``[e_1, e_2] = e_3`` and cyclic."""
    return StructureConstants.from_dict(3, {
        (0, 1): {2: 1}, (1, 0): {2: -1},
        (1, 2): {0: 1}, (2, 1): {0: -1},
        (2, 0): {1: 1}, (0, 2): {1: -1},
    })


def heisenberg() -> StructureConstants:
    """``[x, y] = z``."""
    return StructureConstants.from_dict(3, {(0, 1): {2: 1}, (1, 0): {2: -1}})


def nonabelian_2d() -> StructureConstants:
    """``[x, y] = y``."""
    return StructureConstants.from_dict(2, {(0, 1): {1: 1}, (1, 0): {1: -1}})


def abelian(d: int) -> StructureConstants:
    return StructureConstants.zero(d)


def leibniz_2d() -> StructureConstants:
    """``{e_1, e_1} = e_2``, all other brackets zero (Leibniz, not Lie)."""
    return StructureConstants.from_dict(2, {(0, 0): {1: 1}})
