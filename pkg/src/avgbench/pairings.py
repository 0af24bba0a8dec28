"""Rack-pairings, group-racks, skew braces, di-racks and holomorph subracks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .averaging import descendent_rack, is_averaging
from .groups import FiniteGroup, validate_group
from .magma import (
    FiniteMagma,
    GuardExceeded,
    PASS,
    SetMap,
    StructureError,
    Verdict,
    fail,
    first_distributivity_failure,
    first_nonbijective_row,
    is_complete_rack,
    is_rack,
    magma_automorphisms,
    pointed_elements,
    require_rack,
)


@dataclass(frozen=True)
class RackPairing:
    """Two operations ``⋄`` (diamond) and ``◆`` (blackdiamond) on one set."""

    diamond: FiniteMagma
    blackdiamond: FiniteMagma

    def __post_init__(self):
        if self.diamond.size != self.blackdiamond.size:
            raise StructureError("both operations must live on one set", "size")

    @property
    def size(self) -> int:
        return self.diamond.size


def _rack_verdict(m: FiniteMagma, name: str) -> Verdict:
    row = first_nonbijective_row(m)
    if row is not None:
        return fail((row,), f"{name}_bijective_translations")
    ld = first_distributivity_failure(m)
    if ld is not None:
        return fail(ld, f"{name}_left_distributivity")
    return PASS


def is_group_rack(g: FiniteGroup, blackdiamond: FiniteMagma, pointed: bool = False) -> Verdict:
    """``◆`` is a rack whose left translations are group automorphisms."""
    if blackdiamond.size != g.order:
        return fail((), "size")
    v = _rack_verdict(blackdiamond, "rack")
    if not v:
        return v
    t, mul = blackdiamond.table, g.table
    for x, y, z in product(range(g.order), repeat=3):
        if t[x][mul[y][z]] != mul[t[x][y]][t[x][z]]:
            return fail((x, y, z), "translation_homomorphism")
    if pointed and g.identity not in pointed_elements(blackdiamond):
        x = next(x for x in range(g.order) if t[x][g.identity] != g.identity or t[g.identity][x] != x)
        return fail((x,), "pointed")
    return PASS


def is_rack_pairing(p: RackPairing) -> Verdict:
    """Both operations are racks and ``x◆(y⋄z) = (x◆y)⋄(x◆z)``."""
    for m, name in ((p.diamond, "diamond"), (p.blackdiamond, "black")):
        v = _rack_verdict(m, name)
        if not v:
            return v
    d, b = p.diamond.table, p.blackdiamond.table
    for x, y, z in product(range(p.size), repeat=3):
        if b[x][d[y][z]] != d[b[x][y]][b[x][z]]:
            return fail((x, y, z), "compatibility")
    return PASS


def is_lambda_homomorphic(p: RackPairing) -> Verdict:
    """``x◆(y◆z) = (x⋄y)◆(x◆z)``."""
    d, b = p.diamond.table, p.blackdiamond.table
    for x, y, z in product(range(p.size), repeat=3):
        if b[x][b[y][z]] != b[d[x][y]][b[x][z]]:
            return fail((x, y, z), "lambda_homomorphic")
    return PASS


def is_lambda_antihomomorphic(p: RackPairing) -> Verdict:
    """``x◆(y◆z) = (y⋄x)◆(x◆z)``."""
    d, b = p.diamond.table, p.blackdiamond.table
    for x, y, z in product(range(p.size), repeat=3):
        if b[x][b[y][z]] != b[d[y][x]][b[x][z]]:
            return fail((x, y, z), "lambda_antihomomorphic")
    return PASS


def is_symmetric(p: RackPairing) -> Verdict:
    """``x⋄(y◆z) = (x⋄y)◆(x⋄z)``."""
    d, b = p.diamond.table, p.blackdiamond.table
    for x, y, z in product(range(p.size), repeat=3):
        if d[x][b[y][z]] != b[d[x][y]][d[x][z]]:
            return fail((x, y, z), "symmetric")
    return PASS


@dataclass(frozen=True)
class PairingClass:
    is_pairing: bool
    lambda_homomorphic: bool
    lambda_antihomomorphic: bool
    symmetric: bool

    def to_dict(self) -> dict:
        return {
            "is_pairing": self.is_pairing,
            "lambda_homomorphic": self.lambda_homomorphic,
            "lambda_antihomomorphic": self.lambda_antihomomorphic,
            "symmetric": self.symmetric,
        }


def classify_pairing(p: RackPairing) -> PairingClass:
    return PairingClass(
        bool(is_rack_pairing(p)),
        bool(is_lambda_homomorphic(p)),
        bool(is_lambda_antihomomorphic(p)),
        bool(is_symmetric(p)),
    )


def descendent_pairing(q: FiniteMagma, a: SetMap) -> RackPairing:
    """``(Q, ⋄, ⋄_A)`` for an averaging operator ``A``."""
    return RackPairing(q, descendent_rack(q, a))


def lambda_criterion(q: FiniteMagma, a: SetMap) -> bool:
    """``L_{A(x⋄y)} = L_{A(x)⋄A(y)}`` for all ``x, y``."""
    t = q.table
    return all(t[a(t[x][y])] == t[t[a(x)][a(y)]] for x, y in product(range(q.size), repeat=2))


def symmetric_criterion(q: FiniteMagma, a: SetMap) -> bool:
    """``L_{A(x⋄y)} = L_{x⋄A(y)}`` for all ``x, y``."""
    t = q.table
    return all(t[a(t[x][y])] == t[t[x][a(y)]] for x, y in product(range(q.size), repeat=2))


# Skew braces


@dataclass(frozen=True)
class SkewBrace:
    dot: FiniteGroup
    bullet: FiniteGroup
    two_sided: bool

    @property
    def order(self) -> int:
        return self.dot.order


def validate_skew_brace(dot: FiniteMagma, bullet: FiniteMagma) -> SkewBrace:
    """Raise naming the failed axiom unless ``x•(yz) = (x•y) x^{-1} (x•z)`` etc. hold."""
    if dot.size != bullet.size:
        raise StructureError("both operations must live on one set", "size")
    g = validate_group(dot)
    try:
        h = validate_group(bullet)
    except StructureError as err:
        raise StructureError(f"bullet: {err}", "bullet_" + err.axiom, err.witness) from err
    if g.identity != h.identity:
        raise StructureError("the two groups have different identities", "shared_identity", (g.identity, h.identity))
    m, b, inv = g.table, h.table, g.inverse
    for x, y, z in product(range(g.order), repeat=3):
        if b[x][m[y][z]] != m[m[b[x][y]][inv[x]]][b[x][z]]:
            raise StructureError(f"brace compatibility fails at {(x, y, z)}", "compatibility", (x, y, z))
    two_sided = all(
        b[m[x][y]][z] == m[m[b[x][z]][inv[z]]][b[y][z]]
        for x, y, z in product(range(g.order), repeat=3)
    )
    return SkewBrace(g, h, two_sided)


def brace_lemma_check(s: SkewBrace) -> Verdict:
    """Consequences of two-sidedness:
    ``(x y^{-1})•z = (x•z)(y•z)^{-1} z``, ``(x^{-1} y)•z = z (x•z)^{-1} (y•z)``
    and ``x^{-1} (x̄^{-1} • x) x^{-1} = e`` where ``x̄`` is the •-inverse."""
    g, h = s.dot, s.bullet
    m, inv, b = g.table, g.inverse, h.table
    n = g.order
    for x, y, z in product(range(n), repeat=3):
        if b[m[x][inv[y]]][z] != m[m[b[x][z]][inv[b[y][z]]]][z]:
            return fail((x, y, z), "right_difference")
        if b[m[inv[x]][y]][z] != m[m[z][inv[b[x][z]]]][b[y][z]]:
            return fail((x, y, z), "left_difference")
    for x in range(n):
        if m[m[inv[x]][b[inv[h.inverse[x]]][x]]][inv[x]] != g.identity:
            return fail((x,), "inverse_identity")
    return PASS


def brace_to_pairing(s: SkewBrace) -> RackPairing:
    """``x⋄y = x y x^{-1}`` and ``x◆y = x • y • x̄``."""
    if not s.two_sided:
        raise StructureError("the pairing construction needs a two-sided skew brace", "two_sided")
    g, h = s.dot, s.bullet
    n = g.order
    blackdiamond = FiniteMagma(n, h.conjugation_table())
    p = RackPairing(FiniteMagma(n, g.conjugation_table()), blackdiamond)
    _post_check(is_group_rack(g, blackdiamond), "group-rack")
    _post_check(is_rack_pairing(p), "rack-pairing")
    return p


def _post_check(v: Verdict, what: str) -> None:
    if not v:
        raise StructureError(f"internal check failed: result is not a {what} ({v.axiom} at {v.witness})", v.axiom, v.witness)


def skew_brace_averaging(s: SkewBrace, a: SetMap) -> Verdict:
    """``A`` is averaging for both ``(G, ·)`` and ``(G, •)``."""
    v = is_averaging(s.dot, a)
    if not v:
        return Verdict(False, v.witness, "dot_averaging")
    v = is_averaging(s.bullet, a)
    if not v:
        return Verdict(False, v.witness, "bullet_averaging")
    return PASS


def brace_averaging_pairing(s: SkewBrace, a: SetMap) -> RackPairing:
    """The pair of descendent operations for the two group structures."""
    v = skew_brace_averaging(s, a)
    if not v:
        raise StructureError(f"not a skew-brace averaging operator ({v.axiom} at {v.witness})", v.axiom, v.witness)
    if not s.two_sided:
        raise StructureError("the pairing construction needs a two-sided skew brace", "two_sided")
    e = s.dot.identity
    if a(e) != e:
        raise StructureError("the pairing construction needs a pointed operator (A(e) = e)", "pointed", (e,))
    p = RackPairing(descendent_rack(s.dot, a), descendent_rack(s.bullet, a))
    _post_check(is_rack_pairing(p), "rack-pairing")
    return p


def trivial_brace(g: FiniteGroup) -> SkewBrace:
    return validate_skew_brace(g.magma, g.magma)


def opposite_brace(g: FiniteGroup) -> SkewBrace:
    """``x • y = y x``."""
    return validate_skew_brace(g.magma, FiniteMagma.from_function(g.order, lambda x, y: g.mul(y, x)))


def brace_direct_product(s: SkewBrace, t: SkewBrace) -> SkewBrace:
    m = t.order

    def pair(op1, op2):
        return FiniteMagma.from_function(
            s.order * m, lambda p, q: op1(p // m, q // m) * m + op2(p % m, q % m)
        )

    return validate_skew_brace(pair(s.dot.mul, t.dot.mul), pair(s.bullet.mul, t.bullet.mul))


# Holomorph and regular subracks


@dataclass(frozen=True)
class Holomorph:
    """``Aut(Q) × Q`` with ``(f, x)(g, y) = (f g f^{-1}, f(y))``; pairs as ``f * |Q| + x``."""

    rack: FiniteMagma
    automorphisms: tuple

    def index(self, f: SetMap, x: int) -> int:
        return self.automorphisms.index(f) * self.rack.size + x

    def op(self, p: int, q: int) -> int:
        n = self.rack.size
        f, x = divmod(p, n)
        g, y = divmod(q, n)
        fa, ga = self.automorphisms[f], self.automorphisms[g]
        return self.index(fa.compose(ga).compose(fa.inverse()), fa(y))

    def magma(self, max_elements: int = 200) -> FiniteMagma:
        size = len(self.automorphisms) * self.rack.size
        if size > max_elements:
            raise GuardExceeded(f"holomorph table refused: {size} elements exceeds guard {max_elements}", "max_size")
        return FiniteMagma.from_function(size, self.op)

    def section_elements(self, section: Sequence[SetMap]) -> tuple:
        return tuple(self.index(f, x) for x, f in enumerate(section))


def rack_automorphisms(q: FiniteMagma, max_size: int = 12) -> tuple:
    return tuple(magma_automorphisms(q, max_size=max_size))


def holomorph(q: FiniteMagma) -> Holomorph:
    require_rack(q)
    return Holomorph(q, rack_automorphisms(q))


def enumerate_regular_subracks(q: FiniteMagma, max_size: int = 6) -> list:
    """Subracks of the holomorph meeting each ``Aut(Q) × {x}`` exactly once.

    Each is returned as its section ``(f_0, ..., f_{n-1})``; closure under the
    holomorph operation reads ``f_{f_x(y)} = f_x f_y f_x^{-1}``.
    """
    n = q.size
    if n > max_size:
        raise GuardExceeded(f"regular subrack search refused: size {n} exceeds guard {max_size}", "max_size")
    require_rack(q)
    auts = rack_automorphisms(q, max_size=max_size)
    inverse = {f: f.inverse() for f in auts}
    sec: list = [None] * n
    out = []

    def consistent(k: int) -> bool:
        for x in range(k + 1):
            fx = sec[x]
            for y in range(k + 1):
                z = fx(y)
                if z > k or k not in (x, y, z):
                    continue
                if sec[z] != fx.compose(sec[y]).compose(inverse[fx]):
                    return False
        return True

    def extend(k: int) -> None:
        if k == n:
            out.append(tuple(sec))
            return
        for f in auts:
            sec[k] = f
            if consistent(k):
                extend(k + 1)
        sec[k] = None

    extend(0)
    return out


def pairing_from_subrack(q: FiniteMagma, section: Sequence[SetMap]) -> RackPairing:
    """``x◆y = f_x(y)``."""
    return RackPairing(q, FiniteMagma(q.size, tuple(f.image for f in section)))


def subrack_from_pairing(p: RackPairing) -> tuple:
    """The section ``x -> L_x^◆``."""
    v = is_rack_pairing(p)
    if not v:
        raise StructureError(f"not a rack-pairing ({v.axiom} at {v.witness})", v.axiom, v.witness)
    return tuple(p.blackdiamond.row(x) for x in range(p.size))


def enumerate_rack_pairings(q: FiniteMagma) -> list:
    """All ``◆`` making ``(Q, ⋄, ◆)`` a rack-pairing, via regular subracks."""
    return [pairing_from_subrack(q, s) for s in enumerate_regular_subracks(q)]


# Di-racks


@dataclass(frozen=True)
class DiRack:
    diamond: FiniteMagma
    tri: FiniteMagma

    @property
    def size(self) -> int:
        return self.diamond.size


def is_dirack(d: DiRack) -> Verdict:
    """``⋄`` is a rack, each ``L_x^▷`` is a bijective automorphism of it, and
    ``x⋄(x▷(y▷z)) = (x⋄(x▷y)) ▷ (x⋄(x▷z))``."""
    v = _rack_verdict(d.diamond, "diamond")
    if not v:
        return v
    row = first_nonbijective_row(d.tri)
    if row is not None:
        return fail((row,), "tri_bijective")
    s, t = d.diamond.table, d.tri.table
    for x, y, z in product(range(d.size), repeat=3):
        if t[x][s[y][z]] != s[t[x][y]][t[x][z]]:
            return fail((x, y, z), "tri_automorphism")
    for x, y, z in product(range(d.size), repeat=3):
        if s[x][t[x][t[y][z]]] != t[s[x][t[x][y]]][s[x][t[x][z]]]:
            return fail((x, y, z), "weighted")
    return PASS


def _require(v: Verdict, what: str) -> None:
    if not v:
        raise StructureError(f"not a {what} ({v.axiom} at {v.witness})", v.axiom, v.witness)


def pairing_from_dirack(d: DiRack) -> RackPairing:
    """``x◆y = x⋄(x▷y)``."""
    _require(is_dirack(d), "di-rack")
    s, t = d.diamond.table, d.tri.table
    return RackPairing(d.diamond, FiniteMagma.from_function(d.size, lambda x, y: s[x][t[x][y]]))


def dirack_from_pairing(p: RackPairing) -> DiRack:
    """``x▷y = (L_x^⋄)^{-1}(x◆y)``."""
    _require(is_rack_pairing(p), "rack-pairing")
    inverses = [p.diamond.row(x).inverse() for x in range(p.size)]
    b = p.blackdiamond.table
    return DiRack(p.diamond, FiniteMagma.from_function(p.size, lambda x, y: inverses[x](b[x][y])))


def recover_averaging(p: RackPairing) -> SetMap:
    """For a complete ``⋄``: the map ``A`` with ``x◆y = A(x)⋄y``.

    Each ``A(x)`` is the element whose ⋄-translation equals ``L_x^◆``
    (the smallest one if several share that translation).
    """
    q = p.diamond
    if not is_complete_rack(q):
        raise StructureError("recovering an operator needs a complete rack", "complete")
    rows: dict = {}
    for c in range(q.size):
        rows.setdefault(q.table[c], c)
    image = []
    for x in range(p.size):
        c = rows.get(p.blackdiamond.table[x])
        if c is None:
            raise StructureError(f"internal error: L_{x} of the second operation is not a translation", "recover", (x,))
        image.append(c)
    a = SetMap(p.size, tuple(image))
    _post_check(is_averaging(q, a), "averaging operator")
    if descendent_rack(q, a).table != p.blackdiamond.table:
        raise StructureError("internal error: descendent rack differs from the pairing", "recover")
    return a


# Indexed families


def is_rack_k_pairing(ops: Sequence[FiniteMagma]) -> Verdict:
    """``x ⋄_i (y ⋄_{i-1} z) = (x ⋄_i y) ⋄_{i-1} (x ⋄_i z)`` for ``i >= 1``."""
    for i, m in enumerate(ops):
        v = _rack_verdict(m, f"op{i}")
        if not v:
            return v
    for i in range(1, len(ops)):
        a, b = ops[i].table, ops[i - 1].table
        for x, y, z in product(range(ops[0].size), repeat=3):
            if a[x][b[y][z]] != b[a[x][y]][a[x][z]]:
                return fail((i, x, y, z), "compatibility")
    return PASS


def k_pairing_from_averaging(q: FiniteMagma, a: SetMap, k: int) -> list:
    """``x ⋄_i y = A^i(x) ⋄ y`` for ``i = 0..k``."""
    v = is_averaging(q, a)
    if not v:
        raise StructureError(f"operator is not averaging (fails at {v.witness})", "averaging", v.witness)
    ops = []
    p = SetMap.identity(q.size)
    for _ in range(k + 1):
        ops.append(FiniteMagma.from_function(q.size, lambda x, y, p=p: q.table[p(x)][y]))
        p = a.compose(p)
    return ops


def is_rack_module(q: FiniteMagma, phi: Sequence[SetMap]) -> Verdict:
    """Each ``Φ_x`` is a permutation and ``Φ_x Φ_y = Φ_{x⋄y} Φ_x``."""
    if len(phi) != q.size:
        return fail((), "shape")
    for x, f in enumerate(phi):
        if not f.is_bijective():
            return fail((x,), "bijective")
    for x, y in product(range(q.size), repeat=2):
        if phi[x].compose(phi[y]) != phi[q.table[x][y]].compose(phi[x]):
            return fail((x, y), "module")
    return PASS
