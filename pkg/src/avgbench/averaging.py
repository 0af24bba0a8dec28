"""Averaging operators on groups and racks, and the racks they induce.

A map ``A`` on a group is averaging when
``A(g) A(h) A(g)^{-1} = A(A(g) h A(g)^{-1})``; on a rack ``(Q, ⋄)`` when
``A(x) ⋄ A(y) = A(A(x) ⋄ y)``.  Both read as ``A(x) ⋄ A(y) = A(A(x) ⋄ y)``
for the action table ``act[a][y] = a ⋄ y`` (conjugation for a group).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence, Union

from .groups import FiniteGroup, GroupAction, PermutationClosure, permutation_closure, semidirect_product
from .magma import (
    FiniteMagma,
    GuardExceeded,
    PASS,
    SetMap,
    StructureError,
    Verdict,
    fail,
    is_rack,
    pointed_elements,
    require_rack,
)

Carrier = Union[FiniteGroup, FiniteMagma]


def _check_map(carrier_size: int, a: SetMap) -> None:
    if a.size != carrier_size:
        raise StructureError(f"operator has {a.size} entries, carrier has {carrier_size}", "size")
    a.check_codomain(carrier_size)


def action_table(carrier: Carrier) -> tuple:
    if isinstance(carrier, FiniteGroup):
        return carrier.conjugation_table()
    return carrier.table


def _size(carrier: Carrier) -> int:
    return carrier.order if isinstance(carrier, FiniteGroup) else carrier.size


def is_averaging(carrier: Carrier, a: SetMap) -> Verdict:
    """Check the averaging identity; the witness is the first failing pair."""
    n = _size(carrier)
    _check_map(n, a)
    if isinstance(carrier, FiniteGroup):
        mul, inv = carrier.table, carrier.inverse
        for g, h in product(range(n), repeat=2):
            ag = a(g)
            lhs = mul[mul[ag][a(h)]][inv[ag]]
            if lhs != a(mul[mul[ag][h]][inv[ag]]):
                return fail((g, h), "averaging")
        return PASS
    t = carrier.table
    for x, y in product(range(n), repeat=2):
        if t[a(x)][a(y)] != a(t[a(x)][y]):
            return fail((x, y), "averaging")
    return PASS


def _distinguished(carrier: Carrier) -> int:
    if isinstance(carrier, FiniteGroup):
        return carrier.identity
    pts = pointed_elements(carrier)
    if not pts:
        raise StructureError("pointed-only search needs a pointed rack", "pointed")
    return pts[0]


def enumerate_averaging(
    carrier: Carrier, pointed_only: bool = False, max_size: int = 8, prune: bool = True
) -> list:
    """All averaging operators on ``carrier`` in lexicographic order of images.

    ``pointed_only`` keeps operators fixing the identity (group) or the
    smallest pointed element (rack).  ``prune=False`` filters all ``n^n``
    maps instead of searching.
    """
    n = _size(carrier)
    if n > max_size:
        raise GuardExceeded(f"averaging enumeration refused: size {n} exceeds guard {max_size}", "max_size")
    if isinstance(carrier, FiniteMagma):
        require_rack(carrier)
    fixed = _distinguished(carrier) if pointed_only else None
    if not prune:
        out = []
        for image in product(range(n), repeat=n):
            if fixed is not None and image[fixed] != fixed:
                continue
            a = SetMap(n, image)
            if is_averaging(carrier, a):
                out.append(a)
        return out
    return _search(action_table(carrier), n, fixed)


def _search(act: tuple, n: int, fixed: Optional[int]) -> list:
    # Depth-first over x = 0..n-1 choosing A(x); whenever A(x) and A(y) are
    # known the identity pins A(A(x) ⋄ y) to A(x) ⋄ A(y).
    a = [-1] * n
    out = []

    def propagate(trail: list) -> bool:
        changed = True
        while changed:
            changed = False
            for x in range(n):
                ax = a[x]
                if ax < 0:
                    continue
                row = act[ax]
                for y in range(n):
                    ay = a[y]
                    if ay < 0:
                        continue
                    z = row[y]
                    w = row[ay]
                    if a[z] < 0:
                        a[z] = w
                        trail.append(z)
                        changed = True
                    elif a[z] != w:
                        return False
        return True

    def undo(trail: list) -> None:
        for z in trail:
            a[z] = -1

    def search() -> None:
        x = next((i for i in range(n) if a[i] < 0), None)
        if x is None:
            out.append(SetMap(n, tuple(a)))
            return
        for v in range(n):
            a[x] = v
            trail = [x]
            if propagate(trail):
                search()
            undo(trail)

    if fixed is None:
        search()
    else:
        a[fixed] = fixed
        trail0 = [fixed]
        if propagate(trail0):
            search()
    return sorted(out, key=lambda s: s.image)


def _require_averaging(carrier: Carrier, a: SetMap) -> None:
    v = is_averaging(carrier, a)
    if not v:
        raise StructureError(f"operator is not averaging (fails at {v.witness})", "averaging", v.witness)


def descendent_rack(carrier: Carrier, a: SetMap) -> FiniteMagma:
    """``x ⋄_A y = A(x) ⋄ y`` (for a group, ``A(g) h A(g)^{-1}``)."""
    _require_averaging(carrier, a)
    act = action_table(carrier)
    n = _size(carrier)
    return FiniteMagma.from_function(n, lambda x, y: act[a(x)][y])


def adjoint_product_rack(g: FiniteGroup) -> FiniteMagma:
    """``G ×_Ad G``: ``(g1, g)(h1, h) = (g1 h1 g1^{-1}, g1 h g1^{-1})``, pairs as ``g*n + x``."""
    n = g.order
    return FiniteMagma.from_function(
        n * n, lambda p, q: g.conj(p // n, q // n) * n + g.conj(p // n, q % n)
    )


def action_product_rack(action: GroupAction) -> FiniteMagma:
    """``G ×_Φ X``: ``(g, x)(h, y) = (g h g^{-1}, Φ_g y)``, pairs as ``g*|X| + x``."""
    g, m = action.group, action.set_size
    return FiniteMagma.from_function(
        g.order * m, lambda p, q: g.conj(p // m, q // m) * m + action.phi[p // m][q % m]
    )


def transported_rack(g: FiniteGroup, a: SetMap) -> FiniteMagma:
    """``G ×_Ad^A G``: the adjoint product rack pulled back along ``ξ(g, h) = (A(h) g, h)``.

    Any map ``A`` is allowed here.
    """
    n = g.order
    _check_map(n, a)
    base = adjoint_product_rack(g).table

    def xi(p: int) -> int:
        x, h = divmod(p, n)
        return g.mul(a(h), x) * n + h

    def xi_inv(p: int) -> int:
        x, h = divmod(p, n)
        return g.mul(g.inv(a(h)), x) * n + h

    return FiniteMagma.from_function(n * n, lambda p, q: xi_inv(base[xi(p)][xi(q)]))


def product_rack(kind: str, **params) -> FiniteMagma:
    if kind == "adjoint":
        return adjoint_product_rack(params["group"])
    if kind == "action":
        return action_product_rack(params["action"])
    if kind == "transported":
        return transported_rack(params["group"], params["operator"])
    raise StructureError(f"unknown product rack kind {kind!r}", "kind")


def _closed(t: tuple, subset: Sequence[int]) -> bool:
    s = set(subset)
    return all(t[p][q] in s for p in s for q in s)


@dataclass(frozen=True)
class GraphCheck:
    graph_subrack: bool
    transported_subrack: bool


def graph_check(g: FiniteGroup, a: SetMap) -> GraphCheck:
    """Whether ``{(A(g), g)}`` is a subrack of ``G ×_Ad G`` and whether
    ``{e} × G`` is a subrack of the transported rack."""
    n = g.order
    _check_map(n, a)
    graph = [a(x) * n + x for x in range(n)]
    slice_ = [g.identity * n + x for x in range(n)]
    return GraphCheck(
        _closed(adjoint_product_rack(g).table, graph),
        _closed(transported_rack(g, a).table, slice_),
    )


def _check_relative_map(action: GroupAction, b: SetMap) -> None:
    if b.size != action.set_size:
        raise StructureError("operator must be defined on the acted-on set", "size")
    b.check_codomain(action.group.order)


def is_relative_averaging(action: GroupAction, b: SetMap) -> Verdict:
    """``B(x) B(y) B(x)^{-1} = B(Φ_{B(x)} y)`` for ``B: X -> G``."""
    _check_relative_map(action, b)
    g = action.group
    for x, y in product(range(action.set_size), repeat=2):
        if g.conj(b(x), b(y)) != b(action.phi[b(x)][y]):
            return fail((x, y), "relative_averaging")
    return PASS


def descendent_relative(action: GroupAction, b: SetMap) -> FiniteMagma:
    """``x ⋄_B y = Φ_{B(x)} y`` on the acted-on set."""
    v = is_relative_averaging(action, b)
    if not v:
        raise StructureError(f"operator is not relative averaging (fails at {v.witness})", "relative_averaging", v.witness)
    return FiniteMagma.from_function(action.set_size, lambda x, y: action.phi[b(x)][y])


def relative_graph_check(action: GroupAction, b: SetMap) -> bool:
    """Whether ``{(B(x), x)}`` is a subrack of ``G ×_Φ X``."""
    _check_relative_map(action, b)
    m = action.set_size
    return _closed(action_product_rack(action).table, [b(x) * m + x for x in range(m)])


def validate_rack_module(q: FiniteMagma, r: FiniteMagma, phi: Sequence[SetMap]) -> Verdict:
    """Each ``Φ_x`` is a rack automorphism of ``R`` and ``Φ_x Φ_y = Φ_{x⋄y} Φ_x``."""
    if len(phi) != q.size:
        return fail((), "shape")
    rt = r.table
    for x, f in enumerate(phi):
        if f.size != r.size or not f.is_bijective():
            return fail((x,), "bijective")
        for u, v in product(range(r.size), repeat=2):
            if f(rt[u][v]) != rt[f(u)][f(v)]:
                return fail((x, u, v), "automorphism")
    for x, y in product(range(q.size), repeat=2):
        if phi[x].compose(phi[y]) != phi[q.table[x][y]].compose(phi[x]):
            return fail((x, y), "module")
    return PASS


def is_relative_averaging_rack(q: FiniteMagma, r: FiniteMagma, phi: Sequence[SetMap], a: SetMap) -> Verdict:
    """``A(u) ⋄_Q A(v) = A(Φ_{A(u)} v)`` for ``A: R -> Q``."""
    require_rack(q, "base")
    require_rack(r, "module")
    module = validate_rack_module(q, r, phi)
    if not module:
        raise StructureError(f"not a rack module ({module.axiom} fails at {module.witness})", module.axiom, module.witness)
    if a.size != r.size:
        raise StructureError("operator must be defined on the module rack", "size")
    a.check_codomain(q.size)
    for u, v in product(range(r.size), repeat=2):
        if q.table[a(u)][a(v)] != a(phi[a(u)](v)):
            return fail((u, v), "relative_averaging")
    return PASS


def descendent_relative_rack(q: FiniteMagma, r: FiniteMagma, phi: Sequence[SetMap], a: SetMap) -> FiniteMagma:
    """``u ⋄_A v = Φ_{A(u)} v`` on the module rack."""
    v = is_relative_averaging_rack(q, r, phi, a)
    if not v:
        raise StructureError(f"operator is not relative averaging (fails at {v.witness})", "relative_averaging", v.witness)
    return FiniteMagma.from_function(r.size, lambda u, w: phi[a(u)](w))


@dataclass(frozen=True)
class HierarchyReport:
    tables: dict  # k -> table of x ⋄_{A^k} y
    failures: tuple  # (check name, k, l, witness)

    @property
    def ok(self) -> bool:
        return not self.failures


def power_hierarchy(q: Carrier, a: SetMap, kmax: int, lmax: int) -> HierarchyReport:
    """Check the rack hierarchy built from powers of an averaging operator.

    For ``1 <= k <= kmax`` and ``0 <= l <= lmax``: ``A^k`` is averaging on
    ``(Q, ⋄_{A^l})``, iterating descendents gives ``⋄_{A^{k+l}}`` and
    ``(Q, ⋄_{A^k}, ⋄_{A^{k+l}})`` is a rack-pairing.  A group is replaced
    by its conjugation rack.
    """
    from .pairings import RackPairing, is_rack_pairing

    _require_averaging(q, a)
    if isinstance(q, FiniteGroup):
        q = FiniteMagma(q.order, q.conjugation_table())
    n = q.size
    t = q.table
    powers = {0: SetMap.identity(n)}
    for k in range(1, kmax + lmax + 1):
        powers[k] = a.compose(powers[k - 1])
    tables = {
        k: FiniteMagma.from_function(n, lambda x, y, p=powers[k]: t[p(x)][y])
        for k in range(kmax + lmax + 1)
    }
    failures = []
    for k in range(1, kmax + 1):
        for l in range(lmax + 1):
            base = tables[l]
            v = is_averaging(base, powers[k])
            if not v:
                failures.append(("averaging", k, l, v.witness))
                continue
            iterated = FiniteMagma.from_function(n, lambda x, y: base.table[powers[k](x)][y])
            if iterated.table != tables[k + l].table:
                failures.append(("composition", k, l, ()))
            if not is_rack_pairing(RackPairing(tables[k], tables[k + l])):
                failures.append(("pairing", k, l, ()))
    return HierarchyReport(tables, tuple(failures))


def is_ad_invariant_map(g: FiniteGroup, c: SetMap) -> Verdict:
    """``C(g h g^{-1}) = g C(h) g^{-1}``."""
    _check_map(g.order, c)
    for x, h in product(range(g.order), repeat=2):
        if c(g.conj(x, h)) != g.conj(x, c(h)):
            return fail((x, h), "ad_invariance")
    return PASS


@dataclass(frozen=True)
class GroupRackEmbedding:
    """``(G, ◆)`` inside the descendent rack of ``Inn ⋉ G``.

    Elements of the product are pairs ``(L, y)`` flattened as ``L * |G| + y``
    with ``L`` indexing ``inn.elements``.
    """

    inn: PermutationClosure
    product: FiniteGroup
    operator: SetMap
    inclusion: SetMap


def embed_group_rack(g: FiniteGroup, diamond: FiniteMagma) -> GroupRackEmbedding:
    """Realise a pointed group-rack as a subgroup and subrack of a descendent rack."""
    from .pairings import is_group_rack

    check = is_group_rack(g, diamond, pointed=True)
    if not check:
        raise StructureError(
            f"not a pointed group-rack ({check.axiom} fails at {check.witness})", check.axiom, check.witness
        )
    n = g.order
    inn = permutation_closure([diamond.row(x) for x in range(n)], degree=n)
    prod = semidirect_product(inn.group, g, list(inn.elements))
    idx = {p: i for i, p in enumerate(inn.elements)}
    op = SetMap(prod.order, tuple(idx[diamond.row(p % n)] * n + g.identity for p in range(prod.order)))
    inc = SetMap(n, tuple(idx[SetMap.identity(n)] * n + x for x in range(n)))
    emb = GroupRackEmbedding(inn, prod, op, inc)
    problem = verify_group_rack_embedding(g, diamond, emb)
    if problem:
        raise StructureError(f"embedding check failed: {problem}", problem)
    return emb


def verify_group_rack_embedding(g: FiniteGroup, diamond: FiniteMagma, emb: GroupRackEmbedding) -> str:
    """Return an empty string when every embedding property holds, else the failing one."""
    n = g.order
    i = emb.inclusion
    if not is_averaging(emb.product, emb.operator):
        return "averaging"
    if len(set(i.image)) != n:
        return "injective"
    if not g.is_homomorphism_to(i, emb.product):
        return "group_homomorphism"
    desc = descendent_rack(emb.product, emb.operator)
    for x, y in product(range(n), repeat=2):
        if i(diamond.table[x][y]) != desc.table[i(x)][i(y)]:
            return "rack_homomorphism"
    return ""
