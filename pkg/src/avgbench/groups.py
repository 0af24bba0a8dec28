"""Finite groups, actions, automorphism groups and semidirect products."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations, product
from typing import Optional, Sequence

from .magma import (
    FiniteMagma,
    GuardExceeded,
    SetMap,
    StructureError,
    Verdict,
    PASS,
    fail,
    magma_automorphisms,
)


@dataclass(frozen=True)
class FiniteGroup:
    magma: FiniteMagma
    identity: int
    inverse: tuple

    @property
    def order(self) -> int:
        return self.magma.size

    @property
    def table(self) -> tuple:
        return self.magma.table

    @property
    def labels(self):
        return self.magma.labels

    def mul(self, a: int, b: int) -> int:
        return self.magma.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, g: int, h: int) -> int:
        """``g h g^{-1}``."""
        t = self.magma.table
        return t[t[g][h]][self.inverse[g]]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inverse[g], -k
        out = self.identity
        for _ in range(k):
            out = self.mul(out, g)
        return out

    def is_abelian(self) -> bool:
        t = self.magma.table
        n = self.order
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    def is_homomorphism_to(self, f: SetMap, other: "FiniteGroup") -> bool:
        a, b = self.table, other.table
        return all(f(a[x][y]) == b[f(x)][f(y)] for x, y in product(range(self.order), repeat=2))

    def is_automorphism(self, f: SetMap) -> bool:
        return f.size == self.order and f.is_bijective() and self.is_homomorphism_to(f, self)

    def conjugation_table(self) -> tuple:
        n = self.order
        return tuple(tuple(self.conj(g, h) for h in range(n)) for g in range(n))


def validate_group(m: FiniteMagma) -> FiniteGroup:
    """Return the group structure on ``m`` or raise naming the failing axiom."""
    n = m.size
    t = m.table
    for a, b, c in product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            raise StructureError(f"associativity fails at {(a, b, c)}", "associativity", (a, b, c))
    identity = next(
        (e for e in range(n) if all(t[e][x] == x and t[x][e] == x for x in range(n))), None
    )
    if identity is None:
        raise StructureError("no two-sided identity element", "identity")
    inverse = []
    for a in range(n):
        b = next((b for b in range(n) if t[a][b] == identity and t[b][a] == identity), None)
        if b is None:
            raise StructureError(f"element {a} has no inverse", "inverse", (a,))
        inverse.append(b)
    return FiniteGroup(m, identity, tuple(inverse))


def group_from_function(n: int, op, labels=None) -> FiniteGroup:
    m = FiniteMagma.from_function(n, op)
    if labels is not None:
        m = FiniteMagma(n, m.table, tuple(labels))
    return validate_group(m)


def cyclic_group(n: int) -> FiniteGroup:
    return group_from_function(n, lambda a, b: (a + b) % n)


def trivial_group() -> FiniteGroup:
    return cyclic_group(1)


def permutation_group(perms: Sequence[tuple], labels=None) -> FiniteGroup:
    """Group of the given permutations under composition ``(p·q)(x) = p(q(x))``.

    The list must be closed under composition.
    """
    perms = [tuple(p) for p in perms]
    index = {p: i for i, p in enumerate(perms)}
    if len(index) != len(perms):
        raise StructureError("duplicate permutations", "distinct")

    def op(i: int, j: int) -> int:
        p, q = perms[i], perms[j]
        c = tuple(p[x] for x in q)
        if c not in index:
            raise StructureError("permutation list is not closed under composition", "closure", (i, j))
        return index[c]

    return group_from_function(len(perms), op, labels)


def symmetric_group(k: int) -> FiniteGroup:
    """``S_k`` with elements in lexicographic order (identity is element 0)."""
    perms = list(permutations(range(k)))
    return permutation_group(perms, ["".join(str(v) for v in p) for p in perms])


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of an ``n``-gon, as ``(s, r) -> r^r s^s``; ``n >= 3`` gives ``D_n``."""
    elements = [(s, r) for s in range(2) for r in range(n)]
    index = {e: i for i, e in enumerate(elements)}

    def op(i, j):
        s1, r1 = elements[i]
        s2, r2 = elements[j]
        r = (r1 + (r2 if s1 == 0 else -r2)) % n
        return index[((s1 + s2) % 2, r)]

    return group_from_function(2 * n, op)


def quaternion_group() -> FiniteGroup:
    # elements ±1, ±i, ±j, ±k encoded as (sign, unit) with unit in 1,i,j,k
    units = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
             ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
             ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
             ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1")}
    elements = [(s, u) for s in (1, -1) for u in "1ijk"]
    index = {e: i for i, e in enumerate(elements)}

    def op(a, b):
        s1, u1 = elements[a]
        s2, u2 = elements[b]
        s, u = units[(u1, u2)]
        return index[(s1 * s2 * s, u)]

    labels = [("" if s == 1 else "-") + u for s, u in elements]
    return group_from_function(8, op, labels)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Pairs ``(a, b)`` flattened as ``a * |H| + b``."""
    m = h.order
    return group_from_function(
        g.order * m,
        lambda x, y: g.mul(x // m, y // m) * m + h.mul(x % m, y % m),
    )


def small_groups() -> dict:
    """A catalogue of groups of order at most 8 used for exhaustive checks."""
    return {
        "Z1": cyclic_group(1),
        "Z2": cyclic_group(2),
        "Z3": cyclic_group(3),
        "Z4": cyclic_group(4),
        "Z2xZ2": direct_product(cyclic_group(2), cyclic_group(2)),
        "Z5": cyclic_group(5),
        "Z6": cyclic_group(6),
        "S3": symmetric_group(3),
        "Z7": cyclic_group(7),
        "Z8": cyclic_group(8),
        "Z2xZ4": direct_product(cyclic_group(2), cyclic_group(4)),
        "Z2xZ2xZ2": direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2)),
        "D4": dihedral_group(4),
        "Q8": quaternion_group(),
    }


def automorphism_group(g: FiniteGroup, max_size: int = 12) -> list:
    """All automorphisms of ``g``, sorted lexicographically by image."""
    if g.order > max_size:
        raise GuardExceeded(
            f"automorphism search refused: group order {g.order} exceeds guard {max_size}", "max_size"
        )
    return magma_automorphisms(g.magma, fixed=[(g.identity, g.identity)], max_size=max_size)


@dataclass(frozen=True)
class PermutationClosure:
    elements: tuple  # SetMaps, sorted; identity first
    group: FiniteGroup

    def index(self, p: SetMap) -> int:
        return self.elements.index(p)


def permutation_closure(generators: Sequence[SetMap], degree: Optional[int] = None) -> PermutationClosure:
    """The group generated by the given permutations, in lexicographic order."""
    gens = list(generators)
    if degree is None:
        if not gens:
            raise StructureError("degree is required when there are no generators", "degree")
        degree = gens[0].size
    for p in gens:
        if p.size != degree or not p.is_bijective():
            raise StructureError("generators must be permutations of one degree", "bijectivity")
    start = SetMap.identity(degree)
    seen = {start}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for s in gens:
            q = s.compose(p)
            if q not in seen:
                seen.add(q)
                queue.append(q)
    elements = tuple(sorted(seen, key=lambda s: s.image))
    return PermutationClosure(elements, permutation_group([e.image for e in elements]))


@dataclass(frozen=True)
class GroupAction:
    """A left action ``phi[g][x] = Φ_g(x)`` of ``group`` on ``0..set_size-1``."""

    group: FiniteGroup
    set_size: int
    phi: tuple

    def __post_init__(self):
        phi = tuple(tuple(int(v) for v in row) for row in self.phi)
        if len(phi) != self.group.order or any(len(r) != self.set_size for r in phi):
            raise StructureError("phi must have one row per group element, one entry per point", "shape")
        for g, row in enumerate(phi):
            for x, v in enumerate(row):
                if not 0 <= v < self.set_size:
                    raise StructureError(f"phi[{g}][{x}] = {v} is out of range", "range", (g, x))
        object.__setattr__(self, "phi", phi)

    def act(self, g: int, x: int) -> int:
        return self.phi[g][x]


def validate_action(a: GroupAction) -> Verdict:
    g = a.group
    for x in range(a.set_size):
        if a.phi[g.identity][x] != x:
            return fail((x,), "identity")
    for s, t in product(range(g.order), repeat=2):
        st = g.mul(s, t)
        for x in range(a.set_size):
            if a.phi[st][x] != a.phi[s][a.phi[t][x]]:
                return fail((s, t, x), "compatibility")
    return PASS


def adjoint_action(g: FiniteGroup) -> GroupAction:
    return GroupAction(g, g.order, g.conjugation_table())


def action_by_automorphisms(g: FiniteGroup, h: FiniteGroup, hom: Sequence[SetMap]) -> GroupAction:
    return GroupAction(g, h.order, tuple(f.image for f in hom))


def validate_automorphic_action(g: FiniteGroup, h: FiniteGroup, hom: Sequence[SetMap]) -> Verdict:
    if len(hom) != g.order:
        return fail((), "shape")
    for s, f in enumerate(hom):
        if f.size != h.order or not h.is_automorphism(f):
            return fail((s,), "automorphism")
    return validate_action(action_by_automorphisms(g, h, hom))


def semidirect_product(g: FiniteGroup, h: FiniteGroup, hom: Sequence[SetMap]) -> FiniteGroup:
    """``G ⋉ H`` with ``(a, x)(b, y) = (ab, x Φ_a(y))``, pairs flattened as ``a * |H| + x``."""
    check = validate_automorphic_action(g, h, hom)
    if not check:
        raise StructureError(
            f"not an action by automorphisms ({check.axiom} fails at {check.witness})",
            check.axiom, check.witness,
        )
    m = h.order
    return group_from_function(
        g.order * m,
        lambda p, q: g.mul(p // m, q // m) * m + h.mul(p % m, hom[p // m](q % m)),
    )


def find_isomorphism(g: FiniteGroup, h: FiniteGroup) -> Optional[SetMap]:
    """Brute-force isomorphism search for small groups."""
    if g.order != h.order:
        return None
    n = g.order
    for perm in permutations(range(n)):
        f = SetMap(n, perm)
        if f(g.identity) == h.identity and g.is_homomorphism_to(f, h):
            return f
    return None
