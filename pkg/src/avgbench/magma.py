"""Finite magmas stored as Cayley tables, and rack/quandle axiom checks.

Elements of a carrier of size ``n`` are the integers ``0..n-1``.  A table
row ``table[x]`` is the left translation ``L_x = x ⋄ -``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence


class StructureError(ValueError):
    """An axiom failed or an input is malformed.

    ``axiom`` names what failed and ``witness`` holds the offending elements.
    """

    def __init__(self, message: str, axiom: str = "", witness: tuple = ()):
        super().__init__(message)
        self.axiom = axiom
        self.witness = tuple(witness)


class GuardExceeded(StructureError):
    """A size cap on an exhaustive search was exceeded."""


@dataclass(frozen=True)
class Verdict:
    """Outcome of an identity check: truthiness plus the first counterexample."""

    ok: bool
    witness: Optional[tuple] = None
    axiom: str = ""

    def __bool__(self) -> bool:
        return self.ok


PASS = Verdict(True)


def fail(witness, axiom: str = "") -> Verdict:
    return Verdict(False, tuple(witness), axiom)


@dataclass(frozen=True)
class FiniteMagma:
    size: int
    table: tuple
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        n = self.size
        if n < 1:
            raise StructureError("magma size must be positive", "size")
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        if len(table) != n or any(len(row) != n for row in table):
            raise StructureError(f"table must be {n}x{n}", "shape")
        for x, row in enumerate(table):
            for y, v in enumerate(row):
                if not 0 <= v < n:
                    raise StructureError(
                        f"table[{x}][{y}] = {v} is outside 0..{n - 1}", "range", (x, y)
                    )
        object.__setattr__(self, "table", table)
        if self.labels is not None:
            if len(self.labels) != n:
                raise StructureError("labels must have one entry per element", "labels")
            object.__setattr__(self, "labels", tuple(self.labels))

    @classmethod
    def from_function(cls, n: int, op) -> "FiniteMagma":
        return cls(n, tuple(tuple(op(x, y) for y in range(n)) for x in range(n)))

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def row(self, x: int) -> "SetMap":
        return SetMap(self.size, self.table[x])

    def column(self, y: int) -> tuple:
        return tuple(self.table[x][y] for x in range(self.size))

    def elements(self) -> range:
        return range(self.size)


@dataclass(frozen=True)
class SetMap:
    size: int
    image: tuple

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        if len(image) != self.size:
            raise StructureError(f"map on {self.size} points needs {self.size} images", "shape")
        object.__setattr__(self, "image", image)

    def check_codomain(self, m: int) -> None:
        for x, v in enumerate(self.image):
            if not 0 <= v < m:
                raise StructureError(f"image[{x}] = {v} is outside 0..{m - 1}", "range", (x,))

    @classmethod
    def identity(cls, n: int) -> "SetMap":
        return cls(n, tuple(range(n)))

    @classmethod
    def constant(cls, n: int, value: int) -> "SetMap":
        return cls(n, (value,) * n)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __iter__(self) -> Iterator[int]:
        return iter(self.image)

    def compose(self, other: "SetMap") -> "SetMap":
        """``self ∘ other``: apply ``other`` first."""
        return SetMap(other.size, tuple(self.image[v] for v in other.image))

    def power(self, k: int) -> "SetMap":
        out = SetMap.identity(self.size)
        for _ in range(k):
            out = self.compose(out)
        return out

    def is_bijective(self) -> bool:
        return sorted(self.image) == list(range(self.size))

    def inverse(self) -> "SetMap":
        if not self.is_bijective():
            raise StructureError("map is not a bijection", "bijectivity")
        inv = [0] * self.size
        for x, v in enumerate(self.image):
            inv[v] = x
        return SetMap(self.size, tuple(inv))


@dataclass(frozen=True)
class Witness:
    axiom: str
    elements: tuple


@dataclass(frozen=True)
class RackReport:
    is_rack: bool
    is_quandle: bool
    pointed_elements: tuple
    witnesses: tuple

    def to_dict(self) -> dict:
        return {
            "is_rack": self.is_rack,
            "is_quandle": self.is_quandle,
            "pointed_elements": list(self.pointed_elements),
            "witnesses": [{"axiom": w.axiom, "elements": list(w.elements)} for w in self.witnesses],
        }


RACK_AXIOMS = ("left_distributivity", "bijective_translations")


def first_distributivity_failure(m: FiniteMagma) -> Optional[tuple]:
    t = m.table
    for x, y, z in product(range(m.size), repeat=3):
        if t[x][t[y][z]] != t[t[x][y]][t[x][z]]:
            return (x, y, z)
    return None


def first_nonbijective_row(m: FiniteMagma) -> Optional[int]:
    for x in range(m.size):
        if len(set(m.table[x])) != m.size:
            return x
    return None


def pointed_elements(m: FiniteMagma) -> tuple:
    t = m.table
    return tuple(
        e for e in range(m.size) if all(t[x][e] == e and t[e][x] == x for x in range(m.size))
    )


def validate_rack(m: FiniteMagma, pointed_at: Optional[int] = None) -> RackReport:
    witnesses = []
    ld = first_distributivity_failure(m)
    if ld is not None:
        witnesses.append(Witness("left_distributivity", ld))
    row = first_nonbijective_row(m)
    if row is not None:
        witnesses.append(Witness("bijective_translations", (row,)))
    is_rack = not witnesses
    idem = next((x for x in range(m.size) if m.table[x][x] != x), None)
    if idem is not None:
        witnesses.append(Witness("idempotency", (idem,)))
    pointed = pointed_elements(m)
    if pointed_at is not None and pointed_at not in pointed:
        witnesses.append(Witness("pointed", (pointed_at,)))
    return RackReport(is_rack, is_rack and idem is None, pointed, tuple(witnesses))


def is_rack(m: FiniteMagma) -> bool:
    return first_nonbijective_row(m) is None and first_distributivity_failure(m) is None


def require_rack(m: FiniteMagma, what: str = "carrier") -> None:
    report = validate_rack(m)
    if not report.is_rack:
        w = next(w for w in report.witnesses if w.axiom in RACK_AXIOMS)
        raise StructureError(f"{what} is not a rack ({w.axiom} fails at {w.elements})", w.axiom, w.elements)


def trivial_rack(n: int) -> FiniteMagma:
    return FiniteMagma.from_function(n, lambda x, y: y)


def flip_rack(n: int) -> FiniteMagma:
    if n < 1:
        raise StructureError("flip rack needs n >= 1", "size")
    return FiniteMagma.from_function(n, lambda x, y: n - 1 - y)


def _require_abelian(group, kind: str) -> None:
    if not group.is_abelian():
        raise StructureError(f"{kind} quandle needs an abelian group", "abelian")


def takasaki_quandle(group) -> FiniteMagma:
    _require_abelian(group, "takasaki")
    mul, inv = group.table, group.inverse
    return FiniteMagma.from_function(group.order, lambda a, b: mul[mul[a][a]][inv[b]])


def alexander_quandle(group, t: SetMap) -> FiniteMagma:
    _require_abelian(group, "alexander")
    if not group.is_automorphism(t):
        raise StructureError("alexander quandle needs a group automorphism t", "automorphism")
    mul, inv = group.table, group.inverse
    # (Id - t)(a) + t(b), written multiplicatively
    return FiniteMagma.from_function(group.order, lambda a, b: mul[mul[a][inv[t(a)]]][t(b)])


def conjugation_rack(group) -> FiniteMagma:
    mul, inv = group.table, group.inverse
    return FiniteMagma.from_function(group.order, lambda g, h: mul[mul[g][h]][inv[g]])


def standard_rack(kind: str, **params) -> FiniteMagma:
    """Build one of the named racks: trivial, flip, takasaki, alexander, conjugation."""
    if kind == "trivial":
        return trivial_rack(params["n"])
    if kind == "flip":
        return flip_rack(params["n"])
    if kind == "takasaki":
        return takasaki_quandle(params["group"])
    if kind == "alexander":
        return alexander_quandle(params["group"], params["t"])
    if kind == "conjugation":
        return conjugation_rack(params["group"])
    raise StructureError(f"unknown rack kind {kind!r}", "kind")


def is_rack_homomorphism(f: SetMap, q: FiniteMagma, q2: FiniteMagma) -> bool:
    if f.size != q.size:
        raise StructureError("map size does not match the source rack", "size")
    f.check_codomain(q2.size)
    a, b = q.table, q2.table
    return all(f(a[x][y]) == b[f(x)][f(y)] for x, y in product(range(q.size), repeat=2))


def is_subrack(subset: Iterable[int], q: FiniteMagma) -> bool:
    s = set(subset)
    for x in s:
        if not 0 <= x < q.size:
            raise StructureError(f"element {x} is outside 0..{q.size - 1}", "range", (x,))
    return all(q.table[x][y] in s for x in s for y in s)


def is_complete_rack(q: FiniteMagma) -> bool:
    return all(len(set(q.column(x))) == q.size for x in range(q.size))


def left_translations(q: FiniteMagma) -> list:
    return [q.row(x) for x in range(q.size)]


def enumerate_racks(n: int) -> list:
    """All rack tables on ``n`` points, in lexicographic row order.

    Rows are permutations; a row set is kept only if
    ``L_{x⋄y} = L_x L_y L_x^{-1}`` holds, checked as rows get fixed.
    """
    from itertools import permutations

    perms = list(permutations(range(n)))
    rows: list = [None] * n
    out = []

    def consistent(k: int) -> bool:
        # every (x, y) whose rows x, y and x⋄y are now fixed and involve row k
        for x in range(k + 1):
            lx = rows[x]
            for y in range(k + 1):
                z = lx[y]
                if z > k or k not in (x, y, z):
                    continue
                ly, lz = rows[y], rows[z]
                if any(lx[ly[w]] != lz[lx[w]] for w in range(n)):
                    return False
        return True

    def extend(k: int) -> None:
        if k == n:
            out.append(FiniteMagma(n, tuple(rows)))
            return
        for p in perms:
            rows[k] = p
            if consistent(k):
                extend(k + 1)
        rows[k] = None

    extend(0)
    return out


def all_tables(n: int) -> Iterator[FiniteMagma]:
    for flat in product(range(n), repeat=n * n):
        yield FiniteMagma(n, tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n)))


def magma_automorphisms(m: FiniteMagma, fixed: Sequence[tuple] = (), max_size: int = 12) -> list:
    """All bijections ``f`` with ``f(x⋄y) = f(x)⋄f(y)``, sorted by image.

    Backtracking with propagation: once ``f(x)`` and ``f(y)`` are known,
    ``f(x⋄y)`` is forced.
    """
    n = m.size
    if n > max_size:
        raise GuardExceeded(f"automorphism search refused: size {n} exceeds guard {max_size}", "max_size")
    t = m.table
    f = [-1] * n
    used = [False] * n
    found = []

    def assign(x: int, v: int, trail: list) -> bool:
        if f[x] >= 0:
            return f[x] == v
        if used[v]:
            return False
        f[x] = v
        used[v] = True
        trail.append(x)
        return True

    def propagate(trail: list) -> bool:
        changed = True
        while changed:
            changed = False
            known = [x for x in range(n) if f[x] >= 0]
            for x in known:
                for y in known:
                    z = t[x][y]
                    target = t[f[x]][f[y]]
                    if f[z] < 0:
                        if not assign(z, target, trail):
                            return False
                        changed = True
                    elif f[z] != target:
                        return False
        return True

    def undo(trail: list) -> None:
        for x in trail:
            used[f[x]] = False
            f[x] = -1

    def search() -> None:
        x = next((i for i in range(n) if f[i] < 0), None)
        if x is None:
            found.append(SetMap(n, tuple(f)))
            return
        for v in range(n):
            if used[v]:
                continue
            trail: list = []
            if assign(x, v, trail) and propagate(trail):
                search()
            undo(trail)

    trail0: list = []
    if all(assign(x, v, trail0) for x, v in fixed) and propagate(trail0):
        search()
    return sorted(found, key=lambda s: s.image)
