"""One test per acceptance criterion; each prints a single pass/fail line."""

import random
from itertools import product

import builders
import oracles
from avgbench.averaging import (
    embed_group_rack,
    enumerate_averaging,
    graph_check,
    is_averaging,
    power_hierarchy,
    verify_group_rack_embedding,
)
from avgbench.group_algebra import extend_operator, is_coalgebra_map, is_hopf_averaging, restrict_operator
from avgbench.groups import automorphism_group, small_groups
from avgbench.leibniz import (
    check_leibniz,
    check_lie,
    embed_di_leibniz,
    embed_lie_leibniz,
    induced_di_leibniz,
    is_linear_averaging,
    is_relative_averaging_linear,
    leibnizification,
    braided_averaging_check,
    braided_from_lie,
    ybe_linear_check,
)
from avgbench.magma import FiniteMagma, SetMap, enumerate_racks, first_nonbijective_row, flip_rack, is_rack, standard_rack
from avgbench.pairings import (
    DiRack,
    RackPairing,
    dirack_from_pairing,
    enumerate_regular_subracks,
    is_dirack,
    is_group_rack,
    is_rack_pairing,
    pairing_from_dirack,
    pairing_from_subrack,
    subrack_from_pairing,
)
from avgbench.ybe import braided_from_rack, is_braided_averaging, is_ybe_solution
from test_leibniz import LIE_LEIBNIZ, WORKED

GROUPS_UP_TO_6 = {k: g for k, g in small_groups().items() if g.order <= 6}
RACKS_UP_TO_3 = [m for n in (1, 2, 3) for m in enumerate_racks(n)]


def rows(x):
    return [list(r) for r in x]


def test_flip_rack_averaging_counts(criterion):
    expected = {2: 2, 3: 3, 4: 16, 5: 25, 6: 216}
    with criterion(1, "flip-rack averaging operators equal the characterized set, n = 2..6", 5):
        got = {n: [list(a.image) for a in enumerate_averaging(flip_rack(n))] for n in expected}
    for n, maps in got.items():
        assert len(maps) == expected[n]
        assert maps == oracles.flip_characterized(n)
        assert maps == oracles.averaging_maps_rack(rows(flip_rack(n).table))


def test_abelian_groups_every_map(criterion):
    with criterion(2, "every map on Z2, Z3, Z4 is averaging (4, 27, 256)", 5):
        counts = {}
        for name in ("Z2", "Z3", "Z4"):
            g = small_groups()[name]
            maps = [SetMap(g.order, m) for m in product(range(g.order), repeat=g.order)]
            counts[name] = sum(1 for a in maps if is_averaging(g, a))
        assert counts == {"Z2": 4, "Z3": 27, "Z4": 256}


def test_group_and_conjugation_rack_agree(criterion):
    with criterion(3, "group and conjugation-rack averaging sets coincide, order <= 6", 60):
        for name, g in GROUPS_UP_TO_6.items():
            on_group = enumerate_averaging(g)
            on_rack = enumerate_averaging(standard_rack("conjugation", group=g))
            assert on_group == on_rack, name
            assert len(on_group) > 0


def test_graph_criteria(criterion):
    with criterion(4, "graph and transported-slice subracks iff averaging, order <= 4", 30):
        checked = 0
        for name, g in GROUPS_UP_TO_6.items():
            if g.order > 4:
                continue
            for m in product(range(g.order), repeat=g.order):
                a = SetMap(g.order, m)
                gc = graph_check(g, a)
                avg = bool(is_averaging(g, a))
                assert gc.graph_subrack == avg, (name, m)
                assert gc.transported_subrack == avg, (name, m)
                checked += 1
        assert checked == 1 + 4 + 27 + 256 + 256


def test_power_hierarchy(criterion):
    with criterion(5, "descendent hierarchy pairings and composition, racks of size <= 3", 60):
        racks = [FiniteMagma(len(t), t) for n in (1, 2, 3) for t in oracles.all_racks(n)]
        assert sorted(m.table for m in racks) == sorted(m.table for m in RACKS_UP_TO_3)
        failures = 0
        for q in racks:
            for a in enumerate_averaging(q):
                rep = power_hierarchy(q, a, 2, 2)
                failures += len(rep.failures)
                # k = 0: (Q, ⋄, ⋄_{A^l}) is a rack-pairing as well
                for l in range(3):
                    failures += not is_rack_pairing(RackPairing(rep.tables[0], rep.tables[l]))
        assert failures == 0


def test_holomorph_bijection(criterion):
    with criterion(6, "regular subracks of the holomorph biject with rack-pairings, size <= 3", 60):
        for q in RACKS_UP_TO_3:
            sections = enumerate_regular_subracks(q)
            pairings = [m for m in enumerate_racks(q.size) if is_rack_pairing(RackPairing(q, m))]
            assert len(sections) == len(pairings)
            assert {pairing_from_subrack(q, s).blackdiamond for s in sections} == set(pairings)
            for s in sections:
                assert subrack_from_pairing(pairing_from_subrack(q, s)) == s
            for m in pairings:
                assert pairing_from_subrack(q, subrack_from_pairing(RackPairing(q, m))).blackdiamond == m
        oracle_total = sum(len(oracles.pairings_over(rows(q.table))) for q in RACKS_UP_TO_3)
        assert oracle_total == sum(len(enumerate_regular_subracks(q)) for q in RACKS_UP_TO_3) == 73


def _all_diracks(n):
    perms = [tuple(p) for p in product(range(n), repeat=n) if len(set(p)) == n]
    for q in enumerate_racks(n):
        for tri in product(perms, repeat=n):
            d = DiRack(q, FiniteMagma(n, tri))
            if is_dirack(d):
                yield d


def test_dirack_round_trip(criterion):
    with criterion(7, "pairing <-> di-rack round trips are table identities, size <= 3"):
        pairings = diracks = 0
        for q in RACKS_UP_TO_3:
            for m in enumerate_racks(q.size):
                p = RackPairing(q, m)
                if is_rack_pairing(p):
                    assert pairing_from_dirack(dirack_from_pairing(p)) == p
                    pairings += 1
        for n in (1, 2, 3):
            for d in _all_diracks(n):
                assert dirack_from_pairing(pairing_from_dirack(d)) == d
                diracks += 1
        assert pairings == diracks == 73


def _pointed_group_racks(g):
    """All pointed group-racks on ``g`` by brute force over automorphism rows."""
    auts = automorphism_group(g)
    others = [x for x in range(g.order) if x != g.identity]
    for choice in product(auts, repeat=len(others)):
        rows_ = [None] * g.order
        rows_[g.identity] = SetMap.identity(g.order).image
        for x, f in zip(others, choice):
            rows_[x] = f.image
        m = FiniteMagma(g.order, rows_)
        if is_group_rack(g, m, pointed=True):
            yield m


def test_embedding_theorems(criterion):
    with criterion(8, "group-rack, di-Leibniz and Lie-Leibniz embeddings verified", 60):
        group_racks = 0
        for name, g in GROUPS_UP_TO_6.items():
            for bd in _pointed_group_racks(g):
                emb = embed_group_rack(g, bd)
                assert verify_group_rack_embedding(g, bd, emb) == ""
                assert oracles.group_averaging(rows(emb.product.table), list(emb.product.inverse), list(emb.operator.image))
                group_racks += 1
        assert group_racks >= len(GROUPS_UP_TO_6)
        for name, make in WORKED.items():
            d = make()
            assert d.dim <= 4
            emb = embed_di_leibniz(d)
            assert check_leibniz(emb.ambient) and is_linear_averaging("leibniz", emb.ambient, emb.operator)
            assert emb.inclusion.is_injective()
            i, p = emb.inclusion, emb.operator
            for x, y in product(range(d.dim), repeat=2):
                assert i(d.left.basis(x, y)) == emb.ambient.bracket(i.column(x), p(i.column(y)))
                assert i(d.right.basis(x, y)) == emb.ambient.bracket(p(i.column(x)), i.column(y))
        for name, (make, _) in LIE_LEIBNIZ.items():
            ll = make()
            emb = embed_lie_leibniz(ll)
            assert check_lie(emb.ambient) and is_linear_averaging("lie", emb.ambient, emb.operator)
            assert emb.inclusion.is_injective()
            i, p = emb.inclusion, emb.operator
            for x, y in product(range(ll.dim), repeat=2):
                assert i(ll.lie.basis(x, y)) == emb.ambient.bracket(i.column(x), i.column(y))
                assert i(ll.leib.basis(x, y)) == emb.ambient.bracket(p(i.column(x)), i.column(y))


def test_leibnizification(criterion):
    with criterion(9, "leibnizification recovers 50 random instances and the worked examples"):
        rng = random.Random(20240917)
        cases = []
        for _ in range(50):
            h, rep, p = builders.random_relative_instance(rng)
            assert oracles.relative_averaging(rows(h.c), rows(rep.rhoL), rows(rep.rhoR), rows(p.m))
            cases.append(induced_di_leibniz(h, rep, p))
        cases += [make() for make in WORKED.values()]
        for d in cases:
            lz = leibnizification(d)
            assert is_relative_averaging_linear(lz.bracket, lz.rep, lz.q)
            back = induced_di_leibniz(lz.bracket, lz.rep, lz.q)
            assert back.left.c == d.left.c and back.right.c == d.right.c


def test_hopf_correspondence(criterion):
    with criterion(10, "extension is a bijection onto group-like Hopf averaging operators, order <= 6", 60):
        for name, g in GROUPS_UP_TO_6.items():
            averaging = set(enumerate_averaging(g))
            hopf = set()
            for m in product(range(g.order), repeat=g.order):
                a = SetMap(g.order, m)
                b = extend_operator(g, a)
                assert is_coalgebra_map(g, b)
                assert restrict_operator(g, b) == a
                if is_hopf_averaging(g, b):
                    hopf.add(a)
            assert hopf == averaging, name


def test_ybe_iff(criterion):
    with criterion(11, "braided-set YBE iff rack; braided averaging iff averaging", 120):
        tables = 0
        for n in (1, 2, 3):
            perms = [p for p in product(range(n), repeat=n) if len(set(p)) == n]
            for rows_ in product(perms, repeat=n):
                m = FiniteMagma(n, rows_)
                assert first_nonbijective_row(m) is None
                assert bool(is_ybe_solution(braided_from_rack(m))) == is_rack(m)
                tables += 1
        assert tables == 1 + 4 + 216
        for n in (1, 2, 3, 4):
            maps = [SetMap(n, m) for m in product(range(n), repeat=n)]
            for q in enumerate_racks(n):
                s = braided_from_rack(q)
                for a in maps:
                    assert bool(is_braided_averaging(s, a)) == bool(is_averaging(q, a))


def test_braided_vector_space(criterion):
    with criterion(12, "linear YBE iff Jacobi; braided averaging iff Lie averaging", 30):
        rng = random.Random(31337)
        modes = ["lie"] * 7 + ["perturbed"] * 7 + ["random"] * 6
        truth = []
        for mode in modes:
            g = builders.random_skew_bracket(rng, mode)
            jac = oracles.jacobi(rows(g.c))
            assert ybe_linear_check(braided_from_lie(g)) == jac == bool(check_lie(g))
            truth.append(jac)
        assert True in truth and False in truth
        truth = []
        for i in range(20):
            g, p = builders.random_sl2_operator(rng, averaging=i % 2 == 0)
            avg = oracles.lie_averaging(rows(g.c), rows(p.m))
            assert braided_averaging_check(g, p) == avg == bool(is_linear_averaging("lie", g, p))
            truth.append(avg)
        assert True in truth and False in truth
