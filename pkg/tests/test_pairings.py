from itertools import product

import pytest
from hypothesis import given, strategies as st

import oracles
from avgbench.averaging import descendent_rack, enumerate_averaging
from avgbench.groups import cyclic_group, small_groups, symmetric_group
from avgbench.magma import FiniteMagma, SetMap, StructureError, enumerate_racks, flip_rack, is_rack, standard_rack, trivial_rack
from avgbench.pairings import (
    DiRack,
    RackPairing,
    brace_averaging_pairing,
    brace_direct_product,
    brace_lemma_check,
    brace_to_pairing,
    classify_pairing,
    descendent_pairing,
    dirack_from_pairing,
    enumerate_rack_pairings,
    enumerate_regular_subracks,
    holomorph,
    is_dirack,
    is_group_rack,
    is_lambda_homomorphic,
    is_rack_k_pairing,
    is_rack_module,
    is_rack_pairing,
    is_symmetric,
    k_pairing_from_averaging,
    lambda_criterion,
    opposite_brace,
    pairing_from_dirack,
    pairing_from_subrack,
    recover_averaging,
    skew_brace_averaging,
    subrack_from_pairing,
    symmetric_criterion,
    trivial_brace,
    validate_skew_brace,
)

RACKS_3 = [m for n in (1, 2, 3) for m in enumerate_racks(n)]
S3 = symmetric_group(3)


def z4_brace():
    return validate_skew_brace(
        FiniteMagma.from_function(4, lambda x, y: (x + y) % 4),
        FiniteMagma.from_function(4, lambda x, y: (x + y + 2 * x * y) % 4),
    )


def test_rack_with_itself_is_pairing():
    for q in RACKS_3:
        assert is_rack_pairing(RackPairing(q, q))


def test_pairing_compatibility_failure_has_witness():
    # flip rack paired with a 3-cycle translation rack fails compatibility
    q = trivial_rack(3)
    b = FiniteMagma(3, [[1, 2, 0]] * 3)
    assert is_rack(b)
    assert is_rack_pairing(RackPairing(q, b))
    v = is_rack_pairing(RackPairing(b, flip_rack(3)))
    assert not v and v.axiom == "compatibility"
    x, y, z = v.witness
    f, c = flip_rack(3).table, b.table
    assert f[x][c[y][z]] != c[f[x][y]][f[x][z]]


def test_pairing_needs_racks():
    lp = FiniteMagma.from_function(2, lambda x, y: x)
    v = is_rack_pairing(RackPairing(trivial_rack(2), lp))
    assert not v and v.axiom == "black_bijective_translations"


def test_pairings_match_oracle_on_all_small_racks():
    total = 0
    for q in RACKS_3:
        got = sorted(p.blackdiamond.table for p in enumerate_rack_pairings(q))
        want = sorted(tuple(tuple(r) for r in b) for b in oracles.pairings_over([list(r) for r in q.table]))
        assert got == want
        total += len(got)
    assert total == 73


def test_holomorph_is_rack():
    for q in RACKS_3:
        h = holomorph(q)
        assert is_rack(h.magma())


@pytest.mark.parametrize("idx", range(len(RACKS_3)))
def test_regular_subracks_are_closed_and_regular(idx):
    q = RACKS_3[idx]
    h = holomorph(q)
    table = h.magma().table
    for sec in enumerate_regular_subracks(q):
        elems = h.section_elements(sec)
        assert sorted(e % q.size for e in elems) == list(range(q.size))
        assert all(table[a][b] in elems for a in elems for b in elems)
        assert subrack_from_pairing(pairing_from_subrack(q, sec)) == sec


def test_subrack_from_pairing_rejects_non_pairing():
    with pytest.raises(StructureError):
        subrack_from_pairing(RackPairing(FiniteMagma(3, [[1, 2, 0]] * 3), flip_rack(3)))


@given(st.sampled_from(RACKS_3), st.data())
def test_descendent_pairing_is_pairing(q, data):
    a = data.draw(st.sampled_from(enumerate_averaging(q)))
    p = descendent_pairing(q, a)
    assert is_rack_pairing(p)
    assert lambda_criterion(q, a) == bool(is_lambda_homomorphic(p))
    assert symmetric_criterion(q, a) == bool(is_symmetric(p))


def test_lambda_and_symmetric_criteria_exhaustive():
    for q in RACKS_3:
        for a in enumerate_averaging(q):
            p = descendent_pairing(q, a)
            c = classify_pairing(p)
            assert c.is_pairing
            assert c.lambda_homomorphic == lambda_criterion(q, a)
            assert c.symmetric == symmetric_criterion(q, a)


def test_k_pairing_from_averaging():
    for q in RACKS_3:
        for a in enumerate_averaging(q):
            assert is_rack_k_pairing(k_pairing_from_averaging(q, a, 3))
    ops = [trivial_rack(3), FiniteMagma(3, [[1, 2, 0]] * 3), flip_rack(3)]
    v = is_rack_k_pairing(ops)
    assert not v and v.witness[0] == 2


def test_group_rack_examples():
    for name, g in small_groups().items():
        if g.order > 6:
            continue
        assert is_group_rack(g, standard_rack("conjugation", group=g), pointed=True)
        assert is_group_rack(g, trivial_rack(g.order), pointed=False)
    v = is_group_rack(cyclic_group(3), flip_rack(3))
    assert not v and v.axiom == "translation_homomorphism"


def test_rack_module():
    q = flip_rack(2)
    assert is_rack_module(q, [SetMap(2, (1, 0))] * 2)
    assert not is_rack_module(q, [SetMap(2, (0, 0))] * 2)


# skew braces


def test_trivial_and_opposite_braces():
    for name in ("Z3", "S3", "D4", "Q8"):
        g = small_groups()[name]
        assert trivial_brace(g).two_sided
        assert opposite_brace(g).two_sided


def test_z4_brace_is_two_sided():
    s = z4_brace()
    assert s.two_sided
    assert brace_lemma_check(s)
    p = brace_to_pairing(s)
    assert is_rack_pairing(p)


def test_brace_product_of_braces():
    s = brace_direct_product(z4_brace(), trivial_brace(cyclic_group(2)))
    assert s.order == 8 and s.two_sided and brace_lemma_check(s)


def test_rejects_non_brace():
    # Z6 with the second operation transported along the swap 1 <-> 2
    sw = [0, 2, 1, 3, 4, 5]
    z6 = FiniteMagma.from_function(6, lambda x, y: (x + y) % 6)
    b = FiniteMagma.from_function(6, lambda x, y: sw[(sw[x] + sw[y]) % 6])
    with pytest.raises(StructureError) as err:
        validate_skew_brace(z6, b)
    assert err.value.axiom == "compatibility"


def test_rejects_non_group_bullet():
    z2 = FiniteMagma.from_function(2, lambda x, y: (x + y) % 2)
    with pytest.raises(StructureError) as err:
        validate_skew_brace(z2, FiniteMagma.from_function(2, lambda x, y: x))
    assert err.value.axiom.startswith("bullet_")


def test_brace_averaging_pairing():
    s = opposite_brace(S3)
    found = 0
    for a in enumerate_averaging(S3, pointed_only=True):
        if skew_brace_averaging(s, a):
            found += 1
            assert is_rack_pairing(brace_averaging_pairing(s, a))
    assert found > 0
    with pytest.raises(StructureError):
        brace_averaging_pairing(s, SetMap.constant(6, 1))


# di-racks


@pytest.mark.parametrize("idx", range(len(RACKS_3)))
def test_dirack_round_trip(idx):
    q = RACKS_3[idx]
    for p in enumerate_rack_pairings(q):
        d = dirack_from_pairing(p)
        assert is_dirack(d)
        assert pairing_from_dirack(d) == p
        assert dirack_from_pairing(pairing_from_dirack(d)) == d


def test_dirack_rejects_bad_tri():
    d = DiRack(trivial_rack(2), FiniteMagma.from_function(2, lambda x, y: 0))
    v = is_dirack(d)
    assert not v and v.axiom == "tri_bijective"
    with pytest.raises(StructureError):
        pairing_from_dirack(d)


def test_recover_averaging_on_complete_racks():
    q = standard_rack("takasaki", group=cyclic_group(3))
    for a in enumerate_averaging(q):
        assert recover_averaging(descendent_pairing(q, a)) == a
    with pytest.raises(StructureError) as err:
        recover_averaging(RackPairing(trivial_rack(2), trivial_rack(2)))
    assert err.value.axiom == "complete"
