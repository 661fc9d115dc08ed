import io
import random
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gcob.catalog import cyclic, dicyclic, dihedral, elementary_abelian
from gcob.closed_forms import jordan2
from gcob.errors import BudgetExceeded
from gcob.group import group_from_generators, perm_from_cycles
from gcob.invariant import (
    audit_conventions, components_bfs, cyclic_canonical, decode, encode, enumerate_G,
    inverse_move, is_minimal, members, move_1a, move_1b, move_2a, move_2b, orbit_of,
    partition, r_n, read_golden, write_golden,
)
from gcob.subgroups import commuting_pairs_count, count_cyclic_subgroups

GOLDEN = Path(__file__).parent / "golden"


def sym3():
    return group_from_generators([perm_from_cycles("(0,1,2)"), perm_from_cycles("(0,1)")], "S3")


def test_abelian_genus2_empty():
    for G in (cyclic(6), elementary_abelian(2, 3)):
        assert list(enumerate_G(G, 2)) == []
        assert r_n(G, 2) == 0


def test_genus1_is_commuting_pairs(catalog_groups):
    for e, G in catalog_groups:
        assert len(members(G, 1)) == commuting_pairs_count(G), e.name
    assert len(list(enumerate_G(sym3(), 1))) == 18


def test_enumeration_order_and_membership():
    G = dihedral(4)
    seqs = list(enumerate_G(G, 2))
    idx = [encode(G, s) for s in seqs]
    assert idx == sorted(idx) and len(set(idx)) == len(idx)
    # naive filter over all of G^4
    naive = [s for s in np.ndindex(*(G.order,) * 4) if is_minimal(G, s)]
    assert seqs == [tuple(int(x) for x in s) for s in naive]


@given(st.integers(min_value=0, max_value=8**4 - 1))
def test_encode_decode(idx):
    G = dihedral(4)
    assert encode(G, decode(G, idx, 2)) == idx


def test_move_examples():
    Z4 = cyclic(4)
    assert move_1a(Z4, (1, 2), 0) == (1, 3)
    S = sym3()
    for g, k in enumerate_G(S, 1):
        assert move_1b(S, (g, k), 0) == (S.prod(g, k, S.i(g)), S.i(g))
    # on commuting pairs 1b is (g, k) -> (k, g^-1) up to the conjugation g k g^-1 = k
    for g, k in enumerate_G(Z4, 1):
        assert move_1b(Z4, (g, k), 0) == (k, Z4.i(g))


def test_move_index_errors():
    G = dihedral(4)
    seq = next(enumerate_G(G, 2))
    with pytest.raises(IndexError):
        move_2a(G, seq, 1)
    with pytest.raises(IndexError):
        move_1a(G, seq, 2)


def test_2a_2b_mutually_inverse_on_d8():
    G = dihedral(4)
    seqs = list(enumerate_G(G, 2))
    for s in random.Random(7).sample(seqs, 100):
        a = move_2a(G, s, 0)
        assert a is not None and move_2b(G, a, 0) == s
        b = move_2b(G, s, 0)
        assert b is not None and move_2a(G, b, 0) == s


@pytest.mark.parametrize("G", [dihedral(4), dicyclic(3), sym3()], ids=lambda G: G.name)
def test_inverse_moves(G):
    for s in list(enumerate_G(G, 2))[::7]:
        for name, i in (("1a", 0), ("1a", 1), ("1b", 0), ("1b", 1), ("2a", 0), ("2b", 0)):
            from gcob.invariant import apply_move
            out = apply_move(G, name, s, i, check=False)
            assert inverse_move(G, name, out, i) == s


def test_r_examples():
    assert r_n(cyclic(12), 1) == 6
    assert r_n(dicyclic(2), 1) == 5
    assert r_n(elementary_abelian(3, 3), 1) == 40


@pytest.mark.parametrize("name", ["Sigma_3", "D_8"])
def test_golden(catalog, name):
    G = catalog.by_name(name)
    part = partition(G, 2)
    buf = io.StringIO()
    write_golden(part, buf)
    frozen = read_golden(open(GOLDEN / f"{name}_genus2.txt"))
    assert read_golden(io.StringIO(buf.getvalue())) == frozen


@pytest.mark.parametrize("spec", ["Sigma_3", "D_8", "Q_8", "D_10", "A_4", "Dic_3", "D_12"])
def test_engine_matches_bfs(catalog, spec):
    G = catalog.by_name(spec)
    for n in (1, 2):
        assert partition(G, n).blocks() == components_bfs(G, n), (spec, n)


def test_engine_matches_bfs_cyclic():
    for n in range(1, 13):
        G = cyclic(n)
        assert partition(G, 1).blocks() == components_bfs(G, 1)


def test_orbit_examples():
    Z4 = cyclic(4)
    assert orbit_of(Z4, 1, (0, 0)) == {(0, 0)}
    orb = orbit_of(Z4, 1, (1, 0))
    assert len(orb) == jordan2(4) == 12
    assert {(1, 1), (1, 2), (1, 3), (0, 3)} <= orb


def test_cyclic_canonical_examples():
    assert cyclic_canonical(12, (8, 6)) == 2
    assert cyclic_canonical(12, (0, 0)) == 12
    assert cyclic_canonical(12, (1, 5)) == 1


def test_cyclic_canonical_partition():
    for n in range(1, 61):
        part = partition(cyclic(n), 1)
        labels = {}
        for key, lab in zip(part.keys.tolist(), part.labels.tolist()):
            d = cyclic_canonical(n, divmod(key, n))
            assert labels.setdefault(d, lab) == lab, n
        assert len(labels) == part.count


def test_jordan_sizes():
    from math import gcd
    for n in range(1, 31):
        G = cyclic(n)
        part = partition(G, 1)
        want = sorted(jordan2(d) for d in range(1, n + 1) if n % d == 0)
        assert sorted(part.sizes().tolist()) == want
        # each component collects the pairs generating one subgroup of order d
        for key, lab in zip(part.keys.tolist()[:50], part.labels.tolist()[:50]):
            g, k = decode(G, key, 1)
            d = n // gcd(gcd(g, k), n)
            assert part.sizes()[lab] == jordan2(d)


def test_m_generation(catalog):
    for e in catalog.all_entries(12):
        G = catalog.by_name(e.name)
        for n in (1, 2):
            base = partition(G, n)
            more = partition(G, n, extra_powers=range(2, G.order + 1))
            assert more.count == base.count, (e.name, n)
            assert np.array_equal(more.labels, base.labels)


def test_sandwich(catalog_groups):
    for e, G in catalog_groups:
        assert count_cyclic_subgroups(G) <= r_n(G, 1) < commuting_pairs_count(G), e.name


def test_move_closure(catalog):
    from gcob.invariant import _vector_moves
    for e in catalog.all_entries(12):
        G = catalog.by_name(e.name)
        seqs = members(G, 2)
        C, mul = G.commutator_table(), G.mul
        for name, i, img in _vector_moves(G, seqs, 2, "kgKG"):
            tot = mul[C[img[:, 1], img[:, 0]], C[img[:, 3], img[:, 2]]]
            assert (tot == 0).all(), (e.name, name, i)


def test_no_minimality_discards_order12(catalog):
    for e in catalog.all_entries(12):
        assert sum(partition(catalog.by_name(e.name), 2).discarded.values()) == 0


def test_thread_determinism(catalog):
    for name in ("D_8", "Dic_3", "A_4", "D_12"):
        G = catalog.by_name(name)
        runs = [partition(G, 2, workers=w) for w in (1, 2, 8)]
        for p in runs[1:]:
            assert p.count == runs[0].count and np.array_equal(p.labels, runs[0].labels)


@settings(max_examples=10, deadline=None)
@given(st.sampled_from(["D_8", "Q_8", "Sigma_3", "A_4", "D_14", "Dic_4"]), st.randoms(use_true_random=False))
def test_relabel_invariance(catalog, name, rnd):
    G = catalog.by_name(name)
    perm = np.asarray([0] + rnd.sample(range(1, G.order), G.order - 1))
    assert r_n(G.relabel(perm), 1) == r_n(G, 1)


def test_budget():
    with pytest.raises(BudgetExceeded) as err:
        members(dihedral(4), 3, budget=1000)
    assert err.value.size == 8**6


def test_convention_audit_s4():
    G = group_from_generators([perm_from_cycles("(0,1,2,3)"), perm_from_cycles("(0,1)")])
    ok = {(r["convention"], r["move_2b_bracket"]) for r in audit_conventions(G) if r["ok"]}
    assert ok == {("kgKG", "swapped")}
