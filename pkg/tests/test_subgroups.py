from itertools import combinations

import pytest

from gcob.catalog import cyclic, dicyclic, dihedral, elementary_abelian
from gcob.closed_forms import sigma, tau
from gcob.errors import OrderCapExceeded
from gcob.subgroups import (
    all_subgroups, commuting_pairs_count, count_abelian_subgroups, count_cyclic_subgroups,
    count_subgroups, cyclic_subgroups, join, subgroup_census,
)


def _is_subgroup(G, els):
    s = set(els)
    return 0 in s and all(G.m(a, b) in s for a in s for b in s) and all(G.i(a) in s for a in s)


def test_cyclic_subgroup_examples():
    assert len(cyclic_subgroups(cyclic(12))) == 6
    assert count_cyclic_subgroups(dihedral(4)) == 7
    assert count_cyclic_subgroups(dicyclic(3)) == 7


def test_subgroup_examples():
    assert count_subgroups(dihedral(5)) == 8
    assert count_subgroups(cyclic(16)) == 5
    assert count_subgroups(dihedral(7)) == 10
    assert count_abelian_subgroups(dihedral(7)) == 9
    V = elementary_abelian(2, 2)
    assert count_subgroups(V) == count_abelian_subgroups(V) == 5


def test_com_examples():
    for n in (1, 5, 12):
        assert commuting_pairs_count(cyclic(n)) == n * n
    assert commuting_pairs_count(dihedral(4)) == 40


@pytest.mark.parametrize("G", [dihedral(4), dicyclic(3), dihedral(6), elementary_abelian(2, 3)],
                         ids=lambda G: G.name)
def test_lattice_sanity(G):
    subs = all_subgroups(G)
    masks = {h.mask for h in subs}
    assert 1 in masks and (1 << G.order) - 1 in masks
    for h in subs:
        assert G.order % h.order == 0
        assert _is_subgroup(G, h.elements)
    # closed under joins
    for a, b in combinations(subs, 2):
        assert join(G, a, b) in masks


def test_lattice_matches_naive_search():
    # naive oracle: every subset of a small group that is closed under mul
    G = dihedral(3)
    naive = set()
    for mask in range(1 << G.order):
        if mask & 1 and _is_subgroup(G, [x for x in range(G.order) if mask >> x & 1]):
            naive.add(mask)
    assert naive == {h.mask for h in all_subgroups(G)}


def test_formula_dihedral():
    for n in range(1, 16):
        assert count_subgroups(dihedral(n)) == tau(n) + sigma(n), n


def test_formula_dicyclic():
    for n in range(1, 11):
        assert count_subgroups(dicyclic(n)) == tau(2 * n) + sigma(n), n


def test_burnside_catalog(catalog_groups):
    for e, G in catalog_groups:
        assert commuting_pairs_count(G) == G.conjugacy_class_count() * G.order, e.name


def test_census_consistent():
    c = subgroup_census(dihedral(6))
    assert c["cyclic_subgroups"] == count_cyclic_subgroups(dihedral(6))
    assert c["cyclic_subgroups"] <= c["abelian_subgroups"] <= c["subgroups"]


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        all_subgroups(dihedral(40))
