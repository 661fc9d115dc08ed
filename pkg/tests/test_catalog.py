import numpy as np
import pytest

from gcob.catalog import (
    cyclic, dicyclic, dihedral, elementary_abelian, group_from_file, load_catalog,
    parse_catalog, parse_family_spec,
)
from gcob.errors import CatalogSyntaxError, NotPrime, OrderMismatch, UnknownGroup
from gcob.subgroups import count_subgroups


def test_families():
    assert cyclic(1).order == 1
    Z = cyclic(12)
    assert Z.is_abelian() and 12 in set(Z.element_orders)
    assert cyclic(2).order == 2
    S = dihedral(3)
    assert S.order == 6 and not S.is_abelian()
    assert dihedral(4).order == 8 and dihedral(4).conjugacy_class_count() == 5
    assert dihedral(1).order == 2
    Q = dicyclic(2)
    assert Q.order == 8 and list(Q.element_orders).count(2) == 1
    assert dicyclic(3).order == 12 and dicyclic(5).order == 20
    assert elementary_abelian(2, 1).order == 2
    E = elementary_abelian(2, 4)
    assert E.order == 16 and set(E.element_orders[1:]) == {2}
    assert elementary_abelian(3, 2).order == 9


def test_elementary_abelian_rejects_composite():
    with pytest.raises(NotPrime):
        elementary_abelian(4, 2)


def test_family_spec():
    assert parse_family_spec("cyclic:12") == ("cyclic", (12,))
    assert parse_family_spec("elemab:3,2") == ("elemab", (3, 2))
    assert parse_family_spec("D_8") is None


def test_named_entries(catalog):
    assert catalog.by_name("Sigma_3").order == 6
    assert catalog.by_name("SL(2,3)").order == 24
    assert catalog.by_name("Modular16").order == 16
    with pytest.raises(UnknownGroup):
        catalog.by_name("Z_31")


def test_all_entries_filter(catalog):
    assert [e.name for e in catalog.all_entries(4)] == ["Z_4", "Z_2^2"]
    assert catalog.all_entries(3) == []
    full = catalog.all_entries(30)
    assert len(full) >= 50
    assert len({e.name for e in full}) == len(full)


def test_every_entry_constructs(catalog):
    for e in catalog.entries:
        G = catalog.by_name(e.name)
        assert G.order == e.order, e.name
        assert catalog.check_relations(e.name) == [], e.name
        assert G.is_abelian() == e.abelian, e.name


def test_q8_is_dicyclic2(catalog):
    assert np.array_equal(catalog.by_name("Q_8").mul, dicyclic(2).mul)


def test_expected_annotations(catalog):
    d8 = catalog.entry("D_8").expected
    assert d8.subgroups == 10 and d8.notes == {"subgroups": "+2"}
    assert catalog.entry("Dic_5").expected.notes == {"r1": "+2"}
    assert catalog.entry("Z_3^2_sd_Z_2").expected.notes == {"r1": "+"}
    assert catalog.entry("Q_8xZ_2").expected.r1 is None


def test_metacyclic20_is_frobenius(catalog):
    G = catalog.by_name("Metacyclic20")
    # F20 has trivial centre and elements of orders 1, 2, 4, 5 only
    centre = [x for x in range(G.order) if (G.mul[x] == G.mul[:, x]).all()]
    assert centre == [0]
    assert set(G.element_orders) == {1, 2, 4, 5}


@pytest.mark.parametrize("text, line, col", [
    ("version 1\nentry X order=4 kind=blob args=4\n", 2, 17),
    ("entry X order=four kind=cyclic args=4\n", 1, 9),
    ("entry X order=4 kind=cyclic args=4\nexpected r1=x\n", 2, 10),
    ("expected r1=3\n", 1, 1),
    ("entry X order=4 kind=perms args=(0,1,1)\n", 1, 28),
    ("entry X order=4 kind=cyclic args=4\nentry X order=4 kind=cyclic args=4\n", 2, 7),
])
def test_syntax_errors_carry_position(text, line, col):
    with pytest.raises(CatalogSyntaxError) as err:
        parse_catalog(text, "cat.txt")
    assert (err.value.line, err.value.column) == (line, col)
    assert str(err.value).startswith(f"cat.txt:{line}:{col}:")


def test_order_mismatch():
    cat = parse_catalog("entry X order=5 kind=cyclic args=4\n")
    with pytest.raises(OrderMismatch):
        cat.by_name("X")


def test_env_override(tmp_path, monkeypatch):
    p = tmp_path / "mini.txt"
    p.write_text("version 2\nentry Tiny order=3 kind=cyclic args=3 abelian=true\nexpected r1=2\n")
    monkeypatch.setenv("GCOB_CATALOG", str(p))
    cat = load_catalog()
    assert cat.version == 2 and cat.names() == ["Tiny"]


def test_group_from_file(tmp_path):
    p = tmp_path / "s4.txt"
    p.write_text("# symmetric group on four points\nname S4\n(0,1,2,3)\n(0,1)\n")
    G = group_from_file(str(p))
    assert G.name == "S4" and G.order == 24
    assert count_subgroups(G) == 30
