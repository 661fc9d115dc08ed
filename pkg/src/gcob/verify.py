"""
Property suites behind ``gcob verify``.

Each check returns a :class:`Check`; failures are results, not exceptions.
``quick`` restricts to groups of order at most 12, ``full`` covers the whole
catalog (order at most 30).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from . import closed_forms as cf
from .catalog import cyclic, dicyclic, dihedral, elementary_abelian, load_catalog
from .group import FiniteGroup
from .invariant import _vector_moves, members, partition, r_n
from .report import convention_audit
from .subgroups import commuting_pairs_count, count_cyclic_subgroups, count_subgroups

LEVELS = {
    "quick": dict(max_order=12, cyclic_max=12, jordan_max=12, dihedral_max=6,
                  dicyclic_max=4, elemab=((2, 3), (3, 2)), relabel_max=8, relabelings=3,
                  formula_dihedral=8, formula_dicyclic=5),
    "full": dict(max_order=30, cyclic_max=60, jordan_max=30, dihedral_max=12,
                 dicyclic_max=7, elemab=((2, 4), (3, 3), (5, 2)), relabel_max=16, relabelings=10,
                 formula_dihedral=15, formula_dicyclic=10),
}


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    blocking: bool = True
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        tag = "PASS" if self.passed else ("FAIL" if self.blocking else "NOTE")
        extra = f" - {self.detail}" if self.detail else ""
        return f"[{tag}] {self.name}{extra} ({self.seconds:.2f}s)"


def _groups(catalog, max_order):
    out, broken = [], []
    for e in catalog.all_entries(max_order):
        try:
            out.append((e, catalog.by_name(e.name)))
        except Exception as exc:  # reported by check_catalog
            broken.append((e.name, exc))
    return out, broken


def check_catalog(catalog, max_order) -> Check:
    bad = []
    for e in catalog.all_entries(max_order):
        try:
            G = catalog.by_name(e.name)
        except Exception as exc:
            msg = str(exc)
            bad.append(msg if msg.startswith(e.name) else f"{e.name}: {msg}")
            continue
        failed = catalog.check_relations(e.name)
        if failed:
            bad.append(f"{e.name}: relations fail: {', '.join(failed)}")
        if e.abelian is not None and G.is_abelian() != e.abelian:
            bad.append(f"{e.name}: abelian flag {e.abelian} but group is_abelian={G.is_abelian()}")
    return Check("catalog entries construct, orders and relations hold", not bad,
                 "; ".join(bad[:5]), failures=bad)


def check_convention() -> Check:
    audit = convention_audit()
    return Check("convention audit", audit["passed"],
                 f"default {audit['default']}; passing: {', '.join(audit['passing'])}")


def check_move_closure(groups, max_order=12) -> Check:
    """Every move image of a genus-2 minimal sequence has trivial total product."""
    bad = []
    for e, G in groups:
        if G.order > max_order:
            continue
        seqs = members(G, 2)
        if not len(seqs):
            continue
        C = G.commutator_table().astype(np.int64)
        mul = G.mul.astype(np.int64)
        for name, i, img in _vector_moves(G, seqs, 2, "kgKG"):
            tot = mul[C[img[:, 1], img[:, 0]], C[img[:, 3], img[:, 2]]]
            if (tot != 0).any():
                bad.append(f"{e.name}/{name}@{i}")
    return Check("move closure on G(2)", not bad, ", ".join(bad[:5]), failures=bad)


def check_abelian_empty(groups) -> Check:
    bad = [e.name for e, G in groups if G.is_abelian() and len(members(G, 2))]
    return Check("G(2) empty for abelian groups", not bad, ", ".join(bad))


def check_sandwich(groups) -> Check:
    bad = []
    for e, G in groups:
        cyc, r1, com = count_cyclic_subgroups(G), r_n(G, 1), commuting_pairs_count(G)
        if not cyc <= r1 < com:
            bad.append(f"{e.name}: {cyc} <= {r1} < {com} fails")
    return Check("Cyc <= r1 < Com", not bad, "; ".join(bad[:5]), failures=bad)


def check_burnside(groups) -> Check:
    bad = [e.name for e, G in groups
           if commuting_pairs_count(G) != G.conjugacy_class_count() * G.order]
    return Check("Com = classes x |G|", not bad, ", ".join(bad))


def jordan_sizes_ok(n: int) -> bool:
    sizes = sorted(partition(cyclic(n), 1).sizes().tolist())
    want = sorted(cf.jordan2(d) for d in range(1, n + 1) if n % d == 0)
    return sizes == want and sum(want) == n * n


def check_jordan(nmax) -> Check:
    bad = [n for n in range(1, nmax + 1) if not jordan_sizes_ok(n)]
    return Check(f"component sizes of Z_n are J_2(d), d | n (n <= {nmax})", not bad, str(bad) if bad else "")


def check_closed_forms(cfg) -> Check:
    bad = []
    for n in range(1, cfg["cyclic_max"] + 1):
        if r_n(cyclic(n), 1) != cf.r1_cyclic(n):
            bad.append(f"cyclic {n}")
    for n in range(1, cfg["dihedral_max"] + 1):
        if r_n(dihedral(n), 1) != cf.r1_dihedral(n):
            bad.append(f"dihedral {n}")
    for n in range(1, cfg["dicyclic_max"] + 1):
        if r_n(dicyclic(n), 1) != cf.r1_dicyclic(n):
            bad.append(f"dicyclic {n}")
    for p, top in cfg["elemab"]:
        for n in range(1, top + 1):
            if r_n(elementary_abelian(p, n), 1) != cf.r1_elementary_abelian(p, n):
                bad.append(f"elemab {p},{n}")
    return Check("closed forms = brute force", not bad, ", ".join(bad), failures=bad)


def check_subgroup_formulas(cfg) -> Check:
    bad = [f"dihedral {n}" for n in range(1, cfg["formula_dihedral"] + 1)
           if count_subgroups(dihedral(n)) != cf.subgroup_count_dihedral(n)]
    bad += [f"dicyclic {n}" for n in range(1, cfg["formula_dicyclic"] + 1)
            if count_subgroups(dicyclic(n)) != cf.subgroup_count_dicyclic(n)]
    return Check("subgroup counts tau+sigma formulas", not bad, ", ".join(bad))


def random_relabeling(G: FiniteGroup, rng) -> FiniteGroup:
    perm = np.concatenate([[0], 1 + rng.permutation(G.order - 1)])
    return G.relabel(perm)


def check_relabel(groups, cfg, seed=0) -> Check:
    rng = np.random.default_rng(seed)
    bad = []
    for e, G in groups:
        if G.order > cfg["relabel_max"]:
            continue
        base = r_n(G, 1)
        for _ in range(cfg["relabelings"]):
            if r_n(random_relabeling(G, rng), 1) != base:
                bad.append(e.name)
                break
    return Check("r1 invariant under relabeling", not bad, ", ".join(bad))


def check_threads(groups) -> Check:
    bad = []
    for e, G in groups:
        if G.is_abelian() or G.order > 12:
            continue
        a = partition(G, 2, workers=1)
        b = partition(G, 2, workers=8)
        if a.count != b.count or not np.array_equal(a.labels, b.labels):
            bad.append(e.name)
    return Check("1 vs 8 workers give identical partitions", not bad, ", ".join(bad))


def check_table(groups) -> Check:
    bad = []
    for e, G in groups:
        ex = e.expected
        if ex is None:
            continue
        if ex.r1 is not None and r_n(G, 1) != ex.r1:
            bad.append(f"{e.name} r1")
    return Check("r1 matches the table", not bad, ", ".join(bad), failures=bad)


def diagnostic_dic5() -> Check:
    G = dicyclic(5)
    r2 = r_n(G, 2)
    return Check("r2(Dic_5) against the '+2' annotation", r2 == 2,
                 f"brute-force r2 = {r2} over {len(members(G, 2))} minimal sequences; "
                 f"the table prints r1 as '9+2'", blocking=False)


def run(level: str = "quick", catalog=None) -> list:
    cfg = LEVELS[level]
    catalog = catalog or load_catalog()
    groups, _ = _groups(catalog, cfg["max_order"])
    steps = [
        lambda: check_catalog(catalog, cfg["max_order"]),
        check_convention,
        lambda: check_move_closure(groups),
        lambda: check_abelian_empty(groups),
        lambda: check_sandwich(groups),
        lambda: check_burnside(groups),
        lambda: check_jordan(cfg["jordan_max"]),
        lambda: check_closed_forms(cfg),
        lambda: check_subgroup_formulas(cfg),
        lambda: check_relabel(groups, cfg),
        lambda: check_threads(groups),
        lambda: check_table(groups),
        diagnostic_dic5,
    ]
    out = []
    for step in steps:
        t = time.perf_counter()
        res = step()
        res.seconds = time.perf_counter() - t
        out.append(res)
    return out


def passed(results) -> bool:
    return all(c.passed for c in results if c.blocking)
