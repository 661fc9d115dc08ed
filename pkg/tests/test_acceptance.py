"""
Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary and when this file is run as a script.
"""
import time

import pytest

from gcob import closed_forms as cf
from gcob import verify
from gcob.catalog import cyclic, dicyclic, dihedral, elementary_abelian, load_catalog
from gcob.invariant import members, r_n
from gcob.subgroups import all_subgroups, count_subgroups

RESULTS = {}


def record(num, title, ok, detail):
    RESULTS[num] = f"criterion {num} {'PASS' if ok else 'FAIL'}: {title} - {detail}"
    print(RESULTS[num])
    assert ok, RESULTS[num]


def test_criterion_1_table_r1():
    cat = load_catalog()
    t = time.perf_counter()
    checked, bad = 0, []
    for e in cat.all_entries(30):
        if e.expected is None or e.expected.r1 is None:
            continue
        got = r_n(cat.by_name(e.name), 1, workers=1)
        checked += 1
        if got != e.expected.r1:
            bad.append(f"{e.name}: {got} != {e.expected.r1}")
    spot = {"D_8": 9, "Q_8": 5, "Z_2^4": 51, "Z_4^2": 16, "Z_4xZ_2^2": 25, "Z_3^3": 40,
            "Z_9_sd_Z_3": 10, "Z_3^2_sd_Z_3": 22, "SL(2,3)": 13, "Sigma_4": 21, "D_30": 19}
    bad += [f"{k} spot value" for k, v in spot.items() if cat.entry(k).expected.r1 != v]
    dt = time.perf_counter() - t
    record(1, "table r1 reproduction", not bad and dt < 60,
           f"{checked} rows, {len(bad)} mismatches {bad[:3]}, {dt:.2f}s")


def test_criterion_2_subgroup_columns():
    cat = load_catalog()
    t = time.perf_counter()
    checked, bad, flagged = 0, [], []
    for e in cat.all_entries(30):
        ex = e.expected
        if ex is None:
            continue
        subs = all_subgroups(cat.by_name(e.name))
        got = {"subgroups": len(subs), "abelian_subgroups": sum(h.is_abelian for h in subs)}
        for col in got:
            want = getattr(ex, col)
            if want is None:
                continue
            checked += 1
            if col in ex.notes:
                flagged.append(f"{e.name}.{col}{ex.notes[col]}")
            if got[col] != want:
                bad.append(f"{e.name}.{col}: {got[col]} != {want}")
    dt = time.perf_counter() - t
    record(2, "subgroup and abelian-subgroup columns", not bad and dt < 30,
           f"{checked} values, {len(bad)} mismatches, leading-number rows {flagged}, {dt:.2f}s")


def test_criterion_3_closed_form_oracles():
    t = time.perf_counter()
    bad = [f"cyclic {n}" for n in range(1, 61) if r_n(cyclic(n), 1) != cf.r1_cyclic(n)]
    bad += [f"dihedral {n}" for n in range(1, 13) if r_n(dihedral(n), 1) != cf.r1_dihedral(n)]
    bad += [f"dicyclic {n}" for n in range(1, 8) if r_n(dicyclic(n), 1) != cf.r1_dicyclic(n)]
    for p, top in ((2, 4), (3, 3), (5, 2)):
        bad += [f"elemab {p},{n}" for n in range(1, top + 1)
                if r_n(elementary_abelian(p, n), 1) != cf.r1_elementary_abelian(p, n)]
    dt = time.perf_counter() - t
    record(3, "closed forms equal brute force", not bad and dt < 60, f"{len(bad)} mismatches {bad}, {dt:.2f}s")


def test_criterion_4_elementary_abelian_consistency():
    bad = []
    for p in (2, 3, 5, 7):
        for n in range(0, 7):
            prev = cf.r1_elementary_abelian(p, n) if n else 1
            diff = cf.r1_elementary_abelian(p, n + 1) - prev
            if not diff == cf.F_recurrence(p, n) == cf.F_closed(p, n) == (
                    p ** (n - 1) * (p ** n + p - 1) if n else 1):
                bad.append((p, n))
    seq = [cf.r1_elementary_abelian(2, n) for n in range(1, 5)]
    cat = load_catalog()
    table = [cat.entry("Z_2^2").expected.r1, cat.entry("Z_2^4").expected.r1]
    ok = not bad and seq == [2, 5, 15, 51] and table == [seq[1], seq[3]]
    record(4, "difference = recurrence = closed form", ok, f"bad={bad}, r1(Z_2^n)={seq}, table={table}")


def test_criterion_5_subgroup_formulas():
    bad = [f"dihedral {n}" for n in range(1, 16)
           if count_subgroups(dihedral(n)) != cf.tau(n) + cf.sigma(n)]
    bad += [f"dicyclic {n}" for n in range(1, 11)
            if count_subgroups(dicyclic(n)) != cf.tau(2 * n) + cf.sigma(n)]
    record(5, "tau+sigma subgroup formulas", not bad, f"{len(bad)} mismatches {bad}")


def test_criterion_6_property_suites():
    results = verify.run("full")
    blocking = [c for c in results if c.blocking]
    failed = [c.name for c in blocking if not c.passed]
    record(6, "verify full property suites", not failed,
           f"{len(blocking) - len(failed)}/{len(blocking)} blocking checks passed {failed}")


def test_criterion_7_dic5_diagnostic():
    G = dicyclic(5)
    size = len(members(G, 2))
    r2 = r_n(G, 2)
    verdict = "agrees with" if r2 == 2 else "differs from"
    # non-blocking: the line is reported whatever r2 turns out to be
    RESULTS[7] = (f"criterion 7 NOTE: r2(Dic_5) diagnostic - 20^4 = 160000 sequences scanned, "
                  f"|G(2)| = {size}, r2 = {r2}, {verdict} the '+2' annotation")
    print(RESULTS[7])


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
