# Family formulas against brute force.

from gcob.catalog import cyclic, dicyclic, dihedral, elementary_abelian
from gcob.closed_forms import F_closed, F_recurrence, r1_cyclic, r1_dicyclic, r1_dihedral, r1_elementary_abelian
from gcob.invariant import r_n

rows = [("cyclic", n, r_n(cyclic(n), 1), r1_cyclic(n)) for n in (12, 30, 60)]
rows += [("dihedral", n, r_n(dihedral(n), 1), r1_dihedral(n)) for n in (4, 7, 12)]
rows += [("dicyclic", n, r_n(dicyclic(n), 1), r1_dicyclic(n)) for n in (2, 5, 7)]
rows += [(f"elemab p={p}", n, r_n(elementary_abelian(p, n), 1), r1_elementary_abelian(p, n))
         for p, n in ((2, 4), (3, 3), (5, 2))]
for fam, n, brute, closed in rows:
    print(f"{fam:<12} {n:>3}  brute {brute:>4}  closed {closed:>4}")

# successive differences for Z_p^n
for p in (2, 3):
    print(p, [r1_elementary_abelian(p, n + 1) - r1_elementary_abelian(p, n) for n in range(1, 6)],
          [F_recurrence(p, n) for n in range(1, 6)], [F_closed(p, n) for n in range(1, 6)])
