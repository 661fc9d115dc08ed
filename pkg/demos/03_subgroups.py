# Subgroup lattices by join closure, and the two divisor formulas they confirm.

from gcob.catalog import dicyclic, dihedral
from gcob.closed_forms import sigma, tau
from gcob.subgroups import all_subgroups, commuting_pairs_count

D12 = dihedral(6)
subs = sorted(all_subgroups(D12), key=lambda h: (h.order, h.mask))
print("subgroups of D_12 by order:")
for h in subs:
    kind = "cyclic" if h.is_cyclic else ("abelian" if h.is_abelian else "")
    print(f"  order {h.order:>2}  {kind:<8} {h.elements}")

print("\n n  |D_2n subgroups|  tau+sigma   |Dic_n subgroups|  tau(2n)+sigma")
for n in range(1, 11):
    print(f"{n:>2}  {len(all_subgroups(dihedral(n))):>15}  {tau(n) + sigma(n):>9}"
          f"   {len(all_subgroups(dicyclic(n))):>15}  {tau(2 * n) + sigma(n):>13}")

# Com(G) counts commuting ordered pairs; it is |G| times the number of classes
print("\nCom(D_12) =", commuting_pairs_count(D12), "=", D12.conjugacy_class_count(), "x", D12.order)
