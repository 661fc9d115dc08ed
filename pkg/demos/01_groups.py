# Building groups: from a table, from permutations, and as direct products.

import numpy as np

from gcob import direct_product, group_from_generators, group_from_table, perm_from_cycles
from gcob.catalog import cyclic, dicyclic

# addition mod 5 as a raw table
Z5 = group_from_table(np.add.outer(np.arange(5), np.arange(5)) % 5, "Z_5")
print(Z5.name, Z5.order, "abelian:", Z5.is_abelian())

# symmetric group on 4 points from a 4-cycle and a transposition
S4 = group_from_generators([perm_from_cycles("(0,1,2,3)"), perm_from_cycles("(0,1)")], "S_4")
print(S4.name, "order", S4.order, "classes", S4.conjugacy_class_count())
print("element orders:", sorted(set(S4.element_orders.tolist())))

# [k, g] = k g k^-1 g^-1 is trivial exactly when k and g commute
k, g = 1, 2
print("[k,g] =", S4.commutator(k, g), "which is", S4.prod(k, g, S4.i(k), S4.i(g)))

# Z_2 x Z_3 is cyclic
Z6 = direct_product(cyclic(2), cyclic(3))
print("Z_2 x Z_3 has an element of order 6:", 6 in Z6.element_orders)

# the quaternion group has one involution
Q8 = dicyclic(2)
print("involutions in Q_8:", int((Q8.element_orders == 2).sum()))
