# Cyclic groups: Euclidean reduction labels each component, sizes are J_2(d).

from gcob.catalog import cyclic
from gcob.closed_forms import jordan2
from gcob.invariant import cyclic_canonical, orbit_of, partition

n = 12
part = partition(cyclic(n), 1)
sizes = {}
for key, lab in zip(part.keys.tolist(), part.labels.tolist()):
    d = cyclic_canonical(n, divmod(key, n))
    sizes.setdefault(d, 0)
    sizes[d] += 1
print(f"Z_{n}: {part.count} components")
for d in sorted(sizes):
    print(f"  <{d}> (order {n // d}): {sizes[d]} pairs, J_2({n // d}) = {jordan2(n // d)}")

print("orbit of (1,0) in Z_4:", sorted(orbit_of(cyclic(4), 1, (1, 0))))
