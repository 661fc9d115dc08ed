"""Print regular-representation generators for A x| Z_k, for pasting into the catalog.

A is a product of cyclic groups with the given orders; ``phi`` is an
automorphism of A given on coordinate vectors. Elements are pairs (v, t)
with (v, t)(w, s) = (v + phi^t(w), t + s).

    python tools/semidirect_perms.py
"""
import itertools

from gcob.group import cycles_string


def semidirect(orders, phi, k):
    vecs = list(itertools.product(*[range(m) for m in orders]))
    els = [(v, t) for t in range(k) for v in vecs]
    index = {e: i for i, e in enumerate(els)}

    def act(t, w):
        for _ in range(t):
            w = phi(w)
        return tuple(x % m for x, m in zip(w, orders))

    def mul(x, y):
        (v, t), (w, s) = x, y
        u = act(t, w)
        return (tuple((a + b) % m for a, b, m in zip(v, u, orders)), (t + s) % k)

    def left(e):
        return tuple(index[mul(e, x)] for x in els)

    zero = tuple(0 for _ in orders)
    gens = []
    for j in range(len(orders)):
        v = list(zero)
        v[j] = 1
        gens.append(left((tuple(v), 0)))
    gens.append(left((zero, 1)))
    return gens


GROUPS = {
    "Z_4xZ_2_sd_Z_2": ((4, 2), lambda w: (w[0], w[1] + w[0]), 2),
    "Z_4_sd_Z_4": ((4,), lambda w: (-w[0],), 4),
    "Q_8_sd_Z_2": ((4, 2), lambda w: (w[0] + 2 * w[1], w[1]), 2),
    "Z_3^2_sd_Z_2": ((3, 3), lambda w: (-w[0], -w[1]), 2),
    "Z_3_sd_Z_8": ((3,), lambda w: (-w[0],), 8),
    "Z_6xZ_2_sd_Z_2": ((6, 2), lambda w: (-w[0] + 3 * w[1], w[1]), 2),
    "Z_3^2_sd_Z_3": ((3, 3), lambda w: (w[0] + w[1], w[1]), 3),
}

if __name__ == "__main__":
    for name, (orders, phi, k) in GROUPS.items():
        print(name, ";".join(cycles_string(g) for g in semidirect(orders, phi, k)))
