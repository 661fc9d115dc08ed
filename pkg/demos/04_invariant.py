# Minimal sequences, the four moves, and the component count r_n.

from gcob import by_name, components_bfs, enumerate_G, move_1a, move_1b, move_2a, move_2b, partition
from gcob.invariant import decode

D8 = by_name("D_8")
seqs = list(enumerate_G(D8, 2))
print("|G(2)| for D_8:", len(seqs))

s = seqs[0]
print("start      ", s)
print("1a at 0    ", move_1a(D8, s, 0))
print("1b at 1    ", move_1b(D8, s, 1))
print("2a at 0    ", move_2a(D8, s, 0))
print("2b after 2a", move_2b(D8, move_2a(D8, s, 0), 0))

part = partition(D8, 2)
print("r_2(D_8) =", part.count, "component sizes", part.sizes().tolist())
print("roots:", [decode(D8, int(r), 2) for r in part.roots()])

# the vectorised engine and the plain breadth-first search agree
print("engine == BFS:", part.blocks() == components_bfs(D8, 2))

for name in ("Sigma_3", "Q_8", "A_4", "Dic_5", "Sigma_4"):
    G = by_name(name)
    p1, p2 = partition(G, 1), partition(G, 2)
    print(f"{name:<8} r1={p1.count:<3} r2={p2.count:<3} |G(2)|={len(p2)}")
