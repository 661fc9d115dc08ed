"""
Minimal sequences, identification moves and the component count r_n(G).

A sequence of genus ``n`` is a flat tuple ``(g1, k1, g2, k2, ..., gn, kn)``
of element indices. It is *minimal* when the product of the handle brackets
``[k_i, g_i]`` is trivial and, for ``n >= 2``, no proper prefix of that
product is trivial. The set of minimal sequences is the vertex set of a graph
whose edges are the four local rewrites

    1a  (g_i, k_i)                     -> (g_i, k_i g_i)
    1b  (g_i, k_i)                     -> (g_i k_i g_i^-1, g_i^-1)
    2a  (g_i, k_i, g_{i+1}, k_{i+1})   -> ([g_i,k_i] g_{i+1}, k_{i+1},
                                            k_{i+1} g_i k_{i+1}^-1, k_{i+1} k_i k_{i+1}^-1)
    2b  (g_i, k_i, g_{i+1}, k_{i+1})   -> (k_i^-1 g_{i+1} k_i, k_i^-1 k_{i+1} k_i,
                                            k_i^-1 [k_i,g_i] k_i g_i, k_i)

and r_n(G) is its number of connected components. A rewrite whose result is
not minimal contributes no edge.

Two independent routes are provided: a vectorised engine (:func:`partition`,
:func:`r_n`) that generates all edges with numpy and labels components with a
sparse-graph routine, and a scalar breadth-first search (:func:`orbit_of`,
:func:`components_bfs`) built only from the per-sequence move functions.
"""
from __future__ import annotations

from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import BudgetExceeded
from .group import CONVENTIONS, DEFAULT_CONVENTION, FiniteGroup

DEFAULT_BUDGET = 2**32
MOVES = ("1a", "1b", "2a", "2b")

__all__ = [
    "DEFAULT_BUDGET", "MOVES",
    "is_minimal", "prefix_products", "encode", "decode",
    "enumerate_G", "members",
    "move_1a", "move_1b", "move_2a", "move_2b", "apply_move", "inverse_move",
    "OrbitPartition", "partition", "r_n", "orbit_of", "components_bfs",
    "cyclic_canonical", "audit_conventions", "write_golden", "read_golden",
]


# ---------------------------------------------------------------------------
# sequences


def _genus(seq) -> int:
    if len(seq) % 2 or not seq:
        raise ValueError(f"sequence length must be a positive even number, got {len(seq)}")
    return len(seq) // 2


def prefix_products(G: FiniteGroup, seq, convention=DEFAULT_CONVENTION) -> list:
    """Running products of the handle brackets ``[k_1,g_1] ... [k_r,g_r]``."""
    C = G.commutator_table(convention)
    acc, out = 0, []
    for i in range(_genus(seq)):
        acc = int(G.mul[acc, C[seq[2 * i + 1], seq[2 * i]]])
        out.append(acc)
    return out


def is_minimal(G: FiniteGroup, seq, convention=DEFAULT_CONVENTION) -> bool:
    pre = prefix_products(G, seq, convention)
    return pre[-1] == 0 and all(p != 0 for p in pre[:-1])


def encode(G: FiniteGroup, seq) -> int:
    """Mixed-radix index, first entry most significant."""
    idx = 0
    for x in seq:
        idx = idx * G.order + int(x)
    return idx


def decode(G: FiniteGroup, idx: int, genus: int) -> tuple:
    out = []
    for _ in range(2 * genus):
        idx, x = divmod(idx, G.order)
        out.append(x)
    if idx:
        raise ValueError("index out of range for this genus")
    return tuple(reversed(out))


def _check_budget(G, n, budget):
    if n < 1:
        raise ValueError("genus must be at least 1")
    size = G.order ** (2 * n)
    if size > budget:
        raise BudgetExceeded(G.order, n, size, budget)
    return size


def members(G: FiniteGroup, n: int, convention=DEFAULT_CONVENTION,
            budget: int = DEFAULT_BUDGET) -> np.ndarray:
    """All minimal sequences of genus ``n`` as rows of an int array, sorted by index."""
    _check_budget(G, n, budget)
    N = G.order
    C = G.commutator_table(convention).astype(np.int64)
    mul = G.mul.astype(np.int64)
    inv = G.inv.astype(np.int64)
    # pair code h = g * N + k; its bracket is [k, g]
    pair_comm = C.T.reshape(-1)
    codes = np.arange(N * N, dtype=np.int64)

    if n == 1:
        return _decode_codes(codes[pair_comm == 0][:, None], N)

    rows = codes[pair_comm != 0][:, None]
    prefix = pair_comm[rows[:, 0]]
    for _ in range(n - 2):
        # append every pair, keep the prefix nontrivial
        new_prefix = mul[prefix[:, None], pair_comm[None, :]]
        r, h = np.nonzero(new_prefix)
        rows = np.concatenate([rows[r], codes[h][:, None]], axis=1)
        prefix = new_prefix[r, h]

    # closing pair must have bracket equal to prefix^-1
    by_comm = np.argsort(pair_comm, kind="stable")
    starts = np.searchsorted(pair_comm[by_comm], np.arange(N))
    counts = np.bincount(pair_comm, minlength=N)
    need = inv[prefix]
    reps = counts[need]
    src = np.repeat(np.arange(len(rows)), reps)
    offset = np.arange(reps.sum()) - np.repeat(np.cumsum(reps) - reps, reps)
    closing = by_comm[starts[need][src] + offset]
    full = np.concatenate([rows[src], closing[:, None]], axis=1)
    seqs = _decode_codes(full, N)
    order = np.argsort(_encode_rows(seqs, N), kind="stable")
    return seqs[order]


def _decode_codes(codes, N):
    out = np.empty((codes.shape[0], 2 * codes.shape[1]), dtype=np.int64)
    out[:, 0::2] = codes // N
    out[:, 1::2] = codes % N
    return out


def _encode_rows(seqs, N):
    idx = np.zeros(seqs.shape[0], dtype=np.int64)
    for j in range(seqs.shape[1]):
        idx = idx * N + seqs[:, j]
    return idx


def enumerate_G(G: FiniteGroup, n: int, convention=DEFAULT_CONVENTION,
                budget: int = DEFAULT_BUDGET) -> Iterator[tuple]:
    """Yield the minimal sequences of genus ``n`` in increasing index order."""
    for row in members(G, n, convention, budget):
        yield tuple(int(x) for x in row)


# ---------------------------------------------------------------------------
# scalar moves


def _check_index(seq, i, pair):
    n = _genus(seq)
    hi = n - 1 if pair else n
    if not 0 <= i < hi:
        raise IndexError(f"handle index {i} out of range for genus {n}")
    return n


def _raw_1a(G, seq, i, m=1, convention=DEFAULT_CONVENTION):
    s = list(seq)
    g, k = s[2 * i], s[2 * i + 1]
    s[2 * i + 1] = G.m(k, G.power(g, m))
    return tuple(s)


def _raw_1b(G, seq, i, convention=DEFAULT_CONVENTION):
    s = list(seq)
    g, k = s[2 * i], s[2 * i + 1]
    s[2 * i], s[2 * i + 1] = G.prod(g, k, G.i(g)), G.i(g)
    return tuple(s)


def _raw_2a(G, seq, i, convention=DEFAULT_CONVENTION):
    s = list(seq)
    g1, k1, g2, k2 = s[2 * i: 2 * i + 4]
    c = G.commutator(g1, k1, convention)
    s[2 * i: 2 * i + 4] = (
        G.m(c, g2),
        k2,
        G.prod(k2, g1, G.i(k2)),
        G.prod(k2, k1, G.i(k2)),
    )
    return tuple(s)


def _raw_2b(G, seq, i, convention=DEFAULT_CONVENTION, printed=False):
    s = list(seq)
    g1, k1, g2, k2 = s[2 * i: 2 * i + 4]
    K = G.i(k1)
    # the bracket is [g_i, k_i], as in 2a; ``printed`` uses [k_i, g_i] instead
    c = G.commutator(k1, g1, convention) if printed else G.commutator(g1, k1, convention)
    s[2 * i: 2 * i + 4] = (
        G.prod(K, g2, k1),
        G.prod(K, k2, k1),
        G.prod(K, c, k1, g1),
        k1,
    )
    return tuple(s)


def _keep(G, out, convention):
    return out if is_minimal(G, out, convention) else None


def move_1a(G: FiniteGroup, seq, i: int, m: int = 1, convention=DEFAULT_CONVENTION):
    """``k_i -> k_i g_i^m``; ``None`` when the result is not minimal."""
    _check_index(seq, i, False)
    return _keep(G, _raw_1a(G, seq, i, m, convention), convention)


def move_1b(G: FiniteGroup, seq, i: int, convention=DEFAULT_CONVENTION):
    _check_index(seq, i, False)
    return _keep(G, _raw_1b(G, seq, i, convention), convention)


def move_2a(G: FiniteGroup, seq, i: int, convention=DEFAULT_CONVENTION):
    _check_index(seq, i, True)
    return _keep(G, _raw_2a(G, seq, i, convention), convention)


def move_2b(G: FiniteGroup, seq, i: int, convention=DEFAULT_CONVENTION):
    _check_index(seq, i, True)
    return _keep(G, _raw_2b(G, seq, i, convention), convention)


def apply_move(G, name, seq, i, convention=DEFAULT_CONVENTION, check=True):
    """Apply move ``name`` at handle ``i``; with ``check=False`` skip the minimality test."""
    raw = {"1a": _raw_1a, "1b": _raw_1b, "2a": _raw_2a, "2b": _raw_2b}[name]
    _check_index(seq, i, name.startswith("2"))
    out = raw(G, seq, i, convention=convention)
    return _keep(G, out, convention) if check else out


def _inverse_2b_table(G, convention):
    # g1 -> k1^-1 [g1,k1] k1 g1 is a bijection of G for each fixed k1
    key = ("inv2b", convention)
    if key not in G._cache:
        N = G.order
        C = G.commutator_table(convention)
        k = np.arange(N)[:, None]
        g = np.arange(N)[None, :]
        img = G.mul[G.mul[G.mul[G.inv[k], C[g, k]], k], g]
        table = np.empty_like(img)
        table[k, img] = np.broadcast_to(g, img.shape)
        G._cache[key] = table
    return G._cache[key]


def inverse_move(G: FiniteGroup, name, seq, i, convention=DEFAULT_CONVENTION):
    """The sequence that ``name`` at handle ``i`` sends to ``seq`` (before any minimality test)."""
    s = list(seq)
    if name == "1a":
        return _raw_1a(G, seq, i, -1, convention)
    if name == "1b":
        g, k = s[2 * i], s[2 * i + 1]
        s[2 * i], s[2 * i + 1] = G.i(k), G.prod(k, g, G.i(k))
        return tuple(s)
    A, B, Cc, D = s[2 * i: 2 * i + 4]
    if name == "2a":
        Bi = G.i(B)
        g1, k1 = G.prod(Bi, Cc, B), G.prod(Bi, D, B)
        g2 = G.m(G.i(G.commutator(g1, k1, convention)), A)
        s[2 * i: 2 * i + 4] = (g1, k1, g2, B)
        return tuple(s)
    if name == "2b":
        k1 = D
        g1 = int(_inverse_2b_table(G, convention)[k1, Cc])
        s[2 * i: 2 * i + 4] = (g1, k1, G.prod(k1, A, G.i(k1)), G.prod(k1, B, G.i(k1)))
        return tuple(s)
    raise ValueError(f"unknown move {name!r}")


def _move_sites(n):
    sites = [("1a", i) for i in range(n)] + [("1b", i) for i in range(n)]
    sites += [("2a", i) for i in range(n - 1)] + [("2b", i) for i in range(n - 1)]
    return sites


# ---------------------------------------------------------------------------
# vectorised engine


def _vector_moves(G, seqs, n, convention, extra_powers=(), printed_2b=False):
    """Yield ``(name, i, image_rows)`` for every move site."""
    mul = G.mul.astype(np.int64)
    inv = G.inv.astype(np.int64)
    C = G.commutator_table(convention).astype(np.int64)
    for name, i in _move_sites(n):
        out = seqs.copy()
        g1, k1 = seqs[:, 2 * i], seqs[:, 2 * i + 1]
        if name == "1a":
            out[:, 2 * i + 1] = mul[k1, g1]
            yield name, i, out
            gm = g1
            for m in extra_powers:
                # k g^m for m = 2, 3, ...
                gm = mul[gm, g1]
                extra = seqs.copy()
                extra[:, 2 * i + 1] = mul[k1, gm]
                yield f"1a^{m}", i, extra
            continue
        if name == "1b":
            out[:, 2 * i] = mul[mul[g1, k1], inv[g1]]
            out[:, 2 * i + 1] = inv[g1]
        else:
            g2, k2 = seqs[:, 2 * i + 2], seqs[:, 2 * i + 3]
            if name == "2a":
                K2 = inv[k2]
                out[:, 2 * i] = mul[C[g1, k1], g2]
                out[:, 2 * i + 1] = k2
                out[:, 2 * i + 2] = mul[mul[k2, g1], K2]
                out[:, 2 * i + 3] = mul[mul[k2, k1], K2]
            else:
                K1 = inv[k1]
                out[:, 2 * i] = mul[mul[K1, g2], k1]
                out[:, 2 * i + 1] = mul[mul[K1, k2], k1]
                c = C[k1, g1] if printed_2b else C[g1, k1]
                out[:, 2 * i + 2] = mul[mul[mul[K1, c], k1], g1]
                out[:, 2 * i + 3] = k1
        yield name, i, out


def _edges_for(G, seqs, offset, keys, n, convention, extra_powers):
    src_all, dst_all, discarded = [], [], {}
    local = np.arange(len(seqs), dtype=np.int64) + offset
    for name, i, out in _vector_moves(G, seqs, n, convention, extra_powers):
        idx = _encode_rows(out, G.order)
        pos = np.searchsorted(keys, idx)
        pos[pos == len(keys)] = 0
        hit = keys[pos] == idx
        discarded[name] = discarded.get(name, 0) + int((~hit).sum())
        src_all.append(local[hit])
        dst_all.append(pos[hit])
    return np.concatenate(src_all), np.concatenate(dst_all), discarded


@dataclass
class OrbitPartition:
    """Connected components of the move graph on the minimal sequences of one genus."""
    group: FiniteGroup
    genus: int
    keys: np.ndarray           # sorted sequence indices of the vertices
    labels: np.ndarray         # component label per vertex, numbered by smallest member
    count: int
    discarded: dict = field(default_factory=dict)
    convention: str = DEFAULT_CONVENTION

    def __len__(self):
        return len(self.keys)

    def component_of(self, seq) -> np.ndarray:
        idx = encode(self.group, seq)
        pos = int(np.searchsorted(self.keys, idx))
        if pos == len(self.keys) or self.keys[pos] != idx:
            raise KeyError(f"{seq} is not a minimal sequence of genus {self.genus}")
        return self.keys[self.labels == self.labels[pos]]

    def sizes(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.count)

    def roots(self) -> np.ndarray:
        """Smallest sequence index in each component, ascending."""
        first = np.full(self.count, -1, dtype=np.int64)
        # keys are sorted, so the first occurrence of each label is its minimum
        _, pos = np.unique(self.labels, return_index=True)
        first[self.labels[pos]] = self.keys[pos]
        return first

    def blocks(self) -> list:
        """Components as sorted tuples of sequence indices, ordered by root."""
        out = [[] for _ in range(self.count)]
        for key, lab in zip(self.keys.tolist(), self.labels.tolist()):
            out[lab].append(key)
        return [tuple(b) for b in out]


def partition(G: FiniteGroup, n: int, convention=DEFAULT_CONVENTION,
              budget: int = DEFAULT_BUDGET, workers: int = 1,
              extra_powers=()) -> OrbitPartition:
    """Label the components of the move graph on genus-``n`` minimal sequences.

    ``extra_powers`` adds edges for move 1a with ``g^m`` for each listed ``m``
    (they are already implied by repeating ``m = 1``).
    """
    seqs = members(G, n, convention, budget)
    keys = _encode_rows(seqs, G.order)
    M = len(keys)
    if M == 0:
        return OrbitPartition(G, n, keys, np.zeros(0, dtype=np.int64), 0, {}, convention)

    workers = max(1, int(workers))
    bounds = np.linspace(0, M, workers + 1).astype(np.int64)
    shards = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]

    def job(ab):
        a, b = ab
        return _edges_for(G, seqs[a:b], a, keys, n, convention, tuple(extra_powers))

    if workers == 1:
        results = [job(s) for s in shards]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(job, shards))

    src = np.concatenate([r[0] for r in results])
    dst = np.concatenate([r[1] for r in results])
    discarded = {}
    for r in results:
        for k, v in r[2].items():
            discarded[k] = discarded.get(k, 0) + v

    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(M, M))
    count, raw = connected_components(graph, directed=True, connection="weak")
    # renumber labels by first appearance so they follow the smallest member
    _, first = np.unique(raw, return_index=True)
    rank = np.empty(count, dtype=np.int64)
    rank[np.argsort(first)] = np.arange(count)
    labels = rank[raw]
    return OrbitPartition(G, n, keys, labels, int(count), discarded, convention)


def r_n(G: FiniteGroup, n: int = 1, convention=DEFAULT_CONVENTION,
        budget: int = DEFAULT_BUDGET, workers: int = 1) -> int:
    """Number of connected components of the move graph in genus ``n``."""
    return partition(G, n, convention, budget, workers).count


# ---------------------------------------------------------------------------
# scalar BFS oracle


def _neighbours(G, seq, convention):
    n = _genus(seq)
    for name, i in _move_sites(n):
        for img in (apply_move(G, name, seq, i, convention, check=False),
                    inverse_move(G, name, seq, i, convention)):
            if is_minimal(G, img, convention):
                yield img


def orbit_of(G: FiniteGroup, n: int, seq, convention=DEFAULT_CONVENTION) -> set:
    """Connected component containing ``seq``, by breadth-first search."""
    seq = tuple(int(x) for x in seq)
    if _genus(seq) != n:
        raise ValueError(f"sequence has genus {_genus(seq)}, expected {n}")
    if not is_minimal(G, seq, convention):
        raise ValueError(f"{seq} is not a minimal sequence")
    seen = {seq}
    todo = deque([seq])
    while todo:
        x = todo.popleft()
        for y in _neighbours(G, x, convention):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def components_bfs(G: FiniteGroup, n: int, convention=DEFAULT_CONVENTION,
                   budget: int = DEFAULT_BUDGET) -> list:
    """All components via repeated :func:`orbit_of`, as sorted index tuples ordered by root."""
    seen = set()
    out = []
    for seq in enumerate_G(G, n, convention, budget):
        if seq in seen:
            continue
        orb = orbit_of(G, n, seq, convention)
        seen |= orb
        out.append(tuple(sorted(encode(G, s) for s in orb)))
    out.sort()
    return out


# ---------------------------------------------------------------------------
# cyclic groups


def cyclic_canonical(n: int, pair) -> int:
    """Reduce a pair over Z_n by Euclidean steps; the result ``d`` names the subgroup <d>.

    Each step is a move 1a (subtract multiples of one entry from the other)
    or a swap; the pair ends as ``(r, 0)`` or ``(0, r)`` and the answer is
    ``gcd(r, n)``, with ``(0, 0)`` giving ``n``.
    """
    a, b = (int(x) % n for x in pair)
    while a and b:
        if a >= b:
            a %= b
        else:
            b %= a
    return gcd(a or b, n)


# ---------------------------------------------------------------------------
# convention audit


def audit_conventions(G: FiniteGroup, conventions=CONVENTIONS) -> list:
    """Which bracket readings keep the total bracket product trivial under every move?

    For each convention and for both readings of the bracket inside move 2b
    (``"printed"``: ``[k_i, g_i]``; ``"swapped"``: ``[g_i, k_i]``, the one used
    by this module) every genus-2 sequence with trivial total product is
    rewritten by each move. Returns one record per combination with the number
    of images whose total product is no longer trivial.
    """
    N = G.order
    mul = G.mul.astype(np.int64)
    grid = np.stack(np.meshgrid(*[np.arange(N)] * 4, indexing="ij"), -1).reshape(-1, 4)
    out = []
    for conv in conventions:
        C = G.commutator_table(conv).astype(np.int64)
        tot = mul[C[grid[:, 1], grid[:, 0]], C[grid[:, 3], grid[:, 2]]]
        seqs = grid[tot == 0]
        for reading in ("printed", "swapped"):
            failures = {}
            for name, i, img in _vector_moves(G, seqs, 2, conv, printed_2b=reading == "printed"):
                t = mul[C[img[:, 1], img[:, 0]], C[img[:, 3], img[:, 2]]]
                failures[name] = int((t != 0).sum())
            out.append({
                "convention": conv,
                "move_2b_bracket": reading,
                "ok": not any(failures.values()),
                "failures": failures,
            })
    return out


# ---------------------------------------------------------------------------
# golden files


def write_golden(part: OrbitPartition, fh) -> None:
    """One line per component, ``component <root-index> size=<s>``, ascending root."""
    sizes = part.sizes()
    roots = part.roots()
    for lab in np.argsort(roots, kind="stable"):
        fh.write(f"component {int(roots[lab])} size={int(sizes[lab])}\n")


def read_golden(fh) -> list:
    out = []
    for line in fh:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        word, root, size = line.split()
        if word != "component" or not size.startswith("size="):
            raise ValueError(f"bad golden line: {line!r}")
        out.append((int(root), int(size[5:])))
    return out
