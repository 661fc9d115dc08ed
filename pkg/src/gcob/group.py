"""
Finite groups stored as dense multiplication tables.

Elements are the integers ``0 .. order-1`` and the identity is always ``0``.
A group is built either from an explicit table (:func:`group_from_table`) or
as the closure of a list of permutations (:func:`group_from_generators`).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import ClosureCapExceeded, NotAGroup

DEFAULT_CLOSURE_CAP = 10_000
ASSOCIATIVITY_EXHAUSTIVE_MAX = 128
ASSOCIATIVITY_SAMPLES = 200_000

Permutation = tuple  # images of 0..m-1

# The four readings of the bracket [k, g]; keys spell the word left to right,
# upper case meaning inverse.
CONVENTIONS = ("kgKG", "KGkg", "gkGK", "GKgk")
DEFAULT_CONVENTION = "kgKG"


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    mul: np.ndarray
    inv: np.ndarray
    name: str = "G"
    generators: tuple = ()
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.mul.shape[0]

    @property
    def identity(self) -> int:
        return 0

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def m(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def i(self, a: int) -> int:
        return int(self.inv[a])

    def prod(self, *xs: int) -> int:
        acc = 0
        for x in xs:
            acc = int(self.mul[acc, x])
        return acc

    def power(self, a: int, m: int) -> int:
        if m < 0:
            a, m = int(self.inv[a]), -m
        acc = 0
        for _ in range(m % self.element_order(a)):
            acc = int(self.mul[acc, a])
        return acc

    def element_order(self, a: int) -> int:
        return int(self.element_orders[a])

    @property
    def element_orders(self) -> np.ndarray:
        if "orders" not in self._cache:
            n = self.order
            orders = np.zeros(n, dtype=np.int64)
            cur = np.zeros(n, dtype=self.mul.dtype)
            base = np.arange(n)
            for step in range(1, n + 1):
                cur = self.mul[cur, base]
                hit = (cur == 0) & (orders == 0)
                orders[hit] = step
                if orders.all():
                    break
            self._cache["orders"] = orders
        return self._cache["orders"]

    def commutator(self, k: int, g: int, convention: str = DEFAULT_CONVENTION) -> int:
        """Return the bracket [k, g]; by default ``k g k^-1 g^-1``."""
        return int(self.commutator_table(convention)[k, g])

    def commutator_table(self, convention: str = DEFAULT_CONVENTION) -> np.ndarray:
        """``table[k, g] == [k, g]`` for every pair of elements."""
        key = ("comm", convention)
        if key not in self._cache:
            self._cache[key] = _bracket(self.mul, self.inv, convention)
        return self._cache[key]

    def is_abelian(self) -> bool:
        return bool((self.mul == self.mul.T).all())

    def conjugacy_class_count(self) -> int:
        n = self.order
        # conj[h, x] = h x h^-1
        conj = self.mul[self.mul[np.arange(n)[:, None], np.arange(n)[None, :]], self.inv[:, None]]
        seen = np.zeros(n, dtype=bool)
        classes = 0
        for x in range(n):
            if not seen[x]:
                seen[conj[:, x]] = True
                classes += 1
        return classes

    def relabel(self, perm: Sequence[int], name: str | None = None) -> "FiniteGroup":
        """Rename element ``x`` to ``perm[x]``; ``perm[0]`` must be 0."""
        perm = np.asarray(perm)
        if perm[0] != 0:
            raise ValueError("relabeling must fix the identity")
        back = np.argsort(perm)
        mul = perm[self.mul[back[:, None], back[None, :]]]
        inv = perm[self.inv[back]]
        gens = tuple(int(perm[g]) for g in self.generators)
        return FiniteGroup(mul.astype(self.mul.dtype), inv.astype(self.inv.dtype),
                           name or self.name, gens)


def _bracket(mul, inv, convention):
    n = mul.shape[0]
    k = np.arange(n)[:, None]
    g = np.arange(n)[None, :]
    K, G = inv[k], inv[g]
    word = {
        "kgKG": (k, g, K, G),
        "KGkg": (K, G, k, g),
        "gkGK": (g, k, G, K),
        "GKgk": (G, K, g, k),
    }[convention]
    out = mul[word[0], word[1]]
    out = mul[out, word[2]]
    return mul[out, word[3]]


def _table_dtype(n):
    return np.int16 if n < 2**15 else np.int32


def group_from_table(table, name: str = "G", check: bool = True, rng=None) -> FiniteGroup:
    """Validate a Cayley table and return it as a group with identity 0."""
    mul = np.asarray(table)
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or mul.shape[0] == 0:
        raise NotAGroup("table must be square and non-empty", mul.shape)
    n = mul.shape[0]
    if mul.min() < 0 or mul.max() >= n:
        raise NotAGroup("table entries must lie in 0..n-1")
    base = np.arange(n)
    for r in range(n):
        if len(np.unique(mul[r])) != n:
            c = _first_repeat(mul[r])
            raise NotAGroup("row is not a permutation (Latin square violation)", ("row", r, "col", c))
        if len(np.unique(mul[:, r])) != n:
            c = _first_repeat(mul[:, r])
            raise NotAGroup("column is not a permutation (Latin square violation)", ("col", r, "row", c))

    ids = [e for e in range(n) if (mul[e] == base).all() and (mul[:, e] == base).all()]
    if not ids:
        raise NotAGroup("no two-sided identity")
    e = ids[0]
    if e != 0:
        order = [e] + [x for x in range(n) if x != e]
        perm = np.empty(n, dtype=np.int64)
        perm[order] = base
        back = np.asarray(order)
        mul = perm[mul[back[:, None], back[None, :]]]

    mul = mul.astype(_table_dtype(n))
    if check:
        _check_associative(mul, rng)
    inv = np.argmax(mul == 0, axis=1)
    if not (mul[base, inv] == 0).all() or not (mul[inv, base] == 0).all():
        x = int(np.flatnonzero(mul[base, inv] != 0)[0])
        raise NotAGroup("element without two-sided inverse", x)
    return FiniteGroup(mul, inv.astype(mul.dtype), name)


def _first_repeat(row):
    seen = set()
    for j, v in enumerate(row):
        if v in seen:
            return j
        seen.add(v)
    return None


def _check_associative(mul, rng=None):
    n = mul.shape[0]
    if n <= ASSOCIATIVITY_EXHAUSTIVE_MAX:
        a = np.arange(n)
        for x in range(n):
            left = mul[mul[x][:, None], a[None, :]]  # (x b) c
            right = mul[x][mul]                       # x (b c)
            bad = np.argwhere(left != right)
            if len(bad):
                b, c = bad[0]
                raise NotAGroup("associativity fails", (x, int(b), int(c)))
        return
    rng = np.random.default_rng(0) if rng is None else rng
    x, b, c = rng.integers(0, n, size=(3, ASSOCIATIVITY_SAMPLES))
    bad = np.flatnonzero(mul[mul[x, b], c] != mul[x, mul[b, c]])
    if len(bad):
        j = bad[0]
        raise NotAGroup("associativity fails", (int(x[j]), int(b[j]), int(c[j])))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p * q``: apply ``q`` first, then ``p``."""
    return tuple(p[i] for i in q)


def perm_from_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse disjoint-cycle notation like ``(0,1,2)(3,4)``; ``()`` is identity.

    Spaces may separate points instead of commas.
    """
    cycles = []
    body = text.strip()
    if re.sub(r"\([\d,\s]*\)", "", body).strip():
        raise ValueError(f"bad cycle notation: {text!r}")
    for chunk in re.findall(r"\(([\d,\s]*)\)", body):
        pts = [int(t) for t in re.split(r"[,\s]+", chunk.strip()) if t]
        if len(set(pts)) != len(pts):
            raise ValueError(f"repeated point in cycle: {chunk!r}")
        cycles.append(pts)
    top = max((max(c) for c in cycles if c), default=-1) + 1
    degree = top if degree is None else degree
    if top > degree:
        raise ValueError(f"point {top - 1} outside degree {degree}")
    images = list(range(degree))
    used = set()
    for c in cycles:
        if used & set(c):
            raise ValueError("cycles are not disjoint")
        used |= set(c)
        for a, b in zip(c, c[1:] + c[:1]):
            images[a] = b
    return tuple(images)


def cycles_string(p: Permutation) -> str:
    seen, out = set(), []
    for start in range(len(p)):
        if start in seen or p[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = p[x]
        out.append("(" + ",".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def group_from_generators(gens: Sequence[Permutation], name: str = "G",
                          degree: int | None = None,
                          cap: int = DEFAULT_CLOSURE_CAP) -> FiniteGroup:
    """Closure of ``gens`` under composition.

    Elements are numbered in breadth-first discovery order starting from the
    identity, multiplying each discovered element on the left by the
    generators in the order given.
    """
    gens = [tuple(g) for g in gens]
    if degree is None:
        degree = max((len(g) for g in gens), default=1)
    gens = [g + tuple(range(len(g), degree)) for g in gens]
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise ValueError(f"not a permutation: {g}")

    ident = tuple(range(degree))
    elements = [ident]
    index = {ident: 0}
    head = 0
    while head < len(elements):
        x = elements[head]
        head += 1
        for g in gens:
            y = compose(g, x)
            if y not in index:
                if len(elements) >= cap:
                    raise ClosureCapExceeded(f"closure of {name} exceeds {cap} elements")
                index[y] = len(elements)
                elements.append(y)

    n = len(elements)
    perms = np.asarray(elements, dtype=np.int64)  # (n, degree)
    # products[a, b] = perms[a][perms[b]]
    products = perms[np.arange(n)[:, None, None], perms[None, :, :]]
    lookup = {row: i for i, row in enumerate(_row_keys(perms))}
    keys = _row_keys(products.reshape(n * n, degree))
    mul = np.fromiter((lookup[k] for k in keys), dtype=np.int64, count=n * n)
    G = group_from_table(mul.reshape(n, n), name, check=False)
    gen_ids = tuple(lookup[np.asarray(g, dtype=np.int64).tobytes()] for g in gens)
    return FiniteGroup(G.mul, G.inv, name, gen_ids)


def _row_keys(rows):
    rows = np.ascontiguousarray(rows)
    return [r.tobytes() for r in rows]


def direct_product(g: FiniteGroup, h: FiniteGroup, name: str | None = None,
                   cap: int = DEFAULT_CLOSURE_CAP) -> FiniteGroup:
    """Componentwise product; ``(a, b)`` gets index ``a * |h| + b``."""
    n, m = g.order, h.order
    if n * m > cap:
        raise ClosureCapExceeded(f"product order {n * m} exceeds {cap}")
    a = np.arange(n * m) // m
    b = np.arange(n * m) % m
    mul = g.mul[a[:, None], a[None, :]].astype(np.int64) * m + h.mul[b[:, None], b[None, :]]
    inv = g.inv[a].astype(np.int64) * m + h.inv[b]
    dt = _table_dtype(n * m)
    return FiniteGroup(mul.astype(dt), inv.astype(dt), name or f"{g.name}x{h.name}")


def cyclic_table(n: int) -> np.ndarray:
    a = np.arange(n)
    return (a[:, None] + a[None, :]) % n
