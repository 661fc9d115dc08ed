"""
Subgroup lattice enumeration by join closure.

A subgroup is held as a bitmask (a python int with bit ``x`` set for each
member ``x``). Every subgroup is the join of the cyclic subgroups it
contains, so closing the set of cyclic subgroups under "join with a cyclic
subgroup" reaches the whole lattice.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OrderCapExceeded
from .group import FiniteGroup

DEFAULT_ORDER_CAP = 64


def _members(mask: int):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Subgroup:
    mask: int
    is_cyclic: bool
    is_abelian: bool

    @property
    def elements(self) -> tuple:
        return tuple(_members(self.mask))

    @property
    def order(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, x):
        return bool(self.mask >> x & 1)


def _cyclic_mask(G: FiniteGroup, g: int) -> int:
    mask, x = 1, g
    while x != 0:
        mask |= 1 << x
        x = int(G.mul[x, g])
    return mask


def _generate(G: FiniteGroup, mask: int, gens) -> int:
    """Smallest subgroup containing ``mask`` and closed under the ``gens``."""
    frontier = _members(mask)
    mul = G.mul
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = int(mul[x, g])
                if not mask >> y & 1:
                    mask |= 1 << y
                    nxt.append(y)
        frontier = nxt
    return mask


def _is_abelian_mask(G: FiniteGroup, mask: int) -> bool:
    els = np.asarray(_members(mask))
    block = G.mul[els[:, None], els[None, :]]
    return bool((block == block.T).all())


def cyclic_subgroups(G: FiniteGroup) -> set:
    masks = {_cyclic_mask(G, g) for g in range(G.order)}
    return {Subgroup(m, True, True) for m in masks}


def all_subgroups(G: FiniteGroup, cap: int = DEFAULT_ORDER_CAP) -> set:
    """Every subgroup of ``G`` exactly once."""
    if G.order > cap:
        raise OrderCapExceeded(f"|{G.name}| = {G.order} exceeds subgroup order cap {cap}")
    cyc = {}
    for g in range(G.order):
        cyc.setdefault(_cyclic_mask(G, g), g)
    # one generator per cyclic subgroup
    cyc_items = sorted(cyc.items())

    gens_of = {m: ([g] if g else []) for m, g in cyc_items}
    frontier = list(gens_of)
    while frontier:
        nxt = []
        for h in frontier:
            for cmask, g in cyc_items:
                if cmask & h == cmask:
                    continue
                gens = gens_of[h] + [g]
                j = _generate(G, h | cmask, gens)
                if j not in gens_of:
                    gens_of[j] = gens
                    nxt.append(j)
        frontier = nxt

    cyclic_set = set(cyc)
    return {
        Subgroup(m, m in cyclic_set, m in cyclic_set or _is_abelian_mask(G, m))
        for m in gens_of
    }


def count_subgroups(G: FiniteGroup, cap: int = DEFAULT_ORDER_CAP) -> int:
    return len(all_subgroups(G, cap))


def count_abelian_subgroups(G: FiniteGroup, cap: int = DEFAULT_ORDER_CAP) -> int:
    return sum(1 for h in all_subgroups(G, cap) if h.is_abelian)


def count_cyclic_subgroups(G: FiniteGroup) -> int:
    return len({_cyclic_mask(G, g) for g in range(G.order)})


def subgroup_census(G: FiniteGroup, cap: int = DEFAULT_ORDER_CAP) -> dict:
    """Subgroup, abelian-subgroup and cyclic-subgroup counts in one pass."""
    subs = all_subgroups(G, cap)
    return {
        "subgroups": len(subs),
        "abelian_subgroups": sum(h.is_abelian for h in subs),
        "cyclic_subgroups": sum(h.is_cyclic for h in subs),
    }


def commuting_pairs_count(G: FiniteGroup) -> int:
    """Com(G): ordered pairs (g, k) with [k, g] = 1."""
    return int((G.mul == G.mul.T).sum())


def join(G: FiniteGroup, a: Subgroup, b: Subgroup) -> int:
    """Bitmask of the subgroup generated by ``a`` and ``b``."""
    return _generate(G, a.mask | b.mask, list(a.elements) + list(b.elements))
