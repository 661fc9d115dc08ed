"""
Arithmetic functions and family formulas for r1.

Everything here is exact integer arithmetic. The brute-force engine in
:mod:`gcob.invariant` is checked against these values.
"""
from __future__ import annotations

from dataclasses import dataclass

from sympy import divisor_count, divisor_sigma, isprime, primefactors

from .errors import NonIntegralResult, NotPrime

__all__ = [
    "tau", "sigma", "jordan2",
    "r1_cyclic", "r1_dihedral", "r1_dicyclic", "r1_elementary_abelian",
    "cyc_dihedral", "cyc_dicyclic", "F_recurrence", "F_closed",
    "subgroup_count_dihedral", "subgroup_count_dicyclic",
    "FamilyFormulaResult", "family_formula",
]


def _positive(n):
    if int(n) != n or n < 1:
        raise ValueError(f"expected a positive integer, got {n!r}")
    return int(n)


def _prime(p):
    if not isprime(p):
        raise NotPrime(f"{p} is not prime")
    return int(p)


def tau(n: int) -> int:
    """Number of divisors of ``n``."""
    return int(divisor_count(_positive(n)))


def sigma(n: int) -> int:
    """Sum of divisors of ``n``."""
    return int(divisor_sigma(_positive(n), 1))


def jordan2(n: int) -> int:
    """Jordan's totient J_2(n) = n^2 prod_{p | n} (1 - p^-2)."""
    n = _positive(n)
    out = n * n
    for p in primefactors(n):
        out = out // (p * p) * (p * p - 1)
    return out


def r1_cyclic(n: int) -> int:
    return tau(n)


def cyc_dihedral(n: int) -> int:
    """Cyclic subgroups of the dihedral group of order 2n."""
    return _positive(n) + tau(n)


def r1_dihedral(n: int) -> int:
    """r1 of the dihedral group of order ``2n``."""
    n = _positive(n)
    return cyc_dihedral(n) + (n // 2 if n % 2 == 0 else 0)


def cyc_dicyclic(n: int) -> int:
    # Confirmed against the cyclic-subgroup census for n <= 10 (tests/test_closed_forms.py).
    n = _positive(n)
    return tau(2 * n) + n


def r1_dicyclic(n: int) -> int:
    """r1 of the dicyclic group of order ``4n``; equals its cyclic-subgroup count."""
    return cyc_dicyclic(n)


def r1_elementary_abelian(p: int, n: int) -> int:
    p, n = _prime(p), _positive(n)
    num = p ** (2 * n - 1) + p ** (n + 1) - p ** (n - 1) + p * p - p - 1
    den = p * p - 1
    q, rem = divmod(num, den)
    if rem:
        raise NonIntegralResult(f"r1(Z_{p}^{n}): {num}/{den} is not an integer")
    return q


def F_recurrence(p: int, n: int) -> int:
    """Successive difference r1(Z_p^(n+1)) - r1(Z_p^n) via F(n) = p F(n-1) + p^(2n-2)(p-1), F(0) = 1."""
    p = _prime(p)
    if n < 0:
        raise ValueError("n must be non-negative")
    f = 1
    for j in range(1, n + 1):
        f = p * f + p ** (2 * j - 2) * (p - 1)
    return f


def F_closed(p: int, n: int) -> int:
    """p^(n-1) (p^n + p - 1)."""
    p = _prime(p)
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    return p ** (n - 1) * (p**n + p - 1)


def subgroup_count_dihedral(n: int) -> int:
    return tau(n) + sigma(n)


def subgroup_count_dicyclic(n: int) -> int:
    return tau(2 * n) + sigma(n)


@dataclass(frozen=True)
class FamilyFormulaResult:
    family: str
    params: tuple
    r1: int
    cyc: int | None = None


def family_formula(family: str, *params: int) -> FamilyFormulaResult:
    """Closed-form r1 (and Cyc where known) for a recognised family."""
    if family == "cyclic":
        (n,) = params
        return FamilyFormulaResult(family, params, r1_cyclic(n), tau(n))
    if family == "dihedral":
        (n,) = params
        return FamilyFormulaResult(family, params, r1_dihedral(n), cyc_dihedral(n))
    if family == "dicyclic":
        (n,) = params
        return FamilyFormulaResult(family, params, r1_dicyclic(n), cyc_dicyclic(n))
    if family == "elemab":
        p, n = params
        lines = (p**n - 1) // (p - 1)
        return FamilyFormulaResult(family, params, r1_elementary_abelian(p, n), 1 + lines)
    raise ValueError(f"no closed form for family {family!r}")
