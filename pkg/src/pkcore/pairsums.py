"""Pairsum coset structure: D_k, core sums, p-th power sums.

The distinct core increments D_k = (A-A) ∩ B generate the cosets that
make up the unit part of every extension pairsum set X+X, all the way up
from the core itself to the p-th powers F. Counting facts verified here:

  |(A+A)\\0| = |A| * |D_k|, which is (p-1)^2/2 once k reaches critical
  precision (every nonzero core sum is a unit: opposite cores cancel
  exactly, so a zero mod p is a zero outright).

  |(F+F) ∩ G| = |F| * |D_2|: increments congruent mod p^2 differ by a
  factor in the 1-mod-p^2 subgroup, which lies inside F, so the number
  of distinct F-cosets is pinned at precision 2.

F+F also contains 0 and, for k >= 3, nonzero multiples of p^2 (two
p-th powers with cancelling cores). Those non-unit sums are counted and
reported separately; they are not part of the coset identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corefst import CoreTable, build_core_table, critical_precision
from .modring import PrimePowerModulus, core_extension_members

__all__ = [
    "CosetReport",
    "FermatPairsumResult",
    "ExtensionPairsumVerdict",
    "coset_generators",
    "core_pairsum_count",
    "fermat_pairsum_count",
    "extension_pairsum_check",
]


@dataclass(frozen=True)
class CosetReport:
    mod: PrimePowerModulus
    generators: frozenset[int]  # distinct d_k(n), n = 1..p-2 (wraps excluded)
    distinct_count: int  # over the first half n = 1..h
    pairsum_count_predicted: int
    pairsum_count_observed: int | None = None


def coset_generators(table: CoreTable) -> CosetReport:
    mod = table.mod
    p = mod.p
    h = (p - 1) // 2
    inner = table.increments[1 : p - 1]  # drop the n=0 and n=p-1 wrap entries
    gens = frozenset(inner)
    distinct = len(set(inner[:h]))
    f_order = (p - 1) * p ** (mod.k - 2) if mod.k >= 2 else p - 1
    d2 = _distinct_count_at(p, 2)
    return CosetReport(
        mod=mod,
        generators=gens,
        distinct_count=distinct,
        pairsum_count_predicted=f_order * d2,
    )


def _distinct_count_at(p: int, k: int) -> int:
    m = p ** k
    q = p ** (k - 1)
    core = [0] + [pow(n, q, m) for n in range(1, p)]
    h = (p - 1) // 2
    return len({(core[n + 1] - core[n]) % m for n in range(1, h + 1)})


def core_pairsum_count(mod: PrimePowerModulus) -> tuple[int, int]:
    """(observed, predicted) distinct nonzero sums of two core elements.

    Predicted is (p-1)^2/2 at or above critical precision, |A| * |D_k|
    below it. Exhaustive over the (p-1)^2 pairs.
    """
    mod.require_tables()
    p, m = mod.p, mod.modulus
    core = sorted({pow(n, p ** (mod.k - 1), m) for n in range(1, p)})
    sums = {(a + b) % m for a in core for b in core}
    sums.discard(0)
    observed = len(sums)
    kp = critical_precision(p).kp
    if mod.k >= kp:
        predicted = (p - 1) ** 2 // 2
    else:
        predicted = (p - 1) * _distinct_count_at(p, mod.k)
    return observed, predicted


@dataclass(frozen=True)
class FermatPairsumResult:
    observed: int  # distinct unit sums of two p-th power residues
    predicted: int  # |F| * |D_2|
    nonunit_nonzero: int  # nonzero non-unit sums (multiples of p^2), reported

    @property
    def matches(self) -> bool:
        return self.observed == self.predicted


def fermat_pairsum_count(mod: PrimePowerModulus) -> FermatPairsumResult:
    """Count the unit part of F+F exhaustively and compare to |F|*|D_2|.

    The unit sums form whole F-cosets; their coset generators are the
    increments read at precision 2, regardless of k. Sums that are zero
    mod p come from exactly opposite core parts and land on multiples of
    p^2; they are tallied in nonunit_nonzero, outside the identity.
    """
    mod.require_tables()
    p, m = mod.p, mod.modulus
    f = sorted({pow(n, p, m) for n in range(1, m) if n % p})
    sums: set[int] = set()
    for i, a in enumerate(f):
        for b in f[i:]:
            sums.add((a + b) % m)
    sums.discard(0)
    units = sum(1 for s in sums if s % p)
    d2 = _distinct_count_at(p, 2)
    return FermatPairsumResult(
        observed=units,
        predicted=len(f) * d2,
        nonunit_nonzero=len(sums) - units,
    )


@dataclass(frozen=True)
class ExtensionPairsumVerdict:
    mod: PrimePowerModulus
    e: int
    passed: bool
    unit_sum_count: int
    coset_union_count: int


def extension_pairsum_check(mod: PrimePowerModulus, e: int) -> ExtensionPairsumVerdict:
    """Verify the unit part of X^(e)+X^(e) equals the union of cosets
    X^(e)*d over the distinct core increments d in D_k.

    The same generator set serves every extension level; e = 0 is the
    core statement, e = k-2 the p-th power one.
    """
    mod.require_tables()
    m = mod.modulus
    x = sorted(core_extension_members(mod, e))
    sums: set[int] = set()
    for i, a in enumerate(x):
        for b in x[i:]:
            sums.add((a + b) % m)
    units = {s for s in sums if s % mod.p}
    table = build_core_table(mod)
    dks = set(table.increments[1 : mod.p - 1])
    union: set[int] = set()
    for d in dks:
        union.update(v * d % m for v in x)
    return ExtensionPairsumVerdict(
        mod=mod,
        e=e,
        passed=units == union,
        unit_sum_count=len(units),
        coset_union_count=len(union),
    )
