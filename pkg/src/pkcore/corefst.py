"""Core function A_k(n), carry digits, increments, and critical precision.

A_k(n) = n^(p^(k-1)) mod p^k for 1 <= n < p is the unique core element
congruent to n mod p. Raising to the p-th power gains exactly one
significant base-p digit per step while freezing the digits already
settled, which gives a cheap generation ladder and, through the first
digit of n^(p-1) mod p^2 (the carry n'), a handle on how the core
increments d_k(n) = A_k(n+1) - A_k(n) distribute over precisions.

Critical precision K_p is the least k at which the h = (p-1)/2 first-half
increments are pairwise distinct mod p^k. It is already determined by the
exact integer differences e_1(n) = (n+1)^p - n^p: distinctness levels of
the e_i are preserved from each i to the next, so the module computes K_p
from e_1 alone and the tests verify the preservation claim numerically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CheckFailure, OutOfRange, Oversize
from .modring import PrimePowerModulus

KP_GUARD_DEFAULT = 2000  # e_1(n) has about p*log10(p) digits


def fst_carry(p: int, n: int) -> int:
    """The carry digit n' in n^(p-1) = n'p + 1 mod p^2.

    Exact division is guaranteed; n' = 0 happens for n = 1 always and
    for bases whose (p-1)-th power is 1 mod p^2 (for example n = 2 at
    p = 1093).
    """
    if not 1 <= n < p:
        raise OutOfRange(f"need 1 <= n < p, got n={n}, p={p}")
    return (pow(n, p - 1, p * p) - 1) // p


def core_by_recurrence(p: int, n: int, k: int) -> int:
    """A_k(n) by the digit-gaining ladder: one p-th power per precision.

    Each step computes f_i = f_{i-1}^p mod p^(i+1); congruence mod p^i
    determines the p-th power mod p^(i+1), so every step fixes the known
    digits and produces exactly one new one. Equivalent to the direct
    n^(p^(k-1)) mod p^k (asserted in the property suite) but does k-1
    small powerings instead of one big one.
    """
    if not 1 <= n < p:
        raise OutOfRange(f"need 1 <= n < p, got n={n}, p={p}")
    if k < 1:
        raise OutOfRange(f"need k >= 1, got {k}")
    f = n
    for i in range(1, k):
        f = pow(f, p, p ** (i + 1))
    return f


def recurrence_step_identity(p: int, n: int, i: int) -> bool:
    """Check n^(p^i) = n^(p^(i-1)) * (n'p^i + 1) mod p^(i+1).

    The identity relates full-precision values: the first factor must be
    carried at the target precision p^(i+1). Truncating it to p^i digits
    loses the top digit of the product, which is why the generation
    ladder uses p-th powers instead of carry multiplies.
    """
    m = p ** (i + 1)
    lhs = pow(n, p ** i, m)
    rhs = pow(n, p ** (i - 1), m) * (fst_carry(p, n) * p ** i + 1) % m
    return lhs == rhs


@dataclass(frozen=True)
class CoreTable:
    """Core values, carries, and increments for one modulus.

    core[i] is A_k(n) for n = i+1 (p-1 entries); carries[i] is the carry
    of n = i+1; increments[i] is d_k(n) for n = i (p entries), with the
    wrap convention A_k(0) = A_k(p) = 0, so d_k(0) = d_k(p-1) = 1.
    """

    mod: PrimePowerModulus
    core: tuple[int, ...]
    carries: tuple[int, ...]
    increments: tuple[int, ...]


def build_core_table(mod: PrimePowerModulus) -> CoreTable:
    p, k, m = mod.p, mod.k, mod.modulus
    core = []
    for n in range(1, p):
        v = core_by_recurrence(p, n, k)
        if v != pow(n, p ** (k - 1), m):  # cross-check ladder vs direct
            raise CheckFailure(f"core ladder mismatch at p={p}, k={k}, n={n}")
        core.append(v)
    carries = tuple(fst_carry(p, n) for n in range(1, p))
    ext = [0] + core + [0]  # A(0) = 0 and A(p) = 0 close the period
    increments = tuple((ext[n + 1] - ext[n]) % m for n in range(p))
    return CoreTable(mod=mod, core=tuple(core), carries=carries, increments=increments)


@dataclass(frozen=True)
class CriticalPrecisionResult:
    p: int
    kp: int
    # per precision k: how many of the h first-half increments are distinct
    distinct_counts: dict[int, int]
    # per pre-critical k: one colliding non-symmetric pair (n, m)
    witnesses: dict[int, tuple[int, int]]


def critical_precision(p: int, guard: int = KP_GUARD_DEFAULT) -> CriticalPrecisionResult:
    """Smallest k >= 2 with all of e_1(1..h) pairwise distinct mod p^k."""
    if p > guard:
        raise Oversize(f"p = {p} above the exact-integer guard {guard}")
    h = (p - 1) // 2
    e1 = [(n + 1) ** p - n ** p for n in range(1, h + 1)]
    counts: dict[int, int] = {}
    witnesses: dict[int, tuple[int, int]] = {}
    k = 2
    while True:
        mk = p ** k
        seen: dict[int, int] = {}
        collision = None
        for n, v in enumerate(e1, start=1):
            r = v % mk
            if r in seen and collision is None:
                collision = (seen[r], n)
            seen[r] = n
        counts[k] = len({v % mk for v in e1})
        if counts[k] == h:
            if k >= p:
                raise CheckFailure(f"critical precision bound violated: K_{p} = {k} >= p")
            return CriticalPrecisionResult(p=p, kp=k, distinct_counts=counts, witnesses=witnesses)
        witnesses[k] = collision
        k += 1
        if k > p:
            raise CheckFailure(f"no critical precision below p for p = {p}")


def integer_increments(p: int, i: int, k: int) -> list[int]:
    """e_i(n) = (n+1)^(p^i) - n^(p^i) mod p^k for n = 1..p-1."""
    if i < 1:
        raise OutOfRange(f"need i >= 1, got {i}")
    if k < 1:
        raise OutOfRange(f"need k >= 1, got {k}")
    m = p ** k
    powers = [pow(n, p ** i, m) for n in range(1, p + 1)]
    return [(powers[n] - powers[n - 1]) % m for n in range(1, p)]


def equivalence_level_multiset(p: int, i: int, k_cap: int) -> list[int]:
    """For each non-symmetric pair n < m <= h: the largest j <= k_cap with
    e_i(n) = e_i(m) mod p^j. The multiset is i-invariant (tested, not
    assumed), which is what lets K_p be read off e_1."""
    h = (p - 1) // 2
    vals = integer_increments(p, i, k_cap)
    out = []
    # pairs within the first half are never mirror-symmetric (n+m <= p-2)
    for n, m in itertools.combinations(range(1, h + 1), 2):
        d = (vals[n - 1] - vals[m - 1]) % p ** k_cap
        j = 0
        while j < k_cap and d % p ** (j + 1) == 0:
            j += 1
        out.append(j)
    return sorted(out)
