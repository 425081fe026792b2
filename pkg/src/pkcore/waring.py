"""Sumset levels of the p-th power residues and coverage of Z mod p^k.

F+t below means the set of sums of t elements of F (F itself excludes 0
and all multiples of p). The headline coverage fact: every residue mod
p^k is a sum of at most four p-th power residues, split as F+3 covering
the multiples-of-p side and F+4 the rest, with overlaps for p > 3.

Masks are plain ints used as bitsets over [0, p^k); level t+1 is the
cyclic convolution of level t with F, done by shift-or.

Multiples of p decompose in two regimes. A first-shell multiple mp with
m not divisible by p is a three-summand sum: some positive triple
r+s+t = p has core sum congruent to a nonzero mp mod p^2, and the
1-mod-p^2 freedom inside F lifts it everywhere. Deeper multiples (of
p^2) need a core triple summing to 0 mod p^2; cube roots of unity
provide one whenever p = 1 mod 6, but for p in {3, 5} none exists and
the nonzero multiples of p^2 are unreachable with three summands (they
always sit in F+2, two exactly-opposite cores plus free perturbation,
hence in F+4). verify_multiples_of_p reports both regimes honestly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CheckFailure, NoTripleFound, OutOfRange
from .modring import PrimePowerModulus

__all__ = [
    "CoverageReport",
    "MultiplesReport",
    "TripleWitness",
    "sumset_levels",
    "verify_multiples_of_p",
    "h_triple_coresum",
    "translation_class",
    "class_of",
    "decompose_residue",
]


def _f_elements(mod: PrimePowerModulus) -> list[int]:
    m, p = mod.modulus, mod.p
    return sorted({pow(n, p, m) for n in range(1, m) if n % p})


def _convolve(mask: int, f: list[int], m: int) -> int:
    full = (1 << m) - 1
    out = 0
    for v in f:
        out |= ((mask << v) | (mask >> (m - v))) & full
    return out


@dataclass(frozen=True)
class CoverageReport:
    mod: PrimePowerModulus
    masks: dict[int, int]  # level t -> bitset over [0, p^k)
    counts: dict[int, int]
    theorem_holds: bool  # F+3 union F+4 covers everything
    n0_covered_by3: bool  # all nonzero multiples of p in F+3
    conjecture_f3_in_f4: bool
    disjoint_f3_f4: bool
    witness_decompositions: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def members(self, t: int) -> set[int]:
        mask = self.masks[t]
        return {i for i in range(self.mod.modulus) if mask >> i & 1}


def sumset_levels(mod: PrimePowerModulus, max_t: int = 4) -> CoverageReport:
    """Masks of F, F+2, ..., F+max_t plus the coverage verdicts."""
    mod.require_tables()
    if mod.k < 2:
        raise OutOfRange("sumset analysis needs k >= 2")
    if max_t < 4:
        raise OutOfRange("max_t below 4 cannot decide the coverage theorem")
    m = mod.modulus
    f = _f_elements(mod)
    masks = {1: 0}
    for v in f:
        masks[1] |= 1 << v
    for t in range(2, max_t + 1):
        masks[t] = _convolve(masks[t - 1], f, m)
    full = (1 << m) - 1
    union34 = masks[3] | masks[4]
    n0_mask = 0
    for x in range(mod.p, m, mod.p):
        n0_mask |= 1 << x
    report = CoverageReport(
        mod=mod,
        masks=masks,
        counts={t: mask.bit_count() for t, mask in masks.items()},
        theorem_holds=union34 == full,
        n0_covered_by3=masks[3] & n0_mask == n0_mask,
        conjecture_f3_in_f4=masks[3] & ~masks[4] == 0,
        disjoint_f3_f4=masks[3] & masks[4] == 0,
    )
    # spot-check witnesses: smallest member of each level above 1
    for t in range(2, max_t + 1):
        mask = masks[t]
        probe = (mask & -mask).bit_length() - 1 if mask else None
        if probe is not None:
            report.witness_decompositions[probe] = decompose_residue(mod, probe, t, _levels=masks)
    return report


def decompose_residue(
    mod: PrimePowerModulus,
    x: int,
    t: int,
    _levels: dict[int, int] | None = None,
) -> tuple[int, ...]:
    """A t-tuple of p-th power residues summing to x mod p^k.

    Deterministic: scans F ascending and recurses on the remainder, so
    the first witness found is always the same. Raises NoTripleFound if
    x is not in F+t.
    """
    mod.require_tables()
    m = mod.modulus
    f = _f_elements(mod)
    if _levels is None:
        _levels = {1: 0}
        for v in f:
            _levels[1] |= 1 << v
        for lvl in range(2, t + 1):
            _levels[lvl] = _convolve(_levels[lvl - 1], f, m)
    x %= m
    if not _levels[t] >> x & 1:
        raise NoTripleFound(f"{x} is not a sum of {t} p-th power residues mod {m}")
    parts: list[int] = []
    rem = x
    for lvl in range(t, 1, -1):
        for v in f:
            if _levels[lvl - 1] >> ((rem - v) % m) & 1:
                parts.append(v)
                rem = (rem - v) % m
                break
        else:  # pragma: no cover - contradicts the mask invariant
            raise CheckFailure("witness search lost a marked residue")
    parts.append(rem)
    fset = set(f)
    if sum(parts) % m != x or any(v not in fset for v in parts):
        raise CheckFailure("invalid witness produced")  # pragma: no cover
    return tuple(parts)


@dataclass(frozen=True)
class MultiplesReport:
    mod: PrimePowerModulus
    all_covered: bool  # every nonzero multiple of p in F+3
    first_shell_covered: bool  # every mp with m a unit in F+3
    missing: tuple[int, ...]  # nonzero multiples not in F+3
    missing_in_two_sums: bool  # the missing ones all lie in F+2
    witnesses: dict[int, tuple[int, int, int]]


def verify_multiples_of_p(mod: PrimePowerModulus) -> MultiplesReport:
    """Exhaustive check of which nonzero multiples of p are in F+3.

    Returns witnesses (three p-th power summands) for every covered
    multiple; the uncovered ones, when any, are nonzero multiples of p^2
    and are verified to be two-summand sums instead.
    """
    report = sumset_levels(mod, 4)
    m, p = mod.modulus, mod.p
    mask3, mask2 = report.masks[3], report.masks[2]
    missing = []
    witnesses: dict[int, tuple[int, int, int]] = {}
    first_shell_ok = True
    for x in range(p, m, p):
        if mask3 >> x & 1:
            witnesses[x] = decompose_residue(mod, x, 3, _levels=report.masks)  # type: ignore[assignment]
        else:
            missing.append(x)
            if x % (p * p):
                first_shell_ok = False
    return MultiplesReport(
        mod=mod,
        all_covered=not missing,
        first_shell_covered=first_shell_ok,
        missing=tuple(missing),
        missing_in_two_sums=all(mask2 >> x & 1 for x in missing),
        witnesses=witnesses,
    )


@dataclass(frozen=True)
class TripleWitness:
    """A positive triple (r, s, t) with r+s+t = p whose core sum is a
    nonzero multiple of p mod p^2."""

    m: int  # multiplier: coresum = m*p mod p^2, m a unit mod p
    triple: tuple[int, int, int]
    coresum: int  # canonical residue mod p^2
    degenerate_h: bool = False  # the (h,h,1) triple had coresum 0 mod p^2


def h_triple_coresum(p: int) -> TripleWitness:
    """Coresum witness from the halving triple (h, h, 1), h = (p-1)/2.

    2*A(h)+1 = 0 mod p always; it degenerates to 0 mod p^2 exactly when
    2^p = 2 mod p^2 (base-2 carry vanishes), in which case the fallback
    triple ((p-1)/3, 2(p-1)/3, 1) applies when 3 | p-1, then an exhaustive
    (r, s, 1) search.
    """
    if p < 5:
        raise OutOfRange("needs p >= 5")
    pp = p * p
    h = (p - 1) // 2
    c = (2 * pow(h, p, pp) + 1) % pp
    if c % p != 0:  # pragma: no cover - contradicts exact cancellation
        raise CheckFailure(f"(h,h,1) core sum not a multiple of p at p={p}")
    if c != 0:
        return TripleWitness(m=(c // p) % p, triple=(h, h, 1), coresum=c)
    if (p - 1) % 3 == 0:
        r, s = (p - 1) // 3, 2 * (p - 1) // 3
        c = (pow(r, p, pp) + pow(s, p, pp) + 1) % pp
        if c % p == 0 and c != 0:
            return TripleWitness(m=(c // p) % p, triple=(r, s, 1), coresum=c, degenerate_h=True)
    for r in range(1, p - 1):
        s = p - 1 - r
        if s < r:
            break
        c = (pow(r, p, pp) + pow(s, p, pp) + 1) % pp
        if c % p == 0 and c != 0:
            return TripleWitness(m=(c // p) % p, triple=(r, s, 1), coresum=c, degenerate_h=True)
    raise NoTripleFound(f"no (r, s, 1) triple with nonzero coresum for p = {p}")


def class_of(mod: PrimePowerModulus, x: int) -> int:
    return x % mod.p


def translation_class(mod: PrimePowerModulus, i: int) -> set[int]:
    """N_i: all residues congruent to i mod p. N_0 is the multiples of p,
    N_1 coincides with the extension group B_k as a set."""
    if not 0 <= i < mod.p:
        raise OutOfRange(f"need 0 <= i < p, got {i}")
    mod.require_tables()
    return set(range(i, mod.modulus, mod.p))
