"""Order audits of divisors of p^2-1 and related scans.

The central fact: a divisor r > 1 of p^2-1 never satisfies r^p = r mod
p^3. Mod p^2 the same congruence does hold for scattered (p, r) pairs,
which the exception scan collects; r = p^2-1 itself is congruent to -1
mod p^2 and so passes the congruence for sign reasons alone, which is
why divisors congruent to +-1 mod the working modulus are flagged
sign-trivial and kept out of the exception lists.

Also here: base-b Wieferich-type scans (b^p = b mod p^2), the quadruple
non-core checks for n in {2, 3}, the generator survey over divisors of
p-1 and p+1, audits over divisors of p^(2m)-1, and generator lifting
from mod p^2 to higher precision.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import CheckFailure, NotAUnit, OutOfRange
from .modring import Residue, make_modulus, multiplicative_order
from .primes import divisors, factorize, primes_in_range

__all__ = [
    "DivisorAudit",
    "GeneratorVerdict",
    "GeneratorSurvey",
    "audit_divisors",
    "exception_scan",
    "wieferich_scan",
    "corollary_check",
    "survey_pm1_generators",
    "audit_power_divisors",
    "generator_lift",
    "SCAN_BLOCK",
]

SCAN_BLOCK = 1 << 20


@dataclass(frozen=True)
class DivisorAudit:
    p: int
    r: int
    cofactor: int
    rp_minus_r_mod_p2: int
    rp_minus_r_mod_p3: int
    order_in_g3: int
    is_core_mod_p2: bool
    is_core_mod_p3: bool
    sign_trivial: bool  # r = +-1 mod the audit modulus, core for sign reasons


def _audit_one(p: int, r: int, cofactor: int) -> DivisorAudit:
    p2, p3 = p * p, p ** 3
    rp2, rp3 = pow(r, p, p2), pow(r, p, p3)
    mod3 = make_modulus(p, 3, arithmetic_only=True)
    rr = r % p3
    order = multiplicative_order(Residue(rr, mod3)) if rr % p else 0
    return DivisorAudit(
        p=p,
        r=r,
        cofactor=cofactor,
        rp_minus_r_mod_p2=(rp2 - r) % p2,
        rp_minus_r_mod_p3=(rp3 - r) % p3,
        order_in_g3=order,
        is_core_mod_p2=rp2 == r % p2,
        is_core_mod_p3=rp3 == r % p3,
        sign_trivial=r % p2 in (1, p2 - 1),
    )


def audit_divisors(p: int, assert_non_core: bool = True) -> list[DivisorAudit]:
    """Audit every divisor r > 1 of p^2-1 mod p^2 and mod p^3.

    The mod-p^3 congruence r^p = r must fail for every r (no exclusions
    needed, including r = p^2-1 whose p-th power is -1, not itself);
    with assert_non_core a violation raises CheckFailure. The mod-p^2
    flag is informational; exceptional cases are the non-sign-trivial
    ones, read off via the exceptional() helper.
    """
    n = p * p - 1
    out = []
    for r in divisors(n):
        if r == 1:
            continue
        audit = _audit_one(p, r, n // r)
        if assert_non_core and audit.is_core_mod_p3:
            raise CheckFailure(f"divisor {r} of {p}^2-1 is core mod {p}^3")
        out.append(audit)
    return out


def exceptional(audits: list[DivisorAudit]) -> list[DivisorAudit]:
    """The audits passing the mod-p^2 congruence for non-sign reasons."""
    return [a for a in audits if a.is_core_mod_p2 and not a.sign_trivial]


def exception_scan(p_min: int, p_max: int) -> list[tuple[int, int]]:
    """(p, smallest exceptional r) for primes in [p_min, p_max].

    r ranges over divisors of p^2-1 with 1 < r < p^2-1; the omitted
    endpoint is -1 mod p^2 and would match every prime trivially.
    """
    out = []
    for p in primes_in_range(max(p_min, 3), p_max):
        p2 = p * p
        for r in divisors(p2 - 1):
            if r == 1 or r == p2 - 1:
                continue
            if pow(r, p, p2) == r:
                out.append((p, r))
                break
    return out


def _wieferich_block(args: tuple[int, int, int]) -> list[int]:
    lo, hi, base = args
    hits = []
    for p in primes_in_range(lo, hi):
        p2 = p * p
        if pow(base, p, p2) == base % p2:
            hits.append(p)
    return hits


def wieferich_scan(
    p_max: int,
    base: int = 2,
    checkpoint: str | None = None,
    jobs: int = 1,
    block: int = SCAN_BLOCK,
) -> list[int]:
    """Primes p <= p_max with base^p = base mod p^2.

    Scans sieve blocks in order; with a checkpoint path, resumes from
    the stored block boundary and rewrites it after each completed
    block (single decimal line). Parallel jobs split blocks across
    processes with results merged in block order.
    """
    if base < 2:
        raise OutOfRange("base must be >= 2")
    start = 2
    if checkpoint and os.path.exists(checkpoint):
        text = open(checkpoint).read().strip()
        if text:
            start = max(start, int(text))
    blocks = []
    lo = start
    while lo <= p_max:
        hi = min(lo + block - 1, p_max)
        blocks.append((lo, hi, base))
        lo = hi + 1
    hits: list[int] = []

    def _record(done_hi: int, block_hits: list[int]) -> None:
        hits.extend(block_hits)
        if checkpoint:
            tmp = checkpoint + ".tmp"
            with open(tmp, "w") as fh:
                fh.write(f"{done_hi + 1}\n")
            os.replace(tmp, checkpoint)

    if jobs <= 1:
        for lo, hi, b in blocks:
            _record(hi, _wieferich_block((lo, hi, b)))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for (lo, hi, b), block_hits in zip(blocks, pool.map(_wieferich_block, blocks)):
                _record(hi, block_hits)
    return hits


def corollary_check(p: int, k_max: int = 4, samples: int = 8) -> bool:
    """For n in {2, 3}: the quadruple {n, -n, 1/n, -1/n} mod p^k stays
    outside the core for 3 <= k <= k_max, and multiplying the quadruple
    into the core never lands back in the core (spot-checked)."""
    if p in (2, 3):
        raise OutOfRange("needs p >= 5 so that 2 and 3 are units")
    for k in range(3, k_max + 1):
        m = p ** k
        q = p ** (k - 1)
        cores = [pow(x, q, m) for x in range(1, min(p, samples + 1))]
        for n in (2, 3):
            inv = pow(n, -1, m)
            quad = (n % m, -n % m, inv, -inv % m)
            for x in quad:
                if pow(x, p, m) == x:
                    return False
                for a in cores:
                    y = x * a % m
                    if pow(y, p, m) == y:
                        return False
    return True


@dataclass(frozen=True)
class GeneratorVerdict:
    p: int
    k: int
    g: int
    order: int
    klass: str  # primitiveRoot | halfGroupNoMinusOne | other
    minus_one_in_cycle: bool


@dataclass(frozen=True)
class GeneratorSurvey:
    p: int
    k: int
    verdicts: tuple[GeneratorVerdict, ...]
    satisfied: bool  # some divisor of p-1 or p+1 generates G or half of G

    @property
    def counterexample(self) -> bool:
        return not self.satisfied


def survey_pm1_generators(p: int, k: int) -> GeneratorSurvey:
    """Classify every divisor g > 1 of p-1 and of p+1 by order mod p^k.

    Buckets by order: the full unit group, half of it, or other. Whether
    -1 lies in the cycle is recorded per divisor; for p = 1 mod 4 the
    half-order cycle necessarily contains -1 (the group order is 0 mod 4
    and a cyclic group keeps its unique involution inside the index-2
    subgroup), so the half bucket cannot demand -1 to be absent.
    """
    mod = make_modulus(p, k, arithmetic_only=True)
    m = mod.modulus
    full = mod.units_order
    gs = sorted(
        {g for base in (p - 1, p + 1) for g in divisors(base) if g > 1}
    )
    verdicts = []
    satisfied = False
    for g in gs:
        if g % p == 0:
            continue  # p itself can divide p-1 or p+1 only for p <= 3
        order = multiplicative_order(Residue(g % m, mod))
        if order == full:
            klass = "primitiveRoot"
        elif order * 2 == full:
            klass = "halfGroupNoMinusOne"
        else:
            klass = "other"
        minus_one = order % 2 == 0 and pow(g, order // 2, m) == m - 1
        verdicts.append(
            GeneratorVerdict(p=p, k=k, g=g, order=order, klass=klass, minus_one_in_cycle=minus_one)
        )
        if klass in ("primitiveRoot", "halfGroupNoMinusOne"):
            satisfied = True
    return GeneratorSurvey(p=p, k=k, verdicts=tuple(verdicts), satisfied=satisfied)


def audit_power_divisors(p: int, m_exp: int, k: int = 3, assert_non_core: bool = True) -> list[DivisorAudit]:
    """Audit divisors r > 1 of p^(2m)-1 for r^p = r mod p^k.

    Divisors congruent to +-1 mod p^k (for example p^(2m)-1 itself once
    2m >= k) are core for sign reasons and exempt from the non-core
    assertion; they stay in the output flagged sign_trivial.
    """
    if m_exp < 1:
        raise OutOfRange("need m >= 1")
    n = p ** (2 * m_exp) - 1
    mk = p ** k
    out = []
    for r in divisors(n):
        if r == 1:
            continue
        audit = _audit_one(p, r, n // r)
        trivial = r % mk in (1, mk - 1)
        if assert_non_core and not trivial and pow(r, p, mk) == r % mk:
            raise CheckFailure(f"divisor {r} of {p}^{2 * m_exp}-1 is core mod {p}^{k}")
        out.append(audit)
    return out


def generator_lift(p: int, g: int, k_max: int = 4) -> dict[int, bool]:
    """If g generates the units mod p^2, check it keeps generating at
    every precision up to k_max. Returns {k: is_generator}; an empty
    dict means g was not a generator mod p^2 (not applicable)."""
    if g >= p or g % p == 0:
        raise OutOfRange("need g < p coprime to p")
    mod2 = make_modulus(p, 2, arithmetic_only=True)
    if multiplicative_order(Residue(g, mod2)) != mod2.units_order:
        return {}
    out = {2: True}
    for k in range(3, k_max + 1):
        mod = make_modulus(p, k, arithmetic_only=True)
        out[k] = multiplicative_order(Residue(g, mod)) == mod.units_order
    return out
