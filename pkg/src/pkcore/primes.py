"""Primality, sieves, and integer factorization.

Deterministic Miller-Rabin below 2^64 (fixed witness set), Baillie-PSW
above. Factorization is trial division to a bound, then Pollard rho with
Brent's cycle detection. Everything here is exact integer arithmetic.
"""

from __future__ import annotations

import math
import random

from .errors import FactorizationFailure

# these witnesses decide primality for every n < 2^64
_MR_WITNESSES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

_TRIAL_BOUND = 10 ** 6


def _miller_rabin(n: int, bases) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in bases:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _lucas_strong_probable(n: int) -> bool:
    # standard parameter search for the strong Lucas test
    d = 5
    while True:
        j = _jacobi(d, n)
        if j == -1:
            break
        if j == 0 and abs(d) != n:
            return False
        d = -(d + 2) if d > 0 else -(d - 2)
    p, q = 1, (1 - d) // 4

    k = n + 1
    s = 0
    while k % 2 == 0:
        k //= 2
        s += 1

    # Lucas sequences by binary ladder
    u, v, qk = 0, 2, 1
    for bit in bin(k)[2:]:
        u, v = u * v % n, (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) * pow(2, -1, n) % n, (d * u + p * v) * pow(2, -1, n) % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 2 ** 64:
        return _miller_rabin(n, _MR_WITNESSES_64)
    # BPSW: base-2 strong probable prime + strong Lucas
    if not _miller_rabin(n, (2,)):
        return False
    if math.isqrt(n) ** 2 == n:
        return False
    return _lucas_strong_probable(n)


def sieve(limit: int) -> list[int]:
    """All primes <= limit, ascending."""
    if limit < 2:
        return []
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, f in enumerate(flags) if f]


def primes_in_range(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p <= hi, by a segmented sieve over [lo, hi]."""
    if hi < 2 or hi < lo:
        return []
    lo = max(lo, 2)
    base = sieve(math.isqrt(hi))
    flags = bytearray([1]) * (hi - lo + 1)
    for p in base:
        start = max(p * p, (lo + p - 1) // p * p)
        flags[start - lo :: p] = bytearray(len(range(start, hi + 1, p)))
    return [lo + i for i, f in enumerate(flags) if f]


def _pollard_rho_brent(n: int, rng: random.Random, max_iters: int = 1 << 21) -> int:
    """One Brent round with a fresh (start, offset). Returns a nontrivial
    factor, or 0 when the iteration budget runs out before a cycle splits."""
    if n % 2 == 0:
        return 2
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    x = ys = y
    steps = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        steps += r
        if steps > max_iters:
            return 0
        r *= 2
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g if g != n else 0


def factorize(n: int, max_rounds: int = 64) -> dict[int, int]:
    """Prime factorization {prime: exponent}. Raises FactorizationFailure
    if Pollard rho cannot split a composite within the round budget."""
    if n < 1:
        raise FactorizationFailure(f"cannot factor {n}")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    wi = 0
    while d * d <= n and d <= _TRIAL_BOUND:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += wheel[wi]
        wi = (wi + 1) % 8
    if n == 1:
        return out
    rng = random.Random(0xC0FFEE)
    stack = [n]
    rounds = 0
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        g = 0
        while g == 0:
            rounds += 1
            if rounds > max_rounds:
                raise FactorizationFailure(f"rho budget exhausted splitting {m}")
            g = _pollard_rho_brent(m, rng)
        stack.append(g)
        stack.append(m // g)
    return out


def divisors_from_factorization(fac: dict[int, int]) -> list[int]:
    ds = [1]
    for q, e in fac.items():
        ds = [d * q ** i for d in ds for i in range(e + 1)]
    return sorted(ds)


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    return divisors_from_factorization(factorize(n))
