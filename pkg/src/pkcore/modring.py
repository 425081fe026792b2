"""Residue arithmetic mod p^k and the multiplicative structure G = A.B.

The unit group G_k mod p^k (odd prime p) is cyclic of order (p-1)*p^(k-1)
and splits as a direct product of the core A_k (the unique subgroup of
order p-1, whose elements satisfy n^p = n mod p^k) and the extension
B_k = {units = 1 mod p} of order p^(k-1), generated by p+1. Between A_k
and G_k sit the core extensions X^(e) = A_k * Y^(e) with Y^(e) generated
by p^(k-e)+1; X^(k-2) is the subgroup of p-th power residues F_k.

This module also owns the base-p text codec used by the CLI: fixed-width
strings, most significant digit first, digits 0-9 then a-z for p <= 36,
dot-separated decimal digit groups for larger p.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadDigit,
    BadExponent,
    EvenPrime,
    NotAUnit,
    NotPrime,
    Oversize,
    WrongLength,
)
from .primes import divisors_from_factorization, factorize, is_prime

DEFAULT_TABLE_BOUND = 1 << 26


@dataclass(frozen=True)
class PrimePowerModulus:
    """Validated ring descriptor for Z mod p^k."""

    p: int
    k: int
    modulus: int
    units_order: int
    ext_order: int
    tables_enabled: bool = True

    def require_tables(self) -> None:
        if not self.tables_enabled:
            raise Oversize(
                f"p^k = {self.modulus} exceeds the table bound; "
                "this descriptor is arithmetic-only"
            )

    def __repr__(self) -> str:  # keep reprs short in test output
        return f"PrimePowerModulus(p={self.p}, k={self.k})"


def make_modulus(
    p: int,
    k: int,
    table_bound: int = DEFAULT_TABLE_BOUND,
    arithmetic_only: bool = False,
) -> PrimePowerModulus:
    """Validate (p, k) and build the descriptor.

    Set-returning operations need p^k <= table_bound; pass
    arithmetic_only=True to construct an oversize descriptor whose
    table operations are disabled rather than failing here.
    """
    if p == 2:
        raise EvenPrime("p = 2 is not supported (unit group not cyclic for k >= 3)")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise BadExponent(f"precision exponent k must be >= 1, got {k}")
    modulus = p ** k
    tables = modulus <= table_bound
    if not tables and not arithmetic_only:
        raise Oversize(
            f"p^k = {modulus} exceeds table bound {table_bound}; "
            "raise --table-bound or request an arithmetic-only descriptor"
        )
    return PrimePowerModulus(
        p=p,
        k=k,
        modulus=modulus,
        units_order=(p - 1) * p ** (k - 1),
        ext_order=p ** (k - 1),
        tables_enabled=tables,
    )


@dataclass(frozen=True)
class Residue:
    """A canonical residue in [0, p^k), tagged with its ring."""

    value: int
    mod: PrimePowerModulus

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.mod.modulus)

    @property
    def is_unit(self) -> bool:
        return self.value % self.mod.p != 0

    def __mul__(self, other: "Residue") -> "Residue":
        return Residue(self.value * other.value % self.mod.modulus, self.mod)

    def __add__(self, other: "Residue") -> "Residue":
        return Residue((self.value + other.value) % self.mod.modulus, self.mod)

    def __neg__(self) -> "Residue":
        return Residue(-self.value % self.mod.modulus, self.mod)

    def __int__(self) -> int:
        return self.value


@dataclass(frozen=True)
class SubgroupDescriptor:
    kind: str  # core | extension | pthPowers | coreExtension | extSubgroup | fullUnits
    e: int
    order: int


def subgroup_descriptor(mod: PrimePowerModulus, kind: str, e: int = 0) -> SubgroupDescriptor:
    p, k = mod.p, mod.k
    orders = {
        "core": p - 1,
        "extension": p ** (k - 1),
        "pthPowers": (p - 1) * p ** (k - 2) if k >= 2 else p - 1,
        "coreExtension": (p - 1) * p ** e,
        "extSubgroup": p ** e,
        "fullUnits": mod.units_order,
    }
    if kind not in orders:
        raise BadExponent(f"unknown subgroup kind {kind!r}")
    return SubgroupDescriptor(kind=kind, e=e, order=orders[kind])


def mod_pow(base: Residue, exponent: int) -> Residue:
    if exponent < 0:
        raise BadExponent("exponent must be non-negative")
    return Residue(pow(base.value, exponent, base.mod.modulus), base.mod)


def multiplicative_order(n: Residue) -> int:
    """Least t >= 1 with n^t = 1, by peeling primes off the group order."""
    if not n.is_unit:
        raise NotAUnit(f"{n.value} is divisible by p = {n.mod.p}")
    m = n.mod.modulus
    group = n.mod.units_order
    if pow(n.value, group, m) != 1:
        raise NotAUnit(f"{n.value} has no order in the unit group mod {m}")
    fac = factorize(n.mod.p - 1)
    if n.mod.k > 1:
        fac = dict(fac)
        fac[n.mod.p] = fac.get(n.mod.p, 0) + (n.mod.k - 1)
    order = group
    for q in fac:
        while order % q == 0 and pow(n.value, order // q, m) == 1:
            order //= q
    return order


def core_members(mod: PrimePowerModulus) -> set[int]:
    """The core A_k as a set: the p-1 residues with n^p = n mod p^k."""
    mod.require_tables()
    q = mod.p ** (mod.k - 1)
    return {pow(n, q, mod.modulus) for n in range(1, mod.p)}


def core_extension_members(mod: PrimePowerModulus, e: int) -> set[int]:
    """X^(e) = A_k * Y^(e) as an explicit set, |X^(e)| = (p-1)*p^e.

    Y^(e) consists of the residues m*p^(k-e)+1, the cyclic subgroup of
    B_k generated by p^(k-e)+1.
    """
    mod.require_tables()
    if not 0 <= e <= mod.k - 1:
        raise BadExponent(f"extension level e must be in [0, k-1], got {e}")
    m = mod.modulus
    step = mod.p ** (mod.k - e)
    ys = [(j * step + 1) % m for j in range(mod.p ** e)]
    return {a * y % m for a in core_members(mod) for y in ys}


def pth_power_members(mod: PrimePowerModulus) -> set[int]:
    """F_k, the p-th powers of units. Equals X^(k-2) for k >= 2."""
    mod.require_tables()
    m = mod.modulus
    return {pow(n, mod.p, m) for n in range(1, m) if n % mod.p}


def is_core(mod: PrimePowerModulus, x: int) -> bool:
    x %= mod.modulus
    return x % mod.p != 0 and pow(x, mod.p, mod.modulus) == x


def decompose_unit(n: Residue) -> tuple[Residue, Residue]:
    """Split a unit into (core part, extension part).

    The core part is the unique element of A_k congruent to n mod p,
    computed as n^(p^(k-1) * u) with u the inverse of p^(k-1) mod p-1;
    the extension part is the 1-mod-p cofactor.
    """
    if not n.is_unit:
        raise NotAUnit(f"{n.value} is divisible by p = {n.mod.p}")
    mod = n.mod
    q = mod.p ** (mod.k - 1)
    u = pow(q, -1, mod.p - 1)
    core = pow(n.value, q * u, mod.modulus)
    ext = n.value * pow(core, -1, mod.modulus) % mod.modulus
    return Residue(core, mod), Residue(ext, mod)


# --- base-p codec ------------------------------------------------------

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
_LETTER_CAP = 36  # 0-9 and a-z cover digit values 0..35


def base_p_encode(n: Residue) -> str:
    """Fixed-width base-p string, msd first, exactly k digits."""
    p, k = n.mod.p, n.mod.k
    digits = []
    v = n.value
    for _ in range(k):
        digits.append(v % p)
        v //= p
    digits.reverse()
    if p <= _LETTER_CAP:
        return "".join(_DIGITS[d] for d in digits)
    return ".".join(str(d) for d in digits)


def base_p_decode(s: str, mod: PrimePowerModulus) -> Residue:
    p, k = mod.p, mod.k
    if p <= _LETTER_CAP:
        if len(s) > k:
            raise WrongLength(f"{s!r} has more than k = {k} digits")
        value = 0
        for ch in s:
            d = _DIGITS.find(ch)
            if d < 0 or d >= p:
                raise BadDigit(f"{ch!r} is not a base-{p} digit")
            value = value * p + d
        return Residue(value, mod)
    parts = s.split(".") if s else []
    if len(parts) > k:
        raise WrongLength(f"{s!r} has more than k = {k} digit groups")
    value = 0
    for part in parts:
        if not part.isdigit():
            raise BadDigit(f"{part!r} is not a decimal digit group")
        d = int(part)
        if d >= p:
            raise BadDigit(f"digit group {d} is not below p = {p}")
        value = value * p + d
    return Residue(value, mod)
