"""Structure of the unit group of Z/p^k and sums of p-th power residues."""

from .corefst import (
    CoreTable,
    CriticalPrecisionResult,
    build_core_table,
    core_by_recurrence,
    critical_precision,
    fst_carry,
    integer_increments,
)
from .errors import (
    CheckFailure,
    FactorizationFailure,
    NotPrime,
    Oversize,
    PkcoreError,
)
from .generators import (
    audit_divisors,
    exception_scan,
    survey_pm1_generators,
    wieferich_scan,
)
from .modring import (
    PrimePowerModulus,
    Residue,
    base_p_decode,
    base_p_encode,
    core_members,
    decompose_unit,
    is_core,
    make_modulus,
    multiplicative_order,
    pth_power_members,
)
from .pairsums import core_pairsum_count, fermat_pairsum_count
from .primes import factorize, is_prime, primes_in_range
from .waring import decompose_residue, sumset_levels, verify_multiples_of_p

__version__ = "0.1.0"

__all__ = [
    "CheckFailure",
    "CoreTable",
    "CriticalPrecisionResult",
    "FactorizationFailure",
    "NotPrime",
    "Oversize",
    "PkcoreError",
    "PrimePowerModulus",
    "Residue",
    "audit_divisors",
    "base_p_decode",
    "base_p_encode",
    "build_core_table",
    "core_by_recurrence",
    "core_members",
    "core_pairsum_count",
    "critical_precision",
    "decompose_residue",
    "decompose_unit",
    "exception_scan",
    "factorize",
    "fermat_pairsum_count",
    "fst_carry",
    "integer_increments",
    "is_core",
    "is_prime",
    "make_modulus",
    "multiplicative_order",
    "primes_in_range",
    "pth_power_members",
    "sumset_levels",
    "survey_pm1_generators",
    "verify_multiples_of_p",
    "wieferich_scan",
]
