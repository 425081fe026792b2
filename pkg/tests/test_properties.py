from hypothesis import given, settings
from hypothesis import strategies as st

from pkcore.corefst import core_by_recurrence, fst_carry, recurrence_step_identity
from pkcore.modring import (
    Residue,
    base_p_decode,
    base_p_encode,
    decompose_unit,
    is_core,
    make_modulus,
)

SMALL_PRIMES = st.sampled_from([3, 5, 7, 11, 13, 17, 19, 23, 29, 31])


@given(SMALL_PRIMES, st.integers(1, 5), st.integers(0, 10**9))
def test_codec_round_trip(p, k, seed):
    mod = make_modulus(p, k, arithmetic_only=True)
    x = seed % mod.modulus
    assert int(base_p_decode(base_p_encode(Residue(x, mod)), mod)) == x


@given(SMALL_PRIMES, st.integers(1, 4), st.integers(1, 10**9))
def test_lagrange(p, k, seed):
    mod = make_modulus(p, k, arithmetic_only=True)
    x = seed % mod.modulus
    if x % p == 0:
        x += 1
    assert pow(x, mod.units_order, mod.modulus) == 1


@given(SMALL_PRIMES, st.integers(1, 5), st.integers(1, 100))
def test_recurrence_is_direct_power(p, k, n_seed):
    n = n_seed % (p - 1) + 1
    assert core_by_recurrence(p, n, k) == pow(n, p ** (k - 1), p**k)


@given(SMALL_PRIMES, st.integers(1, 100), st.integers(1, 4))
def test_step_identity(p, n_seed, i):
    n = n_seed % (p - 1) + 1
    assert recurrence_step_identity(p, n, i)


@given(SMALL_PRIMES, st.integers(1, 100))
def test_carry_in_range(p, n_seed):
    n = n_seed % (p - 1) + 1
    assert 0 <= fst_carry(p, n) < p


@given(SMALL_PRIMES, st.integers(1, 4), st.integers(1, 100))
def test_core_odd_symmetry(p, k, n_seed):
    n = n_seed % (p - 1) + 1
    m = p**k
    assert (core_by_recurrence(p, n, k) + core_by_recurrence(p, p - n, k)) % m == 0


@settings(max_examples=60)
@given(st.sampled_from([3, 5, 7, 11]), st.integers(1, 3), st.integers(1, 10**9))
def test_core_factor_is_idempotent_part(p, k, seed):
    mod = make_modulus(p, k)
    x = seed % mod.modulus
    if x % p == 0:
        x += 1
    core, ext = decompose_unit(Residue(x, mod))
    assert int(core * ext) == x % mod.modulus
    assert is_core(mod, int(core))
    assert pow(int(ext), p ** (k - 1), mod.modulus) == 1
    # the split is unique: re-splitting a core element is a fixed point
    c2, e2 = decompose_unit(core)
    assert (int(c2), int(e2)) == (int(core), 1)


@given(SMALL_PRIMES, st.integers(0, 10**6), st.integers(0, 10**6))
def test_translation_classes_add(p, a, b):
    k = 2
    m = p**k
    x, y = a % m, b % m
    assert ((x + y) % m) % p == (x % p + y % p) % p
