import random

import pytest

import oracles
from pkcore.errors import BadDigit, BadExponent, EvenPrime, NotPrime, Oversize, WrongLength
from pkcore.modring import (
    Residue,
    base_p_decode,
    base_p_encode,
    core_extension_members,
    core_members,
    decompose_unit,
    is_core,
    make_modulus,
    multiplicative_order,
    pth_power_members,
    subgroup_descriptor,
)


def dec(text, p, k):
    return int(base_p_decode(text, make_modulus(p, k, arithmetic_only=True)))


def test_make_modulus_validation():
    with pytest.raises(NotPrime):
        make_modulus(4, 2)
    with pytest.raises(NotPrime):
        make_modulus(1, 2)
    with pytest.raises(EvenPrime):
        make_modulus(2, 3)
    with pytest.raises(BadExponent):
        make_modulus(5, 0)
    with pytest.raises(Oversize):
        make_modulus(11, 8)
    mod = make_modulus(11, 8, arithmetic_only=True)
    assert mod.modulus == 11**8 and not mod.tables_enabled
    with pytest.raises(Oversize):
        mod.require_tables()


def test_orders():
    mod = make_modulus(11, 3)
    assert mod.units_order == 10 * 121
    assert mod.ext_order == 121
    for kind, expect in [
        ("core", 10),
        ("extension", 121),
        ("pthPowers", 110),
        ("fullUnits", 1210),
    ]:
        assert subgroup_descriptor(mod, kind).order == expect, kind
    assert subgroup_descriptor(mod, "coreExtension", e=1).order == 110


def test_residue_ops():
    mod = make_modulus(5, 2)
    a = Residue(27, mod)
    assert int(a) == 2
    assert int(-a) == 23
    assert int(a + Residue(24, mod)) == 1
    assert int(a * Residue(13, mod)) == 1
    assert a.is_unit and not Residue(10, mod).is_unit


def test_core_members_5_2():
    mod = make_modulus(5, 2)
    assert core_members(mod) == frozenset({1, 7, 18, 24})
    assert core_members(mod) == frozenset(oracles.naive_core_set(5, 2))


def test_core_members_11_3_golden():
    mod = make_modulus(11, 3)
    golden = ["001", "4a2", "103", "974", "525", "586", "137", "9a8", "609", "aaa"]
    want = frozenset(dec(s, 11, 3) for s in golden)
    assert core_members(mod) == want
    assert core_members(mod) == frozenset(oracles.naive_core_set(11, 3))


def test_pth_powers_11_3_golden():
    golden = ["001", "5a2", "103", "274", "325", "886", "937", "aa8", "609", "0aa"]
    for n, s in enumerate(golden, start=1):
        assert pow(n, 11, 1331) == dec(s, 11, 3), (n, s)
    mod = make_modulus(11, 3)
    f = pth_power_members(mod)
    assert len(f) == 110
    assert f == frozenset(oracles.naive_pth_powers(11, 3))


def test_core_extensions_interpolate():
    mod = make_modulus(7, 3)
    assert core_extension_members(mod, 0) == core_members(mod)
    assert core_extension_members(mod, mod.k - 2) == pth_power_members(mod)
    full = core_extension_members(mod, mod.k - 1)
    assert len(full) == mod.units_order
    # each level is a subgroup of the next
    lower = core_extension_members(mod, 0)
    for e in range(1, mod.k):
        upper = core_extension_members(mod, e)
        assert lower <= upper
        lower = upper


def test_is_core_and_decompose():
    mod = make_modulus(5, 2)
    core, ext = decompose_unit(Residue(2, mod))
    assert (int(core), int(ext)) == (7, 11)
    assert int(core * ext) == 2
    rng = random.Random(5)
    for _ in range(200):
        p = rng.choice([3, 5, 7, 11, 13])
        k = rng.randint(1, 3)
        m = make_modulus(p, k)
        x = rng.randint(1, m.modulus - 1)
        if x % p == 0:
            continue
        c, e = decompose_unit(Residue(x, m))
        assert int(c * e) == x
        assert is_core(m, int(c))
        assert pow(int(e), p ** (k - 1), m.modulus) == 1
        assert is_core(m, x) == (pow(x, p, m.modulus) == x)


def test_multiplicative_order_vs_sympy():
    rng = random.Random(7)
    for _ in range(150):
        p = rng.choice([3, 5, 7, 11, 13, 17])
        k = rng.randint(1, 3)
        mod = make_modulus(p, k, arithmetic_only=True)
        x = rng.randint(1, mod.modulus - 1)
        if x % p == 0:
            continue
        assert multiplicative_order(Residue(x, mod)) == oracles.naive_order(x, mod.modulus)


def test_codec_golden():
    assert base_p_encode(Residue(596, make_modulus(11, 3))) == "4a2"
    assert dec("4a2", 11, 3) == 596
    assert base_p_encode(Residue(1, make_modulus(11, 3))) == "001"
    assert dec("061", 11, 3) == 67
    assert dec("661", 11, 3) == 793


def test_codec_short_input_allowed():
    assert dec("1", 5, 2) == 1
    assert dec("44", 5, 2) == 24


def test_codec_errors():
    mod = make_modulus(11, 3)
    with pytest.raises(WrongLength):
        base_p_decode("12345", mod)
    with pytest.raises(BadDigit):
        base_p_decode("0b1", mod)  # b = 11 is out of range for base 11
    with pytest.raises(BadDigit):
        base_p_decode("0!1", mod)


def test_codec_large_base_dot_form():
    mod = make_modulus(41, 2, arithmetic_only=True)
    assert base_p_encode(Residue(3 * 41 + 7, mod)) == "3.7"
    assert int(base_p_decode("3.7", mod)) == 130


def test_codec_roundtrip_random():
    rng = random.Random(9)
    for _ in range(300):
        p = rng.choice([3, 5, 7, 11, 13, 31, 37, 41])
        k = rng.randint(1, 5)
        mod = make_modulus(p, k, arithmetic_only=True)
        x = rng.randint(0, mod.modulus - 1)
        assert int(base_p_decode(base_p_encode(Residue(x, mod)), mod)) == x
