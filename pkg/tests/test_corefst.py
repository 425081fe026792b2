import random

import pytest

import oracles
from pkcore.corefst import (
    build_core_table,
    core_by_recurrence,
    critical_precision,
    equivalence_level_multiset,
    fst_carry,
    integer_increments,
    recurrence_step_identity,
)
from pkcore.errors import OutOfRange
from pkcore.modring import Residue, base_p_encode, make_modulus


def enc(x, p, k):
    return base_p_encode(Residue(x, make_modulus(p, k, arithmetic_only=True)))


def test_fst_carry_golden():
    assert fst_carry(11, 4) == 10
    assert fst_carry(11, 5) == 7
    assert fst_carry(11, 6) == 5
    # tail digits of n^(p-1) mod p^2 written base p are <carry>1
    for n, digits in [(4, "a1"), (5, "71"), (6, "51")]:
        assert enc(pow(n, 10, 121), 11, 2) == digits


def test_fst_carry_matches_oracle():
    rng = random.Random(3)
    for _ in range(300):
        p = rng.choice([3, 5, 7, 11, 13, 101])
        n = rng.randint(1, p - 1)
        assert fst_carry(p, n) == oracles.naive_fst_carry(p, n)


def test_recurrence_vs_direct_and_scan():
    for p in (3, 5, 7, 11, 13):
        for k in (1, 2, 3, 4):
            for n in range(1, p):
                got = core_by_recurrence(p, n, k)
                assert got == pow(n, p ** (k - 1), p**k)
                assert got == oracles.naive_core_element(p, k, n)


def test_step_identity():
    for p in (3, 5, 7, 11, 13):
        for n in range(1, p):
            for i in (1, 2, 3):
                assert recurrence_step_identity(p, n, i), (p, n, i)


def test_core_table_11_3_golden():
    table = build_core_table(make_modulus(11, 3))
    assert [enc(x, 11, 3) for x in table.core] == [
        "001", "4a2", "103", "974", "525", "586", "137", "9a8", "609", "aaa",
    ]
    assert table.carries == (0, 5, 0, 10, 7, 5, 2, 4, 0, 1)
    assert [enc(x, 11, 3) for x in table.increments] == [
        "001", "4a1", "711", "871", "661", "061", "661", "871", "711", "4a1", "001",
    ]


def test_core_table_increment_sum_closes():
    for p, k in [(5, 2), (7, 3), (13, 2)]:
        table = build_core_table(make_modulus(p, k))
        assert sum(table.increments) % p**k == 0


def test_critical_precision_golden():
    for p, kp in [(3, 2), (5, 2), (7, 2), (13, 2), (11, 3), (73, 4)]:
        assert critical_precision(p).kp == kp, p


def test_critical_precision_witnesses_11():
    res = critical_precision(11)
    assert res.distinct_counts == {2: 4, 3: 5}
    assert res.witnesses == {2: (4, 5)}
    m = 121
    assert (pow(5, 11, m) - pow(4, 11, m)) % m == (pow(6, 11, m) - pow(5, 11, m)) % m


def test_critical_precision_matches_oracle():
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        assert critical_precision(p).kp == oracles.naive_critical_precision(p)


def test_integer_increments_golden():
    e1 = integer_increments(11, 1, 3)
    assert enc(e1[3], 11, 3) == "061"
    assert enc(e1[4], 11, 3) == "561"
    e2 = integer_increments(11, 2, 3)
    assert enc(e2[3], 11, 3) == "661"
    assert enc(e2[4], 11, 3) == "061"
    # constant second difference at n = 4, 5
    m = 11**3
    d = (e1[3] - e2[3]) % m
    assert enc(d, 11, 3) == "500"
    assert (e1[4] - e1[3]) % m == d


def test_increment_ratio_is_pth_power():
    # e2(4)/e1(4) lands in the p-th power subgroup
    from pkcore.modring import pth_power_members

    m = 11**3
    ratio = 793 * pow(67, -1, m) % m
    assert enc(ratio, 11, 3) == "601"
    assert ratio in pth_power_members(make_modulus(11, 3))
    assert 67 * 727 % m == 793


def test_integer_increments_validation():
    with pytest.raises(OutOfRange):
        integer_increments(11, 0, 3)


def test_equivalence_level_multiset_preserved():
    for p in (7, 11, 13):
        a = equivalence_level_multiset(p, 1, 6)
        b = equivalence_level_multiset(p, 2, 6)
        assert a == b, p
