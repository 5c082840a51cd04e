import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rcforms.intpoly import Partition
from rcforms.pgl2 import (
    Mat2,
    class_table,
    companion_matrix,
    companion_order,
    cycle_partition,
    match,
    normalized_square_value,
    proj_order,
    projective_elements,
)


def brute_proj_order(m):
    """Smallest n with m^n scalar, by plain 2x2 integer powering."""
    p = m.ell
    a, b, c, d = m.a, m.b, m.c, m.d
    x = (a, b, c, d)
    for n in range(1, p * p):
        if x[1] % p == 0 and x[2] % p == 0 and (x[0] - x[3]) % p == 0:
            return n
        x = (
            (x[0] * a + x[1] * c) % p,
            (x[0] * b + x[1] * d) % p,
            (x[2] * a + x[3] * c) % p,
            (x[2] * b + x[3] * d) % p,
        )
    raise AssertionError("no scalar power")


def inverse(m):
    det_inv = pow(m.det, -1, m.ell)
    return Mat2(m.d * det_inv, -m.b * det_inv, -m.c * det_inv, m.a * det_inv, m.ell)


@pytest.mark.parametrize("ell", [3, 5, 7, 11])
def test_group_order(ell):
    elems = list(projective_elements(ell))
    assert len(elems) == ell * (ell * ell - 1)
    assert len(set(elems)) == len(elems)


@pytest.mark.parametrize("ell", [11, 13])
def test_order_equals_lcm_of_cycles(ell):
    for m in projective_elements(ell):
        lam = cycle_partition(m)
        o = proj_order(m)
        if o == ell:
            assert lam == Partition.of([ell, 1])
        else:
            assert o == lam.lcm
        if not m.is_scalar():
            assert lam.parts.count(1) <= 2


def test_proj_order_against_brute_force():
    rng = random.Random(5)
    for ell in (5, 7, 11, 13, 17):
        for _ in range(200):
            while True:
                try:
                    m = Mat2(*(rng.randrange(ell) for _ in range(4)), ell)
                    break
                except ValueError:
                    continue
            assert proj_order(m) == brute_proj_order(m)


def test_s_value_is_class_invariant():
    ell = 11
    rng = random.Random(11)
    elems = list(projective_elements(ell))
    conj = rng.sample(elems, 25)
    for m in elems:
        for g in conj:
            c = g @ m @ inverse(g)
            assert c.s_value() == m.s_value()
            assert cycle_partition(c) == cycle_partition(m)


def test_companion_order_depends_only_on_s():
    ell = 11
    by_s = {}
    for det in range(1, ell):
        for a in range(ell):
            m = Mat2(0, -1, det, a, ell)
            by_s.setdefault(m.s_value(), set()).add(proj_order(m))
    assert sorted(by_s) == list(range(ell))
    assert all(len(v) == 1 for v in by_s.values())


def test_equal_s_gives_equal_companion_order():
    ell = 11
    for k, k2 in ((4, 8), (2, 12), (6, 6)):
        for p in (2, 3, 5, 7, 13):
            for a in range(ell):
                for b in range(ell):
                    if normalized_square_value(p, k, a, ell) == normalized_square_value(p, k2, b, ell):
                        assert companion_order(p, k, a, ell) == companion_order(p, k2, b, ell)


def test_masses_sum_to_one_and_count_group():
    for ell in (5, 7, 11, 13):
        rows = class_table(ell)
        assert sum(r.mass for r in rows) == 1
        assert sum(r.count for r in rows) == ell * (ell * ell - 1)


def test_class_table_11_matches_reference(partition_table_expected):
    rows = class_table(11)
    assert len(rows) == 10
    for row, exp in zip(rows, partition_table_expected["rows"]):
        assert row.partition == Partition.parse(exp["partition"])
        assert row.parity == exp["parity"]
        assert row.mass == Fraction(exp["mass"])
        assert sorted(row.s_values) == exp["s"]


def test_class_table_guards():
    with pytest.raises(ValueError):
        class_table(12)
    with pytest.raises(ValueError):
        class_table(103)


def test_companion_order_worked_example():
    # p = 5: (k, a_5) = (4, 14) and (8, -530) both have order 5 mod 11
    assert companion_order(5, 4, 14, 11) == 5
    assert companion_order(5, 8, -530, 11) == 5
    assert normalized_square_value(5, 4, 14, 11) == 5
    assert normalized_square_value(5, 8, -530, 11) == 5


def test_match_reasons():
    lam = Partition.parse("5^2 1^2")
    ok = match(lam, 5, 4, 14, 8, -530, 11)
    assert ok and ok.reason == "ok"
    bad_s = match(lam, 5, 4, 14, 8, 0, 11)
    assert not bad_s and bad_s.reason.startswith("s-mismatch")
    bad_o = match(Partition.parse("12"), 5, 4, 14, 8, -530, 11)
    assert not bad_o and bad_o.reason.startswith("order-mismatch")
    with pytest.raises(ValueError):
        match(Partition.parse("5 1"), 5, 4, 14, 8, -530, 11)


def test_match_identity_partition_accepts_unipotent_frobenius():
    # s = 4 is the unipotent/identity value at ell = 11; order ell pairs with lcm 1
    ell, k = 11, 2
    p, a = next(
        (p, a) for p in (2, 3, 5, 7) for a in range(ell) if normalized_square_value(p, k, a, ell) == 4
    )
    assert companion_order(p, k, a, ell) == ell
    assert match(Partition.of([1] * 12), p, k, a, k, a, ell).ok


@given(st.integers(1, 10), st.integers(-100, 100), st.sampled_from([2, 3, 5, 7, 13]),
       st.sampled_from([2, 4, 6, 8, 10, 12]))
def test_normalized_square_twist_invariant(det_unused, a, p, k):
    assert normalized_square_value(p, k, a, 11) == normalized_square_value(p, k, -a, 11)


def test_singular_and_bad_prime():
    with pytest.raises(ValueError):
        Mat2(1, 2, 2, 4, 11)
    with pytest.raises(ValueError):
        companion_matrix(11, 2, 1, 11)
    assert math.gcd(companion_matrix(2, 4, 3, 11).det, 11) == 1
