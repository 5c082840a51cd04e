import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from rcforms import gfpoly
from rcforms.intpoly import (
    BadPrimeError,
    IntPolynomial,
    Partition,
    discriminant,
    even_contraction,
    factor_mod,
    factorize,
    format_polynomial,
    frobenius_partition,
    is_good_prime,
    is_prime,
    parse_polynomial,
    partition_parity,
    primes_up_to,
    read_polynomial,
    resultant,
    write_polynomial,
)


# -- oracles ----------------------------------------------------------------


def bareiss_det(m):
    m = [row[:] for row in m]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def sylvester_resultant(f, g):
    a, b = f.descending(), g.descending()
    n, m = len(a) - 1, len(b) - 1
    size = n + m
    rows = [[0] * i + a + [0] * (size - n - 1 - i) for i in range(m)]
    rows += [[0] * i + b + [0] * (size - m - 1 - i) for i in range(n)]
    return bareiss_det(rows)


def sylvester_disc(f):
    n = f.degree
    r = Fraction(sylvester_resultant(f, f.derivative()), f.leading)
    return int(r) * (-1) ** (n * (n - 1) // 2)


def monic_polys(d, p):
    for tail in itertools.product(range(p), repeat=d):
        yield list(tail) + [1]


def trial_division_factor(f, p):
    """Factor by dividing out monic divisors in increasing degree."""
    f = gfpoly.monic(gfpoly.trim(list(f)), p)
    out = []
    d = 1
    while gfpoly.deg(f) >= 2 * d:
        found = False
        for g in monic_polys(d, p):
            q, r = gfpoly.divmod_(f, g, p)
            if not r:
                m = 0
                while not r:
                    f, m = q, m + 1
                    q, r = gfpoly.divmod_(f, g, p)
                out.append((tuple(g), m))
                found = True
        if not found or gfpoly.deg(f) < 2 * d:
            d += 1
    if gfpoly.deg(f) > 0:
        # what remains is irreducible, possibly a repeat of a factor found earlier
        key = tuple(f)
        for i, (g, m) in enumerate(out):
            if g == key:
                out[i] = (g, m + 1)
                break
        else:
            out.append((key, 1))
    return sorted(out)


int_polys = st.lists(st.integers(-30, 30), min_size=2, max_size=7).filter(lambda c: c[-1] != 0)


# -- resultant / discriminant -----------------------------------------------


@given(int_polys, int_polys)
@settings(max_examples=60)
def test_resultant_matches_sylvester_determinant(a, b):
    f, g = IntPolynomial.of(a), IntPolynomial.of(b)
    assert resultant(f, g) == sylvester_resultant(f, g)


@given(int_polys)
@settings(max_examples=60)
def test_discriminant_matches_sylvester(c):
    f = IntPolynomial.of(c)
    assert discriminant(f) == sylvester_disc(f)


def test_discriminant_against_sympy(f1, f2):
    x = sympy.symbols("x")
    for f in (f1, f2):
        sp = sympy.Poly(f.descending(), x)
        assert discriminant(f) == int(sympy.discriminant(sp))


def test_small_discriminants():
    assert discriminant(IntPolynomial.from_descending([1, 0, -2])) == 8
    assert discriminant(IntPolynomial.from_descending([1, 0, 1, 1])) == -31
    # x^3 + a x + b  ->  -4a^3 - 27b^2
    assert discriminant(IntPolynomial.from_descending([1, 0, 21, -26])) == -4 * 21**3 - 27 * 26**2


@given(st.lists(st.integers(-20, 20), min_size=4, max_size=5).filter(lambda c: c[-1] != 0),
       st.sampled_from([3, 5, 7, 11, 13]))
@settings(max_examples=80)
def test_discriminant_commutes_with_reduction(c, p):
    f = IntPolynomial.of(c)
    if f.leading % p == 0:
        return
    fp = IntPolynomial.of(x % p for x in c)
    assert discriminant(fp) % p == discriminant(f) % p


# -- factoring mod p ---------------------------------------------------------


def test_factor_mod_against_trial_division_oracle():
    rng = random.Random(7)
    for _ in range(50):
        p = rng.choice([2, 3, 5, 7, 11])
        d = rng.randint(1, 8)
        c = [rng.randrange(p) for _ in range(d)] + [rng.randrange(1, p)]
        f = IntPolynomial.of(c)
        got = sorted((g.coeffs, m) for g, m in factor_mod(f, p))
        assert got == trial_division_factor(c, p), (c, p)


def test_factor_mod_reconstructs_polynomial():
    rng = random.Random(3)
    for _ in range(30):
        p = rng.choice([2, 3, 5, 7, 13, 101])
        c = [rng.randrange(p) for _ in range(rng.randint(2, 12))] + [1]
        prod = [1]
        for g, m in factor_mod(IntPolynomial.of(c), p):
            for _ in range(m):
                prod = gfpoly.mul(prod, list(g.coeffs), p)
        assert prod == gfpoly.trim([x % p for x in c])


@pytest.mark.parametrize("p", [5, 7, 13, 101])
def test_factor_mod_seed_independent(f2, p):
    a = sorted(factor_mod(f2, p, seed=1))
    b = sorted(factor_mod(f2, p, seed=99))
    c = sorted(factor_mod(f2, p, seed=None))
    assert a == b == c


def test_factor_mod_rejects_leading_coefficient_prime():
    with pytest.raises(BadPrimeError):
        factor_mod(IntPolynomial.of([1, 1, 5]), 5)


def test_f1_mod_5_factorization(f1):
    got = sorted((g.degree, g.coeffs) for g, m in factor_mod(f1, 5))
    degs = [d for d, _ in got]
    assert degs == [1, 1, 5, 5]
    for g, _ in factor_mod(f1, 5):
        assert gfpoly.gcd(list(g.coeffs), gfpoly.derivative(list(g.coeffs), 5), 5) == [1]


def test_frobenius_partition_sums_to_degree(f1, f2):
    for f in (f1, f2):
        for p in primes_up_to(200):
            if is_good_prime(f, p):
                assert frobenius_partition(f, p).degree == f.degree


def test_bad_prime_message(f1):
    with pytest.raises(BadPrimeError, match="not a good prime"):
        frobenius_partition(f1, 2)


def test_parity_is_quadratic_character_mod_11(f1):
    residues = {1, 3, 4, 5, 9}
    primes = [p for p in primes_up_to(2000) if is_good_prime(f1, p) and p != 11][:100]
    assert len(primes) == 100
    for p in primes:
        assert (partition_parity(frobenius_partition(f1, p)) == 1) == (p % 11 in residues), p


# -- partitions and text I/O -------------------------------------------------


def test_partition_notation_and_parse():
    lam = Partition.of([5, 1, 5, 1])
    assert lam.notation() == "5^2 1^2"
    assert Partition.parse("5^2 1^2") == lam
    assert Partition.parse("10 1^2").lcm == 10
    assert Partition.of([11, 1]).notation() == "11 1"
    assert partition_parity(Partition.parse("12")) == -1
    assert partition_parity(Partition.parse("3^4")) == 1


@given(st.lists(st.integers(1, 9), min_size=1, max_size=8))
def test_partition_parse_roundtrip(parts):
    lam = Partition.of(parts)
    assert Partition.parse(lam.notation()) == lam
    # parity is (-1)^(number of even parts)
    assert partition_parity(lam) == (-1) ** sum(1 for x in parts if x % 2 == 0)


def test_even_contraction():
    f = IntPolynomial.of([3, 0, 2, 0, 1])
    assert even_contraction(f) == IntPolynomial.of([3, 2, 1])
    with pytest.raises(ValueError, match=r"\[1\]"):
        even_contraction(IntPolynomial.of([1, 1, 1]))


def test_text_roundtrip(tmp_path, f1):
    path = tmp_path / "f.txt"
    write_polynomial(f1, path, comment="test\nsecond line")
    assert read_polynomial(path) == f1
    assert parse_polynomial(format_polynomial(f1)) == f1


@pytest.mark.parametrize("text", ["", "# only comment\n", "1 2\n3 4\n", "1 x 2\n", "0 0\n"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_polynomial(text)


def test_integer_helpers():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert [n for n in range(200) if is_prime(n)] == primes_up_to(199)
    assert factorize(210) == {2: 1, 3: 1, 5: 1, 7: 1}
    assert factorize(54) == {2: 1, 3: 3}
    assert is_prime(1907473) and is_prime(2615189)
