import re

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rcforms.intpoly import primes_up_to
from rcforms.newforms import (
    InsufficientPrecisionError,
    NewformData,
    NewformFormatError,
    build_delta2_24,
    build_g1,
    build_h1,
    delta2_24_series,
    dumps_newform,
    loads_newform,
    newform_from_json,
    normalized_square,
    read_newform,
    write_newform,
)
from rcforms.qseries import eta_product


def odd_coeffs(form, count):
    return [form.a(n) for n in range(1, 2 * count, 2)]


def test_opening_coefficients(g1, h1):
    assert odd_coeffs(g1, 6) == [1, 3, 14, -24, 9, -28]
    assert odd_coeffs(h1, 6) == [1, 27, -530, 120, 729, -7196]
    assert g1.a(2) == 0 and h1.a(2) == 0


def test_weight_two_form_both_expressions_agree_to_300():
    assert delta2_24_series(300) == eta_product([2, 4, 6, 12], 300)


@pytest.mark.parametrize("build", [build_delta2_24, build_g1, build_h1])
def test_builders_stable_under_precision(build):
    lo, hi = build(60), build(140)
    assert hi.an[: len(lo.an)] == lo.an


def test_bundled_fixtures_match_builders(g1, h1):
    assert build_g1(300) == g1
    assert build_h1(300) == h1


def test_hecke_multiplicativity(g1, h1):
    # a_mn = a_m a_n for coprime m, n; a_{p^2} = a_p^2 - p^(k-1) for p not dividing N
    for f in (g1, h1):
        for m, n in ((5, 7), (5, 11), (7, 13), (3, 5), (8, 5)):
            assert f.a(m * n) == f.a(m) * f.a(n)
        for p in (5, 7, 11, 13):
            assert f.a(p * p) == f.a(p) ** 2 - p ** (f.weight - 1)


def test_ramanujan_bound(g1, h1):
    for f in (g1, h1):
        for p in primes_up_to(f.precision):
            assert f.a(p) ** 2 <= 4 * p ** (f.weight - 1)


def test_first_primes_with_vanishing_coefficient(g1, h1):
    for f in (g1, h1):
        hits = [p for p in primes_up_to(f.precision) if 24 % p and f.a(p) % 11 == 0]
        assert hits[:5] == [103, 149, 179, 197, 257]


@given(st.integers(-10**6, 10**6), st.sampled_from([5, 7, 13, 17]))
def test_normalized_square_ignores_sign(a, p):
    an = [1] + [0] * 20
    plus = NewformData("x", 24, 4, tuple(an[:p - 1] + [a] + an[p:]))
    minus = NewformData("x", 24, 4, tuple(an[:p - 1] + [-a] + an[p:]))
    assert normalized_square(plus, p, 11) == normalized_square(minus, p, 11)


def test_precision_errors(g1):
    with pytest.raises(InsufficientPrecisionError, match="a_301"):
        g1.a(301)
    with pytest.raises(IndexError):
        g1.a(0)
    with pytest.raises(ValueError):
        NewformData("x", 1, 2, (2, 3))


def test_json_roundtrip(tmp_path, g1):
    path = tmp_path / "g.json"
    write_newform(g1, path)
    back = read_newform(path)
    assert back == g1 and back.al == g1.al
    assert loads_newform(dumps_newform(g1)) == g1


@given(st.lists(st.integers(-10**30, 10**30), max_size=30), st.integers(1, 1000), st.integers(1, 20))
def test_json_roundtrip_property(tail, level, weight):
    f = NewformData("lbl", level, weight, tuple([1] + tail), {2: -1})
    assert loads_newform(dumps_newform(f)) == f


@pytest.mark.parametrize(
    "obj, fragment",
    [
        ([], "top level"),
        ({"level": 1, "weight": 2, "an": ["1"]}, "label"),
        ({"label": "x", "level": "1", "weight": 2, "an": ["1"]}, "level"),
        ({"label": "x", "level": 1, "weight": 2, "an": ["1", "two"]}, "an[1]"),
        ({"label": "x", "level": 1, "weight": 2, "an": ["3"]}, "a_1"),
        ({"label": "x", "level": 1, "weight": 2, "an": ["1"], "al": {"2": 3}}, "al"),
        ({"label": "x", "level": 0, "weight": 2, "an": ["1"]}, "level"),
    ],
)
def test_json_field_errors(obj, fragment):
    with pytest.raises(NewformFormatError, match="^src: .*" + re.escape(fragment)):
        newform_from_json(obj, "src")


def test_malformed_json_position():
    with pytest.raises(NewformFormatError, match="line 2, column"):
        loads_newform('{"label": "x",\n  oops}', "f.json")
