import json
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pretzelpoly.laurent import (
    DELTA,
    LaurentPoly,
    VariableMismatch,
    lp_add,
    lp_mono,
    lp_mul,
    lp_substitute_inverse,
)


def A(terms):
    return LaurentPoly(terms, var="A")


def z(terms):
    return LaurentPoly(terms, var="z")


def assert_canonical(p):
    assert all(c != 0 for c in p.terms.values())


polys = st.dictionaries(st.integers(-12, 12), st.integers(-50, 50), max_size=6).map(A)


def test_mono():
    assert lp_mono(1, 0) == A({0: 1})
    assert lp_mono(0, 5).is_zero()
    assert lp_mono(0, 5).terms == {}
    assert lp_mono(-1, -5) == A({-5: -1})


def test_add_examples():
    assert lp_add(A({2: 1}), A({-2: 1})) == A({2: 1, -2: 1})
    p = A({3: 4, -1: -2})
    assert lp_add(p, A({})) == p
    s = lp_add(z({0: 1, 2: 1}), z({0: -1}))
    assert s == z({2: 1})
    assert 0 not in s.terms


def test_mul_examples():
    assert lp_mul(DELTA, DELTA) == A({4: 1, 0: 2, -4: 1})
    p = A({5: 3, -2: 1})
    assert lp_mul(p, A({0: 1})) == p
    assert lp_mul(A({1: 1, -1: 1}), A({1: 1, -1: -1})) == A({2: 1, -2: -1})


def test_substitute_inverse_examples():
    p = A({7: 1, 3: -1, -5: -1})
    assert lp_substitute_inverse(p) == A({-7: 1, -3: -1, 5: -1})
    assert lp_substitute_inverse(A({0: 1})) == A({0: 1})
    assert lp_substitute_inverse(lp_substitute_inverse(p)) == p


def test_variable_mismatch():
    with pytest.raises(VariableMismatch):
        lp_add(A({1: 1}), z({1: 1}))
    with pytest.raises(VariableMismatch):
        lp_mul(A({1: 1}), z({1: 1}))


def test_zero_is_empty():
    assert A({3: 0}).terms == {}
    assert (A({1: 2}) - A({1: 2})).terms == {}


def test_big_coefficients_stay_exact():
    p = DELTA ** 80
    # (-A^2 - A^-2)^80 = (A^2 + A^-2)^80: central binomial coefficient
    assert p.coeff(0) == comb(80, 40)
    assert p.coeff(2) == 0
    assert sum(p.terms.values()) == 2 ** 80


@pytest.mark.parametrize("poly, text, latex", [
    (A({7: 1, 3: -1, -5: -1}), "A^7 - A^3 - A^-5", "A^{7} - A^{3} - A^{-5}"),
    (A({}), "0", "0"),
    (z({0: 1, 2: 2}), "1 + 2z^2", "1 + 2z^{2}"),
    (z({0: 1, 2: -1}), "1 - z^2", "1 - z^{2}"),
    (A({4: -1, -4: -1}), "-A^4 - A^-4", "-A^{4} - A^{-4}"),
    (A({1: 3, 0: -2}), "3A - 2", "3A - 2"),
])
def test_rendering(poly, text, latex):
    assert poly.to_text() == text
    assert poly.to_latex() == latex


def test_json_shape():
    p = A({7: 1, 3: -1, -5: -1})
    assert p.to_json() == (
        '{"variable":"A","terms":[{"exp":7,"coeff":"1"},{"exp":3,"coeff":"-1"},{"exp":-5,"coeff":"-1"}]}'
    )
    assert json.loads(p.to_json())["terms"][0] == {"exp": 7, "coeff": "1"}


@given(polys)
def test_json_round_trip(p):
    text = p.to_json()
    q = LaurentPoly.from_json(text)
    assert q == p
    assert q.to_json() == text


@settings(max_examples=200)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + 0 == a
    assert a * 1 == a
    for out in (a + b, a * b, a * (b + c), a - a):
        assert_canonical(out)


@given(polys, polys)
def test_inverse_substitution_is_homomorphism(a, b):
    f = lp_substitute_inverse
    assert f(a * b) == f(a) * f(b)
    assert f(a + b) == f(a) + f(b)
    assert f(f(a)) == a


@given(polys, st.integers(-1000, 1000), st.integers(-20, 20))
def test_evaluate_matches_arithmetic(p, x, k):
    if x == 0:
        return
    from fractions import Fraction
    q = p * lp_mono(1, k)
    assert q.evaluate(Fraction(x)) == p.evaluate(Fraction(x)) * Fraction(x) ** k
