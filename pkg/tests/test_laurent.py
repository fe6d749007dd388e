import pytest
from hypothesis import given, settings, strategies as st

from clusterkit.laurent import (
    DivisionByZero,
    LaurentPoly,
    NotDivisible,
    VarCountMismatch,
    compare,
)


def lp(num_vars, terms):
    return LaurentPoly(num_vars, terms)


X1 = LaurentPoly.variable(2, 0)
X2 = LaurentPoly.variable(2, 1)
ONE = LaurentPoly.one(2)
ZERO = LaurentPoly.zero(2)


class TestAdd:
    def test_additive_inverse(self):
        assert X1 + (-X1) == ZERO
        assert (X1 + (-X1)).terms == {}

    def test_one_plus_x2(self):
        assert ONE + X2 == lp(2, {(0, 0): 1, (0, 1): 1})

    def test_cancellation(self):
        a = ONE + X2
        b = X1 - X2
        assert a + b == ONE + X1

    def test_var_count_mismatch(self):
        with pytest.raises(VarCountMismatch):
            X1 + LaurentPoly.variable(3, 0)


class TestMul:
    def test_monomial_inverse(self):
        inv = LaurentPoly.monomial(2, (-1, 0))
        assert X1 * inv == ONE

    def test_exchange_relation_shape(self):
        # ((1+x2)/x1) * x1 == 1 + x2
        q = lp(2, {(-1, 0): 1, (-1, 1): 1})
        assert q * X1 == ONE + X2

    def test_square_expansion(self):
        s = ONE + X2
        assert s * s == lp(2, {(0, 0): 1, (0, 1): 2, (0, 2): 1})


class TestDivideExact:
    def test_one_plus_x2_over_x1(self):
        assert (ONE + X2).divide_exact(X1) == lp(2, {(-1, 0): 1, (-1, 1): 1})

    def test_three_term_numerator(self):
        num = X1 + X2 + ONE
        den = X1 * X2
        assert num.divide_exact(den) == lp(2, {(0, -1): 1, (-1, 0): 1, (-1, -1): 1})

    def test_not_divisible(self):
        with pytest.raises(NotDivisible):
            (ONE + X2).divide_exact(ONE + X1)

    def test_coefficient_not_divisible(self):
        with pytest.raises(NotDivisible):
            lp(1, {(0,): 3}).divide_exact(lp(1, {(0,): 2}))

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            ONE.divide_exact(ZERO)

    def test_zero_dividend(self):
        assert ZERO.divide_exact(X1) == ZERO


class TestCompare:
    def test_reflexive(self):
        assert compare(X1, X1) == 0

    def test_zero_before_one(self):
        assert compare(ZERO, ONE) == -1

    def test_x1_before_x2(self):
        assert compare(X1, X2) == -1

    def test_antisymmetric(self):
        assert compare(X2, X1) == 1


# -- property tests ----------------------------------------------------------

exponents = st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3))
polys = st.dictionaries(exponents, st.integers(-9, 9).filter(bool), max_size=6).map(
    lambda d: LaurentPoly(3, d)
)


@settings(max_examples=200, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=200, deadline=None)
@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_mul_then_divide_roundtrip(a, b):
    assert (a * b).divide_exact(b) == a


@settings(max_examples=100, deadline=None)
@given(polys)
def test_canonical_form_idempotent(a):
    assert LaurentPoly(a.num_vars, a.terms) == a
    assert all(c != 0 for c in a.terms.values())
    assert all(len(e) == a.num_vars for e in a.terms)


@settings(max_examples=100, deadline=None)
@given(polys, polys)
def test_compare_total_order(a, b):
    ab, ba = compare(a, b), compare(b, a)
    assert ab == -ba
    assert (ab == 0) == (a == b)
