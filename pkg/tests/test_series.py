from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mocktheta.series import DYADIC, ZZ, Dyadic, Ring, RingError, Series, Zmod
from oracles import poly_mul

ints = st.integers(-10**6, 10**6)


def coeff_lists(min_size=1, max_size=25, elements=ints):
    return st.lists(elements, min_size=min_size, max_size=max_size)


@st.composite
def series_triple(draw, ring=ZZ):
    n = draw(st.integers(1, 25))
    make = lambda: Series(ring, draw(st.lists(ints, min_size=n, max_size=n)))  # noqa: E731
    return make(), make(), make()


moduli = st.sampled_from([2, 4, 8, 13, 25, 27, 40, 2**20, 10**9 + 7])


# -- ring axioms -----------------------------------------------------------------


@given(series_triple())
def test_integer_ring_axioms(t):
    a, b, c = t
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Series.constant(ZZ, 0, a.order)


@given(moduli.flatmap(lambda m: series_triple(Zmod(m))))
def test_modular_ring_axioms(t):
    a, b, c = t
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert all(0 <= x < a.ring.modulus for x in (a * b).coeffs)


@given(coeff_lists(), coeff_lists())
def test_product_matches_schoolbook(xs, ys):
    n = min(len(xs), len(ys))
    got = Series(ZZ, xs) * Series(ZZ, ys)
    assert list(got.coeffs) == poly_mul(xs[:n], ys[:n], n)


def test_large_coefficients_stay_exact():
    # forces the object-dtype path
    a = Series(ZZ, [10**30, 3, -(10**25)])
    b = Series(ZZ, [7, 10**40, 1])
    assert (a * b).coeffs == (7 * 10**30, 10**70 + 21, 10**30 + 3 * 10**40 - 7 * 10**25)


@given(coeff_lists(elements=st.integers(-50, 50)), st.sampled_from([1, -1]))
def test_invert_integer(xs, c0):
    a = Series(ZZ, [c0] + xs)
    assert a * a.invert() == Series.constant(ZZ, 1, a.order)


@given(moduli, coeff_lists(elements=st.integers(0, 10**6)), st.integers(1, 10**6))
def test_invert_modular(m, xs, c0):
    ring = Zmod(m)
    a = Series(ring, [c0] + xs)
    if not ring.is_unit(a.coeffs[0]):
        with pytest.raises(RingError):
            a.invert()
        return
    assert a * a.invert() == Series.constant(ring, 1, a.order)


def test_non_unit_constant_term():
    with pytest.raises(RingError):
        Series(ZZ, [2, 1]).invert()
    with pytest.raises(RingError):
        Series(Zmod(8), [4, 1]).invert()
    with pytest.raises(RingError):
        Series(DYADIC, [3, 1]).invert()


def test_dyadic_units_are_signed_powers_of_two():
    s = Series(DYADIC, [Dyadic(-1, 3), 1, 1])
    assert s * s.invert() == Series.constant(DYADIC, 1, 3)
    assert s.invert().coeffs[0] == Dyadic(-8)


@given(coeff_lists(), moduli)
def test_reduce_mod_is_a_ring_map(xs, m):
    a = Series(ZZ, xs)
    b = Series(ZZ, list(reversed(xs)))
    assert (a * b).reduce_mod(m) == a.reduce_mod(m) * b.reduce_mod(m)
    assert (a + b).reduce_mod(m) == a.reduce_mod(m) + b.reduce_mod(m)


def test_reduce_mod_between_moduli():
    a = Series(Zmod(40), [13, 27, 39])
    assert a.reduce_mod(8).coeffs == (5, 3, 7)
    with pytest.raises(RingError):
        a.reduce_mod(3)


def test_ring_mismatch():
    with pytest.raises(RingError):
        Series(ZZ, [1]) + Series(Zmod(3), [1])


def test_modulus_must_be_at_least_two():
    with pytest.raises(RingError):
        Zmod(1)
    with pytest.raises(RingError):
        Ring("integer", 5)


@given(st.integers(-1000, 1000), st.integers(0, 12), st.integers(-1000, 1000), st.integers(0, 12))
def test_dyadic_matches_fractions(a, e, b, f):
    x, y = Dyadic(a, e), Dyadic(b, f)
    fx, fy = Fraction(a, 2**e), Fraction(b, 2**f)
    assert (x + y).to_fraction() == fx + fy
    assert (x * y).to_fraction() == fx * fy
    assert (x - y).to_fraction() == fx - fy
    assert Dyadic.coerce(fx) == x


def test_dyadic_rejects_odd_denominators():
    with pytest.raises(RingError):
        Dyadic.coerce(Fraction(1, 3))


def test_modular_ring_accepts_dyadic_constants():
    assert Zmod(9).element(Dyadic(1, 1)) == 5


@given(coeff_lists(max_size=30), st.integers(1, 6))
def test_substitute_power(xs, k):
    a = Series(ZZ, xs)
    s = a.substitute_power(k)
    assert s.order == a.order
    for i, c in enumerate(s.coeffs):
        assert c == (a.coeffs[i // k] if i % k == 0 else 0)


@given(coeff_lists(), st.integers(0, 30))
def test_shift_is_multiplication_by_q_power(xs, k):
    a = Series(ZZ, xs)
    assert a.shift(k) == a * Series.monomial(ZZ, k, a.order)


@given(coeff_lists(elements=st.integers(-99, 99)), st.sampled_from([1, -1]), st.integers(1, 8))
def test_binomial_multiply_and_divide(xs, sign, e):
    a = Series(ZZ, xs)
    binom = Series.from_dict(ZZ, {0: 1, e: sign}, a.order)
    assert a.mul_binomial(sign, e) == a * binom
    assert a.mul_binomial(sign, e).div_binomial(sign, e) == a


def test_power_and_negative_power():
    a = Series(ZZ, [1, 1, 0, 0, 0, 0])
    assert (a**3).coeffs == (1, 3, 3, 1, 0, 0)
    assert (a**-1).coeffs == (1, -1, 1, -1, 1, -1)
    assert a**0 == Series.constant(ZZ, 1, 6)


def test_truncation_rules():
    a = Series(ZZ, [1, 2, 3, 4])
    b = Series(ZZ, [1, 2])
    assert (a + b).order == 2
    assert a.equal_to_order(b, 2)
    with pytest.raises(ValueError):
        a.equal_to_order(b, 3)
    with pytest.raises(IndexError):
        a.coefficient(4)
    assert a.first_difference(Series(ZZ, [1, 2, 0, 4])) == 2


@settings(max_examples=25)
@given(coeff_lists(min_size=5, max_size=5))
def test_str_and_repr(xs):
    s = Series(ZZ, xs)
    assert str(s).endswith("O(q^5)")
    assert "order=5" in repr(s)
