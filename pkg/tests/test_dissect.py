import pytest
from hypothesis import given
from hypothesis import strategies as st

from mocktheta.dissect import (
    Progression,
    extract,
    f12_dissection_check,
    f12_excluded_indices,
    huffing,
    interleave,
    legendre,
    psi_dissection_check,
    triangular_property_failures,
)
from mocktheta.series import ZZ, Series, Zmod
from mocktheta.theta import theta_psi
from oracles import psi_coeffs

series = st.lists(st.integers(-1000, 1000), min_size=1, max_size=60).map(lambda xs: Series(ZZ, xs))


@given(series)
def test_huffing_zeroes_odd_terms(s):
    h = huffing(s)
    assert h.order == s.order
    for i, c in enumerate(h.coeffs):
        assert c == (s.coeffs[i] if i % 2 == 0 else 0)


@given(series)
def test_huffing_is_idempotent(s):
    assert huffing(huffing(s)) == huffing(s)


@given(series, series, st.integers(-5, 5))
def test_huffing_is_linear(a, b, c):
    n = min(a.order, b.order)
    a, b = a.truncate(n), b.truncate(n)
    assert huffing(a + b.scale(c)) == huffing(a) + huffing(b).scale(c)


@given(series)
def test_huffing_is_even_part(s):
    # H(f)(q) = (f(q) + f(-q)) / 2
    flip = Series(ZZ, [(-1) ** i * c for i, c in enumerate(s.coeffs)])
    assert (s + flip) == huffing(s).scale(2)


@given(series, st.integers(1, 7))
def test_extract_then_interleave(s, p):
    if s.order < p:
        return
    parts = [extract(s, p, r) for r in range(p)]
    assert interleave(parts, s.order) == s


def test_extract_lengths_and_progression():
    s = Series(ZZ, range(10))
    assert extract(s, 4, 1).coeffs == (1, 5, 9)
    assert extract(s, Progression(3, 2)).coeffs == (2, 5, 8)
    with pytest.raises(ValueError):
        extract(s, 3, 3)
    with pytest.raises(ValueError):
        Progression(0, 0)


def test_extract_keeps_ring():
    s = Series(Zmod(5), range(10))
    assert extract(s, 2, 1).ring == Zmod(5)


@given(st.integers(-500, 500), st.sampled_from([3, 5, 7, 11, 13, 29]))
def test_legendre_by_brute_force(a, p):
    squares = {x * x % p for x in range(1, p)}
    want = 0 if a % p == 0 else (1 if a % p in squares else -1)
    assert legendre(a, p) == want


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_psi_dissection(p):
    assert psi_dissection_check(p, 500)


@pytest.mark.parametrize("p1", [5, 7, 11, 13])
def test_f12_dissection(p1):
    assert f12_dissection_check(p1, 600)


def test_f12_excluded_indices():
    assert f12_excluded_indices(5) == {-1}
    assert f12_excluded_indices(7) == {1}


@pytest.mark.parametrize("p,alpha", [(3, 0), (3, 1), (5, 0), (5, 1), (7, 0)])
def test_triangular_coefficient_families(p, alpha):
    assert triangular_property_failures(p, alpha, 500) == []


def test_psi_coefficients_are_triangular_indicators():
    assert list(theta_psi(1, 300).coeffs) == psi_coeffs(300)
