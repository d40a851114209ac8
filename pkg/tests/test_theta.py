import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mocktheta import theta
from mocktheta.series import ZZ, Series, Zmod
from mocktheta.theta import (
    Monomial,
    ResourceLimitError,
    euler_product,
    euler_product_direct,
    eta_quotient,
    pochhammer,
    theta_f,
    theta_f_product,
    theta_phi,
    theta_psi,
    v0_oracle,
    v0_series,
)
from oracles import V0_FIRST_60, pentagonal_series, phi_coeffs, psi_coeffs, v0_second_form


def test_v0_first_terms_match_frozen_values():
    assert v0_series(60).tolist() == V0_FIRST_60
    assert v0_oracle(60).tolist() == V0_FIRST_60


def test_v0_against_second_series_form():
    assert v0_series(150).tolist() == v0_second_form(150)


def test_v0_series_and_oracle_agree_to_1000():
    assert v0_series(1000).tolist() == v0_oracle(1000).tolist()


@pytest.mark.parametrize("m", [4, 13, 25, 27, 40, 2**16, 2**40, 10**9 + 7])
def test_modular_tables_agree_with_exact(m):
    exact = v0_series(2000).tolist()
    got = v0_series(2000, Zmod(m), cache=False).tolist()
    assert got == [x % m for x in exact]


def test_modular_cache_reuses_multiples():
    theta.clear_v0_cache()
    big = v0_series(500, Zmod(40))
    small = v0_series(300, Zmod(8))
    assert small.order == 300 and small.ring == Zmod(8)
    assert small.tolist() == [x % 8 for x in big.tolist()[:300]]


def test_v0_table_access():
    t = v0_series(50)
    assert t[13] == 20
    assert t.extract(4, 1, 5).coeffs == tuple(V0_FIRST_60[1:21:4])
    with pytest.raises(ValueError):
        t.extract(4, 1, 20)
    with pytest.raises(IndexError):
        t[50]
    assert t.reduce(7).tolist() == [x % 7 for x in V0_FIRST_60[:50]]


def test_even_part_identity():
    assert theta.even_part_identity_check(400)


def test_memory_cap_is_enforced():
    theta.set_memory_cap(10_000)
    try:
        with pytest.raises(ResourceLimitError):
            v0_series(10**6, Zmod(13), cache=False)
        with pytest.raises(ResourceLimitError):
            v0_series(10**6)
    finally:
        theta.set_memory_cap(None)
    assert theta.get_memory_cap() == theta.DEFAULT_MEMORY_CAP


def test_euler_product_pentagonal():
    assert list(euler_product(1, 300).coeffs) == pentagonal_series(300)
    assert euler_product(3, 200) == euler_product_direct(3, 200)
    assert euler_product(2, 50) == euler_product(1, 50).substitute_power(2)


def test_theta_functions_match_sums():
    assert list(theta_psi(1, 200).coeffs) == psi_coeffs(200)
    assert list(theta_phi(1, 200).coeffs) == phi_coeffs(200)
    assert list(theta_phi(1, 200, -1).coeffs) == phi_coeffs(200, -1)
    assert theta_phi(3, 200, -1) == theta_phi(1, 200, -1).substitute_power(3)
    assert theta_psi(8, 200) == theta_psi(1, 200).substitute_power(8)


def test_theta_in_modular_ring():
    assert theta_phi(1, 30, ring=Zmod(4)) == theta_phi(1, 30).reduce_mod(4)


monos = st.builds(Monomial, st.sampled_from([1, -1]), st.integers(1, 7))


@settings(max_examples=40, deadline=None)
@given(monos, monos)
def test_jacobi_triple_product(a, b):
    assert theta_f(a, b, 200) == theta_f_product(a, b, 200)


@given(monos, monos)
def test_f_is_symmetric(a, b):
    assert theta_f(a, b, 80) == theta_f(b, a, 80)


def test_pochhammer():
    # (q;q)_3 = (1-q)(1-q^2)(1-q^3)
    assert pochhammer(1, 1, 1, 3, 8).coeffs == (1, -1, -1, 0, 1, 1, -1, 0)
    assert pochhammer(1, 1, 1, math.inf, 100) == euler_product(1, 100)
    assert pochhammer(-1, 1, 2, 0, 5) == Series.constant(ZZ, 1, 5)
    with pytest.raises(ValueError):
        pochhammer(2, 1, 1, 3, 5)


def test_monomial_validation():
    with pytest.raises(ValueError):
        Monomial(1, 0)
    with pytest.raises(ValueError):
        Monomial(3, 1)
    assert str(Monomial(-1, 4)) == "-q^4"


def test_eta_quotient():
    f1, f2 = euler_product(1, 100), euler_product(2, 100)
    assert eta_quotient({1: -2, 2: 3}, 100) == f2**3 / f1**2
    # psi(q) = f2^2/f1
    assert eta_quotient({1: -1, 2: 2}, 100) == theta_psi(1, 100)

