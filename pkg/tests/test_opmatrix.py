import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mocktheta import opmatrix
from mocktheta.opmatrix import (
    HUFFING_FAMILIES,
    block,
    entry,
    huffing_image_check,
    matrix_valuation_failures,
    quadratic_relation_check,
    val2,
    vector,
    vector_valuation_failures,
)
from mocktheta.series import Dyadic
from oracles import M_ROWS, X2_KNOWN, X3_KNOWN, m_rule


def test_m_block_first_eight_rows():
    assert block("M", 8, 9) == M_ROWS


def test_m_matches_rule_oracle():
    for i in range(1, 41):
        for j in range(1, 45):
            assert entry("M", i, j) == m_rule(i, j)


@given(st.integers(3, 60), st.integers(2, 60))
def test_n_and_p_recurrences(i, j):
    assert entry("N", i, j) == 4 * entry("N", i - 1, j - 1) + entry("N", i - 2, j - 1)
    assert entry("P", i, j) == 8 * entry("P", i - 1, j - 1) + entry("P", i - 2, j - 1)
    assert entry("M", i, 1) == entry("N", i, 1) == entry("P", i, 1) == 0


def test_seed_rows():
    assert block("N", 2, 3) == [[2, 0, 0], [1, 8, 0]]
    assert block("P", 2, 2) == [[4, 0], [1, 32]]
    assert block("A", 1, 3) == [[1, 0, 0]]


def test_known_entries():
    assert entry("M", 9, 6) == -120
    assert entry("A", 2, 1) == 9


@given(st.integers(1, 12), st.integers(1, 30))
def test_derived_matrices(i, j):
    assert entry("A", i, j) == entry("M", 8 * i - 7, j + 4 * i - 4)
    assert entry("C", i, j) == entry("N", 8 * i - 7, j + 4 * i - 4)
    if i > 1 and j > 1:
        assert entry("B", i, j) == entry("M", i - 1, j - 1)
        assert entry("D", i, j) == entry("P", i - 1, j - 1)
    elif i == j == 1:
        assert entry("B", 1, 1) == entry("D", 1, 1) == 1
    else:
        assert entry("B", i, j) == entry("D", i, j) == 0


@given(st.integers(1, 30), st.integers(1, 30))
def test_odd_rows_vanish_left_of_diagonal_band(i, j):
    if j < i:
        assert entry("M", 2 * i - 1, j) == 0
        assert entry("N", 2 * i - 1, j) == 0


def test_bad_indices():
    with pytest.raises(ValueError):
        entry("M", 0, 1)
    with pytest.raises(ValueError):
        entry("Q", 1, 1)


def _as_fractions(v):
    return [e.to_fraction() for e in v.entries]


def test_vectors_x2_x3():
    assert _as_fractions(vector("x", 2)) == X2_KNOWN
    assert _as_fractions(vector("x", 3)) == X3_KNOWN
    assert vector("x", 2).support == vector("x", 3).support == 5


def test_vector_seed_and_positions():
    x1 = vector("x", 1)
    assert _as_fractions(x1) == [Fraction(-3, 2), 2]
    assert x1[1] == Dyadic(-3, 1)
    assert x1[7] == Dyadic(0)
    with pytest.raises(IndexError):
        x1[0]
    with pytest.raises(ValueError):
        vector("w", 1)


def test_vector_chain_by_hand():
    # x_2 = x_1 A and y_1 = x_1 C computed with Fractions
    for label, mat in (("x", "A"), ("y", "C")):
        x1 = [Fraction(-3, 2), Fraction(2)]
        width = 4 * len(x1) - 3
        want = [sum(x * entry(mat, j + 1, k) for j, x in enumerate(x1)) for k in range(1, width + 1)]
        while want and want[-1] == 0:
            want.pop()
        assert _as_fractions(vector(label, 1 if label == "y" else 2)) == want


@given(st.integers(-(10**12), 10**12).filter(bool), st.integers(0, 20))
def test_val2(n, e):
    want, odd = 0, n
    while odd % 2 == 0:
        odd //= 2
        want += 1
    assert val2(n << 3) == want + 3
    assert val2(Dyadic(odd, e)) == -e
    assert val2(Dyadic(n, e)) == want - e
    assert val2(0) == math.inf


@pytest.mark.parametrize("name", ["M", "N", "P"])
def test_matrix_valuation_bounds(name):
    assert matrix_valuation_failures(name, 40, 40) == []


@pytest.mark.parametrize("label,amax,kmax", [("x_odd", 4, 10), ("x_even", 4, 10), ("y", 3, 10), ("z", 3, 6)])
def test_vector_valuation_bounds(label, amax, kmax):
    assert vector_valuation_failures(label, amax, kmax) == []


def test_y_second_entry_valuation_is_exact():
    for a in (1, 2, 3):
        assert val2(vector("y", a)[2]) == 3 * a + 4


@pytest.mark.parametrize("family", HUFFING_FAMILIES)
@pytest.mark.parametrize("i", [1, 2, 3, 5])
def test_huffing_images(family, i):
    assert huffing_image_check(family, i, 150)


def test_quadratic_relations():
    assert quadratic_relation_check(300)


def test_zeta_huffing():
    assert opmatrix.zeta_huffing_checks(200) == {"H(zeta)": True, "H(1/zeta)": True}
