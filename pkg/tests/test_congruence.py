import math
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mocktheta import congruence
from mocktheta.congruence import (
    SIGNED_SQUARE,
    SQUARE,
    UNLESS_PENTAGONAL,
    UNLESS_TRIANGULAR,
    ZERO,
    CongruenceClaim,
    check_claim,
    pentagonal_index_below,
    scan_discover,
    scan_progression,
    squares_below,
    theorem_suite,
    triangular_below,
)
from oracles import MOD13_OFFSETS, V0_FIRST_60, v0_second_form


@given(st.integers(1, 3000))
def test_exemption_sets_by_brute_force(count):
    assert set(squares_below(count)) == {n for n in range(count) if math.isqrt(n) ** 2 == n}
    assert triangular_below(count) == {n for n in range(count) if math.isqrt(8 * n + 1) ** 2 == 8 * n + 1}
    # n = k(3k+1)/2 for some integer k  <=>  24n+1 is a square of a number = 5 mod 6 or 1 mod 6
    pent = {n for n in range(count) if math.isqrt(24 * n + 1) ** 2 == 24 * n + 1}
    assert pentagonal_index_below(count) == pent


@given(st.sampled_from([SQUARE, SIGNED_SQUARE]), st.integers(1, 400), st.sampled_from([4, 8, 32]))
def test_square_rules_by_brute_force(rule, count, m):
    c = CongruenceClaim(16, 0, m, rule, count)
    for n, want in enumerate(c.expected()):
        k = math.isqrt(n)
        if k * k != n:
            assert want == 0
        else:
            assert want == (1 if rule == SQUARE else (-1) ** k % m)


def test_exempt_entries_are_none():
    c = CongruenceClaim(96, 4, 27, UNLESS_PENTAGONAL, 30)
    exp = c.expected()
    assert [n for n, e in enumerate(exp) if e is None] == [0, 1, 2, 5, 7, 12, 15, 22, 26]
    c = CongruenceClaim(2592, 324, 27, UNLESS_TRIANGULAR, 12)
    assert [n for n, e in enumerate(c.expected()) if e is None] == [0, 1, 3, 6, 10]


def test_claim_order_and_name():
    c = CongruenceClaim(40, 13, 40, ZERO, 50, "x")
    assert c.order == 40 * 49 + 14
    assert c.name == "x: v0(40n+13) = 0 mod 40, n<50"
    with pytest.raises(ValueError):
        CongruenceClaim(0, 1, 4, ZERO, 5)
    with pytest.raises(ValueError):
        CongruenceClaim(4, 1, 1, ZERO, 5)
    with pytest.raises(ValueError):
        CongruenceClaim(4, 1, 4, "maybe", 5)


def test_true_claim_passes_and_false_claim_reports_first_witness():
    assert check_claim(CongruenceClaim(1, 0, 10**6, ZERO, 1)).status == "fail"
    ok = check_claim(CongruenceClaim(416, 132, 13, ZERO, 5))
    assert ok.passed and ok.first_failure is None
    bad = check_claim(CongruenceClaim(5, 3, 3, ZERO, 10))
    first = next(n for n in range(10) if V0_FIRST_60[5 * n + 3] % 3)
    assert bad.first_failure.n == first
    assert bad.first_failure.actual == str(V0_FIRST_60[5 * first + 3] % 3)


def test_claim_values_match_exact_values():
    c = CongruenceClaim(7, 2, 9, ZERO, 8)
    assert [int(x) for x in congruence.claim_values(c)] == [V0_FIRST_60[7 * n + 2] % 9 for n in range(8)]


@pytest.mark.parametrize("name", sorted(congruence.THEOREM_SUITES))
def test_every_claim_names_its_finite_range(name):
    for c in theorem_suite(name):
        assert c.name.endswith(f"n<{c.count}")
        assert f"mod {c.modulus}" in c.name


def test_unknown_suite():
    with pytest.raises(ValueError):
        theorem_suite("T99")


def test_claim_names_are_unique_within_suites():
    for name in congruence.THEOREM_SUITES:
        names = [c.name for c in theorem_suite(name)]
        assert len(names) == len(set(names))


# -- scans ------------------------------------------------------------------------


def test_scan_mod13_family():
    assert scan_progression(416, 13, 30) == MOD13_OFFSETS


def test_scan_mod40_finds_other_offsets():
    # the computed truth, not the published offsets 13 and 37
    assert scan_progression(40, 40, 50) == [17, 33]


def test_scan_large_prime_is_empty():
    assert scan_progression(3, 1000003, 20) == []


def test_scan_modulus_two_for_a_equal_one():
    assert scan_progression(1, 2, 20) == []


def test_scan_discover_against_brute_force():
    vals = v0_second_form(12 * 6)
    want = [(a, b) for a in range(1, 13) for b in range(a) if all(vals[a * n + b] % 4 == 0 for n in range(6))]
    assert scan_discover(12, 4, 6) == want


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 30), st.integers(2, 50), st.integers(1, 8))
def test_scan_agrees_with_exact_values(a, m, count):
    vals = v0_second_form(a * count)
    want = [b for b in range(a) if all(vals[a * n + b] % m == 0 for n in range(count))]
    assert scan_progression(a, m, count) == want


# -- identity checks at small orders ---------------------------------------------------


def test_exact_identities_small():
    assert all(c.passed for c in congruence.exact_identity_checks(60))


def test_tower_identities_small():
    assert all(c.passed for c in congruence.tower_checks(20, (1,)))


def test_eta_identities_small():
    assert all(c.passed for c in congruence.eta_identity_checks(80))


def test_f2sq_f4quartic_form_for_8n_plus_6_differs_at_q1():
    from mocktheta.theta import eta_quotient

    wrong = eta_quotient({1: -5, 2: 2, 4: 4}, 3).scale(4)
    assert list(wrong.coeffs[:2]) == [4, 20]
    assert [V0_FIRST_60[6], V0_FIRST_60[14]] == [4, 24]


def test_mod27_identities_small():
    assert all(c.passed for c in congruence.mod27_identity_checks(max_count=15))


def test_offsets_13_and_37_hold_mod_20_but_not_mod_40():
    holds = check_claim(CongruenceClaim(40, 13, 20, ZERO, 150))
    assert holds.passed and check_claim(CongruenceClaim(40, 37, 20, ZERO, 150)).passed
    assert check_claim(CongruenceClaim(40, 13, 40, ZERO, 150)).first_failure.n == 0
