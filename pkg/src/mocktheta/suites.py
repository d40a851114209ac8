"""Named verification suites.  Each returns a :class:`Report`; ``all`` runs every one."""

from __future__ import annotations

import itertools
import time

from . import congruence, dissect, opmatrix
from .opmatrix import HUFFING_FAMILIES, huffing_image_sides, vector
from .report import Check, Report, series_check
from .series import ZZ, Series
from .theta import (
    Monomial,
    euler_product,
    euler_product_direct,
    eta_quotient,
    phi_product,
    psi_product,
    theta_f,
    theta_f_product,
    theta_phi,
    theta_psi,
)

DEFAULT_ORDER = 400

# rows 1..8 of M, nine columns
M_KNOWN = (
    (1, 0, 0, 0, 0, 0, 0, 0, 0),
    (-1, 2, 0, 0, 0, 0, 0, 0, 0),
    (0, -3, 4, 0, 0, 0, 0, 0, 0),
    (0, 1, -8, 8, 0, 0, 0, 0, 0),
    (0, 0, 5, -20, 16, 0, 0, 0, 0),
    (0, 0, -1, 18, -48, 32, 0, 0, 0),
    (0, 0, 0, -7, 56, -112, 64, 0, 0),
    (0, 0, 0, 1, -32, 160, -256, 128, 0),
)

X2_KNOWN = ("33/2", -(2**4) * 3 * 5, 2**5 * 3**3, -(2**7) * 3**2, 2**9)
X3_KNOWN = ("33/2", -(2**4) * 3 * 23, 2**6 * 89, -(2**9) * 17, 2**12)


def _timed(name, build) -> Report:
    t0 = time.perf_counter()
    checks = build()
    return Report(name, checks, int((time.perf_counter() - t0) * 1000))


# ---------------------------------------------------------------------------


def identity_checks(order: int = 500) -> list[Check]:
    n = order
    phi, phim = theta_phi(1, n), theta_phi(1, n, -1)
    phi2, phim2, phi4 = theta_phi(2, n), theta_phi(2, n, -1), theta_phi(4, n)
    psi4, psi8 = theta_psi(4, n), theta_psi(8, n)
    q = Series.monomial(ZZ, 1, n)
    out = []

    def add(name, lhs, rhs):
        out.append(series_check(f"{name}, n<{n}", lhs, rhs, n))

    add("phi(-q^2)^2 = phi(q) phi(-q)", phim2 * phim2, phi * phim)
    add("phi(-q) = phi(q^4) - 2q psi(q^8)", phim, phi4 - (q * psi8).scale(2))
    add("phi(-q)^2 = phi(q^2)^2 - 4q psi(q^4)^2", phim * phim, phi2 * phi2 - (q * psi4 * psi4).scale(4))
    add("phi(q^4)^2 - 4q^2 psi(q^8)^2 = phi(-q^2)^2", phi4 * phi4 - (q * q * psi8 * psi8).scale(4), phim2 * phim2)
    add("psi(q) = (q^2;q^2)/(q;q^2)", theta_psi(1, n), psi_product(n))
    add("phi(q) = (-q;q^2)^2 (q^2;q^2)", phi, phi_product(n))
    add("f(-q) pentagonal sum = (q;q)", euler_product(1, n), euler_product_direct(1, n))
    add("f(q,q) = phi(q)", theta_f(Monomial(1, 1), Monomial(1, 1), n), phi)
    add("f(q,q^3) = psi(q)", theta_f(Monomial(1, 1), Monomial(1, 3), n), theta_psi(1, n))
    add(
        "psi(q) = f(q^3,q^6) + q psi(q^9)",
        theta_psi(1, n),
        theta_f(Monomial(1, 3), Monomial(1, 6), n) + theta_psi(9, n).shift(1),
    )
    add(
        "phi(-q) = phi(-q^9) - 2q f(-q^3,-q^15)",
        phim,
        theta_phi(9, n, -1) - theta_f(Monomial(-1, 3), Monomial(-1, 15), n).shift(1).scale(2),
    )
    # f2^3/f1^3 expansion, multiplied through by f1^3 f3^8 f18
    e = lambda d: eta_quotient(d, n)  # noqa: E731
    lhs = e({2: 3, 3: 8, 18: 1})
    rhs = (
        e({1: 3, 3: 7, 6: 1, 18: 1})
        + e({1: 3, 6: 4, 9: 5}).shift(1).scale(3)
        + e({1: 3, 3: 1, 6: 3, 9: 2, 18: 3}).shift(2).scale(6)
        + e({1: 3, 3: 2, 6: 2, 9: -1, 18: 6}).shift(3).scale(12)
    )
    add("f2^3/f1^3 3-dissection (times f1^3 f3^8 f18)", lhs, rhs)
    for (x, y), (sx, sy) in itertools.product(itertools.product(range(1, 5), repeat=2), itertools.product((1, -1), repeat=2)):
        a, b = Monomial(sx, x), Monomial(sy, y)
        add(f"triple product f({a},{b})", theta_f(a, b, n), theta_f_product(a, b, n))
    for key, rel in opmatrix.quadratic_relations(n).items():
        out.append(Check.outcome(f"{key} quadratic relation (cleared) vanishes, n<{n}", rel.is_zero(), n, None, None,
                                 _zero_witness(rel)))
    return out


def _zero_witness(s: Series):
    for i, c in enumerate(s.coeffs):
        if c:
            return i, 0, c
    return None


_HUFFING_TEXT = {
    "zeta": "H(phi(q)^i/phi(-q)^(i-1)) = sum_j a(i,j) phi(q^4)^(2j-1)/phi(-q^2)^(2j-2)",
    "xi": "H(phi(q^2)^(2i+1)/phi(-q)^(2i)) = sum_j m(i,j) phi(q^2)^(4j+1)/phi(-q^2)^(4j)",
    "mu": "H(q phi(q)^i/phi(-q)^(i-1)) = sum_j c(i,j) q^(2j) psi(q^8)^(2j-1)/phi(-q^2)^(2j-2)",
    "rho": "H(q^i psi(q^4)^(2i+1)/phi(-q)^(2i)) = sum_j p(i,j) q^(2j) psi(q^4)^(4j+1)/phi(-q^2)^(4j)",
}


def huffing_checks(order: int = 300, i_max: int = 8) -> list[Check]:
    n = order
    out = []
    for fam in HUFFING_FAMILIES:
        for i in range(1, i_max + 1):
            lhs, rhs, e = huffing_image_sides(fam, i, n)
            out.append(series_check(f"{_HUFFING_TEXT[fam]}, i={i}, times phi(-q^2)^{e}, n<{n}", lhs, rhs, n))
    H = dissect.huffing
    phi, phi4, phim2 = theta_phi(1, n), theta_phi(4, n), theta_phi(2, n, -1)
    psi4, psi8 = theta_psi(4, n), theta_psi(8, n)
    iphim = theta_phi(1, n, -1).invert()
    iphim2 = phim2.invert()
    q = Series.monomial(ZZ, 1, n)
    out.append(series_check(
        f"H(phi(q)^2/phi(-q)) = -3 phi(q^4) + 4 phi(q^4)^3/phi(-q^2)^2, n<{n}",
        H(phi * phi * iphim), phi4.scale(-3) + (phi4**3 * iphim2**2).scale(4), n))
    out.append(series_check(
        f"H(q phi(q)^2/phi(-q)) = 6 q^2 psi(q^8) + 32 q^4 psi(q^8)^3/phi(-q^2)^2, n<{n}",
        H(q * phi * phi * iphim), (psi8.shift(2)).scale(6) + (psi8**3 * iphim2**2).shift(4).scale(32), n))
    out.append(series_check(
        f"H(q psi(q^4)^3/phi(-q)^2) = 4 q^2 psi(q^4)^5/phi(-q^2)^4, n<{n}",
        H(q * psi4**3 * iphim**2), (psi4**5 * iphim2**4).shift(2).scale(4), n))
    z = opmatrix.zeta_huffing_checks(n)
    out.append(Check.outcome(f"H(1 - 2q psi(q^8)/phi(q^4)) = 1, n<{n}", z["H(zeta)"], n))
    out.append(Check.outcome(f"H(phi(q^4)/phi(-q)) phi(-q^2)^2 = phi(q^4)^2, n<{n}", z["H(1/zeta)"], n))
    out += congruence.exact_identity_checks(n)
    return out


def dissection_checks(psi_order: int = 500, f12_order: int = 600, count: int = 500) -> list[Check]:
    out = []
    for p in (3, 5, 7):
        ok = dissect.psi_dissection_check(p, psi_order)
        out.append(Check.outcome(f"psi(q) {p}-dissection and class disjointness, n<{psi_order}", ok, psi_order))
    for p1 in (5, 7):
        ok = dissect.f12_dissection_check(p1, f12_order)
        out.append(Check.outcome(f"f(q,q^2) {p1}-dissection and class disjointness, n<{f12_order}", ok, f12_order))
    for p in (3, 5):
        for a in (0, 1):
            bad = dissect.triangular_property_failures(p, a, count)
            w = (0, "no violations", "; ".join(bad)) if bad else None
            out.append(Check.outcome(
                f"psi coefficients p={p}, a={a}: scaling (a(p^2a n + (p^2a-1)/8) = a(n)) and vanishing classes, n<{count}",
                not bad, count, None, None, w))
    return out


def matrix_checks(i_max: int = 40) -> list[Check]:
    out = []
    got = opmatrix.block("M", 8, 9)
    w = next(((i * 9 + j, M_KNOWN[i][j], got[i][j]) for i in range(8) for j in range(9) if got[i][j] != M_KNOWN[i][j]), None)
    out.append(Check.outcome("M rows 1-8, columns 1-9 match the known block", w is None, 8, None, None, w))
    seeds = {"N": ((2, 0), (1, 8)), "P": ((4, 0), (1, 32))}
    for name, want in seeds.items():
        blk = tuple(tuple(r) for r in opmatrix.block(name, 2, 2))
        out.append(Check.outcome(f"{name} seed rows {want}", blk == want, 2, None, None, (0, want, blk)))
    out.append(Check.outcome("m(9,6) = -120", opmatrix.entry("M", 9, 6) == -120, 9, None, None,
                             (9, -120, opmatrix.entry("M", 9, 6))))
    out.append(Check.outcome("A(2,1) = m(9,5) = 9", opmatrix.entry("A", 2, 1) == 9, 9, None, None,
                             (2, 9, opmatrix.entry("A", 2, 1))))
    for name in ("M", "N", "P"):
        bad = [(i, j) for i in range(1, i_max + 1) for j in range(i + 1, i + 3) if opmatrix.entry(name, i, j)]
        out.append(Check.outcome(f"{name} strictly lower banded (x(i,j) = 0 for j > i), i<={i_max}", not bad, i_max,
                                 None, None, (bad[0][0], 0, "nonzero") if bad else None))
    for name in ("M", "N"):
        bad = [(i, j) for i in range(1, i_max + 1) for j in range(1, i) if opmatrix.entry(name, 2 * i - 1, j)]
        out.append(Check.outcome(f"{name} odd rows: x(2i-1,j) = 0 for j < i, i<={i_max}", not bad, i_max,
                                 None, None, (bad[0][0], 0, "nonzero") if bad else None))
    for label, idx, want in (("x", 2, X2_KNOWN), ("x", 3, X3_KNOWN)):
        v = vector(label, idx)
        shown = tuple(str(e) if isinstance(w, str) else int(e) if e.is_integer() else str(e) for e, w in zip(v.entries, want))
        ok = v.support == 5 and shown == want
        out.append(Check.outcome(f"{label}_{idx} matches the known entries, support 5", ok, 5, None, None,
                                 (v.support, want, tuple(map(str, v.entries)))))
    vecs = [vector("x", a) for a in range(1, 9)] + [vector(l, a) for l in "yz" for a in range(1, 5)]
    bad = [v for v in vecs if not all(e.is_integer() for e in v.entries[1:])]
    out.append(Check.outcome("entries past position 1 are integers (x_1..x_8, y_1..y_4, z_1..z_4)", not bad, 8,
                             None, None, (bad[0].index, "integers", repr(bad[0])) if bad else None))
    exps = [vector("x", a).entries[0].exp for a in (1, 2, 3)]
    out.append(Check.outcome("first entries of x_1, x_2, x_3 have denominator 2", exps == [1, 1, 1], 3, None, None,
                             (0, [1, 1, 1], exps)))
    return out


def valuation_lemma_suite(jk_max: int = 40, x_alpha: int = 4, x_k: int = 10, y_alpha: int = 3, z_k: int = 6) -> list[Check]:
    out = []
    text = {"M": "val2(m(j,k)) >= 2k-j-1", "N": "val2(n(j,k)) >= 4k-2j-1", "P": "val2(p(j,k)) >= 6k-3j-1"}
    for name in ("M", "N", "P"):
        bad = opmatrix.matrix_valuation_failures(name, jk_max, jk_max)
        out.append(_bound_check(f"{text[name]}, 1<=j,k<={jk_max}", bad, jk_max))
    rows = [
        ("x_odd", x_alpha, x_k, "val2(x(2a-1,k+1)) >= 3a+2k-4, equality at k=1"),
        ("x_even", x_alpha, x_k, "val2(x(2a,k+1)) >= 3a+k, equality at k=1"),
        ("y", y_alpha, x_k, "val2(y(a,k+1)) >= 3a+3k+1, val2(y(a,2)) = 3a+4"),
        ("z", y_alpha, z_k, "val2(z(a,k+1)) >= 3a+6k"),
    ]
    for label, amax, kmax, desc in rows:
        bad = opmatrix.vector_valuation_failures(label, amax, kmax)
        out.append(_bound_check(f"{desc}, a<={amax}, k<={kmax}", bad, kmax))
    return out


def _bound_check(name, bad, order) -> Check:
    if not bad:
        return Check.outcome(name, True, order)
    b = bad[0]
    return Check.outcome(name, False, order, None, None,
                         (b.position[0], f"{'==' if b.equality else '>='} {b.bound}", str(b.valuation)))


# ---------------------------------------------------------------------------

BUILTIN = {
    "identities": lambda order: _timed("identities", lambda: identity_checks(order or 500)),
    "huffing": lambda order: _timed("huffing", lambda: huffing_checks(order or 300)),
    "genfun": lambda order: congruence.genfun_identity_suite(order or DEFAULT_ORDER),
    "dissections": lambda order: _timed("dissections", dissection_checks),
    "matrices": lambda order: _timed("matrices", matrix_checks),
    "valuations": lambda order: _timed("valuations", valuation_lemma_suite),
}

SUITE_NAMES = tuple(BUILTIN) + tuple(congruence.THEOREM_SUITES) + ("all",)


def run_suite(name: str, order: int | None = None) -> Report:
    """Run a named suite; ``order`` overrides the default truncation of the series suites."""
    if name in BUILTIN:
        return BUILTIN[name](order)
    if name in congruence.THEOREM_SUITES:
        return congruence.run_theorem_suite(name)
    if name == "all":
        t0 = time.perf_counter()
        checks = []
        for sub in SUITE_NAMES[:-1]:
            rep = run_suite(sub, order)
            checks += [_prefixed(sub, c) for c in rep.checks]
        return Report("all", checks, int((time.perf_counter() - t0) * 1000))
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")


def _prefixed(suite: str, c: Check) -> Check:
    return Check(f"[{suite}] {c.name}", c.status, c.order, c.modulus, c.cleared_multiplier, c.first_failure)

