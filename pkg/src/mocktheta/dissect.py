"""Huffing operator, progression extraction and theta-function dissections."""

from __future__ import annotations

from dataclasses import dataclass

from .series import ZZ, Series
from .theta import Monomial, theta_f, theta_psi


@dataclass(frozen=True)
class Progression:
    """Indices ``modulus * n + residue``."""

    modulus: int
    residue: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("progression modulus must be >= 1")
        if not 0 <= self.residue < self.modulus:
            raise ValueError("residue must satisfy 0 <= r < p")


def huffing(s: Series) -> Series:
    """Keep even-index coefficients in place and zero the odd ones."""
    c = list(s.coeffs)
    c[1::2] = [s.ring.zero] * (len(c) // 2)
    return Series._raw(s.ring, c)


def extract(s: Series, p: int | Progression, r: int | None = None) -> Series:
    """``sum_n s[p n + r] q^n``; the result has ``floor((N-1-r)/p) + 1`` terms."""
    if isinstance(p, Progression):
        p, r = p.modulus, p.residue
    else:
        Progression(p, r)
    if r >= s.order:
        raise ValueError(f"residue {r} is beyond the series order {s.order}")
    return Series._raw(s.ring, s.coeffs[r::p])


def interleave(parts: list[Series], order: int) -> Series:
    """Inverse of extraction: rebuild a series from all ``p`` residue classes."""
    p = len(parts)
    ring = parts[0].ring
    c = [ring.zero] * order
    for r, part in enumerate(parts):
        idx = range(r, order, p)
        if len(idx) > part.order:
            raise ValueError(f"class {r} holds {part.order} terms, need {len(idx)}")
        for i, k in enumerate(idx):
            c[k] = part.coeffs[i]
    return Series._raw(ring, c)


def legendre(a: int, p: int) -> int:
    """Legendre symbol ``(a | p)`` for an odd prime ``p`` (Euler's criterion)."""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def psi_dissection_terms(p: int, order: int) -> list[tuple[int, Series]]:
    """(shift, series) pairs whose shifted sum is ``psi(q)`` for an odd prime ``p``."""
    terms = []
    for k in range((p - 3) // 2 + 1):
        a = Monomial(1, (p * p + (2 * k + 1) * p) // 2)
        b = Monomial(1, (p * p - (2 * k + 1) * p) // 2)
        terms.append(((k * k + k) // 2, theta_f(a, b, order)))
    terms.append(((p * p - 1) // 8, theta_psi(p * p, order)))
    return terms


def psi_dissection_check(p: int, order: int) -> bool:
    """p-dissection of ``psi(q)`` to ``order`` plus the residue-class disjointness claim."""
    total = Series.constant(ZZ, 0, order)
    for sh, term in psi_dissection_terms(p, order):
        total = total + term.shift(sh)
    ok = total.equal_to_order(theta_psi(1, order), order)
    tail = ((p * p - 1) // 8) % p
    residues = {((k * k + k) // 2) % p for k in range((p - 3) // 2 + 1)}
    return ok and tail not in residues


def f12_excluded_indices(p1: int) -> set[int]:
    """Indices ``k = (+-p1 - 1)/6`` that are integers."""
    return {(s * p1 - 1) // 6 for s in (1, -1) if (s * p1 - 1) % 6 == 0}


def f12_dissection_terms(p1: int, order: int) -> list[tuple[int, Series]]:
    half = (p1 - 1) // 2
    skip = f12_excluded_indices(p1)
    terms = []
    for k in range(-half, half + 1):
        if k in skip:
            continue
        a = Monomial(1, (3 * p1 * p1 + (6 * k + 1) * p1) // 2)
        b = Monomial(1, (3 * p1 * p1 - (6 * k + 1) * p1) // 2)
        terms.append(((3 * k * k + k) // 2, theta_f(a, b, order)))
    terms.append(((p1 * p1 - 1) // 24, theta_f(Monomial(1, p1 * p1), Monomial(1, 2 * p1 * p1), order)))
    return terms


def f12_dissection_check(p1: int, order: int) -> bool:
    """p1-dissection of ``f(q, q^2)`` to ``order`` plus the class disjointness claim."""
    total = Series.constant(ZZ, 0, order)
    for sh, term in f12_dissection_terms(p1, order):
        total = total + term.shift(sh)
    ok = total.equal_to_order(theta_f(Monomial(1, 1), Monomial(1, 2), order), order)
    half = (p1 - 1) // 2
    skip = f12_excluded_indices(p1)
    tail = ((p1 * p1 - 1) // 24) % p1
    disjoint = all(((3 * k * k + k) // 2) % p1 != tail for k in range(-half, half + 1) if k not in skip)
    return ok and disjoint


def triangular_property_failures(p: int, alpha: int, count: int) -> list[str]:
    """Violations of the three psi-coefficient families for ``n < count`` (empty when all hold).

    With ``a(n)`` the coefficients of ``psi(q)``:

    * ``a(p^{2a} n + (p^{2a}-1)/8) = a(n)``,
    * ``a(p^{2a+2} n + ((8i+p) p^{2a+1} - 1)/8) = 0`` for ``1 <= i <= p-1``,
    * ``a(p^{2a+1} n + ((8j+1) p^{2a} - 1)/8) = 0`` when ``(8j+1 | p) = -1``.
    """
    pa = p ** (2 * alpha)
    reach = max(
        pa * count + pa,
        pa * p * p * count + ((8 * (p - 1) + p) * pa * p) // 8 + 1,
        pa * p * count + ((8 * (p - 1) + 1) * pa) // 8 + 1,
    )
    a = theta_psi(1, reach).coeffs
    bad = []
    for n in range(count):
        if a[pa * n + (pa - 1) // 8] != a[n]:
            bad.append(f"scaling: n={n}")
            break
    for i in range(1, p):
        off = ((8 * i + p) * pa * p - 1) // 8
        for n in range(count):
            if a[pa * p * p * n + off]:
                bad.append(f"vanishing class i={i}: n={n}")
                break
    for j in range(p):
        if legendre(8 * j + 1, p) != -1:
            continue
        off = ((8 * j + 1) * pa - 1) // 8
        for n in range(count):
            if a[pa * p * n + off]:
                bad.append(f"nonresidue class j={j}: n={n}")
                break
    return bad


def triangular_coefficient_properties(p: int, alpha: int, count: int) -> bool:
    return not triangular_property_failures(p, alpha, count)
