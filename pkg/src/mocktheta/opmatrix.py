"""Recurrence matrices, coefficient vectors and 2-adic valuations.

The three base matrices are lower-banded integer tables defined by two-term
recurrences::

    M: m11 = 1;  m21 = -1, m22 = 2;   m_ij = 2 m_{i-1,j-1} - m_{i-2,j-1}
    N: n11 = 2;  n21 = 1,  n22 = 8;   n_ij = 4 n_{i-1,j-1} + n_{i-2,j-1}
    P: p11 = 4;  p21 = 1,  p22 = 32;  p_ij = 8 p_{i-1,j-1} + p_{i-2,j-1}

with every entry in column 1 below row 2 equal to zero and ``x_ij = 0`` for
``j > i``.  The derived matrices are

    A_ij = m_{8i-7, j+4i-4}      B = 1 (+) M   (border of zeros, b11 = 1)
    C_ij = n_{8i-7, j+4i-4}      D = 1 (+) P
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field

from .dissect import huffing
from .series import ZZ, Dyadic, Series
from .theta import theta_phi, theta_psi

# (row-1 seed, row-2 seed, multiplier of m_{i-1,j-1})
_RULES = {
    "M": ((1,), (-1, 2), 2),
    "N": ((2,), (1, 8), 4),
    "P": ((4,), (1, 32), 8),
}


class MatrixTable:
    """Rows generated on demand and memoized; append-only, so reads are safe to share."""

    def __init__(self, name: str):
        if name not in _RULES:
            raise ValueError(f"unknown base matrix {name!r}")
        self.name = name
        r1, r2, self.factor = _RULES[name]
        self._rows: list[tuple[int, ...]] = [r1, r2]
        self._lock = threading.Lock()

    def row(self, i: int) -> tuple[int, ...]:
        """Entries ``1..i`` of row ``i`` (everything beyond is zero)."""
        if i < 1:
            raise ValueError("rows are numbered from 1")
        if i > len(self._rows):
            with self._lock:
                rows = self._rows
                while len(rows) < i:
                    k = len(rows) + 1  # new row index
                    prev, prev2 = rows[-1], rows[-2]
                    new = [0] * k
                    for j in range(2, k + 1):
                        a = prev[j - 2] if j - 2 < len(prev) else 0
                        b = prev2[j - 2] if j - 2 < len(prev2) else 0
                        new[j - 1] = self.factor * a + (b if self.name != "M" else -b)
                    rows.append(tuple(new))
        return self._rows[i - 1]

    def entry(self, i: int, j: int) -> int:
        if j < 1:
            raise ValueError("columns are numbered from 1")
        if j > i:
            return 0
        return self.row(i)[j - 1]

    def block(self, rows: int, cols: int) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(1, cols + 1)] for i in range(1, rows + 1)]


_TABLES = {name: MatrixTable(name) for name in _RULES}


def matrix_entry(name: str, i: int, j: int) -> int:
    if i < 1 or j < 1:
        raise ValueError("indices start at 1")
    return _TABLES[name].entry(i, j)


def derived_entry(name: str, i: int, j: int) -> int:
    if i < 1 or j < 1:
        raise ValueError("indices start at 1")
    if name in ("A", "C"):
        base = "M" if name == "A" else "N"
        return matrix_entry(base, 8 * i - 7, j + 4 * i - 4)
    if name in ("B", "D"):
        if i == 1 or j == 1:
            return 1 if i == j == 1 else 0
        return matrix_entry("M" if name == "B" else "P", i - 1, j - 1)
    raise ValueError(f"unknown derived matrix {name!r}")


def entry(name: str, i: int, j: int) -> int:
    """Entry of any of M, N, P, A, B, C, D."""
    if name in _RULES:
        return matrix_entry(name, i, j)
    return derived_entry(name, i, j)


def block(name: str, rows: int, cols: int) -> list[list[int]]:
    return [[entry(name, i, j) for j in range(1, cols + 1)] for i in range(1, rows + 1)]


def _column_bound(name: str, support: int) -> int:
    # highest column that can be nonzero in rows 1..support
    return 4 * support - 3 if name in ("A", "C") else support


# ---------------------------------------------------------------------------
# vectors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoeffVector:
    """Finitely supported row vector of dyadic rationals; ``entries[0]`` is position 1."""

    label: str
    index: int
    entries: tuple[Dyadic, ...] = field(repr=False)

    @property
    def support(self) -> int:
        return len(self.entries)

    def __getitem__(self, k: int) -> Dyadic:
        """1-based access; zero beyond the support."""
        if k < 1:
            raise IndexError("positions start at 1")
        return self.entries[k - 1] if k <= len(self.entries) else Dyadic(0)

    def __repr__(self):
        return f"{self.label}_{self.index} = ({', '.join(map(str, self.entries))})"


def _trim(entries: list[Dyadic]) -> tuple[Dyadic, ...]:
    while entries and not entries[-1]:
        entries.pop()
    return tuple(entries)


def times_matrix(v: tuple[Dyadic, ...], name: str) -> tuple[Dyadic, ...]:
    """Row vector times one of A, B, C, D (exact)."""
    width = _column_bound(name, len(v))
    out = []
    for k in range(1, width + 1):
        acc = Dyadic(0)
        for j, x in enumerate(v, start=1):
            if x:
                e = entry(name, j, k)
                if e:
                    acc = acc + x * e
        out.append(acc)
    return _trim(out)


X1 = (Dyadic(-3, 1), Dyadic(2))

_VEC_CACHE: dict[tuple[str, int], CoeffVector] = {}


def vector(label: str, alpha: int) -> CoeffVector:
    """``x_alpha``, ``y_alpha`` or ``z_alpha``.

    ``x_1`` is the seed ``(-3/2, 2)``; ``x_{2a} = x_{2a-1} A``,
    ``x_{2a+1} = x_{2a} B``, ``y_a = x_{2a-1} C`` and ``z_a = y_a D``.
    """
    if alpha < 1:
        raise ValueError("vector index must be >= 1")
    key = (label, alpha)
    if key in _VEC_CACHE:
        return _VEC_CACHE[key]
    if label == "x":
        if alpha == 1:
            entries = X1
        elif alpha % 2 == 0:
            entries = times_matrix(vector("x", alpha - 1).entries, "A")
        else:
            entries = times_matrix(vector("x", alpha - 1).entries, "B")
    elif label == "y":
        entries = times_matrix(vector("x", 2 * alpha - 1).entries, "C")
    elif label == "z":
        entries = times_matrix(vector("y", alpha).entries, "D")
    else:
        raise ValueError(f"unknown vector label {label!r}")
    vec = CoeffVector(label, alpha, entries)
    _VEC_CACHE[key] = vec
    return vec


# ---------------------------------------------------------------------------
# 2-adic valuation
# ---------------------------------------------------------------------------


def val2(x) -> float | int:
    """Exponent of 2 in an integer or dyadic rational; ``math.inf`` for zero."""
    if isinstance(x, Dyadic):
        if x.num == 0:
            return math.inf
        return val2(x.num) - x.exp
    x = int(x)
    if x == 0:
        return math.inf
    return (x & -x).bit_length() - 1


@dataclass
class BoundFailure:
    what: str
    position: tuple
    valuation: float
    bound: int
    equality: bool = False

    def __str__(self):
        rel = "==" if self.equality else ">="
        return f"{self.what}{self.position}: val2 = {self.valuation}, expected {rel} {self.bound}"


def matrix_valuation_failures(name: str, jmax: int, kmax: int) -> list[BoundFailure]:
    """Check ``val2(m_jk) >= 2k-j-1``, ``val2(n_jk) >= 4k-2j-1``, ``val2(p_jk) >= 6k-3j-1``."""
    scale = {"M": 1, "N": 2, "P": 3}[name]
    bad = []
    for j in range(1, jmax + 1):
        for k in range(1, kmax + 1):
            bound = scale * (2 * k - j) - 1
            v = val2(matrix_entry(name, j, k))
            if v < bound:
                bad.append(BoundFailure(name.lower(), (j, k), v, bound))
    return bad


def vector_valuation_failures(label: str, alpha_max: int, kmax: int) -> list[BoundFailure]:
    """Lower bounds on ``val2`` of vector entries at positions ``k+1``, with equality at ``k=1``.

    * ``x_{2a-1}``: ``>= 3a + 2k - 4``
    * ``x_{2a}``:   ``>= 3a + k``
    * ``y_a``:      ``>= 3a + 3k + 1``
    * ``z_a``:      ``>= 3a + 6k`` (no equality claimed)
    """
    bad = []
    for a in range(1, alpha_max + 1):
        if label == "x_odd":
            vec, bound, exact = vector("x", 2 * a - 1), (lambda k: 3 * a + 2 * k - 4), True
        elif label == "x_even":
            vec, bound, exact = vector("x", 2 * a), (lambda k: 3 * a + k), True
        elif label == "y":
            vec, bound, exact = vector("y", a), (lambda k: 3 * a + 3 * k + 1), True
        elif label == "z":
            vec, bound, exact = vector("z", a), (lambda k: 3 * a + 6 * k), False
        else:
            raise ValueError(label)
        for k in range(1, kmax + 1):
            v = val2(vec[k + 1])
            if v < bound(k):
                bad.append(BoundFailure(f"{vec.label}_{vec.index}", (k + 1,), v, bound(k)))
            elif exact and k == 1 and v != bound(k):
                bad.append(BoundFailure(f"{vec.label}_{vec.index}", (k + 1,), v, bound(k), True))
    return bad


# ---------------------------------------------------------------------------
# Huffing images and quadratic relations (denominators cleared)
# ---------------------------------------------------------------------------


@dataclass
class _Pieces:
    order: int

    def __post_init__(self):
        n = self.order
        self.phi = theta_phi(1, n)
        self.phi_m = theta_phi(1, n, sign=-1)
        self.phi_m_inv = self.phi_m.invert()
        self.phi2 = theta_phi(2, n)
        self.phi4 = theta_phi(4, n)
        self.phi_m2 = theta_phi(2, n, sign=-1)
        self.psi4 = theta_psi(4, n)
        self.psi8 = theta_psi(8, n)
        self.q = Series.monomial(ZZ, 1, n)


_PIECES: dict[int, _Pieces] = {}


def _pieces(order: int) -> _Pieces:
    if order not in _PIECES:
        _PIECES[order] = _Pieces(order)
    return _PIECES[order]


HUFFING_FAMILIES = ("zeta", "xi", "mu", "rho")


def huffing_image_sides(family: str, i: int, order: int) -> tuple[Series, Series, int]:
    """Both sides of a Huffing-image identity after multiplying by ``phi(-q^2)^e``.

    Returns ``(lhs, rhs, e)``.  The left side is formed with the exact inverse
    of ``phi(-q)``; the right side is then a polynomial in theta series.
    """
    if i < 1:
        raise ValueError("i must be >= 1")
    s = _pieces(order)
    one = Series.constant(ZZ, 1, order)
    if family == "zeta":
        e = 2 * i - 2
        lhs = s.phi**i * s.phi_m_inv ** (i - 1)
        terms = [(derived_a(i, j), s.phi4 ** (2 * j - 1) * s.phi_m2 ** (e - 2 * j + 2)) for j in range(1, i + 1)]
    elif family == "xi":
        e = 4 * i
        lhs = s.phi2 ** (2 * i + 1) * s.phi_m_inv ** (2 * i)
        terms = [(matrix_entry("M", i, j), s.phi2 ** (4 * j + 1) * s.phi_m2 ** (e - 4 * j)) for j in range(1, i + 1)]
    elif family == "mu":
        e = 2 * i - 2
        lhs = s.q * s.phi**i * s.phi_m_inv ** (i - 1)
        terms = [
            (derived_c(i, j), (s.q ** (2 * j)) * s.psi8 ** (2 * j - 1) * s.phi_m2 ** (e - 2 * j + 2))
            for j in range(1, i + 1)
        ]
    elif family == "rho":
        e = 4 * i
        lhs = s.q**i * s.psi4 ** (2 * i + 1) * s.phi_m_inv ** (2 * i)
        terms = [
            (matrix_entry("P", i, j), (s.q ** (2 * j)) * s.psi4 ** (4 * j + 1) * s.phi_m2 ** (e - 4 * j))
            for j in range(1, i + 1)
        ]
    else:
        raise ValueError(f"unknown family {family!r}")
    rhs = one.scale(0)
    for c, t in terms:
        if c:
            rhs = rhs + t.scale(c)
    return huffing(lhs) * s.phi_m2**e, rhs, e


def derived_a(i: int, j: int) -> int:
    """``a_ij = m_{2i-1, j+i-1}``."""
    return matrix_entry("M", 2 * i - 1, j + i - 1)


def derived_c(i: int, j: int) -> int:
    """``c_ij = n_{2i-1, j+i-1}``."""
    return matrix_entry("N", 2 * i - 1, j + i - 1)


def huffing_image_check(family: str, i: int, order: int) -> bool:
    lhs, rhs, _ = huffing_image_sides(family, i, order)
    return lhs.equal_to_order(rhs, order)


def quadratic_relations(order: int) -> dict[str, Series]:
    """Cleared forms of the four quadratic relations; each value should vanish.

    * zeta: ``phi(-q)^2 - 2 phi(-q) phi(q^4) + phi(-q^2)^2``
    * xi:   ``phi(-q)^4 - 2 phi(-q)^2 phi(q^2)^2 + phi(-q^2)^4``
    * mu:   ``phi(-q)^2 + 4q psi(q^8) phi(-q) - phi(-q^2)^2``
    * rho:  ``phi(-q)^4 + 8q psi(q^4)^2 phi(-q)^2 - phi(-q^2)^4``
    """
    s = _pieces(order)
    pm2 = s.phi_m * s.phi_m
    pm22 = s.phi_m2 * s.phi_m2
    return {
        "zeta": pm2 - (s.phi_m * s.phi4).scale(2) + pm22,
        "xi": pm2 * pm2 - (pm2 * s.phi2 * s.phi2).scale(2) + pm22 * pm22,
        "mu": pm2 + (s.q * s.psi8 * s.phi_m).scale(4) - pm22,
        "rho": pm2 * pm2 + (s.q * s.psi4 * s.psi4 * pm2).scale(8) - pm22 * pm22,
    }


def quadratic_relation_check(order: int) -> bool:
    return all(r.is_zero() for r in quadratic_relations(order).values())


def zeta_huffing_checks(order: int) -> dict[str, bool]:
    """``H(zeta) = 1`` via ``H(1 - 2q psi(q^8)/phi(q^4)) = 1`` and
    ``H(phi(q^4)/phi(-q)) phi(-q^2)^2 = phi(q^4)^2``."""
    s = _pieces(order)
    one = Series.constant(ZZ, 1, order)
    zeta = one - (s.q * s.psi8 * s.phi4.invert()).scale(2)
    inv_zeta = huffing(s.phi4 * s.phi_m_inv) * s.phi_m2 * s.phi_m2
    return {
        "H(zeta)": huffing(zeta).equal_to_order(one, order),
        "H(1/zeta)": inv_zeta.equal_to_order(s.phi4 * s.phi4, order),
    }
