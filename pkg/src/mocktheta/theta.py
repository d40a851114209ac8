"""Theta series, Euler products, q-Pochhammer symbols and the v0 generating function.

Every special series is available from its sum form; the product forms are
kept alongside so the two can be cross-checked to any order.

Notation used in the docstrings: ``f_k = (q^k; q^k)_oo``,
``psi(q) = sum_{n>=0} q^{n(n+1)/2}``, ``phi(q) = sum_{n in Z} q^{n^2}``,
``f(a, b) = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2}``.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .series import ZZ, Ring, Series, Zmod

# ---------------------------------------------------------------------------
# resource guard
# ---------------------------------------------------------------------------

DEFAULT_MEMORY_CAP = 4 * 2**30
_memory_cap = DEFAULT_MEMORY_CAP


class ResourceLimitError(RuntimeError):
    """A computation would exceed the configured memory cap."""


def set_memory_cap(nbytes: int | None) -> None:
    global _memory_cap
    _memory_cap = DEFAULT_MEMORY_CAP if nbytes is None else int(nbytes)


def get_memory_cap() -> int:
    return _memory_cap


def check_memory(n_items: int, itemsize: int, what: str = "series") -> None:
    need = int(n_items) * int(itemsize)
    if need > _memory_cap:
        raise ResourceLimitError(
            f"{what} of {n_items} coefficients needs ~{need} bytes; memory cap is {_memory_cap} bytes"
        )


# ---------------------------------------------------------------------------
# Monomials and elementary series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Monomial:
    """``sign * q^exponent`` with ``exponent >= 1``."""

    sign: int
    exponent: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("monomial sign must be +1 or -1")
        if self.exponent < 1:
            raise ValueError("monomial exponent must be >= 1")

    def __str__(self):
        s = "-" if self.sign < 0 else ""
        return f"{s}q^{self.exponent}"


def _finish(coeffs, ring: Ring) -> Series:
    s = Series(ZZ, coeffs)
    return s if ring == ZZ else s.change_ring(ring)


def euler_product(k: int, order: int, ring: Ring = ZZ) -> Series:
    """``f_k = (q^k; q^k)_oo`` from the pentagonal number theorem."""
    if k < 1:
        raise ValueError("k must be >= 1")
    c = [0] * order
    n = 0
    while True:
        placed = False
        for m in ((n,) if n == 0 else (n, -n)):
            e = k * m * (3 * m - 1) // 2
            if e < order:
                c[e] += -1 if m % 2 else 1
                placed = True
        if not placed and n > 0:
            break
        n += 1
    return _finish(c, ring)


def euler_product_direct(k: int, order: int, ring: Ring = ZZ) -> Series:
    """``prod_{i>=1} (1 - q^{ki})`` by repeated binomial multiplication."""
    return pochhammer(1, k, k, math.inf, order, ring)


def theta_psi(k: int, order: int, ring: Ring = ZZ) -> Series:
    """``psi(q^k) = sum_{n>=0} q^{k n(n+1)/2}``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    c = [0] * order
    n = 0
    while k * n * (n + 1) // 2 < order:
        c[k * n * (n + 1) // 2] += 1
        n += 1
    return _finish(c, ring)


def theta_phi(k: int, order: int, sign: int = 1, ring: Ring = ZZ) -> Series:
    """``phi(sign * q^k) = sum_{n in Z} sign^n q^{k n^2}``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    c = [0] * order
    c[0] = 1
    n = 1
    while k * n * n < order:
        c[k * n * n] += 2 * (sign**n)
        n += 1
    return _finish(c, ring)


def _signed_pochhammer(c: int, r: int, d: int, s: int, order: int, ring: Ring = ZZ) -> Series:
    """``prod_{i>=0} (1 - c d^i q^{r + s i})`` for signs ``c, d`` and ``s >= 1``."""
    out = Series.constant(ZZ, 1, order)
    i = 0
    while r + s * i < order:
        coef = -c * d**i
        out = out.mul_binomial(coef, r + s * i)
        i += 1
    return out if ring == ZZ else out.change_ring(ring)


def pochhammer(sign: int, r: int, step: int, n, order: int, ring: Ring = ZZ) -> Series:
    """``(sign q^r; q^step)_n = prod_{i<n} (1 - sign q^{r + step i})``; ``n`` may be ``math.inf``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if r < 1 or step < 1:
        raise ValueError("r and step must be positive")
    out = Series.constant(ZZ, 1, order)
    i = 0
    while (n == math.inf or i < n) and r + step * i < order:
        out = out.mul_binomial(-sign, r + step * i)
        i += 1
    return out if ring == ZZ else out.change_ring(ring)


def psi_product(order: int, ring: Ring = ZZ) -> Series:
    """``(q^2;q^2)_oo / (q;q^2)_oo``."""
    return (pochhammer(1, 2, 2, math.inf, order) * pochhammer(1, 1, 2, math.inf, order).invert()).change_ring(ring)


def phi_product(order: int, ring: Ring = ZZ) -> Series:
    """``(-q;q^2)_oo^2 (q^2;q^2)_oo``."""
    return (pochhammer(-1, 1, 2, math.inf, order) ** 2 * pochhammer(1, 2, 2, math.inf, order)).change_ring(ring)


def theta_f(a: Monomial, b: Monomial, order: int, ring: Ring = ZZ) -> Series:
    """Ramanujan's ``f(a, b)`` from its bilateral sum."""
    A, B = a.exponent, b.exponent
    c = [0] * order
    for direction in (1, -1):
        n = 0 if direction == 1 else -1
        while True:
            t1, t2 = n * (n + 1) // 2, n * (n - 1) // 2
            e = A * t1 + B * t2
            if e >= order:
                break
            c[e] += a.sign**t1 * b.sign**t2
            n += direction
    return _finish(c, ring)


def theta_f_product(a: Monomial, b: Monomial, order: int, ring: Ring = ZZ) -> Series:
    """``(-a; ab)_oo (-b; ab)_oo (ab; ab)_oo`` (Jacobi triple product side)."""
    d, s = a.sign * b.sign, a.exponent + b.exponent
    out = (
        _signed_pochhammer(-a.sign, a.exponent, d, s, order)
        * _signed_pochhammer(-b.sign, b.exponent, d, s, order)
        * _signed_pochhammer(d, s, d, s, order)
    )
    return out if ring == ZZ else out.change_ring(ring)


# ---------------------------------------------------------------------------
# v0
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class V0Table:
    """``v0(0), ..., v0(order-1)`` in ``ring`` (numpy array; object dtype when exact)."""

    order: int
    ring: Ring
    values: np.ndarray

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self.values[n]
        if not 0 <= n < self.order:
            raise IndexError(f"v0({n}) is beyond the computed order {self.order}")
        return int(self.values[n])

    def __len__(self):
        return self.order

    def tolist(self) -> list[int]:
        return [int(x) for x in self.values]

    def series(self, order: int | None = None) -> Series:
        """``sum v0(n) q^n`` as a :class:`Series`."""
        order = self.order if order is None else order
        if order > self.order:
            raise ValueError(f"table only holds {self.order} coefficients")
        return Series._raw(self.ring, [int(x) for x in self.values[:order]])

    def extract(self, p: int, r: int, count: int | None = None) -> Series:
        """``sum_n v0(p n + r) q^n`` for the ``n`` available (or the first ``count``)."""
        avail = (self.order - 1 - r) // p + 1
        if r >= self.order or avail < 1:
            raise ValueError(f"v0({r}) is beyond the computed order {self.order}")
        count = avail if count is None else count
        if count > avail:
            raise ValueError(f"need v0 to order {p * (count - 1) + r + 1}, have {self.order}")
        return Series._raw(self.ring, [int(x) for x in self.values[r : r + p * count : p]])

    def reduce(self, m: int) -> "V0Table":
        ring = self.ring
        if ring.kind == "modular" and ring.modulus % m:
            raise ValueError(f"{m} does not divide {ring.modulus}")
        if self.values.dtype == object:
            vals = np.array([int(x) % m for x in self.values], dtype=np.int64 if m < 2**62 else object)
        else:
            vals = (self.values % self.values.dtype.type(m)).astype(np.int64) if m < 2**63 else self.values % m
        return V0Table(self.order, Zmod(m), vals)


def _v0_objects(order: int, modulus: int | None) -> np.ndarray:
    check_memory(order, 3 * 64 if modulus is None else 3 * 40, "exact v0 table")
    total = np.zeros(order, dtype=object)
    u = np.zeros(order, dtype=object)
    u[0] = 1
    total[0] = 1
    n = 1
    while n * n < order:
        k = 2 * n - 1
        length = order - n * n
        u = u[:length]
        pad = (-length) % k
        w = np.concatenate([u, np.zeros(pad, dtype=object)]).reshape(-1, k)
        w = w.cumsum(axis=0).reshape(-1)[:length]
        un = w.copy()
        un[k:] += w[:-k]
        if modulus is not None:
            un %= modulus
        total[n * n :] += un
        u = un
        n += 1
    if modulus is not None:
        total %= modulus
    return total


def _kernel_plan(m: int):
    """(table modulus, dtype, wrapping?) used to compute v0 mod ``m``."""
    if m & (m - 1) == 0:
        for bits, dt in ((16, np.uint16), (32, np.uint32), (64, np.uint64)):
            if m <= 2**bits:
                return 2**bits, dt, True
    if 2 * m < 2**32:
        return m, np.uint32, False
    if 2 * m < 2**64:
        return m, np.uint64, False
    return m, object, False


# (table modulus) -> V0Table; append-only
_V0_CACHE: dict[int, V0Table] = {}


def clear_v0_cache() -> None:
    _V0_CACHE.clear()


def v0_series(order: int, ring: Ring = ZZ, *, cache: bool = True) -> V0Table:
    """Coefficients of ``sum_{n>=0} q^{n^2} (-q;q^2)_n / (q;q^2)_n`` to ``order``.

    Over ``ZZ`` the values are exact Python integers.  Over ``Zmod(m)`` a
    compiled kernel is used; powers of two are computed with wrapping
    machine arithmetic modulo ``2^16``/``2^32``/``2^64`` and then reduced.
    Modular tables are cached and a cached table modulo any multiple of
    ``m`` with enough terms is reused.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if ring.kind == "integer":
        return V0Table(order, ring, _v0_objects(order, None))
    if ring.kind != "modular":
        raise ValueError("v0 tables are computed over ZZ or Z/mZ")
    m = ring.modulus
    if cache:
        for big_m, table in _V0_CACHE.items():
            if big_m % m == 0 and table.order >= order:
                t = table if big_m == m else table.reduce(m)
                if t.order > order:
                    t = V0Table(order, t.ring, t.values[:order])
                return t
    table_mod, dtype, wrapping = _kernel_plan(m)
    if dtype is object:
        table = V0Table(order, Zmod(m), _v0_objects(order, m))
    else:
        itemsize = np.dtype(dtype).itemsize
        check_memory(order, 2 * itemsize, f"v0 table mod {m}")
        u = np.empty(order, dtype=dtype)
        total = np.empty(order, dtype=dtype)
        if wrapping:
            _kernels.v0_wrapping(order, u, total)
        else:
            _kernels.v0_reducing(order, dtype(m), u, total)
        table = V0Table(order, Zmod(table_mod), total)
    if cache:
        _V0_CACHE[table_mod] = table
    return table if table.ring.modulus == m else table.reduce(m)


def v0_oracle(order: int) -> V0Table:
    """Independent expansion of the v0 generating function with plain Python lists.

    Each term ``q^{n^2} (-q;q^2)_n / (q;q^2)_n`` is expanded on its own: the
    numerator as an explicit polynomial product, the reciprocal of the
    denominator by convolving with geometric series ``1/(1-q^k)`` one factor
    at a time.
    """
    total = [0] * order
    recip = [1] + [0] * (order - 1)
    n = 0
    while n * n < order:
        length = order - n * n
        if n:
            k = 2 * n - 1
            # recip * (1 + q^k + q^{2k} + ...)
            recip = [sum(recip[i::-k]) for i in range(length)]
        num = [1]
        for i in range(1, n + 1):
            e = 2 * i - 1
            nxt = num + [0] * e
            for j, c in enumerate(num):
                nxt[j + e] += c
            num = nxt
        for t in range(length):
            jmax = min(t, len(num) - 1)
            total[n * n + t] += sum(map(operator.mul, num[: jmax + 1], reversed(recip[t - jmax : t + 1])))
        n += 1
    return V0Table(order, ZZ, np.array(total, dtype=object))


def v0_generating_series(order: int, ring: Ring = ZZ) -> Series:
    return v0_series(order, ring).series()


def even_part_identity_check(order: int) -> bool:
    """``2 sum v0(2n) q^{2n} - 1 == (-q^2;q^4)_oo^4 (q^8;q^8)_oo`` to ``order``."""
    v = v0_series(order).series()
    even = [2 * c if i % 2 == 0 else 0 for i, c in enumerate(v.coeffs)]
    even[0] -= 1
    lhs = Series(ZZ, even)
    rhs = pochhammer(-1, 2, 4, math.inf, order) ** 4 * pochhammer(1, 8, 8, math.inf, order)
    return lhs.equal_to_order(rhs, order)


def eta_quotient(exponents: dict[int, int], order: int, ring: Ring = ZZ) -> Series:
    """``prod_k f_k^{e_k}`` for a mapping ``{k: e_k}``; negative exponents invert."""
    out = Series.constant(ring, 1, order)
    for k, e in sorted(exponents.items()):
        if e:
            out = out * euler_product(k, order, ring) ** e
    return out
