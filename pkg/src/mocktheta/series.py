"""Dense truncated power series in ``q`` over a small family of exact rings.

A :class:`Series` stores the coefficients of ``q^0 .. q^(N-1)``; everything at
``q^N`` and beyond is unknown.  Binary operations truncate to the smaller of
the two orders, so a result never claims more than both inputs know.

Three coefficient rings are supported:

* ``ZZ``            -- arbitrary precision integers,
* ``Zmod(m)``       -- residues in ``[0, m)``, any ``m >= 2``,
* ``DYADIC``        -- rationals with power-of-two denominators.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

_INT64_MAX = 2**63 - 1


class RingError(ValueError):
    """Raised for operations that are undefined in the coefficient ring."""


# ---------------------------------------------------------------------------
# Dyadic rationals
# ---------------------------------------------------------------------------


def _val2_int(n: int) -> int:
    return (n & -n).bit_length() - 1


@dataclass(frozen=True, order=False)
class Dyadic:
    """The number ``num / 2**exp``, kept with ``num`` odd or equal to ``(0, 0)``."""

    num: int
    exp: int = 0

    def __post_init__(self):
        num, exp = int(self.num), int(self.exp)
        if exp < 0:
            num <<= -exp
            exp = 0
        if num == 0:
            exp = 0
        elif exp:
            shift = min(_val2_int(num), exp)
            num >>= shift
            exp -= shift
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    @classmethod
    def coerce(cls, x) -> "Dyadic":
        if isinstance(x, Dyadic):
            return x
        if isinstance(x, (int, np.integer)):
            return cls(int(x), 0)
        if isinstance(x, tuple) and len(x) == 2:
            return cls(int(x[0]), int(x[1]))
        if isinstance(x, Fraction):
            den = x.denominator
            if den & (den - 1):
                raise RingError(f"{x} has a denominator that is not a power of two")
            return cls(x.numerator, den.bit_length() - 1)
        raise RingError(f"cannot interpret {x!r} as a dyadic rational")

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def is_integer(self) -> bool:
        return self.exp == 0

    def __int__(self) -> int:
        if self.exp:
            raise RingError(f"{self} is not an integer")
        return self.num

    def __add__(self, other):
        other = Dyadic.coerce(other)
        e = max(self.exp, other.exp)
        return Dyadic((self.num << (e - self.exp)) + (other.num << (e - other.exp)), e)

    __radd__ = __add__

    def __neg__(self):
        return Dyadic(-self.num, self.exp)

    def __sub__(self, other):
        return self + (-Dyadic.coerce(other))

    def __rsub__(self, other):
        return Dyadic.coerce(other) - self

    def __mul__(self, other):
        other = Dyadic.coerce(other)
        return Dyadic(self.num * other.num, self.exp + other.exp)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = Dyadic.coerce(other)
        except RingError:
            return NotImplemented
        return self.num == other.num and self.exp == other.exp

    def __hash__(self):
        return hash((self.num, self.exp))

    def __bool__(self):
        return self.num != 0

    def __str__(self):
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/{1 << self.exp}"

    def __repr__(self):
        return f"Dyadic({self.num}, {self.exp})"


# ---------------------------------------------------------------------------
# Rings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ring:
    """Coefficient ring tag: ``"integer"``, ``"modular"`` (with modulus) or ``"dyadic"``."""

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind not in ("integer", "modular", "dyadic"):
            raise RingError(f"unknown ring kind {self.kind!r}")
        if self.kind == "modular":
            if self.modulus is None or int(self.modulus) < 2:
                raise RingError("modulus must be an integer >= 2")
            object.__setattr__(self, "modulus", int(self.modulus))
        elif self.modulus is not None:
            raise RingError(f"{self.kind} ring takes no modulus")

    @property
    def is_modular(self) -> bool:
        return self.kind == "modular"

    @property
    def zero(self):
        return Dyadic(0) if self.kind == "dyadic" else 0

    @property
    def one(self):
        return Dyadic(1) if self.kind == "dyadic" else 1

    def element(self, x):
        if self.kind == "integer":
            if isinstance(x, Dyadic):
                return int(x)
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise RingError(f"{x} is not an integer")
                return x.numerator
            return int(x)
        if self.kind == "modular":
            if isinstance(x, (Dyadic, Fraction)):
                fx = x.to_fraction() if isinstance(x, Dyadic) else x
                return fx.numerator * pow(fx.denominator, -1, self.modulus) % self.modulus
            return int(x) % self.modulus
        return Dyadic.coerce(x)

    def is_unit(self, x) -> bool:
        if self.kind == "integer":
            return x in (1, -1)
        if self.kind == "modular":
            return math.gcd(int(x), self.modulus) == 1
        # dyadic units are exactly the numbers +-2^k
        odd = x.num >> _val2_int(x.num) if x.num else 0
        return abs(odd) == 1

    def inverse(self, x):
        if not self.is_unit(x):
            raise RingError(f"constant term {x} is not a unit in {self}")
        if self.kind == "integer":
            return x
        if self.kind == "modular":
            return pow(int(x), -1, self.modulus)
        if x.exp:
            return Dyadic(x.num << x.exp, 0)
        k = _val2_int(x.num)
        return Dyadic(x.num >> k, k)

    def __str__(self):
        if self.kind == "integer":
            return "ZZ"
        if self.kind == "modular":
            return f"Z/{self.modulus}Z"
        return "ZZ[1/2]"


ZZ = Ring("integer")
DYADIC = Ring("dyadic")


def Zmod(m: int) -> Ring:
    return Ring("modular", m)


# ---------------------------------------------------------------------------
# Convolution kernels
# ---------------------------------------------------------------------------


def _absmax(xs: Sequence[int]) -> int:
    return max(max(xs), -min(xs))


def _convolve_int(a: Sequence[int], b: Sequence[int], n: int, modulus: int | None):
    """First ``n`` coefficients of the product of ``a`` and ``b`` (schoolbook)."""
    a = a[:n]
    b = b[:n]
    bound = _absmax(a) * _absmax(b) * min(len(a), len(b))
    if bound <= _INT64_MAX:
        out = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))[:n]
        if modulus is not None:
            out %= modulus
        return out.tolist()
    rb = b[::-1]
    nb = len(b)
    mul = operator.mul
    res = []
    for k in range(n):
        lo = max(0, k - nb + 1)
        res.append(sum(map(mul, a[lo : k + 1], rb[nb - 1 - k + lo :])))
    if modulus is not None:
        res = [x % modulus for x in res]
    return res


def _convolve_generic(a, b, n, zero):
    rb = b[::-1]
    nb = len(b)
    res = []
    for k in range(n):
        lo = max(0, k - nb + 1)
        res.append(sum(map(operator.mul, a[lo : k + 1], rb[nb - 1 - k + lo :]), zero))
    return res


# ---------------------------------------------------------------------------
# Series
# ---------------------------------------------------------------------------


class Series:
    """Immutable truncated power series ``c_0 + c_1 q + ... + c_{N-1} q^{N-1} + O(q^N)``."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: Iterable, *, _normalized: bool = False):
        coeffs = tuple(coeffs) if _normalized else tuple(ring.element(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a series needs at least one coefficient")
        self.ring = ring
        self.coeffs = coeffs

    # -- construction -------------------------------------------------------

    @classmethod
    def make(cls, ring: Ring, coeffs: Iterable) -> "Series":
        return cls(ring, coeffs)

    @classmethod
    def _raw(cls, ring: Ring, coeffs) -> "Series":
        return cls(ring, coeffs, _normalized=True)

    @classmethod
    def constant(cls, ring: Ring, c, order: int) -> "Series":
        return cls(ring, [c] + [0] * (order - 1))

    @classmethod
    def monomial(cls, ring: Ring, k: int, order: int, c=1) -> "Series":
        """``c q^k`` to the given order."""
        coeffs = [0] * order
        if k < order:
            coeffs[k] = c
        return cls(ring, coeffs)

    @classmethod
    def from_dict(cls, ring: Ring, terms: dict, order: int) -> "Series":
        coeffs = [0] * order
        for k, c in terms.items():
            if k < order:
                coeffs[k] += c
        return cls(ring, coeffs)

    # -- basic access --------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coefficient(self, n: int):
        if not 0 <= n < self.order:
            raise IndexError(f"coefficient q^{n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    __getitem__ = coefficient

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return Series._raw(self.ring, self.coeffs[:order])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def equal_to_order(self, other: "Series", n: int | None = None) -> bool:
        self._check_ring(other)
        limit = min(self.order, other.order)
        if n is None:
            n = limit
        if n > limit:
            raise ValueError(f"cannot compare to order {n}; operands are known to order {limit}")
        return self.coeffs[:n] == other.coeffs[:n]

    def first_difference(self, other: "Series", n: int | None = None):
        """Index of the first differing coefficient below ``n``, or ``None``."""
        self._check_ring(other)
        n = min(self.order, other.order) if n is None else n
        for i, (x, y) in enumerate(zip(self.coeffs[:n], other.coeffs[:n])):
            if x != y:
                return i
        return None

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order > 8 else ""
        return f"Series({self.ring}, [{head}{more}], order={self.order})"

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*q^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(q^{self.order})"

    # -- ring arithmetic ------------------------------------------------------

    def _check_ring(self, other: "Series"):
        if not isinstance(other, Series):
            raise TypeError(f"expected a Series, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _lift(self, other) -> "Series":
        if isinstance(other, Series):
            self._check_ring(other)
            return other
        return Series.constant(self.ring, other, self.order)

    def _normalize_list(self, coeffs):
        if self.ring.is_modular:
            m = self.ring.modulus
            return [c % m for c in coeffs]
        return coeffs

    def __add__(self, other):
        other = self._lift(other)
        n = min(self.order, other.order)
        res = list(map(operator.add, self.coeffs[:n], other.coeffs[:n]))
        return Series._raw(self.ring, self._normalize_list(res))

    __radd__ = __add__

    def __neg__(self):
        return Series._raw(self.ring, self._normalize_list([-c for c in self.coeffs]))

    def __sub__(self, other):
        other = self._lift(other)
        n = min(self.order, other.order)
        res = list(map(operator.sub, self.coeffs[:n], other.coeffs[:n]))
        return Series._raw(self.ring, self._normalize_list(res))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Series":
        c = self.ring.element(c)
        return Series._raw(self.ring, self._normalize_list([c * x for x in self.coeffs]))

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        self._check_ring(other)
        n = min(self.order, other.order)
        if self.ring.kind == "dyadic":
            res = _convolve_generic(self.coeffs[:n], other.coeffs[:n], n, Dyadic(0))
        else:
            res = _convolve_int(self.coeffs, other.coeffs, n, self.ring.modulus)
        return Series._raw(self.ring, res)

    def __rmul__(self, other):
        return self.scale(other)

    def invert(self) -> "Series":
        """Multiplicative inverse; the constant term must be a unit."""
        ring = self.ring
        c0 = self.coeffs[0]
        if not ring.is_unit(c0):
            raise RingError(f"constant term {c0} is not a unit in {ring}; series is not invertible")
        inv0 = ring.inverse(c0)
        a = self.coeffs
        n = self.order
        m = ring.modulus
        b = [inv0]
        mul = operator.mul
        zero = ring.zero
        for k in range(1, n):
            # sum_{i=1..k} a[i] b[k-i]
            s = sum(map(mul, a[1 : k + 1], reversed(b)), zero)
            x = -inv0 * s
            if m is not None:
                x %= m
            b.append(x)
        return Series._raw(ring, b)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.invert()
        return self * Series.constant(self.ring, other, self.order).invert()

    def __pow__(self, k: int) -> "Series":
        k = int(k)
        if k < 0:
            return self.invert() ** (-k)
        result = Series.constant(self.ring, 1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- structural operations ----------------------------------------------------

    def substitute_power(self, k: int) -> "Series":
        """``q -> q^k`` keeping the same order."""
        if k < 1:
            raise ValueError("substitution exponent must be >= 1")
        if k == 1:
            return self
        out = [self.ring.zero] * self.order
        out[::k] = self.coeffs[: (self.order - 1) // k + 1]
        return Series._raw(self.ring, out)

    def shift(self, k: int) -> "Series":
        """Multiply by ``q^k`` keeping the same order."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if k == 0:
            return self
        k = min(k, self.order)
        return Series._raw(self.ring, (self.ring.zero,) * k + self.coeffs[: self.order - k])

    def reduce_mod(self, m: int) -> "Series":
        """Coefficientwise image in ``Z/mZ`` (from ``ZZ`` or from ``Z/M`` with ``m | M``)."""
        target = Zmod(m)
        if self.ring.kind == "modular" and self.ring.modulus % m:
            raise RingError(f"{m} does not divide {self.ring.modulus}")
        return Series(target, self.coeffs)

    def change_ring(self, ring: Ring) -> "Series":
        if ring == self.ring:
            return self
        if ring.kind == "modular":
            if self.ring.kind == "dyadic":
                return Series(ring, self.coeffs)
            return self.reduce_mod(ring.modulus)
        if self.ring.kind == "modular":
            raise RingError(f"cannot lift {self.ring} coefficients to {ring}")
        return Series(ring, self.coeffs)

    def mul_binomial(self, sign: int, e: int) -> "Series":
        """Multiply by ``(1 + sign q^e)``, ``e >= 1``; O(N)."""
        c = list(self.coeffs)
        if e < len(c):
            src = self.coeffs
            if sign == 1:
                c[e:] = map(operator.add, c[e:], src[: len(c) - e])
            else:
                c[e:] = map(operator.sub, c[e:], src[: len(c) - e])
        return Series._raw(self.ring, self._normalize_list(c))

    def div_binomial(self, sign: int, e: int) -> "Series":
        """Divide by ``(1 + sign q^e)``, ``e >= 1``; O(N)."""
        c = list(self.coeffs)
        for i in range(e, len(c)):
            if sign == 1:
                c[i] = c[i] - c[i - e]
            else:
                c[i] = c[i] + c[i - e]
        return Series._raw(self.ring, self._normalize_list(c))


# ---------------------------------------------------------------------------
# Functional interface
# ---------------------------------------------------------------------------


def make(ring: Ring, coeffs: Iterable) -> Series:
    return Series.make(ring, coeffs)


def add(a: Series, b: Series) -> Series:
    return a + b


def sub(a: Series, b: Series) -> Series:
    return a - b


def neg(a: Series) -> Series:
    return -a


def mul(a: Series, b: Series) -> Series:
    return a * b


def invert(a: Series) -> Series:
    return a.invert()


def power(a: Series, k: int) -> Series:
    return a**k


def substitute_power(a: Series, k: int) -> Series:
    return a.substitute_power(k)


def shift(a: Series, k: int) -> Series:
    return a.shift(k)


def reduce_mod(a: Series, m: int) -> Series:
    return a.reduce_mod(m)


def coefficient(a: Series, n: int):
    return a.coefficient(n)


def equal_to_order(a: Series, b: Series, n: int) -> bool:
    return a.equal_to_order(b, n)
