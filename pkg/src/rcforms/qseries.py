"""Truncated q-series with exact coefficients.

Coefficients are Python ints, so nothing overflows; reduction mod a prime is
an explicit step (:func:`reduce_mod`).  Everything here is immutable.

The modular-form constructors at the bottom build eta products (via the
pentagonal number theorem) and theta series of the hexagonal lattice
x^2 + xy + y^2.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class QSeries:
    """Power series c_0 + c_1 q + ... + c_M q^M + O(q^(M+1))."""

    precision: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.precision < 0:
            raise ValueError("precision must be nonnegative")
        if len(self.coeffs) != self.precision + 1:
            raise ValueError(
                f"expected {self.precision + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_list(cls, coeffs: Sequence[int], precision: int | None = None) -> QSeries:
        """Build from the leading coefficients, zero padding or truncating to ``precision``."""
        if precision is None:
            precision = len(coeffs) - 1
        c = [int(x) for x in coeffs[: precision + 1]]
        c.extend([0] * (precision + 1 - len(c)))
        return cls(precision, tuple(c))

    @classmethod
    def one(cls, precision: int) -> QSeries:
        return cls.from_list([1], precision)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, precision: int) -> QSeries:
        if precision > self.precision:
            raise ValueError("cannot raise precision by truncation")
        return QSeries(precision, self.coeffs[: precision + 1])

    def _common(self, other: QSeries) -> int:
        return min(self.precision, other.precision)

    def __add__(self, other: QSeries | int) -> QSeries:
        if isinstance(other, int):
            return QSeries(self.precision, (self.coeffs[0] + other,) + self.coeffs[1:])
        m = self._common(other)
        return QSeries(m, tuple(a + b for a, b in zip(self.coeffs[: m + 1], other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> QSeries:
        return QSeries(self.precision, tuple(-a for a in self.coeffs))

    def __sub__(self, other: QSeries | int) -> QSeries:
        return self + (-other)

    def __rsub__(self, other: int) -> QSeries:
        return (-self) + other

    def __mul__(self, other: QSeries | int) -> QSeries:
        if isinstance(other, int):
            return QSeries(self.precision, tuple(other * a for a in self.coeffs))
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> QSeries:
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = QSeries.one(self.precision)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None for O(q^(M+1))."""
        for n, c in enumerate(self.coeffs):
            if c:
                return n
        return None


@dataclass(frozen=True)
class QSeriesModL:
    """Truncated series with coefficients reduced into [0, ell)."""

    precision: int
    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.precision + 1:
            raise ValueError("coefficient count does not match precision")
        if any(not 0 <= c < self.modulus for c in self.coeffs):
            raise ValueError(f"coefficients must lie in [0, {self.modulus})")

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __sub__(self, other: QSeriesModL) -> QSeriesModL:
        if other.modulus != self.modulus:
            raise ValueError("moduli differ")
        m = min(self.precision, other.precision)
        ell = self.modulus
        return QSeriesModL(
            m, ell, tuple((a - b) % ell for a, b in zip(self.coeffs[: m + 1], other.coeffs))
        )

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def reduce_mod(f: QSeries, ell: int) -> QSeriesModL:
    return QSeriesModL(f.precision, ell, tuple(c % ell for c in f.coeffs))


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    """Schoolbook product, truncated at the smaller precision."""
    m = min(a.precision, b.precision)
    ac = a.coeffs
    bc = b.coeffs
    # skip leading zeros; theta/eta factors are often very sparse
    nz = [(i, x) for i, x in enumerate(ac[: m + 1]) if x]
    out = [0] * (m + 1)
    for i, x in nz:
        lim = m - i
        for j in range(lim + 1):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return QSeries(m, tuple(out))


def exact_div_scalar(f: QSeries, c: int) -> QSeries:
    """Divide every coefficient by ``c``; raise if any division is inexact."""
    if c == 0:
        raise ZeroDivisionError("division by zero")
    out = []
    for n, a in enumerate(f.coeffs):
        q, r = divmod(a, c)
        if r:
            raise ArithmeticError(f"coefficient of q^{n} ({a}) is not divisible by {c}")
        out.append(q)
    return QSeries(f.precision, tuple(out))


def theta_operator(f: QSeriesModL) -> QSeriesModL:
    """Ramanujan's theta = q d/dq on reduced coefficients: c_n -> n c_n mod ell."""
    ell = f.modulus
    return QSeriesModL(
        f.precision, ell, tuple((n * c) % ell for n, c in enumerate(f.coeffs))
    )


def euler_product(t: int, precision: int) -> QSeries:
    """prod_{n>=1} (1 - q^(t n)) via the pentagonal number theorem.

    prod (1 - x^n) = sum_{k in Z} (-1)^k x^(k(3k-1)/2), then x = q^t.
    """
    if t < 1:
        raise ValueError("t must be positive")
    out = [0] * (precision + 1)
    bound = precision // t
    k = 0
    while True:
        hit = False
        for kk in ((k, -k) if k else (0,)):
            e = kk * (3 * kk - 1) // 2
            if e <= bound:
                out[e * t] += -1 if kk % 2 else 1
                hit = True
        if not hit and k > 0:
            break
        k += 1
    return QSeries(precision, tuple(out))


def eta_product(indices: Iterable[int], precision: int) -> QSeries:
    """prod_t eta(q^t) truncated at q^precision.

    ``indices`` is a multiset; sum(t)/24 must be a positive integer, giving
    the leading exponent of the result.
    """
    counts = Counter(int(t) for t in indices)
    if not counts or any(t < 1 for t in counts):
        raise ValueError("eta product needs a nonempty multiset of positive integers")
    total = sum(t * c for t, c in counts.items())
    shift, r = divmod(total, 24)
    if r or shift < 1:
        raise ValueError(
            f"leading exponent sum(t)/24 = {total}/24 is not a positive integer"
        )
    result = QSeries.one(precision)
    for t in sorted(counts):
        if t > precision:
            continue
        result = result * euler_product(t, precision) ** counts[t]
    coeffs = (0,) * shift + result.coeffs[: max(precision + 1 - shift, 0)]
    return QSeries(precision, coeffs[: precision + 1])


def theta_hex(t: int, precision: int) -> QSeries:
    """Theta_t = sum over (x, y) in Z^2 of q^(t (x^2 + x y + y^2))."""
    if t < 1:
        raise ValueError("t must be positive")
    out = [0] * (precision + 1)
    bound = precision // t
    # x^2 + xy + y^2 >= 3 x^2 / 4, same for y
    r = math.isqrt(4 * bound // 3) + 1
    for x in range(-r, r + 1):
        for y in range(-r, r + 1):
            v = x * x + x * y + y * y
            if v <= bound:
                out[t * v] += 1
    return QSeries(precision, tuple(out))
