"""Integer polynomials: discriminants, factorization mod p, Frobenius partitions.

A polynomial is stored constant term first; the text format used for
fixtures lists coefficients highest degree first.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable

from . import gfpoly
from .gfpoly import ModPolynomial

DEFAULT_SEED = 20170915


class BadPrimeError(ValueError):
    """Raised when a prime divides the discriminant or leading coefficient."""


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero; use IntPolynomial.of")

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> IntPolynomial:
        """From coefficients constant term first; trailing zeros are stripped."""
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        return cls(tuple(c))

    @classmethod
    def from_descending(cls, coeffs: Iterable[int]) -> IntPolynomial:
        return cls.of(reversed(list(coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def derivative(self) -> IntPolynomial:
        return IntPolynomial.of([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def mod(self, p: int) -> ModPolynomial:
        return ModPolynomial.from_ints(self.coeffs, p)

    def descending(self) -> list[int]:
        return list(reversed(self.coeffs))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}" if mono else str(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class Partition:
    """A multiset of positive integers, stored in descending order."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(x < 1 for x in self.parts):
            raise ValueError("parts must be positive")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError("parts must be descending; use Partition.of")

    @classmethod
    def of(cls, parts: Iterable[int]) -> Partition:
        return cls(tuple(sorted((int(x) for x in parts), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Inverse of :meth:`notation`: ``"5^2 1^2"`` -> (5, 5, 1, 1)."""
        parts: list[int] = []
        for tok in text.split():
            base, _, exp = tok.partition("^")
            parts.extend([int(base)] * (int(exp) if exp else 1))
        return cls.of(parts)

    @property
    def degree(self) -> int:
        return sum(self.parts)

    @property
    def lcm(self) -> int:
        return math.lcm(*self.parts) if self.parts else 1

    def notation(self) -> str:
        """Exponent notation, e.g. ``5^2 1^2``, ``10 1^2``, ``12``."""
        out = []
        i = 0
        while i < len(self.parts):
            j = i
            while j < len(self.parts) and self.parts[j] == self.parts[i]:
                j += 1
            n = j - i
            out.append(str(self.parts[i]) if n == 1 else f"{self.parts[i]}^{n}")
            i = j
        return " ".join(out)

    def __str__(self) -> str:
        return self.notation()


def partition_parity(lam: Partition) -> int:
    """Sign of a permutation with cycle type ``lam``."""
    return -1 if sum(x - 1 for x in lam.parts) % 2 else 1


# -- resultants and discriminants -------------------------------------------


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) a mod b."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    return [x * lb**e for x in r]


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Res(f, g) by the subresultant pseudo-remainder sequence."""
    if not f.coeffs or not g.coeffs:
        return 0
    a, b = list(f.coeffs), list(g.coeffs)
    ca, cb = f.content(), g.content()
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    t = ca ** (len(b) - 1) * cb ** (len(a) - 1)
    s = 1
    if len(a) < len(b):
        a, b = b, a
        if (len(a) - 1) % 2 and (len(b) - 1) % 2:
            s = -s
    gg, h = 1, 1
    while len(b) > 1:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _prem(a, b)
        if not r:
            return 0
        a = b
        div = gg * h**delta
        b = [x // div for x in r]
        gg = a[-1]
        if delta == 0:
            pass
        elif delta == 1:
            h = gg
        else:
            h = gg**delta // h ** (delta - 1)
    da = len(a) - 1
    # h^(1 - deg a) * lc(b)^deg a
    if da == 0:
        hh = h
    else:
        hh = b[-1] ** da // h ** (da - 1)
    return s * t * hh


@lru_cache(maxsize=256)
def discriminant(f: IntPolynomial) -> int:
    """(-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    r = resultant(f, f.derivative())
    q, rr = divmod(r, f.leading)
    assert rr == 0
    return -q if (n * (n - 1) // 2) % 2 else q


# -- mod p ------------------------------------------------------------------


def factor_mod(
    f: IntPolynomial, p: int, seed: int | None = DEFAULT_SEED
) -> list[tuple[ModPolynomial, int]]:
    """Monic irreducible factors of f mod p with multiplicities.

    ``seed=None`` draws the equal-degree splitting randomness from the OS.
    """
    if f.degree < 0:
        raise ValueError("cannot factor the zero polynomial")
    if f.leading % p == 0:
        raise BadPrimeError(f"p = {p} divides the leading coefficient")
    rng = random.Random(seed) if seed is not None else random.SystemRandom()
    fp = list(f.mod(p).coeffs)
    if len(fp) == 1:
        return []
    return [(ModPolynomial(p, tuple(g)), m) for g, m in gfpoly.factor(fp, p, rng)]


def is_good_prime(f: IntPolynomial, p: int) -> bool:
    return (discriminant(f) * f.leading) % p != 0


def frobenius_partition(f: IntPolynomial, p: int, seed: int | None = DEFAULT_SEED) -> Partition:
    """Degrees of the irreducible factors of f mod p (p must not divide disc * lc)."""
    if not is_good_prime(f, p):
        raise BadPrimeError(f"{p} is not a good prime for this polynomial")
    factors = factor_mod(f, p, seed)
    assert all(m == 1 for _, m in factors)
    return Partition.of(g.degree for g, _ in factors)


def even_contraction(f: IntPolynomial) -> IntPolynomial:
    """The g with g(x^2) = f(x)."""
    odd = [i for i, c in enumerate(f.coeffs) if i % 2 and c]
    if odd:
        raise ValueError(f"nonzero odd-degree coefficients at indices {odd}")
    return IntPolynomial.of(f.coeffs[::2])


# -- text format ------------------------------------------------------------


def parse_polynomial(text: str) -> IntPolynomial:
    """One line of integers, highest degree first; ``#`` lines are comments."""
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if len(rows) != 1:
        raise ValueError(f"expected exactly one coefficient line, found {len(rows)}")
    try:
        coeffs = [int(tok) for tok in rows[0].split()]
    except ValueError as exc:
        raise ValueError(f"non-integer coefficient: {exc}") from None
    f = IntPolynomial.from_descending(coeffs)
    if f.degree < 0:
        raise ValueError("zero polynomial")
    return f


def read_polynomial(path: str | Path) -> IntPolynomial:
    return parse_polynomial(Path(path).read_text())


def format_polynomial(f: IntPolynomial, comment: str | None = None) -> str:
    head = "".join(f"# {ln}\n" for ln in comment.splitlines()) if comment else ""
    return head + " ".join(str(c) for c in f.descending()) + "\n"


def write_polynomial(f: IntPolynomial, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_polynomial(f, comment))


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, v in enumerate(sieve) if v]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization of a positive integer (small inputs only)."""
    if n < 1:
        raise ValueError("need a positive integer")
    out: dict[int, int] = {}
    q = 2
    while q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out

