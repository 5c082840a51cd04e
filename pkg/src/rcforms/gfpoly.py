"""Polynomials over F_p and their complete factorization.

Internally polynomials are lists of residues, constant term first, with no
trailing zeros ([] is zero).  :class:`ModPolynomial` is the public immutable
wrapper.  Factorization runs the usual pipeline: squarefree decomposition,
distinct-degree splitting, then Cantor-Zassenhaus equal-degree splitting
(trace map in characteristic 2).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

Poly = list[int]


@dataclass(frozen=True, order=True)
class ModPolynomial:
    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] % self.modulus == 0:
            raise ValueError("leading coefficient must be nonzero mod p")
        if any(not 0 <= c < self.modulus for c in self.coeffs):
            raise ValueError("coefficients must be reduced residues")

    @classmethod
    def from_ints(cls, coeffs: Sequence[int], p: int) -> ModPolynomial:
        return cls(p, tuple(trim([c % p for c in coeffs])))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        return format_poly(list(self.coeffs))


def trim(f: Poly) -> Poly:
    while f and f[-1] == 0:
        f.pop()
    return f


def deg(f: Poly) -> int:
    return len(f) - 1


def add(f: Poly, g: Poly, p: int) -> Poly:
    n = max(len(f), len(g))
    out = [((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n)]
    return trim(out)


def sub(f: Poly, g: Poly, p: int) -> Poly:
    n = max(len(f), len(g))
    out = [((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)]
    return trim(out)


def mul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim([c % p for c in out])


def scale(f: Poly, c: int, p: int) -> Poly:
    return trim([(c * a) % p for a in f])


def monic(f: Poly, p: int) -> Poly:
    if not f:
        return []
    return scale(f, pow(f[-1], -1, p), p)


def divmod_(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = deg(g)
    if deg(r) < dg:
        return [], r
    inv = pow(g[-1], -1, p)
    q = [0] * (deg(r) - dg + 1)
    for i in range(deg(r) - dg, -1, -1):
        c = (r[i + dg] * inv) % p
        q[i] = c
        if c:
            for j in range(dg + 1):
                r[i + j] = (r[i + j] - c * g[j]) % p
    return trim(q), trim(r[:dg])


def rem(f: Poly, g: Poly, p: int) -> Poly:
    return divmod_(f, g, p)[1]


def quo(f: Poly, g: Poly, p: int) -> Poly:
    q, r = divmod_(f, g, p)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def gcd(f: Poly, g: Poly, p: int) -> Poly:
    """Monic gcd (zero if both are zero)."""
    a, b = list(f), list(g)
    while b:
        a, b = b, rem(a, b, p)
    return monic(a, p)


def derivative(f: Poly, p: int) -> Poly:
    return trim([(i * c) % p for i, c in enumerate(f)][1:])


def powmod(f: Poly, e: int, m: Poly, p: int) -> Poly:
    result = [1]
    base = rem(f, m, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), m, p)
        e >>= 1
        if e:
            base = rem(mul(base, base, p), m, p)
    return rem(result, m, p)


def evaluate(f: Poly, x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def format_poly(f: Poly, var: str = "x") -> str:
    if not f:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        c = f[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if c == 1 else f"{c}*{mono}")
    return " + ".join(terms)


def squarefree_decomposition(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Monic squarefree pieces (g_i, i) with f = lc * prod g_i^i; pieces pairwise coprime."""
    f = monic(f, p)
    out: list[tuple[Poly, int]] = []
    c = gcd(f, derivative(f, p), p)
    w = quo(f, c, p)
    i = 1
    while deg(w) > 0:
        y = gcd(w, c, p)
        fac = quo(w, y, p)
        if deg(fac) > 0:
            out.append((fac, i))
        i += 1
        w = y
        c = quo(c, y, p)
    if deg(c) > 0:
        # c is a p-th power; coefficients live at multiples of p, and
        # Frobenius is the identity on F_p so the root is coefficientwise
        root = trim([c[j] for j in range(0, len(c), p)])
        out.extend((g, m * p) for g, m in squarefree_decomposition(root, p))
    return out


def distinct_degree(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Split monic squarefree f into products of irreducibles of equal degree d."""
    out = []
    rest = list(f)
    h = [0, 1]
    d = 0
    while deg(rest) >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, rest, p)
        g = gcd(rest, sub(h, [0, 1], p), p)
        if deg(g) > 0:
            out.append((g, d))
            rest = quo(rest, g, p)
            h = rem(h, rest, p)
    if deg(rest) > 0:
        out.append((rest, deg(rest)))
    return out


def _random_poly(n: int, p: int, rng: random.Random) -> Poly:
    return trim([rng.randrange(p) for _ in range(n)])


def equal_degree(f: Poly, d: int, p: int, rng: random.Random) -> list[Poly]:
    """Split monic squarefree f whose irreducible factors all have degree d."""
    n = deg(f)
    if n == d:
        return [f]
    while True:
        a = _random_poly(n, p, rng)
        if deg(a) < 1:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1)); for p = 2 the half-power trick fails
            t = rem(a, f, p)
            acc = list(t)
            for _ in range(d - 1):
                t = rem(mul(t, t, p), f, p)
                acc = add(acc, t, p)
            b = acc
        else:
            b = sub(powmod(a, (p**d - 1) // 2, f, p), [1], p)
        g = gcd(f, b, p)
        if 0 < deg(g) < n:
            return equal_degree(g, d, p, rng) + equal_degree(quo(f, g, p), d, p, rng)


def factor(f: Poly, p: int, rng: random.Random) -> list[tuple[Poly, int]]:
    """All monic irreducible factors with multiplicity, in a canonical sorted order."""
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    out = []
    for piece, mult in squarefree_decomposition(f, p):
        for block, d in distinct_degree(piece, p):
            out.extend((g, mult) for g in equal_degree(block, d, p, rng))
    out.sort(key=lambda gm: (len(gm[0]), gm[0], gm[1]))
    return out
