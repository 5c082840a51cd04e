"""Short Weierstrass curves, naive Frobenius traces, and the ell = 11 lift polynomial."""

from __future__ import annotations

from dataclasses import dataclass

from .intpoly import IntPolynomial


@dataclass(frozen=True)
class ShortWeierstrass:
    """y^2 = x^3 + a x + b."""

    a: int
    b: int

    @property
    def disc(self) -> int:
        return curve_disc(self)


def curve_disc(E: ShortWeierstrass) -> int:
    return -4 * E.a**3 - 27 * E.b**2


def ap_naive(E: ShortWeierstrass, p: int) -> int:
    """a_p = p + 1 - #E(F_p), counting with the quadratic character of x^3 + ax + b."""
    if p == 2:
        raise ValueError("p = 2 is not supported for short Weierstrass models")
    if curve_disc(E) % p == 0:
        raise ValueError(f"bad reduction at p = {p}")
    a, b = E.a % p, E.b % p
    half = (p - 1) // 2
    total = 0
    for x in range(p):
        v = (x * x * x + a * x + b) % p
        if v:
            total += 1 if pow(v, half, p) == 1 else -1
    # #E = p + 1 + sum chi(v), so a_p = -sum chi(v)
    return -total


def atkin_lift(E: ShortWeierstrass) -> IntPolynomial:
    """Degree 24 lift polynomial for the mod 11 representation of E (only even powers)."""
    a, b = E.a, E.b
    d = curve_disc(E)
    if d == 0:
        raise ValueError("singular curve")
    c = [0] * 25
    c[24] = d**10
    c[12] = -15840 * d**5
    c[8] = -337920 * a * d**3
    c[6] = -2280960 * b * d**2
    c[4] = 811008 * a**2 * d
    c[2] = 663552 * a * b
    c[0] = -2816
    return IntPolynomial.of(c)


# (type, conductor, a, b) for the ten weight-2 triples at ell = 11
CHART = (
    ("1T", 54, 21, -26),
    ("1T", 182, 13861, 426358),
    ("2T", 14, -675, 13662),
    ("2T", 20, -108, 297),
    ("2T", 30, 1917, 99198),
    ("2W", 15, -27, 8694),
    ("2W", 24, 54, 189),
    ("2W", 42, -5211, 319734),
    ("2W", 84, -108, -1755),
    ("2W", 96, -189, -540),
)


def chart_curves() -> list[tuple[str, int, ShortWeierstrass]]:
    return [(t, n, ShortWeierstrass(a, b)) for t, n, a, b in CHART]
