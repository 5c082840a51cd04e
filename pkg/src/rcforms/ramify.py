"""Root discriminants and Galois root discriminants.

A ramification profile is a list of (p, exponent) pairs, each meaning a
factor p^exponent.  Exponents stay exact (``Fraction``) until
:func:`evaluate` turns the product into a float.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

# Serre-Odlyzko constant 2 * 4 pi e^gamma under GRH; documented, not derived.
OMEGA = 44.76


@dataclass(frozen=True)
class RamProfile:
    contributions: tuple[tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.contributions]
        if len(set(primes)) != len(primes):
            raise ValueError("primes in a profile must be distinct")
        for p, e in self.contributions:
            if not 0 <= e < 2:
                raise ValueError(f"exponent {e} at p = {p} outside [0, 2)")

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, Fraction | int | str]]) -> RamProfile:
        return cls(tuple((int(p), Fraction(e)) for p, e in pairs))

    @classmethod
    def parse(cls, text: str) -> RamProfile:
        """``"2:7/6,3:10/11,11:9/10"``."""
        pairs = []
        for item in filter(None, (s.strip() for s in text.split(","))):
            p, _, e = item.partition(":")
            if not e:
                raise ValueError(f"profile entry {item!r} is not of the form p:exponent")
            pairs.append((int(p), Fraction(e)))
        return cls.of(pairs)

    def __str__(self) -> str:
        return " ".join(f"{p}^({e})" for p, e in self.contributions)


def evaluate(profile: RamProfile) -> float:
    return math.exp(sum(float(e) * math.log(p) for p, e in profile.contributions))


def root_disc_from_D(D: int, n: int) -> float:
    if D == 0:
        raise ValueError("discriminant must be nonzero")
    if n < 1:
        raise ValueError("degree must be positive")
    # |D| may exceed float range; take logs of the integer directly
    return math.exp(math.log(abs(D)) / n)


def tame_grd_exponent(t: int) -> Fraction:
    """Exponent (t - 1)/t of p for tame ramification with inertia of order t."""
    if t < 1:
        raise ValueError("inertia order must be positive")
    return Fraction(t - 1, t)


def level_prime_contribution(
    p: int, ord_n: int, ell: int, e: int | None = None
) -> tuple[Fraction, Fraction]:
    """(root discriminant, Galois root discriminant) exponents of a prime p != ell in N.

    ``ord_n`` is ord_p(N).  For ord_p(N) = 2 the tame inertia order ``e``
    (3, 4 or 6) must be supplied.
    """
    if p == ell:
        raise ValueError("p must differ from ell")
    if ord_n == 1:
        return Fraction(ell - 1, ell + 1), Fraction(ell - 1, ell)
    if ord_n == 2:
        if e not in (3, 4, 6):
            raise ValueError("ord_p(N) = 2 needs tame inertia order e in {3, 4, 6}")
        if p == 2 and e != 3:
            raise ValueError("p = 2 allows only e = 3")
        if p == 3 and e != 4:
            raise ValueError("p = 3 allows only e = 4")
        minus, plus = (ell - 1) % e == 0, (ell + 1) % e == 0
        if minus == plus:
            raise ValueError(f"e = {e} must divide exactly one of ell - 1, ell + 1")
        grd = Fraction(e - 1, e)
        if minus:
            return Fraction((e - 1) * (ell - 1), e * (ell + 1)), grd
        return grd, grd
    if ord_n >= 3:
        raise ValueError("wild level prime out of scope: supply exponents directly")
    raise ValueError("ord_p(N) must be positive")


@dataclass(frozen=True)
class EllContribution:
    d: int | None
    e: int | None
    rd: Fraction
    grd: Fraction


def ell_inertia(ell: int, type_label: str, k: int) -> tuple[int, int]:
    """(d, e) with d = gcd(k - 1, ell -+ 1) and e = (ell -+ 1)/d; minus for 1T, plus for 2T."""
    if type_label == "1T":
        m = ell - 1
    elif type_label == "2T":
        m = ell + 1
    else:
        raise ValueError(f"no tame inertia data for type {type_label!r}")
    d = math.gcd(k - 1, m)
    return d, m // d


def ell_contribution(ell: int, type_label: str, k: int | None = None) -> EllContribution:
    """Exponents of ell in the root discriminant and Galois root discriminant."""
    if type_label == "2W":
        return EllContribution(
            None, None, Fraction(ell, ell + 1), 1 + Fraction(ell - 2, ell * (ell - 1))
        )
    if k is None or k % 2 or not 2 <= k <= ell + 1:
        raise ValueError("an even weight 2 <= k <= ell + 1 is required")
    d, e = ell_inertia(ell, type_label, k)
    m = ell - 1 if type_label == "1T" else ell + 1
    return EllContribution(d, e, Fraction((e - 1) * m, e * (ell + 1)), Fraction(e - 1, e))


def ramanujan_profile(ell: int) -> tuple[float, float]:
    """(delta, Delta) for the projective mod-ell field of the weight 12 level 1 cusp form."""
    if ell <= 7:
        raise ValueError("formula applies for ell > 7")
    rd = Fraction(ell + 10, ell + 1)
    grd = Fraction(ell * ell + 10 * ell - 12, ell * ell - ell)
    return ell ** float(rd), ell ** float(grd)


@dataclass(frozen=True)
class TameRow:
    ell: int
    level: int
    delta: float
    big_delta: float
    rd_profile: RamProfile
    grd_profile: RamProfile


def tame_row(
    ell: int, type_label: str, k: int, level_primes: Iterable[tuple[int, int, int | None]]
) -> TameRow:
    """Assemble both profiles from level primes (p, ord_p(N), e) and the ell part."""
    rd, grd = [], []
    level = 1
    for p, ord_n, e in level_primes:
        a, b = level_prime_contribution(p, ord_n, ell, e)
        rd.append((p, a))
        grd.append((p, b))
        level *= p**ord_n
    c = ell_contribution(ell, type_label, k)
    rd.append((ell, c.rd))
    grd.append((ell, c.grd))
    rp, gp = RamProfile.of(rd), RamProfile.of(grd)
    return TameRow(ell, level, evaluate(rp), evaluate(gp), rp, gp)
