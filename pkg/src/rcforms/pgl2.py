"""PGL_2(F_ell): projective orders, cycle types on P^1, and the class table.

The class table groups the ell^3 - ell elements of PGL_2(F_ell) by their
cycle type on the ell + 1 points of the projective line, which is what a
Frobenius partition of a degree ell + 1 field sees.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .intpoly import Partition, partition_parity

MAX_TABLE_ELL = 101


@dataclass(frozen=True)
class Mat2:
    """[[a, b], [c, d]] over F_ell, invertible."""

    a: int
    b: int
    c: int
    d: int
    ell: int

    def __post_init__(self) -> None:
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % self.ell)
        if self.det == 0:
            raise ValueError("singular matrix")

    @property
    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.ell

    @property
    def trace(self) -> int:
        return (self.a + self.d) % self.ell

    def __matmul__(self, o: Mat2) -> Mat2:
        p = self.ell
        return Mat2(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
            p,
        )

    def is_scalar(self) -> bool:
        return self.b == 0 and self.c == 0 and self.a == self.d

    def s_value(self) -> int:
        """trace^2 / det, the conjugation (and scaling) invariant."""
        return self.trace**2 * pow(self.det, -1, self.ell) % self.ell


def proj_order(m: Mat2) -> int:
    """Least n >= 1 with m^n scalar."""
    power = m
    n = 1
    while not power.is_scalar():
        power = power @ m
        n += 1
        if n > m.ell + 1:  # pragma: no cover - impossible for invertible input
            raise RuntimeError("projective order exceeds ell + 1")
    return n


def companion_matrix(p: int, k: int, a_p: int, ell: int) -> Mat2:
    if p % ell == 0:
        raise ValueError(f"p = {p} must be prime to ell = {ell}")
    return Mat2(0, -1, pow(p, k - 1, ell), a_p, ell)


def companion_order(p: int, k: int, a_p: int, ell: int) -> int:
    """Projective order of the Frobenius matrix [[0, -1], [p^(k-1), a_p]] mod ell."""
    return proj_order(companion_matrix(p, k, a_p, ell))


def _act(m: Mat2, pt: int) -> int:
    # points 0..ell-1 are (x : 1); ell is infinity (1 : 0)
    p = m.ell
    if pt == p:
        x, y = m.a, m.c
    else:
        x, y = (m.a * pt + m.b) % p, (m.c * pt + m.d) % p
    if y == 0:
        return p
    return x * pow(y, -1, p) % p


def cycle_partition(m: Mat2) -> Partition:
    """Cycle type of m acting on the ell + 1 points of P^1(F_ell)."""
    n = m.ell + 1
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start]:
            continue
        length = 0
        pt = start
        while not seen[pt]:
            seen[pt] = True
            pt = _act(m, pt)
            length += 1
        parts.append(length)
    return Partition.of(parts)


def projective_elements(ell: int):
    """One representative per element of PGL_2(F_ell): first nonzero entry scaled to 1."""
    r = range(ell)
    for b in r:
        for c in r:
            for d in r:
                # a = 1
                if (d - b * c) % ell:
                    yield Mat2(1, b, c, d, ell)
    for c in r:
        for d in r:
            # a = 0, b = 1: det = -c
            if c:
                yield Mat2(0, 1, c, d, ell)
    # a = b = 0 is singular


@dataclass(frozen=True)
class ClassRow:
    partition: Partition
    parity: int
    mass: Fraction
    order: int
    s_values: frozenset[int]
    count: int = field(default=0, compare=False)

    @property
    def kind(self) -> str:
        """Which family of elements the row belongs to."""
        ones = self.partition.parts.count(1)
        if ones == len(self.partition.parts):
            return "identity"
        if ones == 0:
            return "nonsplit torus"
        if ones == 1:
            return "unipotent"
        return "split torus"


_KIND_ORDER = {"nonsplit torus": 0, "split torus": 1, "unipotent": 2, "identity": 3}


def class_table(ell: int) -> list[ClassRow]:
    """Partition classes of PGL_2(F_ell) with exact masses.

    Rows are ordered nonsplit torus, split torus, unipotent, identity; within
    a torus odd permutations come first, then by decreasing order.
    """
    if ell > MAX_TABLE_ELL:
        raise ValueError(f"class_table enumerates ell^3 - ell elements; ell <= {MAX_TABLE_ELL}")
    if ell < 3 or any(ell % q == 0 for q in range(2, math.isqrt(ell) + 1)):
        raise ValueError("ell must be an odd prime")
    counts: dict[Partition, int] = defaultdict(int)
    svals: dict[Partition, set[int]] = defaultdict(set)
    orders: dict[Partition, set[int]] = defaultdict(set)
    total = 0
    for m in projective_elements(ell):
        lam = cycle_partition(m)
        counts[lam] += 1
        svals[lam].add(m.s_value())
        orders[lam].add(proj_order(m))
        total += 1
    assert total == ell**3 - ell
    rows = []
    for lam, n in counts.items():
        (order,) = orders[lam]
        rows.append(
            ClassRow(
                partition=lam,
                parity=partition_parity(lam),
                mass=Fraction(n, total),
                order=order,
                s_values=frozenset(svals[lam]),
                count=n,
            )
        )
    rows.sort(key=lambda r: (_KIND_ORDER[r.kind], r.parity, -r.order))
    return rows


@dataclass(frozen=True)
class MatchResult:
    ok: bool
    reason: str
    s: int
    s_prime: int
    o: int
    big_o: int | None

    def __bool__(self) -> bool:
        return self.ok


def normalized_square_value(p: int, k: int, a_p: int, ell: int) -> int:
    """a_p^2 / p^(k-1) in F_ell."""
    if p % ell == 0:
        raise ValueError("p must be prime to ell")
    return a_p * a_p * pow(pow(p, k - 1, ell), -1, ell) % ell


def match(
    lam: Partition, p: int, k: int, a_p: int, k2: int, b_p: int, ell: int
) -> MatchResult:
    """Does the Frobenius partition at p agree with the two forms' data at p?

    Requires s_p(g) == s_p(h) and lcm(lam) == projective order of the
    Frobenius matrix, or the pair (1, ell).
    """
    if lam.degree != ell + 1:
        raise ValueError(f"partition of {lam.degree}, expected {ell + 1}")
    s = normalized_square_value(p, k, a_p, ell)
    s2 = normalized_square_value(p, k2, b_p, ell)
    o = lam.lcm
    if s != s2:
        return MatchResult(False, f"s-mismatch: s_p = {s} for g but {s2} for h", s, s2, o, None)
    big_o = companion_order(p, k, a_p, ell)
    if o == big_o or (o, big_o) == (1, ell):
        return MatchResult(True, "ok", s, s2, o, big_o)
    return MatchResult(
        False, f"order-mismatch: lcm(lambda_p) = {o}, Frobenius order = {big_o}", s, s2, o, big_o
    )
