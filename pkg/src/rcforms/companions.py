"""Verifying companion pairs of newforms mod ell, and matching them to fields.

Two newforms g = sum a_n q^n (weight k) and h = sum b_n q^n (weight k')
of the same level N are companions mod ell when k + k' = ell - 1 + 2t and

    c_n = n^t a_n - n^k b_n = 0 (mod ell)   for every n.

The difference series is the reduction of a form of weight
kappa = k' + (k + t)(ell + 1), so it vanishes once it vanishes up to the
Sturm bound ceil(kappa * [SL_2(Z) : Gamma_0(N)] / 12).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .intpoly import (
    DEFAULT_SEED,
    IntPolynomial,
    discriminant,
    factorize,
    frobenius_partition,
    is_prime,
    primes_up_to,
)
from .newforms import NewformData
from .pgl2 import MatchResult, match

MIN_ELL = 11

# Pairs passing the congruence whose projective image is not all of
# PGL_2(F_ell); both have S_4 image.
KNOWN_DEGENERATE = frozenset({(11, 8), (19, 4)})


class ParameterError(ValueError):
    """Inputs that do not form a valid (ell, N, k, k', t) triple."""


@dataclass(frozen=True)
class TripleParams:
    ell: int
    level: int
    k: int
    kprime: int
    t: int
    min_ell: int = field(default=MIN_ELL, compare=False)

    def __post_init__(self) -> None:
        ell, k, k2, t = self.ell, self.k, self.kprime, self.t
        if ell < self.min_ell or ell % 2 == 0 or not is_prime(ell):
            raise ParameterError(f"ell = {ell} must be an odd prime >= {self.min_ell}")
        if self.level < 1 or self.level % ell == 0:
            raise ParameterError(f"level {self.level} must be positive and prime to ell")
        if t not in (1, 2):
            raise ParameterError("t must be 1 or 2")
        if k % 2 or k2 % 2 or not 2 <= k <= k2 <= ell + 1:
            raise ParameterError(
                f"weights must be even with 2 <= k <= k' <= ell + 1, got ({k}, {k2})"
            )
        if k + k2 != ell - 1 + 2 * t:
            raise ParameterError(
                f"weight relation fails: k + k' = {k + k2}, ell - 1 + 2t = {ell - 1 + 2 * t}"
            )


def sigma1(n: int) -> int:
    """Index of Gamma_0(N) in SL_2(Z): prod over p^e || N of p^e + p^(e-1)."""
    out = 1
    for p, e in factorize(n).items():
        out *= p**e + p ** (e - 1)
    return out


def sturm_bound(params: TripleParams) -> tuple[int, int]:
    """Return (kappa, S) with S = ceil(kappa * sigma1(N) / 12)."""
    kappa = params.kprime + (params.k + params.t) * (params.ell + 1)
    return kappa, -(-kappa * sigma1(params.level) // 12)


@dataclass(frozen=True)
class CompanionReport:
    params: TripleParams
    g_label: str
    h_label: str
    kappa: int
    sturm_bound: int
    verdict: str  # "verified" | "failed" | "insufficient_precision"
    type_label: str
    failed_at: int | None = None
    sides: tuple[int, int] | None = None
    needed: int | None = None
    have: int | None = None
    s_spectrum: frozenset[int] = frozenset()
    flags: tuple[str, ...] = ()

    @property
    def verified(self) -> bool:
        return self.verdict == "verified"

    def to_json(self) -> dict:
        p = self.params
        out = {
            "ell": p.ell,
            "level": p.level,
            "k": p.k,
            "kprime": p.kprime,
            "t": p.t,
            "g": self.g_label,
            "h": self.h_label,
            "kappa": self.kappa,
            "sturm_bound": self.sturm_bound,
            "verdict": self.verdict,
            "type": self.type_label,
        }
        if self.verdict == "failed":
            out["failed_at"] = self.failed_at
            out["sides"] = list(self.sides or ())
        if self.verdict == "insufficient_precision":
            out["needed"] = self.needed
            out["have"] = self.have
        if self.s_spectrum:
            out["s_spectrum"] = sorted(self.s_spectrum)
        if self.flags:
            out["flags"] = list(self.flags)
        return out


def classify_type(params: TripleParams, a_ell: int | None = None) -> str:
    """1T, 2T or 2W from the weights, using a_ell to separate 2T from 2W at (2, ell + 1)."""
    if params.t == 1:
        return "1T"
    if (params.k, params.kprime) != (2, params.ell + 1):
        return "2T"
    if a_ell is None:
        return "unknown"
    return "2T" if a_ell % params.ell == 0 else "2W"


def _a_ell(form: NewformData, ell: int) -> int | None:
    return form.an[ell - 1] if ell <= len(form.an) else None


def _s_spectrum(form: NewformData, params: TripleParams, limit: int) -> frozenset[int]:
    ell, n = params.ell, params.level
    out = set()
    for p in primes_up_to(min(limit, form.precision)):
        if p == ell or n % p == 0:
            continue
        out.add(form.an[p - 1] ** 2 * pow(pow(p, form.weight - 1, ell), -1, ell) % ell)
    return frozenset(out)


def verify_companion(g: NewformData, h: NewformData, ell: int, t: int) -> CompanionReport:
    """Check n^t a_n = n^k b_n (mod ell) for 1 <= n <= S.

    Stops at the first nonzero c_n.  A failure inside the stored range is
    reported as ``failed`` even when the forms are shorter than S; otherwise
    short forms give ``insufficient_precision``.
    """
    if g.level != h.level:
        raise ParameterError(f"levels differ: {g.level} vs {h.level}")
    params = TripleParams(ell, g.level, g.weight, h.weight, t)
    kappa, bound = sturm_bound(params)
    k = g.weight
    have = min(len(g.an), len(h.an))
    flags = []
    if (ell, g.level) in KNOWN_DEGENERATE:
        flags.append("known-degenerate-image")
    spectrum = _s_spectrum(g, params, bound)
    if len(spectrum) < ell:
        flags.append("incomplete-s-spectrum")
    common = dict(
        params=params,
        g_label=g.label,
        h_label=h.label,
        kappa=kappa,
        sturm_bound=bound,
        type_label=classify_type(params, _a_ell(g, ell)),
        s_spectrum=spectrum,
        flags=tuple(flags),
    )
    for n in range(1, min(bound, have) + 1):
        lhs = pow(n, t, ell) * g.an[n - 1] % ell
        rhs = pow(n, k, ell) * h.an[n - 1] % ell
        if lhs != rhs:
            return CompanionReport(verdict="failed", failed_at=n, sides=(lhs, rhs), **common)
    if have < bound:
        return CompanionReport(verdict="insufficient_precision", needed=bound, have=have, **common)
    return CompanionReport(verdict="verified", **common)


def _pairs(forms: Sequence[NewformData], ell: int):
    by_level: dict[int, list[NewformData]] = {}
    for f in forms:
        by_level.setdefault(f.level, []).append(f)
    for level in sorted(by_level):
        group = by_level[level]
        for t in (1, 2):
            total = ell - 1 + 2 * t
            for i, g in enumerate(group):
                for j, h in enumerate(group):
                    if i != j and g.weight <= h.weight and g.weight + h.weight == total:
                        yield g, h, t


def scan_corpus(
    forms: Iterable[NewformData], ell: int, workers: int | None = None
) -> list[CompanionReport]:
    """Verify every weight-compatible pair at each level; skip invalid parameter sets."""
    forms = list(forms)
    for f in forms:
        if f.level % ell == 0:
            raise ParameterError(f"{f.label}: level {f.level} is divisible by ell = {ell}")

    def run(job):
        g, h, t = job
        try:
            return verify_companion(g, h, ell, t)
        except ParameterError:
            return None

    jobs = list(_pairs(forms, ell))
    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(j) for j in jobs]
    reports = [r for r in results if r is not None]
    reports.sort(
        key=lambda r: (r.params.level, r.params.k, r.params.kprime, r.params.t, r.g_label, r.h_label)
    )
    return reports


@dataclass(frozen=True)
class PrimeMatch:
    p: int
    partition: str
    a_p: int
    b_p: int
    result: MatchResult


@dataclass(frozen=True)
class FieldMatchReport:
    ell: int
    level: int
    pmax: int
    primes: tuple[PrimeMatch, ...]
    skipped: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return all(m.result.ok for m in self.primes)

    @property
    def first_mismatch(self) -> PrimeMatch | None:
        return next((m for m in self.primes if not m.result.ok), None)

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "level": self.level,
            "pmax": self.pmax,
            "ok": self.ok,
            "skipped": list(self.skipped),
            "primes": [
                {
                    "p": m.p,
                    "partition": m.partition,
                    "a_p": m.a_p,
                    "b_p": m.b_p,
                    "s_p": m.result.s,
                    "s_prime_p": m.result.s_prime,
                    "o_p": m.result.o,
                    "O_p": m.result.big_o,
                    "ok": m.result.ok,
                    "reason": m.result.reason,
                }
                for m in self.primes
            ],
        }


def match_field_to_pair(
    f: IntPolynomial,
    g: NewformData,
    h: NewformData,
    ell: int,
    pmax: int,
    seed: int | None = DEFAULT_SEED,
) -> FieldMatchReport:
    """Compare Frobenius partitions of f with (g, h) at every good prime p <= pmax."""
    if f.degree != ell + 1:
        raise ParameterError(f"polynomial has degree {f.degree}, expected ell + 1 = {ell + 1}")
    if g.level != h.level:
        raise ParameterError("forms must share a level")
    if pmax < 2:
        raise ParameterError("pmax must be at least 2")
    bad = ell * g.level * discriminant(f) * f.leading
    results = []
    skipped = []
    for p in primes_up_to(pmax):
        if bad % p == 0:
            skipped.append(p)
            continue
        lam = frobenius_partition(f, p, seed)
        res = match(lam, p, g.weight, g.a(p), h.weight, h.a(p), ell)
        results.append(PrimeMatch(p, lam.notation(), g.a(p), h.a(p), res))
    return FieldMatchReport(ell, g.level, pmax, tuple(results), tuple(skipped))

