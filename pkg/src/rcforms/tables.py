"""Recomputing the two summary tables: Frobenius partitions and root discriminants."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .intpoly import (
    DEFAULT_SEED,
    BadPrimeError,
    IntPolynomial,
    Partition,
    frobenius_partition,
    is_good_prime,
    primes_up_to,
    read_polynomial,
)
from .pgl2 import ClassRow, class_table
from .ramify import RamProfile, evaluate, ramanujan_profile, root_disc_from_D, tame_row


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("rcforms") / "fixtures" / name))


def resolve_input(path: str) -> Path:
    """A path as given, falling back to a bundled fixture of the same file name."""
    p = Path(path)
    if p.exists():
        return p
    bundled = fixture_path(p.name)
    if bundled.exists():
        return bundled
    raise FileNotFoundError(path)


@dataclass(frozen=True)
class PartitionTable:
    ell: int
    rows: tuple[ClassRow, ...]
    primes: tuple[dict[Partition, list[int]], ...]  # one dict per polynomial
    rejected: tuple[list[int], ...]


def table1(
    polys: list[IntPolynomial], ell: int, pmax: int, seed: int | None = DEFAULT_SEED
) -> PartitionTable:
    rows = tuple(class_table(ell))
    known = {r.partition for r in rows}
    per_poly, rejected = [], []
    for f in polys:
        if f.degree != ell + 1:
            raise ValueError(f"polynomial of degree {f.degree}, expected {ell + 1}")
        hits: dict[Partition, list[int]] = {r.partition: [] for r in rows}
        bad = []
        for p in primes_up_to(pmax - 1):
            if p == ell or not is_good_prime(f, p):
                bad.append(p)
                continue
            lam = frobenius_partition(f, p, seed)
            if lam not in known:
                raise BadPrimeError(f"partition {lam} at p = {p} is not a PGL_2(F_{ell}) cycle type")
            hits[lam].append(p)
        per_poly.append(hits)
        rejected.append(bad)
    return PartitionTable(ell, rows, tuple(per_poly), tuple(rejected))


def table1_json(t: PartitionTable) -> dict:
    return {
        "ell": t.ell,
        "rows": [
            {
                "partition": r.partition.notation(),
                "parity": r.parity,
                "mass": f"{r.mass.numerator}/{r.mass.denominator}",
                "order": r.order,
                "s": sorted(r.s_values),
                "primes": [hits[r.partition] for hits in t.primes],
            }
            for r in t.rows
        ],
        "rejected": [list(b) for b in t.rejected],
    }


_POW = re.compile(r"^\s*([+-]?)\s*(.*)$")


def parse_factored(text: str) -> int:
    """Evaluate a signed product like ``-2^14*3^10*11^9``."""
    m = _POW.match(text)
    sign, body = m.group(1), m.group(2)
    value = 1
    for factor in body.split("*"):
        base, _, exp = factor.strip().partition("^")
        value *= int(base) ** (int(exp) if exp else 1)
    return -value if sign == "-" else value


@dataclass(frozen=True)
class RootDiscEntry:
    block: str  # "tame" or "ramanujan"
    ell: int
    level: int
    delta: float
    big_delta: float
    expected_delta: float
    expected_big_delta: float
    how: str


def table4() -> list[RootDiscEntry]:
    data = json.loads(fixture_path("table4.json").read_text())
    out = []
    for row in data["tame"]:
        ell = row["ell"]
        if "D" in row:
            delta = root_disc_from_D(parse_factored(row["D"]), row["degree"])
            prof = RamProfile.parse(row["grd_profile"])
            big = evaluate(prof)
            how = f"|D|^(1/{row['degree']}), D = {row['D']}; Delta = {prof}"
        else:
            r = tame_row(ell, row["type"], row["k"], [(p, o, None) for p, o in row["level_primes"]])
            delta, big = r.delta, r.big_delta
            how = f"type {row['type']}, k = {row['k']}: delta = {r.rd_profile}; Delta = {r.grd_profile}"
        out.append(
            RootDiscEntry("tame", ell, row["level"], delta, big, row["delta"], row["Delta"], how)
        )
    for row in data["ramanujan"]:
        ell = row["ell"]
        delta, big = ramanujan_profile(ell)
        out.append(
            RootDiscEntry(
                "ramanujan", ell, 1, delta, big, row["delta"], row["Delta"],
                f"{ell}^((l+10)/(l+1)), {ell}^((l^2+10l-12)/(l^2-l))",
            )
        )
    return out


def load_fixture_polynomial(name: str) -> IntPolynomial:
    return read_polynomial(fixture_path(name))
