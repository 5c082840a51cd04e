"""Newform records, the explicit level-24 forms, and the JSON corpus format.

File format (one JSON object per file)::

    {"label": "24.4.a", "level": 24, "weight": 4, "al": {"8": -1, "3": -1},
     "an": ["1", "0", "3", ...]}

``an[i]`` is a_(i+1) as a decimal string.  ``al`` is optional.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .pgl2 import normalized_square_value
from .qseries import QSeries, eta_product, exact_div_scalar, theta_hex


class NewformFormatError(ValueError):
    pass


class InsufficientPrecisionError(ValueError):
    pass


@dataclass(frozen=True)
class NewformData:
    label: str
    level: int
    weight: int
    an: tuple[int, ...]
    al: Mapping[int, int] | None = field(default=None, compare=True, hash=False)

    def __post_init__(self) -> None:
        if self.level < 1:
            raise ValueError("level must be positive")
        if self.weight < 1:
            raise ValueError("weight must be positive")
        if not self.an or self.an[0] != 1:
            raise ValueError("newforms are normalized: a_1 must be 1")

    @property
    def precision(self) -> int:
        """Largest n with a_n stored."""
        return len(self.an)

    def a(self, n: int) -> int:
        if n < 1:
            raise IndexError("coefficients are indexed from a_1")
        if n > len(self.an):
            raise InsufficientPrecisionError(
                f"{self.label}: a_{n} requested, only {len(self.an)} coefficients stored"
            )
        return self.an[n - 1]

    def qseries(self) -> QSeries:
        return QSeries.from_list((0,) + self.an)

    @classmethod
    def from_qseries(
        cls, label: str, level: int, weight: int, f: QSeries, al: Mapping[int, int] | None = None
    ) -> NewformData:
        return cls(label, level, weight, f.coeffs[1:], dict(al) if al else None)


def normalized_square(form: NewformData, p: int, ell: int) -> int:
    """s_p = a_p^2 / p^(k-1) mod ell."""
    if p % ell == 0:
        raise ValueError("p must differ from ell")
    return normalized_square_value(p, form.weight, form.a(p), ell)


# -- level 24 ---------------------------------------------------------------


def _thetas(precision: int) -> dict[int, QSeries]:
    return {t: theta_hex(t, precision) for t in (1, 2, 4, 8)}


def delta2_24_series(precision: int) -> QSeries:
    """Weight 2 newform of level 24, checked against its eta-product expression."""
    th = _thetas(precision)
    via_theta = exact_div_scalar((th[4] - th[1]) * (th[2] - 4 * th[8]), 18)
    via_eta = eta_product([2, 4, 6, 12], precision)
    if via_theta != via_eta:
        n = next(i for i in range(precision + 1) if via_theta[i] != via_eta[i])
        raise ArithmeticError(f"theta and eta expressions disagree at q^{n}")
    return via_eta


def build_delta2_24(precision: int) -> NewformData:
    return NewformData.from_qseries(
        "24.2.a", 24, 2, delta2_24_series(precision), al={8: -1, 3: 1}
    )


def build_g1(precision: int) -> NewformData:
    """Weight 4, level 24: (Theta_2^2 + 2 Theta_4^2) / 3 times the weight 2 form."""
    th = _thetas(precision)
    d2 = delta2_24_series(precision)
    t2sq, t4sq = th[2] * th[2], th[4] * th[4]
    g = exact_div_scalar((t2sq + 2 * t4sq) * d2, 3)
    return NewformData.from_qseries("24.4.a", 24, 4, g, al={8: -1, 3: -1})


def build_h1(precision: int) -> NewformData:
    """Weight 8, level 24."""
    th = _thetas(precision)
    d2 = delta2_24_series(precision)
    t2sq, t4sq = th[2] * th[2], th[4] * th[4]
    quartic = 7 * (t2sq * t2sq) - 44 * (t2sq * t4sq) + 28 * (t4sq * t4sq)
    h = exact_div_scalar((t2sq - 2 * t4sq) * quartic * d2, 9)
    return NewformData.from_qseries("24.8.a", 24, 8, h, al={8: 1, 3: -1})


# -- JSON -------------------------------------------------------------------


def newform_to_json(form: NewformData) -> dict:
    obj: dict = {"label": form.label, "level": form.level, "weight": form.weight}
    if form.al is not None:
        obj["al"] = {str(q): int(e) for q, e in sorted(form.al.items())}
    obj["an"] = [str(a) for a in form.an]
    return obj


def newform_from_json(obj: object, source: str = "<json>") -> NewformData:
    def fail(msg: str) -> NewformFormatError:
        return NewformFormatError(f"{source}: {msg}")

    if not isinstance(obj, dict):
        raise fail("top level must be an object")
    for key, typ in (("label", str), ("level", int), ("weight", int), ("an", list)):
        if key not in obj:
            raise fail(f"missing field '{key}'")
        if not isinstance(obj[key], typ) or isinstance(obj[key], bool):
            raise fail(f"field '{key}' must be {typ.__name__}")
    an = []
    for i, s in enumerate(obj["an"]):
        if isinstance(s, bool) or not isinstance(s, (str, int)):
            raise fail(f"an[{i}] must be a decimal string")
        try:
            an.append(int(s))
        except ValueError:
            raise fail(f"an[{i}] = {s!r} is not an integer") from None
    if not an or an[0] != 1:
        raise fail("an[0] (a_1) must be 1")
    al = None
    if "al" in obj and obj["al"] is not None:
        if not isinstance(obj["al"], dict):
            raise fail("field 'al' must be an object")
        al = {}
        for q, e in obj["al"].items():
            if e not in (1, -1) or isinstance(e, bool):
                raise fail(f"al[{q!r}] must be +1 or -1")
            try:
                al[int(q)] = e
            except ValueError:
                raise fail(f"al key {q!r} is not an integer") from None
    try:
        return NewformData(obj["label"], obj["level"], obj["weight"], tuple(an), al)
    except ValueError as exc:
        raise fail(str(exc)) from None


def dumps_newform(form: NewformData) -> str:
    return json.dumps(newform_to_json(form)) + "\n"


def loads_newform(text: str, source: str = "<json>") -> NewformData:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise NewformFormatError(
            f"{source}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    return newform_from_json(obj, source)


def write_newform(form: NewformData, path: str | Path) -> None:
    Path(path).write_text(dumps_newform(form))


def read_newform(path: str | Path) -> NewformData:
    return loads_newform(Path(path).read_text(), str(path))
