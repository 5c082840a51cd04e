"""Command-line front end.

Exit codes: 0 ok, 1 negative verdict (failed congruence, mismatch,
insufficient precision), 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from . import curves, intpoly, newforms, pgl2, ramify, tables
from .companions import (
    TripleParams,
    match_field_to_pair,
    scan_corpus,
    sigma1,
    sturm_bound,
    verify_companion,
)
from .intpoly import DEFAULT_SEED


@dataclass
class RunReport:
    command: str
    inputs: dict[str, Any]
    result: Any = None
    status: str = "ok"
    message: str | None = None

    def to_json(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v is not None or k == "result"}

    @classmethod
    def from_json(cls, obj: dict) -> RunReport:
        return cls(obj["command"], obj["inputs"], obj.get("result"), obj["status"], obj.get("message"))


@dataclass
class Outcome:
    result: Any
    text: str
    negative: bool = False


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _load_form(path: str, precision: int | None) -> newforms.NewformData:
    form = newforms.read_newform(tables.resolve_input(path))
    if precision is not None and precision < form.precision:
        form = newforms.NewformData(
            form.label, form.level, form.weight, form.an[:precision], form.al
        )
    return form


def _load_poly(path: str) -> intpoly.IntPolynomial:
    return intpoly.read_polynomial(tables.resolve_input(path))


# -- handlers ---------------------------------------------------------------


def cmd_partition(a) -> Outcome:
    f = _load_poly(a.poly)
    primes = [a.p] if a.p else intpoly.primes_up_to(a.pmax)
    rows, lines = [], []
    for p in primes:
        if not intpoly.is_good_prime(f, p):
            if a.p:
                raise intpoly.BadPrimeError(f"{p} is not a good prime for this polynomial")
            continue
        lam = intpoly.frobenius_partition(f, p, a.seed)
        par = intpoly.partition_parity(lam)
        rows.append({"p": p, "partition": lam.notation(), "parity": par})
        lines.append(f"p = {p:>5}  lambda_p = {lam.notation():<12} d_p = {'+' if par > 0 else '-'}")
    return Outcome(rows, "\n".join(lines))


def _classtable_payload(ell: int) -> tuple[list[dict], str]:
    rows = pgl2.class_table(ell)
    out, lines = [], [f"{'partition':<12} {'d_p':>3} {'mass':>10} {'order':>5}  s_p"]
    for r in rows:
        out.append(
            {
                "partition": r.partition.notation(),
                "parity": r.parity,
                "mass": _frac(r.mass),
                "order": r.order,
                "s": sorted(r.s_values),
                "kind": r.kind,
            }
        )
        s = ",".join(str(v) for v in sorted(r.s_values))
        lines.append(
            f"{r.partition.notation():<12} {'+' if r.parity > 0 else '-':>3} "
            f"{_frac(r.mass):>10} {r.order:>5}  {s}"
        )
    return out, "\n".join(lines)


def cmd_classtable(a) -> Outcome:
    payload, text = _classtable_payload(a.ell)
    return Outcome(payload, text)


def _report_text(r) -> str:
    p = r.params
    head = (
        f"ell = {p.ell}, N = {p.level}, (k, k') = ({p.k}, {p.kprime}), t = {p.t}, "
        f"type {r.type_label}\nkappa = {r.kappa}, Sturm bound S = {r.sturm_bound}\n"
    )
    if r.verdict == "verified":
        tail = f"verified: n^t a_n = n^k b_n mod {p.ell} for all n <= {r.sturm_bound}"
    elif r.verdict == "failed":
        tail = f"failed at n = {r.failed_at}: sides {r.sides[0]} vs {r.sides[1]} mod {p.ell}"
    else:
        tail = f"insufficient precision: need {r.needed} coefficients, have {r.have}"
    if r.flags:
        tail += "\nflags: " + ", ".join(r.flags)
    return head + tail


def cmd_verify(a) -> Outcome:
    g = _load_form(a.g, a.precision)
    h = _load_form(a.h, a.precision)
    r = verify_companion(g, h, a.ell, a.t)
    return Outcome(r.to_json(), _report_text(r), negative=not r.verified)


def cmd_scan(a) -> Outcome:
    d = Path(a.dir)
    files = sorted(d.glob("*.json"))
    forms = [_load_form(str(f), a.precision) for f in files]
    forms = [f for f in forms if f.level % a.ell]
    reports = scan_corpus(forms, a.ell, workers=a.workers)
    text = "\n\n".join(f"{r.g_label} ~ {r.h_label}\n{_report_text(r)}" for r in reports)
    return Outcome([r.to_json() for r in reports], text or "no candidate pairs")


def cmd_sturm(a) -> Outcome:
    params = TripleParams(a.ell, a.level, a.k, a.kprime, a.t)
    kappa, s = sturm_bound(params)
    res = {"kappa": kappa, "sigma1": sigma1(a.level), "sturm_bound": s}
    return Outcome(res, f"kappa = {kappa}, sigma_1(N) = {res['sigma1']}, S = {s}")


def cmd_match(a) -> Outcome:
    f = _load_poly(a.poly)
    g = _load_form(a.g, a.precision)
    h = _load_form(a.h, a.precision)
    rep = match_field_to_pair(f, g, h, a.ell, a.pmax, a.seed)
    lines = [
        f"p = {m.p:>3}  lambda_p = {m.partition:<10} s_p = {m.result.s:>2}  "
        f"{'ok' if m.result.ok else m.result.reason}"
        for m in rep.primes
    ]
    lines.append(
        f"{'match' if rep.ok else 'MISMATCH'} at {len(rep.primes)} good primes <= {a.pmax}"
        f" (skipped {rep.skipped})"
    )
    return Outcome(rep.to_json(), "\n".join(lines), negative=not rep.ok)


def _parse_tame(text: str) -> list[tuple[int, int, int | None]]:
    out = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        bits = [int(x) for x in item.split(":")]
        if len(bits) == 2:
            out.append((bits[0], bits[1], None))
        elif len(bits) == 3:
            out.append((bits[0], bits[1], bits[2]))
        else:
            raise ValueError(f"tame entry {item!r} must be p:ord or p:ord:e")
    return out


def cmd_rootdisc(a) -> Outcome:
    if a.profile:
        prof = ramify.RamProfile.parse(a.profile)
        v = ramify.evaluate(prof)
        res = {"profile": [[p, _frac(e)] for p, e in prof.contributions], "value": v}
        return Outcome(res, f"{prof} = {v:.2f}")
    if a.disc is not None:
        d = tables.parse_factored(a.disc)
        v = ramify.root_disc_from_D(d, a.degree)
        return Outcome({"D": str(d), "degree": a.degree, "delta": v}, f"delta = {v:.2f}")
    if a.ell is None or a.ell_type is None:
        raise ValueError("rootdisc needs --profile, --disc/--degree, or --ell-type with --ell")
    row = ramify.tame_row(a.ell, a.ell_type, a.k, _parse_tame(a.tame or ""))
    res = {
        "delta": row.delta,
        "Delta": row.big_delta,
        "delta_profile": [[p, _frac(e)] for p, e in row.rd_profile.contributions],
        "Delta_profile": [[p, _frac(e)] for p, e in row.grd_profile.contributions],
    }
    text = (
        f"delta = {row.rd_profile} = {row.delta:.2f}\n"
        f"Delta = {row.grd_profile} = {row.big_delta:.2f}"
    )
    return Outcome(res, text)


def cmd_ramanujan(a) -> Outcome:
    d, big = ramify.ramanujan_profile(a.ell)
    return Outcome({"delta": d, "Delta": big}, f"delta = {d:.2f}, Delta = {big:.2f}")


def cmd_atkin(a) -> Outcome:
    f = curves.atkin_lift(curves.ShortWeierstrass(a.a, a.b))
    if a.contract:
        f = intpoly.even_contraction(f)
    return Outcome({"coeffs": [str(c) for c in f.descending()]}, intpoly.format_polynomial(f).rstrip())


def cmd_ap(a) -> Outcome:
    v = curves.ap_naive(curves.ShortWeierstrass(a.a, a.b), a.p)
    return Outcome({"a_p": v}, f"a_{a.p} = {v}")


def cmd_table1(a) -> Outcome:
    polys = [_load_poly(p) for p in a.poly]
    t = tables.table1(polys, a.ell, a.pmax, a.seed)
    payload = tables.table1_json(t)
    cols = [f"K{i + 1}" for i in range(len(polys))]
    lines = [f"{'partition':<12} {'d_p':>3} {'mass':>8}  " + "  ".join(f"{c:<24}" for c in cols) + "  s_p"]
    for row in payload["rows"]:
        plist = "  ".join(f"{', '.join(map(str, ps)):<24}" for ps in row["primes"])
        lines.append(
            f"{row['partition']:<12} {'+' if row['parity'] > 0 else '-':>3} {row['mass']:>8}  "
            f"{plist}  {','.join(map(str, row['s']))}"
        )
    for c, bad in zip(cols, payload["rejected"]):
        lines.append(f"{c}: primes < {a.pmax} rejected (divide ell * disc * lc): {bad}")
    return Outcome(payload, "\n".join(lines))


def cmd_table4(a) -> Outcome:
    rows = tables.table4()
    payload, lines = [], []
    for r in rows:
        payload.append(
            {
                "block": r.block,
                "ell": r.ell,
                "level": r.level,
                "delta": r.delta,
                "Delta": r.big_delta,
                "expected_delta": r.expected_delta,
                "expected_Delta": r.expected_big_delta,
            }
        )
        lines.append(
            f"{r.block:<9} ell = {r.ell:>2} N = {r.level:>2}  delta = {r.delta:6.2f} "
            f"(expected {r.expected_delta:6.2f})  Delta = {r.big_delta:6.2f} (expected {r.expected_big_delta:6.2f})"
        )
    return Outcome(payload, "\n".join(lines))


def cmd_forms(a) -> Outcome:
    build = {
        "delta2": newforms.build_delta2_24,
        "g1": newforms.build_g1,
        "h1": newforms.build_h1,
    }[a.which]
    form = build(a.precision or 300)
    if a.out:
        newforms.write_newform(form, a.out)
    head = " ".join(str(c) for c in form.an[:12])
    return Outcome(newforms.newform_to_json(form), f"{form.label}: {head} ...")


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--precision", type=int, default=argparse.SUPPRESS)

    ap = argparse.ArgumentParser(prog="rcforms", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="emit a JSON report")
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for mod-p splitting")
    ap.add_argument("--precision", type=int, default=None, help="number of coefficients to use")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(handler=fn)
        return p

    p = add("partition", cmd_partition, "Frobenius partitions of a polynomial")
    p.add_argument("--poly", required=True)
    p.add_argument("--p", type=int)
    p.add_argument("--pmax", type=int, default=100)

    p = add("classtable", cmd_classtable, "partition classes of PGL_2(F_ell)")
    p.add_argument("--ell", type=int, required=True)

    p = add("verify", cmd_verify, "check a companion congruence up to the Sturm bound")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--t", type=int, required=True, choices=(1, 2))
    p.add_argument("g")
    p.add_argument("h")

    p = add("scan", cmd_scan, "verify all weight-compatible pairs in a directory of forms")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("dir")

    p = add("sturm", cmd_sturm, "Sturm bound for a companion triple")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--kprime", type=int, required=True)
    p.add_argument("--t", type=int, required=True)

    p = add("match", cmd_match, "match a field's Frobenius partitions against a pair of forms")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--pmax", type=int, default=100)

    p = add("rootdisc", cmd_rootdisc, "root discriminants from ramification data")
    p.add_argument("--profile", help='exponent profile, e.g. "2:7/6,3:10/11,11:9/10"')
    p.add_argument("--disc", help="field discriminant, e.g. -2^14*3^10*11^9")
    p.add_argument("--degree", type=int)
    p.add_argument("--tame", help='level primes "p:ord_p(N)[:e],..."')
    p.add_argument("--ell-type", choices=("1T", "2T", "2W"))
    p.add_argument("--ell", type=int)
    p.add_argument("--k", type=int)

    p = add("ramanujan", cmd_ramanujan, "root discriminants of the weight 12 level 1 fields")
    p.add_argument("--ell", type=int, required=True)

    p = add("atkin", cmd_atkin, "degree 24 lift polynomial for y^2 = x^3 + a x + b")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--contract", action="store_true")

    p = add("ap", cmd_ap, "trace of Frobenius by point counting")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--p", type=int, required=True)

    p = add("table1", cmd_table1, "Frobenius partition table for degree ell + 1 polynomials")
    p.add_argument("--ell", type=int, default=11)
    p.add_argument("--poly", action="append", required=True)
    p.add_argument("--pmax", type=int, default=100)

    add("table4", cmd_table4, "root discriminant table")

    p = add("forms", cmd_forms, "build an explicit level 24 newform")
    p.add_argument("which", choices=("delta2", "g1", "h1"))
    p.add_argument("--out")
    return ap


def dispatch(argv: list[str] | None = None) -> tuple[RunReport, int, str]:
    """Run one command; return the report, exit code and text rendering."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors (code 2) and --help (code 0)
        code = exc.code if isinstance(exc.code, int) else 2
        status = "ok" if code == 0 else "error"
        return RunReport("", {"argv": list(argv or [])}, None, status, "usage"), code, ""
    inputs = {k: v for k, v in vars(args).items() if k not in ("handler",)}
    try:
        out = args.handler(args)
    except (ValueError, ArithmeticError, FileNotFoundError, IndexError) as exc:
        rep = RunReport(args.command, inputs, None, "error", str(exc))
        return rep, 2, f"error: {exc}"
    rep = RunReport(args.command, inputs, out.result, "ok")
    return rep, (1 if out.negative else 0), out.text


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    rep, code, text = dispatch(argv)
    if not rep.command:
        return code
    if rep.inputs.get("json"):
        print(json.dumps(rep.to_json(), indent=2))
    else:
        print(text, file=sys.stderr if rep.status == "error" else sys.stdout)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
