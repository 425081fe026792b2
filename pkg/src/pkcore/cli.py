"""Command line frontend.

Subcommands: core, increments, kp, pairsums, waring, divisors,
scan {wieferich|exceptions|note4}, decompose. Every command builds a
Report (schema_version, command, p, k, rows) and renders it as human
text (residues in base-p), jsonl (one self-describing record per row),
or csv. Timing goes to stderr so stdout stays stable.

Config precedence for table_bound/format/jobs/base:
flags > PKCORE_* environment > key=value config file > defaults.
The config file path comes from PKCORE_CONFIG, else ./pkcore.conf.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from . import corefst, generators, pairsums, waring
from .errors import (
    EXIT_BAD_INPUT,
    EXIT_CHECK_FAILED,
    EXIT_INTERNAL,
    EXIT_OK,
    PkcoreError,
)
from .modring import (
    DEFAULT_TABLE_BOUND,
    Residue,
    base_p_encode,
    make_modulus,
)
from .modring import _DIGITS as DIGIT_CHARS
from .primes import primes_in_range

SCHEMA_VERSION = 1

CONFIG_KEYS = ("table_bound", "format", "jobs", "base")
DEFAULTS = {"table_bound": DEFAULT_TABLE_BOUND, "format": "human", "jobs": 1, "base": 2}


@dataclass
class Report:
    command: str
    rows: list[dict]
    p: int | None = None
    k: int | None = None
    schema_version: int = SCHEMA_VERSION
    elapsed_s: float = 0.0
    check_failed: bool = False


# --- config ------------------------------------------------------------


def resolve_config(args: argparse.Namespace) -> dict:
    cfg = dict(DEFAULTS)
    path = os.environ.get("PKCORE_CONFIG") or "pkcore.conf"
    if os.path.exists(path):
        for line in open(path):
            line = line.strip()
            if not line or line.startswith("#") or "=" not in line:
                continue
            key, _, value = line.partition("=")
            key = key.strip()
            if key in CONFIG_KEYS:
                cfg[key] = value.strip()
    for key in CONFIG_KEYS:
        env = os.environ.get(f"PKCORE_{key.upper()}")
        if env is not None:
            cfg[key] = env
    for key in CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            cfg[key] = flag
    cfg["table_bound"] = int(cfg["table_bound"])
    cfg["jobs"] = int(cfg["jobs"])
    cfg["base"] = int(cfg["base"])
    if cfg["format"] not in ("human", "jsonl", "csv"):
        raise PkcoreError(f"unknown format {cfg['format']!r}")
    return cfg


# --- rendering ----------------------------------------------------------

# per command: row fields holding residues (rendered base-p in human output)
RESIDUE_FIELDS = {
    "core": ("core", "increment"),
    "increments": ("value",),
    "decompose": (),
    "waring": (),
    "pairsums": (),
    "divisors": (),
    "kp": (),
    "scan": (),
}
# fields holding lists of residues
RESIDUE_LIST_FIELDS = {"decompose": ("summands",), "waring": ("summands",)}


def _fmt_value(command: str, key: str, value, mod) -> str:
    if mod is not None and key in RESIDUE_FIELDS.get(command, ()):
        return base_p_encode(Residue(value, mod))
    if mod is not None and key in RESIDUE_LIST_FIELDS.get(command, ()) and isinstance(value, (list, tuple)):
        return "+".join(base_p_encode(Residue(v, mod)) for v in value)
    if key == "carry" and mod is not None and mod.p <= 36:
        return DIGIT_CHARS[value]
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    if isinstance(value, dict):
        return " ".join(f"{a}:{b}" for a, b in value.items())
    return str(value)


def render_human(report: Report) -> str:
    mod = None
    if report.p is not None and report.k is not None:
        mod = make_modulus(report.p, report.k, arithmetic_only=True)
    lines = [f"# {report.command}" + (f" p={report.p}" if report.p else "") + (f" k={report.k}" if report.k else "")]
    if not report.rows:
        lines.append("(no rows)")
        return "\n".join(lines) + "\n"
    keys = list(report.rows[0].keys())
    for row in report.rows[1:]:
        for key in row:
            if key not in keys:
                keys.append(key)
    table = [[_fmt_value(report.command, key, row.get(key, ""), mod) for key in keys] for row in report.rows]
    widths = [max(len(key), *(len(r[i]) for r in table)) for i, key in enumerate(keys)]
    lines.append("  ".join(key.ljust(w) for key, w in zip(keys, widths)))
    for r in table:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)))
    return "\n".join(lines) + "\n"


def render_jsonl(report: Report) -> str:
    meta = {
        "schema_version": report.schema_version,
        "command": report.command,
        "p": report.p,
        "k": report.k,
    }
    return "".join(json.dumps(meta | row) + "\n" for row in report.rows) or json.dumps(meta | {"rows": 0}) + "\n"


def parse_jsonl(text: str) -> Report:
    rows = []
    command, p, k = "", None, None
    for line in text.splitlines():
        if not line.strip():
            continue
        rec = json.loads(line)
        command = rec.pop("command", command)
        p = rec.pop("p", p)
        k = rec.pop("k", k)
        rec.pop("schema_version", None)
        if rec != {"rows": 0}:
            rows.append(rec)
    return Report(command=command, rows=rows, p=p, k=k)


def render_csv(report: Report) -> str:
    import csv as _csv
    import io

    if not report.rows:
        return ""
    keys = list(report.rows[0].keys())
    for row in report.rows[1:]:
        for key in row:
            if key not in keys:
                keys.append(key)
    buf = io.StringIO()
    writer = _csv.writer(buf)
    writer.writerow(keys)
    for row in report.rows:
        writer.writerow(
            [json.dumps(v) if isinstance(v, (list, tuple, dict)) else v for v in (row.get(k, "") for k in keys)]
        )
    return buf.getvalue()


def emit(report: Report, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "jsonl":
        out.write(render_jsonl(report))
    elif fmt == "csv":
        out.write(render_csv(report))
    else:
        out.write(render_human(report))


# --- commands -----------------------------------------------------------


def cmd_core(args, cfg) -> Report:
    mod = make_modulus(args.p, args.k, table_bound=cfg["table_bound"])
    table = corefst.build_core_table(mod)
    rows = [
        {
            "n": n,
            "core": table.core[n - 1],
            "carry": table.carries[n - 1],
            "increment": table.increments[n],
        }
        for n in range(1, mod.p)
    ]
    return Report(command="core", rows=rows, p=mod.p, k=mod.k)


def cmd_increments(args, cfg) -> Report:
    make_modulus(args.p, args.k, table_bound=cfg["table_bound"])
    vals = corefst.integer_increments(args.p, args.i, args.k)
    rows = [{"n": n, "i": args.i, "value": v} for n, v in enumerate(vals, start=1)]
    return Report(command="increments", rows=rows, p=args.p, k=args.k)


def cmd_kp(args, cfg) -> Report:
    rows = []
    for p in primes_in_range(max(args.start, 3), args.to):
        try:
            res = corefst.critical_precision(p)
        except PkcoreError as exc:
            rows.append({"p": p, "warning": str(exc)})
            continue
        rows.append({"p": p, "kp": res.kp, "profile": {str(a): b for a, b in res.distinct_counts.items()}})
    return Report(command="kp", rows=rows)


def cmd_pairsums(args, cfg) -> Report:
    mod = make_modulus(args.p, args.k, table_bound=cfg["table_bound"])
    observed, predicted = pairsums.core_pairsum_count(mod)
    kp = corefst.critical_precision(args.p).kp
    core_row = {
        "kind": "core",
        "observed": observed,
        "predicted": predicted,
        "note": "" if args.k >= kp else "k < critical precision",
    }
    rows = [core_row]
    fermat_failed = False
    if args.k >= 2:
        fr = pairsums.fermat_pairsum_count(mod)
        rows.append(
            {
                "kind": "pthPower",
                "observed": fr.observed,
                "predicted": fr.predicted,
                "nonunit_nonzero": fr.nonunit_nonzero,
            }
        )
        fermat_failed = not fr.matches
    return Report(
        command="pairsums",
        rows=rows,
        p=args.p,
        k=args.k,
        check_failed=observed != predicted or fermat_failed,
    )


def cmd_waring(args, cfg) -> Report:
    mod = make_modulus(args.p, args.k, table_bound=cfg["table_bound"])
    report = waring.sumset_levels(mod, 4)
    rows = [
        {
            "p": args.p,
            "k": args.k,
            "counts": {str(t): c for t, c in report.counts.items()},
            "theorem_holds": report.theorem_holds,
            "n0_covered_by3": report.n0_covered_by3,
            "conjecture_f3_in_f4": report.conjecture_f3_in_f4,
            "disjoint_f3_f4": report.disjoint_f3_f4,
        }
    ]
    for residue, summands in sorted(report.witness_decompositions.items()):
        rows.append({"residue": residue, "level": len(summands), "summands": list(summands)})
    return Report(
        command="waring", rows=rows, p=args.p, k=args.k, check_failed=not report.theorem_holds
    )


def cmd_divisors(args, cfg) -> Report:
    audits = generators.audit_divisors(args.p, assert_non_core=False)
    rows = []
    failed = False
    for a in audits:
        exceptional = a.is_core_mod_p2 and not a.sign_trivial
        rows.append(
            {
                "r": a.r,
                "cofactor": a.cofactor,
                "order_g3": a.order_in_g3,
                "core_mod_p2": a.is_core_mod_p2,
                "core_mod_p3": a.is_core_mod_p3,
                "sign_trivial": a.sign_trivial,
                "classification": "exceptional" if exceptional else "regular",
            }
        )
        failed = failed or a.is_core_mod_p3
    return Report(command="divisors", rows=rows, p=args.p, k=None, check_failed=failed)


def cmd_scan(args, cfg) -> Report:
    if args.kind == "wieferich":
        hits = generators.wieferich_scan(
            args.to, base=cfg["base"], checkpoint=args.checkpoint, jobs=cfg["jobs"]
        )
        rows = [
            {"p": p, "base": cfg["base"], "residual": 0, "classification": "wieferich"}
            for p in hits
        ]
        return Report(command="scan", rows=rows)
    if args.kind == "exceptions":
        pairs = generators.exception_scan(args.start, args.to)
        rows = [
            {"p": p, "r": r, "residual": 0, "classification": "exceptional"} for p, r in pairs
        ]
        return Report(command="scan", rows=rows)
    # generator survey over divisors of p-1 and p+1
    rows = []
    failed = False
    for p in primes_in_range(max(args.start, 3), args.to):
        survey = generators.survey_pm1_generators(p, args.k)
        best = next(
            (v for v in survey.verdicts if v.klass == "primitiveRoot"),
            next((v for v in survey.verdicts if v.klass == "halfGroupNoMinusOne"), None),
        )
        if survey.satisfied and best is not None:
            rows.append(
                {
                    "p": p,
                    "g": best.g,
                    "order": best.order,
                    "classification": best.klass,
                    "minus_one_in_cycle": best.minus_one_in_cycle,
                }
            )
        else:
            rows.append({"p": p, "g": 0, "order": 0, "classification": "counterexample"})
            failed = True
    return Report(command="scan", rows=rows, check_failed=failed)


def cmd_decompose(args, cfg) -> Report:
    mod = make_modulus(args.p, args.k, table_bound=cfg["table_bound"])
    report = waring.sumset_levels(mod, max(4, args.max_t))
    x = args.residue % mod.modulus
    for t in range(1, args.max_t + 1):
        if report.masks[t] >> x & 1:
            summands = waring.decompose_residue(mod, x, t, _levels=report.masks)
            rows = [{"residue": x, "level": t, "summands": list(summands)}]
            return Report(command="decompose", rows=rows, p=args.p, k=args.k)
    return Report(
        command="decompose",
        rows=[{"residue": x, "level": 0, "summands": []}],
        p=args.p,
        k=args.k,
        check_failed=True,
    )


# --- parser / main ------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_BAD_INPUT)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="pkcore",
        description="structure of the unit group and p-th power sums mod p^k",
    )
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("human", "jsonl", "csv"), default=None)
    common.add_argument("--table-bound", dest="table_bound", type=int, default=None)
    common.add_argument("--jobs", type=int, default=None)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common_pk(sp, k_default=None):
        sp.add_argument("-p", type=int, required=True)
        if k_default is None:
            sp.add_argument("-k", type=int, required=True)
        else:
            sp.add_argument("-k", type=int, default=k_default)

    sp = sub.add_parser("core", parents=[common], help="core table: values, carries, increments")
    common_pk(sp)
    sp.set_defaults(func=cmd_core)

    sp = sub.add_parser("increments", parents=[common], help="fixed-precision power differences e_i(n)")
    common_pk(sp)
    sp.add_argument("--i", type=int, default=1)
    sp.set_defaults(func=cmd_increments)

    sp = sub.add_parser("kp", parents=[common], help="critical precision per prime")
    sp.add_argument("--from", dest="start", type=int, default=3)
    sp.add_argument("--to", type=int, default=100)
    sp.set_defaults(func=cmd_kp)

    sp = sub.add_parser("pairsums", parents=[common], help="core and p-th power pairsum counts")
    common_pk(sp)
    sp.set_defaults(func=cmd_pairsums)

    sp = sub.add_parser("waring", parents=[common], help="sumset levels and coverage verdicts")
    common_pk(sp)
    sp.set_defaults(func=cmd_waring)

    sp = sub.add_parser("divisors", parents=[common], help="order audit of divisors of p^2-1")
    sp.add_argument("-p", type=int, required=True)
    sp.set_defaults(func=cmd_divisors)

    sp = sub.add_parser("scan", parents=[common], help="prime scans")
    sp.add_argument("kind", choices=("wieferich", "exceptions", "note4"))
    sp.add_argument("--from", dest="start", type=int, default=3)
    sp.add_argument("--to", type=int, required=True)
    sp.add_argument("--base", type=int, default=None)
    sp.add_argument("--checkpoint", default=None)
    sp.add_argument("-k", type=int, default=3)
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("decompose", parents=[common], help="p-th power summand witness for a residue")
    common_pk(sp)
    sp.add_argument("residue", type=int)
    sp.add_argument("--max-t", dest="max_t", type=int, default=4)
    sp.set_defaults(func=cmd_decompose)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
        t0 = time.perf_counter()
        report: Report = args.func(args, cfg)
        report.elapsed_s = time.perf_counter() - t0
        emit(report, cfg["format"])
        print(f"elapsed: {report.elapsed_s:.3f}s", file=sys.stderr)
        return EXIT_CHECK_FAILED if report.check_failed else EXIT_OK
    except PkcoreError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
