"""Command-line interface: ``freqmine {mine,rules,compare,dump-tree,bench}``.

Exit status is 0 on success, 2 on usage errors and 1 on data errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass
from time import perf_counter
from typing import Sequence

from . import __version__
from .bench import (
    DEFAULT_GROUP_MIN_SUP,
    DEFAULT_SEED,
    MIN_SUP_SWEEP,
    MINERS,
    absolute_min_sup,
    reduction_rate,
    rows_to_csv,
    rows_to_json,
    run_one,
)
from .errors import FreqMineError
from .fpgrowth import build_fptree, dump_tree
from .levels import MiningResult
from .rules import generate_rules
from .tid_index import default_workers, mine_improved
from .transactions import PartitionPlan, TransactionDB, plan_partitions, read_basket_file

log = logging.getLogger("freqmine")

PARTIAL_MARK = "PARTIAL (single-cluster)"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class MinSup:
    """Either an absolute count or a fraction of the transaction count."""

    value: int | float

    @classmethod
    def parse(cls, text: str) -> MinSup:
        try:
            if text.strip().isdigit():
                n = int(text)
                if n < 1:
                    raise ValueError
                return cls(n)
            frac = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid min support {text!r}") from None
        if not 0 < frac < 1:
            raise argparse.ArgumentTypeError(f"fractional min support must be in (0, 1), got {text!r}")
        return cls(frac)

    def absolute(self, m: int) -> int:
        if isinstance(self.value, int):
            return self.value
        return absolute_min_sup(self.value, m)


def _fraction(text: str) -> float:
    try:
        x = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0 < x <= 1:
        raise argparse.ArgumentTypeError(f"must be in (0, 1], got {text!r}")
    return x


def _fraction_list(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="freqmine", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def data_args(p, min_sup_default=None):
        p.add_argument("--input", "-i", required=True, help="basket file (one transaction per line)")
        p.add_argument(
            "--min-sup",
            type=MinSup.parse,
            default=min_sup_default,
            required=min_sup_default is None,
            help="absolute count (e.g. 2) or fraction in (0,1) (e.g. 0.3)",
        )
        p.add_argument("--strict", action="store_true", help="reject blank transaction lines")
        p.add_argument("--output", "-o", choices=("table", "csv", "json"), default="table")

    def partition_args(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--partitions", type=int, help="number of contiguous partitions for the F1 scan")
        g.add_argument("--base", type=int, help="partition base; count is base**k with the largest k where base**k <= m")

    p = sub.add_parser("mine", help="mine frequent itemsets")
    data_args(p)
    p.add_argument("--algorithm", "-a", choices=sorted(MINERS), default="improved")
    partition_args(p)
    p.add_argument("--only-partition", type=int, metavar="I", help="mine only partition I (0-based); output is partial")

    p = sub.add_parser("rules", help="generate association rules")
    data_args(p)
    p.add_argument("--algorithm", "-a", choices=sorted(MINERS), default="improved")
    p.add_argument("--min-conf", type=_fraction, default=0.5)

    p = sub.add_parser("compare", help="classic vs improved record reads")
    data_args(p)
    partition_args(p)

    p = sub.add_parser("dump-tree", help="print the FP-tree")
    data_args(p)

    p = sub.add_parser("bench", help="run the size grid and min-sup sweep on synthetic data")
    p.add_argument("--out-dir", default="bench-out")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--group-min-sup", type=_fraction, default=DEFAULT_GROUP_MIN_SUP)
    p.add_argument("--sweep", type=_fraction_list, default=list(MIN_SUP_SWEEP), help="comma-separated fractions")
    p.add_argument("--sweep-dataset", default="T3", choices=[f"T{i}" for i in range(1, 6)])
    p.add_argument("--with-fpgrowth", action="store_true")
    p.add_argument("--no-figures", action="store_true")
    p.add_argument("--output", "-o", choices=("table", "csv", "json"), default="csv")
    return parser


def _plan(args, db: TransactionDB) -> PartitionPlan | None:
    if getattr(args, "partitions", None) is not None:
        if args.partitions < 1:
            raise UsageError("--partitions must be >= 1")
        if args.partitions == 1:
            return None
        return plan_partitions(db, args.partitions, 1)
    if getattr(args, "base", None) is not None:
        plan = plan_partitions(db, args.base)
        return plan if plan.parts > 1 else None
    return None


def _tids(found: tuple[int, ...] | None, sep: str = ",") -> str:
    return "-" if found is None else sep.join(f"T{t}" for t in found)


def format_levels(result: MiningResult, db: TransactionDB, fmt: str, header: dict) -> str:
    d = db.dictionary
    if fmt == "json":
        payload = dict(header)
        payload["levels"] = [
            {
                "k": lv.k,
                "itemsets": [
                    {"items": [d.name(i) for i in r.itemset], "support": r.support, "found_in": list(r.found_in) if r.found_in is not None else None}
                    for r in lv
                ],
            }
            for lv in result.levels
        ]
        payload["stats"] = result.stats.to_dict()
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if header.get("partial"):
            buf.write(f"# {header['partial']}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "itemset", "support", "found_in"])
        for lv in result.levels:
            for r in lv:
                w.writerow([lv.k, d.label(r.itemset, " "), r.support, "" if r.found_in is None else " ".join(f"T{t}" for t in r.found_in)])
        return buf.getvalue()
    lines = []
    if header.get("partial"):
        lines.append(header["partial"])
    lines.append(f"# algorithm={result.algorithm} min_sup={result.min_sup} m={len(db)}")
    for lv in result.levels:
        lines.append("")
        lines.append(f"Frequent {lv.k}-itemsets")
        lines.append("Items | Support | Found in")
        for r in lv:
            lines.append(f"{d.label(r.itemset)} | {r.support} | {_tids(r.found_in)}")
    lines.append("")
    lines.append(f"records read: {result.stats.total_reads}")
    return "\n".join(lines) + "\n"


def parse_levels_csv(text: str) -> dict[tuple[str, ...], int]:
    """Recover (itemset names, support) pairs from ``mine --output csv``."""
    out = {}
    body = [line for line in text.splitlines() if not line.startswith("#")]
    for row in csv.DictReader(body):
        out[tuple(row["itemset"].split())] = int(row["support"])
    return out


def _load(args) -> TransactionDB:
    return read_basket_file(args.input, strict=args.strict)


def cmd_mine(args) -> str:
    db = _load(args)
    header: dict = {"algorithm": args.algorithm}
    if args.only_partition is not None:
        parts = _plan(args, db)
        if parts is None:
            raise UsageError("--only-partition needs --partitions or --base with more than one partition")
        if not 0 <= args.only_partition < parts.parts:
            raise UsageError(f"--only-partition must be in 0..{parts.parts - 1}")
        first, last = parts.boundaries[args.only_partition]
        header["partial"] = f"{PARTIAL_MARK}: partition {args.only_partition} of {parts.parts}, T{first}..T{last}"
        db = parts.apply(db)[args.only_partition]
        plan = None
    else:
        plan = _plan(args, db)
        if plan is not None and args.algorithm != "improved":
            raise UsageError("--partitions/--base apply to the improved algorithm only")
    min_sup = args.min_sup.absolute(len(db))
    header["min_sup"] = min_sup
    if args.algorithm == "improved":
        result = mine_improved(db, min_sup, plan=plan, workers=default_workers())
    else:
        result = MINERS[args.algorithm](db, min_sup)
    return format_levels(result, db, args.output, header)


def cmd_rules(args) -> str:
    db = _load(args)
    min_sup = args.min_sup.absolute(len(db))
    result = MINERS[args.algorithm](db, min_sup)
    rules = generate_rules(result.levels, args.min_conf)
    d = db.dictionary
    if args.output == "json":
        return json.dumps(
            {
                "min_sup": min_sup,
                "min_conf": args.min_conf,
                "rules": [
                    {
                        "antecedent": [d.name(i) for i in r.antecedent],
                        "consequent": [d.name(i) for i in r.consequent],
                        "support": r.support,
                        "confidence": f"{float(r.confidence):.4f}",
                    }
                    for r in rules
                ],
            },
            indent=2,
        ) + "\n"
    if args.output == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["antecedent", "consequent", "support", "confidence"])
        for r in rules:
            w.writerow([d.label(r.antecedent, " "), d.label(r.consequent, " "), r.support, f"{float(r.confidence):.4f}"])
        return buf.getvalue()
    lines = [f"# min_sup={min_sup} min_conf={args.min_conf} rules={len(rules)}"]
    for r in rules:
        lines.append(f"{d.label(r.antecedent)} -> {d.label(r.consequent)} | support {r.support} | confidence {float(r.confidence):.4f}")
    return "\n".join(lines) + "\n"


def cmd_compare(args) -> str:
    db = _load(args)
    min_sup = args.min_sup.absolute(len(db))
    classic, t_classic = run_one(db, "classic", min_sup)
    plan = _plan(args, db)
    start = perf_counter()
    improved = mine_improved(db, min_sup, plan=plan, workers=default_workers())
    t_improved = (perf_counter() - start) * 1000.0
    levels = sorted(set(classic.stats.records_read) | set(improved.stats.records_read))
    per_level = [
        {
            "k": k,
            "classic": classic.stats.records_read[k],
            "improved": improved.stats.records_read[k],
            "reduction_pct": reduction_rate(classic.stats.records_read[k], improved.stats.records_read[k]),
        }
        for k in levels
    ]
    total = reduction_rate(classic.stats.total_reads, improved.stats.total_reads)
    same = classic.supports() == improved.supports()
    summary = {
        "min_sup": min_sup,
        "m": len(db),
        "frequent_count": {"classic": classic.frequent_count, "improved": improved.frequent_count},
        "identical_results": same,
        "records_read": {"classic": classic.stats.total_reads, "improved": improved.stats.total_reads},
        "reduction_pct": total,
        "elapsed_ms": {"classic": round(t_classic, 3), "improved": round(t_improved, 3)},
    }
    if args.output == "json":
        def enc(x):
            return None if x is None else float(x)

        summary["reduction_pct"] = enc(total)
        summary["levels"] = [{**row, "reduction_pct": enc(row["reduction_pct"])} for row in per_level]
        return json.dumps(summary, indent=2) + "\n"
    if args.output == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "classic_records_read", "improved_records_read", "reduction_pct"])
        for row in per_level:
            w.writerow([row["k"], row["classic"], row["improved"], row["reduction_pct"] if row["reduction_pct"] is not None else "n/a"])
        w.writerow(["total", classic.stats.total_reads, improved.stats.total_reads, total if total is not None else "n/a"])
        return buf.getvalue()
    lines = [
        f"# min_sup={min_sup} m={len(db)}",
        "k | classic records read | improved records read | reduction %",
    ]
    for row in per_level:
        pct = "n/a" if row["reduction_pct"] is None else row["reduction_pct"]
        lines.append(f"{row['k']} | {row['classic']} | {row['improved']} | {pct}")
    lines.append(f"total | {classic.stats.total_reads} | {improved.stats.total_reads} | {'n/a' if total is None else total}")
    lines.append(f"frequent itemsets: classic={classic.frequent_count} improved={improved.frequent_count} identical={'yes' if same else 'NO'}")
    lines.append(f"elapsed ms: classic={t_classic:.3f} improved={t_improved:.3f}")
    return "\n".join(lines) + "\n"


def cmd_dump_tree(args) -> str:
    db = _load(args)
    tree = build_fptree(db, args.min_sup.absolute(len(db)))
    return dump_tree(tree, db.dictionary.names)


def cmd_bench(args) -> str:
    from .report import run_bench

    algorithms = ("classic", "improved", "fpgrowth") if args.with_fpgrowth else ("classic", "improved")
    report = run_bench(
        args.out_dir,
        seed=args.seed,
        group_min_sup=args.group_min_sup,
        sweep=args.sweep,
        sweep_dataset=args.sweep_dataset,
        algorithms=algorithms,
        figures=not args.no_figures,
    )
    for path in report.files:
        log.info("wrote %s", path)
    if args.output == "json":
        return rows_to_json(report.groups + report.sweep, seed=args.seed)
    if args.output == "csv":
        return rows_to_csv(report.groups) + "\n" + rows_to_csv(report.sweep)
    lines = []
    for title, rows in (("groups", report.groups), ("min-sup sweep", report.sweep)):
        lines.append(f"== {title}")
        for r in rows:
            c = r.csv_row()
            lines.append(" | ".join(c[f] for f in c))
    return "\n".join(lines) + "\n"


COMMANDS = {
    "mine": cmd_mine,
    "rules": cmd_rules,
    "compare": cmd_compare,
    "dump-tree": cmd_dump_tree,
    "bench": cmd_bench,
}


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        stdout.write(COMMANDS[args.command](args))
    except UsageError as exc:
        print(f"freqmine: error: {exc}", file=sys.stderr)
        return 2
    except (OSError, FreqMineError, UnicodeDecodeError) as exc:
        print(f"freqmine: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())
