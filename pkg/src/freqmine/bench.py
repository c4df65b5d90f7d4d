"""Synthetic basket generation and instrumented classic-vs-improved runs.

Two experiments are driven from here: a grid over five database sizes at a
fixed minimum support, and a minimum-support sweep over one database.  The
deterministic comparison metric is ``records_read``; wall time is recorded
alongside but is machine dependent.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from dataclasses import asdict, dataclass
from decimal import ROUND_DOWN, ROUND_HALF_UP, Decimal
from typing import Callable, Iterable, Sequence

import numpy as np

from .apriori import mine_classic
from .errors import ConfigError
from .fpgrowth import mine_fpgrowth
from .levels import MiningResult
from .tid_index import mine_improved
from .transactions import Transaction, ItemDictionary, TransactionDB

GROUP_SIZES = (500, 1000, 1500, 2000, 2500)
MIN_SUP_SWEEP = (0.02, 0.04, 0.06, 0.08, 0.10)
DEFAULT_GROUP_MIN_SUP = 0.04
DEFAULT_SEED = 20150701

CSV_FIELDS = (
    "dataset",
    "algorithm",
    "min_sup",
    "elapsed_ms",
    "records_read",
    "candidates",
    "frequent_count",
    "reduction_pct",
)

MINERS: dict[str, Callable[[TransactionDB, int], MiningResult]] = {
    "classic": mine_classic,
    "improved": mine_improved,
    "fpgrowth": mine_fpgrowth,
}


@dataclass(frozen=True)
class GeneratorConfig:
    n_transactions: int
    n_items: int = 40
    mean_length: float = 5.0
    skew: float = 0.8
    seed: int = DEFAULT_SEED

    def validate(self) -> None:
        if self.n_transactions < 1:
            raise ConfigError("n_transactions must be >= 1")
        if self.n_items < 2:
            raise ConfigError("n_items must be >= 2")
        if not 0 < self.mean_length < self.n_items:
            raise ConfigError("mean_length must be in (0, n_items)")
        if self.skew < 0:
            raise ConfigError("skew must be >= 0")


def generate_synthetic(cfg: GeneratorConfig) -> TransactionDB:
    """Seeded baskets: power-law item popularity, truncated-Poisson lengths.

    Item ``i`` (0-based) is drawn with weight ``1 / (i + 1) ** skew``;
    lengths are Poisson(mean_length) clipped to ``[1, n_items]``.
    """
    cfg.validate()
    rng = np.random.default_rng(cfg.seed)
    weights = 1.0 / np.arange(1, cfg.n_items + 1) ** cfg.skew
    probs = weights / weights.sum()
    width = len(str(cfg.n_items))
    names = tuple(f"I{i + 1:0{width}d}" for i in range(cfg.n_items))
    lengths = np.clip(rng.poisson(cfg.mean_length, cfg.n_transactions), 1, cfg.n_items)
    transactions = []
    for tid, length in enumerate(lengths, 1):
        items = rng.choice(cfg.n_items, size=int(length), replace=False, p=probs)
        transactions.append(Transaction(tid, tuple(sorted(int(i) for i in items))))
    return TransactionDB(transactions, ItemDictionary(names))


def synthetic_groups(seed: int = DEFAULT_SEED, sizes: Sequence[int] = GROUP_SIZES, **kwargs) -> dict[str, TransactionDB]:
    """The T1..T5 groups; each size gets its own derived seed."""
    return {
        f"T{i}": generate_synthetic(GeneratorConfig(n, seed=seed + i, **kwargs))
        for i, n in enumerate(sizes, 1)
    }


def absolute_min_sup(fraction: float, m: int) -> int:
    """ceil(fraction * m), at least 1; computed in decimal to dodge float noise."""
    return max(1, math.ceil(Decimal(str(fraction)) * m))


def reduction_rate(baseline: float, improved: float, rounding: str = "half_up") -> Decimal | None:
    """``100 * (baseline - improved) / baseline`` to 2 decimals; None when baseline is 0.

    ``rounding="truncate"`` chops instead of rounding half up.
    """
    b = Decimal(str(baseline))
    if b == 0:
        return None
    if b < 0:
        raise ValueError("baseline must be positive")
    mode = {"half_up": ROUND_HALF_UP, "truncate": ROUND_DOWN}[rounding]
    pct = Decimal(100) * (b - Decimal(str(improved))) / b
    return pct.quantize(Decimal("0.01"), rounding=mode)


@dataclass
class BenchRow:
    dataset: str
    algorithm: str
    min_sup: float
    elapsed_ms: float
    records_read: int
    candidates: int
    frequent_count: int
    reduction_pct: Decimal | None = None

    def csv_row(self) -> dict[str, str]:
        return {
            "dataset": self.dataset,
            "algorithm": self.algorithm,
            "min_sup": f"{self.min_sup:g}",
            "elapsed_ms": f"{self.elapsed_ms:.3f}",
            "records_read": str(self.records_read),
            "candidates": str(self.candidates),
            "frequent_count": str(self.frequent_count),
            "reduction_pct": "n/a" if self.reduction_pct is None else f"{self.reduction_pct}",
        }

    def to_json(self) -> dict:
        d = asdict(self)
        d["reduction_pct"] = None if self.reduction_pct is None else float(self.reduction_pct)
        return d


def run_one(db: TransactionDB, algorithm: str, min_sup: int) -> tuple[MiningResult, float]:
    miner = MINERS[algorithm]
    start = time.perf_counter()
    result = miner(db, min_sup)
    return result, (time.perf_counter() - start) * 1000.0


def run_comparison(
    dbs: dict[str, TransactionDB],
    min_sups: Iterable[float],
    algorithms: Sequence[str] = ("classic", "improved"),
) -> list[BenchRow]:
    """Run every algorithm on every (db, min_sup) pair.

    Non-baseline rows carry ``reduction_pct`` of records_read against the
    classic row of the same cell.
    """
    min_sups = list(min_sups)
    if not dbs or not min_sups:
        raise ValueError("need at least one database and one min_sup")
    rows = []
    for label, db in dbs.items():
        for frac in min_sups:
            abs_sup = absolute_min_sup(frac, len(db))
            cell: dict[str, BenchRow] = {}
            for algo in algorithms:
                result, elapsed = run_one(db, algo, abs_sup)
                cell[algo] = BenchRow(
                    label,
                    algo,
                    frac,
                    elapsed,
                    result.stats.total_reads,
                    result.stats.total_candidates,
                    result.frequent_count,
                )
            base = cell.get("classic")
            for algo, row in cell.items():
                if base is not None and algo != "classic":
                    row.reduction_pct = reduction_rate(base.records_read, row.records_read)
            rows.extend(cell.values())
    return rows


def rows_to_csv(rows: Iterable[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.csv_row())
    return buf.getvalue()


def rows_to_json(rows: Iterable[BenchRow], **meta) -> str:
    return json.dumps({**meta, "rows": [r.to_json() for r in rows]}, indent=2, sort_keys=True) + "\n"


def gap_by_min_sup(rows: Iterable[BenchRow], dataset: str) -> dict[float, int]:
    """classic minus improved records_read per min_sup for one dataset."""
    reads: dict[tuple[float, str], int] = {(r.min_sup, r.algorithm): r.records_read for r in rows if r.dataset == dataset}
    return {
        ms: reads[(ms, "classic")] - reads[(ms, "improved")]
        for ms, algo in sorted(reads)
        if algo == "classic" and (ms, "improved") in reads
    }
