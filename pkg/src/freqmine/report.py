"""End-to-end bench report: both experiments, delimited output and figures."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .bench import (
    DEFAULT_GROUP_MIN_SUP,
    DEFAULT_SEED,
    GROUP_SIZES,
    MIN_SUP_SWEEP,
    BenchRow,
    rows_to_csv,
    rows_to_json,
    run_comparison,
    synthetic_groups,
)


@dataclass
class BenchReport:
    groups: list[BenchRow]
    sweep: list[BenchRow]
    files: list[Path] = field(default_factory=list)


def run_bench(
    out_dir: str | Path | None = None,
    seed: int = DEFAULT_SEED,
    group_sizes: Sequence[int] = GROUP_SIZES,
    group_min_sup: float = DEFAULT_GROUP_MIN_SUP,
    sweep: Sequence[float] = MIN_SUP_SWEEP,
    sweep_dataset: str = "T3",
    algorithms: Sequence[str] = ("classic", "improved"),
    figures: bool = True,
) -> BenchReport:
    """Run the size grid and the min-sup sweep; write files when ``out_dir`` is set.

    Files: ``groups.csv``/``groups.json``, ``minsup.csv``/``minsup.json`` and,
    with ``figures``, ``groups.png`` and ``minsup.png``.
    """
    dbs = synthetic_groups(seed, group_sizes)
    if sweep_dataset not in dbs:
        raise ValueError(f"unknown sweep dataset {sweep_dataset!r}; have {sorted(dbs)}")
    report = BenchReport(
        groups=run_comparison(dbs, [group_min_sup], algorithms),
        sweep=run_comparison({sweep_dataset: dbs[sweep_dataset]}, sweep, algorithms),
    )
    if out_dir is None:
        return report
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    meta = {"seed": seed, "algorithms": list(algorithms)}
    for name, rows, extra in (
        ("groups", report.groups, {"min_sup": group_min_sup}),
        ("minsup", report.sweep, {"dataset": sweep_dataset}),
    ):
        csv_path = out / f"{name}.csv"
        csv_path.write_text(rows_to_csv(rows), encoding="utf-8")
        json_path = out / f"{name}.json"
        json_path.write_text(rows_to_json(rows, experiment=name, **meta, **extra), encoding="utf-8")
        report.files += [csv_path, json_path]
    if figures:
        from .plots import plot_groups, plot_min_sup

        plot_groups(report.groups, out / "groups.png")
        plot_min_sup(report.sweep, out / "minsup.png")
        report.files += [out / "groups.png", out / "minsup.png"]
    return report
