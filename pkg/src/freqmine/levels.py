"""Result types shared by the miners: frequent levels and scan counters."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .transactions import Itemset


class FrequentRow(NamedTuple):
    itemset: Itemset
    support: int
    found_in: tuple[int, ...] | None  # None when the miner does not track tids


@dataclass
class FrequentLevel:
    k: int
    rows: list[FrequentRow] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[FrequentRow]:
        return iter(self.rows)

    def supports(self) -> dict[Itemset, int]:
        return {r.itemset: r.support for r in self.rows}


@dataclass
class ScanStats:
    """Transaction-record reads per level.

    ``records_read[k]`` counts every transaction record examined while
    counting level ``k``.  A full scan on behalf of one candidate costs ``m``
    reads; a targeted scan costs the length of its target tid list.
    """

    records_read: Counter = field(default_factory=Counter)
    candidates_generated: Counter = field(default_factory=Counter)
    passes: int = 0

    def add_reads(self, k: int, n: int, passes: int = 1) -> None:
        self.records_read[k] += n
        self.passes += passes

    def merge(self, other: ScanStats) -> None:
        self.records_read.update(other.records_read)
        self.candidates_generated.update(other.candidates_generated)
        self.passes += other.passes

    @property
    def total_reads(self) -> int:
        return sum(self.records_read.values())

    @property
    def total_candidates(self) -> int:
        return sum(self.candidates_generated.values())

    def to_dict(self) -> dict:
        return {
            "records_read": {str(k): v for k, v in sorted(self.records_read.items())},
            "candidates_generated": {str(k): v for k, v in sorted(self.candidates_generated.items())},
            "passes": self.passes,
            "total_records_read": self.total_reads,
        }


@dataclass
class MiningResult:
    algorithm: str
    min_sup: int
    levels: list[FrequentLevel]
    stats: ScanStats

    def supports(self) -> dict[Itemset, int]:
        out: dict[Itemset, int] = {}
        for level in self.levels:
            out.update(level.supports())
        return out

    def found_in(self) -> dict[Itemset, tuple[int, ...] | None]:
        return {r.itemset: r.found_in for level in self.levels for r in level}

    def level(self, k: int) -> FrequentLevel:
        for lv in self.levels:
            if lv.k == k:
                return lv
        return FrequentLevel(k)

    @property
    def frequent_count(self) -> int:
        return sum(len(lv) for lv in self.levels)


def regroup(supports: dict[Itemset, int]) -> list[FrequentLevel]:
    """Group (itemset, support) pairs into levels sorted by itemset."""
    by_k: dict[int, list[FrequentRow]] = {}
    for itemset in sorted(supports, key=lambda s: (len(s), s)):
        by_k.setdefault(len(itemset), []).append(FrequentRow(itemset, supports[itemset], None))
    return [FrequentLevel(k, rows) for k, rows in sorted(by_k.items())]
