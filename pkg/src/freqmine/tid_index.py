"""Apriori with a TID-carrying F1 index and targeted candidate counting.

One full scan builds the F1 index (support and ascending tid list per
frequent item).  From level 2 on, a candidate is counted only over the
transactions of its least-supported item: any transaction containing the
candidate must contain that item, so the count is exact while far fewer
records are read.
"""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .apriori import CandidateSet, generate_candidates
from .errors import CorruptIndex, IndexMiss
from .levels import FrequentLevel, FrequentRow, MiningResult, ScanStats
from .transactions import Itemset, ItemDictionary, PartitionPlan, TransactionDB

THREADS_ENV = "FREQMINE_THREADS"


class F1Entry(NamedTuple):
    item: int
    support: int
    tids: tuple[int, ...]


@dataclass(frozen=True)
class F1Index:
    entries: dict[int, F1Entry]  # insertion order == first-appearance order
    dictionary: ItemDictionary

    def __contains__(self, item: int) -> bool:
        return item in self.entries

    def __iter__(self) -> Iterator[F1Entry]:
        return iter(self.entries.values())

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, item: int) -> F1Entry:
        try:
            return self.entries[item]
        except KeyError:
            raise IndexMiss(f"item {item} not in F1 index") from None

    def as_level(self) -> FrequentLevel:
        return FrequentLevel(1, [FrequentRow((e.item,), e.support, e.tids) for e in self])


def default_workers() -> int:
    """Worker cap from ``FREQMINE_THREADS`` (0 or unset means sequential)."""
    try:
        return max(0, int(os.environ.get(THREADS_ENV, "0")))
    except ValueError:
        return 0


def _scan_tids(db: TransactionDB) -> dict[int, list[int]]:
    tids: defaultdict[int, list[int]] = defaultdict(list)
    for t in db:
        for item in t.items:
            tids[item].append(t.tid)
    return tids


def build_f1_index(
    db: TransactionDB,
    min_sup: int,
    stats: ScanStats | None = None,
    plan: PartitionPlan | None = None,
    workers: int = 0,
) -> F1Index:
    """Scan ``db`` once and index every item with support >= ``min_sup``.

    With a ``plan`` the scan runs partition by partition (concurrently when
    ``workers > 1``) and the per-partition tid lists are concatenated in tid
    order, so the result is identical to the unpartitioned scan.
    """
    if min_sup < 1:
        raise ValueError(f"min_sup must be >= 1, got {min_sup}")
    slices = plan.apply(db) if plan is not None else [db]
    if workers > 1 and len(slices) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_scan_tids, slices))
    else:
        partials = [_scan_tids(s) for s in slices]
    merged: defaultdict[int, list[int]] = defaultdict(list)
    for part in partials:  # slices are in ascending tid order
        for item, tids in part.items():
            merged[item].extend(tids)
    if stats is not None and len(db):
        stats.add_reads(1, len(db))
        stats.candidates_generated[1] += len(merged)
    entries = {
        item: F1Entry(item, len(merged[item]), tuple(merged[item]))
        for item in sorted(merged)
        if len(merged[item]) >= min_sup
    }
    return F1Index(entries, db.dictionary)


def min_support_item(candidate: Itemset, f1: F1Index) -> int:
    """Item of ``candidate`` with the smallest F1 support; ties go to the smallest name."""
    names = f1.dictionary.names
    return min(candidate, key=lambda item: (f1[item].support, names[item]))


def target_transactions(item: int, f1: F1Index) -> tuple[int, ...]:
    return f1[item].tids


def count_candidate_targeted(
    db: TransactionDB,
    candidate: Itemset,
    target: tuple[int, ...],
    stats: ScanStats | None = None,
) -> tuple[int, tuple[int, ...]]:
    """Count ``candidate`` over the ``target`` tids only; returns (support, found_in)."""
    probe = frozenset(candidate)
    found = []
    for tid in target:
        try:
            items = db.itemset_at(tid)
        except IndexError:
            raise CorruptIndex(f"tid {tid} outside T{db.first_tid}..T{db.first_tid + len(db) - 1}") from None
        if probe <= items:
            found.append(tid)
    if stats is not None:
        stats.add_reads(len(candidate), len(target))
    return len(found), tuple(found)


def _count_level(
    db: TransactionDB, cand: CandidateSet, f1: F1Index, min_sup: int, stats: ScanStats, workers: int
) -> FrequentLevel:
    def one(c: Itemset) -> tuple[Itemset, int, tuple[int, ...], ScanStats]:
        local = ScanStats()
        target = target_transactions(min_support_item(c, f1), f1)
        support, found = count_candidate_targeted(db, c, target, local)
        return c, support, found, local

    if workers > 1 and len(cand) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(one, cand.candidates))
    else:
        results = [one(c) for c in cand.candidates]
    rows = []
    for c, support, found, local in results:
        stats.merge(local)
        if support >= min_sup:
            rows.append(FrequentRow(c, support, found))
    return FrequentLevel(cand.k, rows)


def mine_improved(
    db: TransactionDB,
    min_sup: int,
    plan: PartitionPlan | None = None,
    workers: int | None = None,
) -> MiningResult:
    if workers is None:
        workers = default_workers()
    stats = ScanStats()
    f1 = build_f1_index(db, min_sup, stats, plan=plan, workers=workers)
    level = f1.as_level()
    levels = []
    while level.rows:
        levels.append(level)
        cand = generate_candidates(level)
        stats.candidates_generated[cand.k] = len(cand)
        if not cand.candidates:
            break
        level = _count_level(db, cand, f1, min_sup, stats, workers)
    return MiningResult("improved", min_sup, levels, stats)
