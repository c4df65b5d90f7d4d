"""Classic Apriori with a full database scan for every candidate.

This is the baseline of the scan-count comparison: each candidate's
support is found by reading all ``m`` transaction records.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .levels import FrequentLevel, FrequentRow, MiningResult, ScanStats
from .transactions import Itemset, TransactionDB


@dataclass
class CandidateSet:
    k: int
    candidates: list[Itemset]

    def __len__(self) -> int:
        return len(self.candidates)

    def __iter__(self):
        return iter(self.candidates)


def _check_min_sup(min_sup: int) -> None:
    if min_sup < 1:
        raise ValueError(f"min_sup must be an absolute count >= 1, got {min_sup}")


def find_frequent_1(db: TransactionDB, min_sup: int, stats: ScanStats | None = None) -> FrequentLevel:
    """One full scan; rows in first-appearance (item id) order."""
    _check_min_sup(min_sup)
    tids: defaultdict[int, list[int]] = defaultdict(list)
    for t in db:
        for item in t.items:
            tids[item].append(t.tid)
    if stats is not None and len(db):
        stats.add_reads(1, len(db))
        stats.candidates_generated[1] += len(tids)
    rows = [FrequentRow((i,), len(tids[i]), tuple(tids[i])) for i in sorted(tids) if len(tids[i]) >= min_sup]
    return FrequentLevel(1, rows)


def generate_candidates(prev: FrequentLevel | Sequence[Itemset]) -> CandidateSet:
    """Prefix self-join of the (k-1)-itemsets followed by subset pruning."""
    if isinstance(prev, FrequentLevel):
        itemsets = sorted(r.itemset for r in prev)
        k = prev.k + 1
    else:
        itemsets = sorted(prev)
        k = len(itemsets[0]) + 1 if itemsets else 2
    frequent = set(itemsets)
    out = []
    for i, a in enumerate(itemsets):
        for b in itemsets[i + 1 :]:
            if a[:-1] != b[:-1]:
                break  # sorted: no later itemset shares a's prefix
            cand = a + (b[-1],)
            if all(cand[:j] + cand[j + 1 :] in frequent for j in range(len(cand) - 2)):
                out.append(cand)
    return CandidateSet(k, out)


def count_supports_full_scan(
    db: TransactionDB, cand: CandidateSet, min_sup: int, stats: ScanStats | None = None
) -> FrequentLevel:
    rows = []
    sets = db.item_sets()
    tids = db.tids
    for c in cand:
        probe = frozenset(c)
        found = tuple(tid for tid, s in zip(tids, sets) if probe <= s)
        if stats is not None:
            stats.add_reads(cand.k, len(db))
        if len(found) >= min_sup:
            rows.append(FrequentRow(c, len(found), found))
    return FrequentLevel(cand.k, rows)


def mine_classic(db: TransactionDB, min_sup: int) -> MiningResult:
    _check_min_sup(min_sup)
    stats = ScanStats()
    level = find_frequent_1(db, min_sup, stats)
    levels = []
    while level.rows:
        levels.append(level)
        cand = generate_candidates(level)
        stats.candidates_generated[cand.k] = len(cand)
        if not cand.candidates:
            break
        level = count_supports_full_scan(db, cand, min_sup, stats)
    return MiningResult("classic", min_sup, levels, stats)
