"""Brute-force frequent-itemset enumeration, used as ground truth in tests.

Deliberately naive: every subset (up to ``max_k`` items) of every
transaction is enumerated and its tid recorded.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations
from typing import NamedTuple

from .errors import OracleLimitExceeded
from .transactions import Itemset, TransactionDB

MAX_TRANSACTION_LEN = 16


class SupportEntry(NamedTuple):
    support: int
    tids: tuple[int, ...]


SupportMap = dict[Itemset, SupportEntry]


def brute_force_frequent(db: TransactionDB, min_sup: int, max_k: int | None = None) -> SupportMap:
    if min_sup < 1:
        raise ValueError("min_sup must be >= 1")
    if max_k is not None and max_k < 1:
        raise ValueError("max_k must be >= 1")
    found: defaultdict[Itemset, list[int]] = defaultdict(list)
    for t in db:
        top = len(t.items) if max_k is None else min(max_k, len(t.items))
        if top > 3 and len(t.items) > MAX_TRANSACTION_LEN:
            raise OracleLimitExceeded(f"T{t.tid} has {len(t.items)} items")
        for size in range(1, top + 1):
            for sub in combinations(t.items, size):
                found[sub].append(t.tid)
    return {
        itemset: SupportEntry(len(tids), tuple(tids))
        for itemset, tids in sorted(found.items(), key=lambda kv: (len(kv[0]), kv[0]))
        if len(tids) >= min_sup
    }
