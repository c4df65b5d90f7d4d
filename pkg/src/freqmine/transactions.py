"""Transaction database model, basket-file I/O and tid-range partitioning.

Basket format: one transaction per line, items separated by commas and/or
whitespace, lines starting with ``#`` are comments.  Item names are interned
to dense integer ids in order of first appearance, so the canonical
(ascending-id) order of an itemset is also first-appearance order.
"""

from __future__ import annotations

import io
import logging
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence, TextIO

from .errors import EmptyDatabase, InvalidBase, ParseError, TooManyPartitions, UnknownItem

log = logging.getLogger(__name__)

Itemset = tuple[int, ...]

_SEPARATORS = re.compile(r"[,\s]+")


class Item(NamedTuple):
    id: int
    name: str


class Transaction(NamedTuple):
    tid: int
    items: Itemset


def canonical(items: Iterable[int]) -> Itemset:
    """Sorted, duplicate-free tuple of item ids."""
    return tuple(sorted(set(items)))


@dataclass(frozen=True)
class ItemDictionary:
    names: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        index = {name: i for i, name in enumerate(self.names)}
        if len(index) != len(self.names):
            raise ValueError("item names must be unique")
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[Item]:
        return (Item(i, n) for i, n in enumerate(self.names))

    def name(self, item_id: int) -> str:
        return self.names[item_id]

    def id(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownItem(name) from None

    def ids(self, names: Iterable[str]) -> Itemset:
        return canonical(self.id(n) for n in names)

    def label(self, itemset: Iterable[int], sep: str = ", ") -> str:
        return sep.join(self.names[i] for i in itemset)


class TransactionDB:
    """Immutable list of transactions in ascending tid order.

    A database produced by :func:`partition` keeps the original tids, so
    ``first_tid`` may be greater than 1; the item dictionary is shared.
    """

    def __init__(
        self,
        transactions: Sequence[Transaction],
        dictionary: ItemDictionary,
        skipped_lines: int = 0,
    ) -> None:
        self._transactions = tuple(transactions)
        self.dictionary = dictionary
        self.skipped_lines = skipped_lines
        self._sets = tuple(frozenset(t.items) for t in self._transactions)
        self.first_tid = self._transactions[0].tid if self._transactions else 1
        for offset, t in enumerate(self._transactions):
            if t.tid != self.first_tid + offset:
                raise ValueError("tids must be contiguous and ascending")
            if not t.items:
                raise ValueError(f"transaction T{t.tid} is empty")
            if list(t.items) != sorted(set(t.items)):
                raise ValueError(f"transaction T{t.tid} is not canonical")

    @classmethod
    def from_itemsets(cls, rows: Iterable[Iterable[str]]) -> TransactionDB:
        """Build a database from lists of item names (tids assigned from 1)."""
        names: list[str] = []
        index: dict[str, int] = {}
        transactions = []
        for row in rows:
            ids = []
            for name in row:
                if name not in index:
                    index[name] = len(names)
                    names.append(name)
                ids.append(index[name])
            if not ids:
                raise ValueError("empty transaction")
            transactions.append(Transaction(len(transactions) + 1, canonical(ids)))
        return cls(transactions, ItemDictionary(tuple(names)))

    def __len__(self) -> int:
        return len(self._transactions)

    def __iter__(self) -> Iterator[Transaction]:
        return iter(self._transactions)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TransactionDB):
            return NotImplemented
        return self._transactions == other._transactions and self.dictionary == other.dictionary

    def __repr__(self) -> str:
        return f"TransactionDB(m={len(self)}, items={len(self.dictionary)}, first_tid={self.first_tid})"

    @property
    def transactions(self) -> tuple[Transaction, ...]:
        return self._transactions

    @property
    def tids(self) -> range:
        return range(self.first_tid, self.first_tid + len(self))

    def itemset_at(self, tid: int) -> frozenset[int]:
        """Items of transaction ``tid`` as a frozenset (for subset tests)."""
        pos = tid - self.first_tid
        if not 0 <= pos < len(self._sets):
            raise IndexError(tid)
        return self._sets[pos]

    def item_sets(self) -> tuple[frozenset[int], ...]:
        return self._sets

    def slice(self, start: int, stop: int) -> TransactionDB:
        """Positional slice ``[start, stop)`` sharing this dictionary."""
        return TransactionDB(self._transactions[start:stop], self.dictionary)


def parse_basket_file(stream: TextIO | str, strict: bool = False) -> TransactionDB:
    """Parse basket text into a :class:`TransactionDB`.

    Blank data lines are skipped and counted in ``db.skipped_lines``; with
    ``strict=True`` they raise :class:`ParseError` instead.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    rows = []
    skipped = 0
    for lineno, line in enumerate(stream, 1):
        stripped = line.strip()
        if stripped.startswith("#"):
            continue
        tokens = [tok for tok in _SEPARATORS.split(stripped) if tok]
        if not tokens:
            if strict:
                raise ParseError(f"line {lineno}: blank transaction")
            skipped += 1
            continue
        rows.append(tokens)
    if not rows:
        raise EmptyDatabase("no transactions in input")
    if skipped:
        log.warning("skipped %d blank line(s)", skipped)
    db = TransactionDB.from_itemsets(rows)
    db.skipped_lines = skipped
    return db


def read_basket_file(path, strict: bool = False) -> TransactionDB:
    with open(path, encoding="utf-8") as fh:
        return parse_basket_file(fh, strict=strict)


def write_basket(db: TransactionDB, stream: TextIO) -> None:
    for t in db:
        stream.write(db.dictionary.label(t.items, sep=" "))
        stream.write("\n")


def dumps_basket(db: TransactionDB) -> str:
    buf = io.StringIO()
    write_basket(db, buf)
    return buf.getvalue()


def compute_partition_count(n: int, base: int) -> int:
    """Largest ``k`` with ``base**k <= n``.

    >>> compute_partition_count(1000, 2)
    9
    """
    if base < 2:
        raise InvalidBase(f"base must be >= 2, got {base}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    k = 0
    # integer loop avoids log() rounding at exact powers
    while base ** (k + 1) <= n:
        k += 1
    return k


def _split_sizes(m: int, parts: int) -> list[int]:
    q, r = divmod(m, parts)
    return [q + 1 if i < r else q for i in range(parts)]


def partition(db: TransactionDB, parts: int) -> list[TransactionDB]:
    """Split ``db`` into ``parts`` contiguous tid ranges whose sizes differ by at most one."""
    if parts < 1:
        raise ValueError(f"parts must be >= 1, got {parts}")
    if parts > len(db):
        raise TooManyPartitions(f"{parts} partitions requested for {len(db)} transactions")
    if parts == 1:
        return [db]
    out = []
    start = 0
    for size in _split_sizes(len(db), parts):
        out.append(db.slice(start, start + size))
        start += size
    return out


@dataclass(frozen=True)
class PartitionPlan:
    base: int
    k: int
    boundaries: tuple[tuple[int, int], ...]  # inclusive (first_tid, last_tid)

    @property
    def parts(self) -> int:
        return len(self.boundaries)

    def apply(self, db: TransactionDB) -> list[TransactionDB]:
        slices = []
        for first, last in self.boundaries:
            slices.append(db.slice(first - db.first_tid, last - db.first_tid + 1))
        return slices


def plan_partitions(db: TransactionDB, base: int, k: int | None = None) -> PartitionPlan:
    """Plan ``base**k`` contiguous partitions of ``db``.

    ``k`` defaults to :func:`compute_partition_count` of the database size.
    """
    if k is None:
        k = compute_partition_count(len(db), base)
    elif base < 2:
        raise InvalidBase(f"base must be >= 2, got {base}")
    parts = base**k
    if parts > len(db):
        raise TooManyPartitions(f"{base}^{k} partitions exceed {len(db)} transactions")
    bounds = []
    first = db.first_tid
    for size in _split_sizes(len(db), parts):
        bounds.append((first, first + size - 1))
        first += size
    return PartitionPlan(base, k, tuple(bounds))
