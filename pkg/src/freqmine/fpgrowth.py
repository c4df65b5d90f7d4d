"""FP-tree construction, conditional pattern bases and recursive FP-growth."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import UnknownItem
from .levels import MiningResult, ScanStats, regroup
from .tid_index import F1Index, build_f1_index
from .transactions import Itemset, TransactionDB


class FPNode:
    __slots__ = ("item", "count", "parent", "children", "node_link")

    def __init__(self, item: int | None, count: int = 0, parent: FPNode | None = None) -> None:
        self.item = item  # None marks the root
        self.count = count
        self.parent = parent
        self.children: dict[int, FPNode] = {}
        self.node_link: FPNode | None = None

    def __repr__(self) -> str:
        return f"FPNode({self.item!r}, {self.count})"

    def prefix(self) -> list[int]:
        """Items from the root down to (excluding) this node."""
        path = []
        node = self.parent
        while node is not None and node.item is not None:
            path.append(node.item)
            node = node.parent
        path.reverse()
        return path


@dataclass
class HeaderEntry:
    count: int = 0
    head: FPNode | None = None
    tail: FPNode | None = field(default=None, repr=False)

    def chain(self) -> Iterator[FPNode]:
        node = self.head
        while node is not None:
            yield node
            node = node.node_link


@dataclass
class ConditionalPatternBase:
    item: int
    paths: list[tuple[Itemset, int]]

    @property
    def total(self) -> int:
        return sum(c for _, c in self.paths)


class FPTree:
    """Prefix tree over transactions sorted by ``order``.

    ``order`` lists the frequent items, most frequent first; ``header``
    follows the same order.
    """

    def __init__(self, order: Sequence[int]) -> None:
        self.root = FPNode(None)
        self.order = list(order)
        self.rank = {item: r for r, item in enumerate(self.order)}
        self.header: dict[int, HeaderEntry] = {item: HeaderEntry() for item in self.order}

    def insert(self, items: Iterable[int], count: int = 1) -> None:
        """Insert one (possibly weighted) transaction; items outside ``order`` are dropped."""
        path = sorted((i for i in set(items) if i in self.rank), key=self.rank.__getitem__)
        node = self.root
        for item in path:
            child = node.children.get(item)
            if child is None:
                child = FPNode(item, 0, node)
                node.children[item] = child
                entry = self.header[item]
                if entry.tail is None:
                    entry.head = child
                else:
                    entry.tail.node_link = child
                entry.tail = child
            child.count += count
            self.header[item].count += count
            node = child

    def nodes(self) -> Iterator[FPNode]:
        stack = list(self.root.children.values())
        while stack:
            node = stack.pop()
            yield node
            stack.extend(node.children.values())


def order_items(f1: F1Index) -> list[int]:
    """Frequent items by descending support, ties by ascending name."""
    names = f1.dictionary.names
    return [e.item for e in sorted(f1, key=lambda e: (-e.support, names[e.item]))]


def build_fptree(db: TransactionDB, min_sup: int, stats: ScanStats | None = None) -> FPTree:
    """Two scans: one for the F1 counts, one to insert the filtered transactions."""
    f1 = build_f1_index(db, min_sup, stats)
    tree = FPTree(order_items(f1))
    for t in db:
        tree.insert(t.items)
    if stats is not None and len(db):
        stats.add_reads(1, len(db))
    return tree


def conditional_pattern_base(tree: FPTree, item: int) -> ConditionalPatternBase:
    if item not in tree.header:
        raise UnknownItem(item)
    paths = []
    for node in tree.header[item].chain():
        prefix = node.prefix()
        if prefix:
            paths.append((tuple(prefix), node.count))
    return ConditionalPatternBase(item, paths)


def _conditional_tree(base: ConditionalPatternBase, min_sup: int, names: Sequence[str]) -> FPTree:
    counts: Counter[int] = Counter()
    for path, c in base.paths:
        for i in path:
            counts[i] += c
    order = sorted((i for i, c in counts.items() if c >= min_sup), key=lambda i: (-counts[i], names[i]))
    tree = FPTree(order)
    for path, c in base.paths:
        tree.insert(path, c)
    return tree


def _grow(
    tree: FPTree, suffix: tuple[int, ...], min_sup: int, names: Sequence[str], out: dict[Itemset, int]
) -> None:
    # bottom of the order upward
    for item in reversed(tree.order):
        support = tree.header[item].count
        if support < min_sup:
            continue
        pattern = (item,) + suffix
        out[tuple(sorted(pattern))] = support
        base = conditional_pattern_base(tree, item)
        if base.paths:
            sub = _conditional_tree(base, min_sup, names)
            if sub.order:
                _grow(sub, pattern, min_sup, names, out)


def mine_fpgrowth(db: TransactionDB, min_sup: int) -> MiningResult:
    """Full FP-growth; levels carry no found-in tid lists."""
    if min_sup < 1:
        raise ValueError(f"min_sup must be >= 1, got {min_sup}")
    stats = ScanStats()
    tree = build_fptree(db, min_sup, stats)
    out: dict[Itemset, int] = {}
    _grow(tree, (), min_sup, db.dictionary.names, out)
    return MiningResult("fpgrowth", min_sup, regroup(out), stats)


def dump_tree(tree: FPTree, names: Sequence[str], indent: str = "  ") -> str:
    """Indented ``<item>:<count>`` lines, children in the tree's item order."""
    lines: list[str] = []

    def walk(node: FPNode, depth: int) -> None:
        for child in sorted(node.children.values(), key=lambda n: tree.rank[n.item]):
            lines.append(f"{indent * depth}{names[child.item]}:{child.count}")
            walk(child, depth + 1)

    lines.append("root")
    walk(tree.root, 1)
    return "\n".join(lines) + "\n"
