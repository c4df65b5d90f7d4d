"""Association rules from frequent itemsets, with exact rational confidence."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .errors import InconsistentInput
from .levels import FrequentLevel
from .transactions import Itemset


@dataclass(frozen=True)
class AssociationRule:
    antecedent: Itemset
    consequent: Itemset
    support: int
    antecedent_support: int

    @property
    def confidence(self) -> Fraction:
        return Fraction(self.support, self.antecedent_support)

    @property
    def items(self) -> Itemset:
        return tuple(sorted(self.antecedent + self.consequent))


def as_fraction(value: float | str | Fraction) -> Fraction:
    """Exact decimal reading of ``value`` (0.7 -> 7/10, not the binary float)."""
    if isinstance(value, Fraction):
        return value
    return Fraction(str(value))


def generate_rules(levels: Iterable[FrequentLevel], min_conf: float | str | Fraction) -> list[AssociationRule]:
    """Every rule S -> L\\S over frequent L with confidence >= ``min_conf``.

    Sorted by descending confidence, descending support, then antecedent
    and consequent in canonical order.
    """
    threshold = as_fraction(min_conf)
    if not 0 < threshold <= 1:
        raise ValueError(f"min_conf must be in (0, 1], got {min_conf}")
    support = {row.itemset: row.support for level in levels for row in level}
    rules = []
    for itemset, sup in support.items():
        if len(itemset) < 2:
            continue
        for size in range(1, len(itemset)):
            for ante in combinations(itemset, size):
                try:
                    ante_sup = support[ante]
                except KeyError:
                    raise InconsistentInput(f"support of subset {ante} of {itemset} missing") from None
                if Fraction(sup, ante_sup) >= threshold:
                    cons = tuple(i for i in itemset if i not in ante)
                    rules.append(AssociationRule(ante, cons, sup, ante_sup))
    rules.sort(key=lambda r: (-r.confidence, -r.support, r.antecedent, r.consequent))
    return rules
