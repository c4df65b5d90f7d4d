"""Frequent-itemset mining with classic Apriori, TID-indexed Apriori and FP-growth."""

__version__ = "0.1.0"

from .apriori import generate_candidates, mine_classic
from .errors import FreqMineError
from .fpgrowth import build_fptree, conditional_pattern_base, mine_fpgrowth
from .levels import FrequentLevel, FrequentRow, MiningResult, ScanStats
from .oracle import brute_force_frequent
from .rules import AssociationRule, generate_rules
from .tid_index import build_f1_index, mine_improved
from .transactions import TransactionDB, parse_basket_file, read_basket_file

__all__ = [
    "AssociationRule",
    "FreqMineError",
    "FrequentLevel",
    "FrequentRow",
    "MiningResult",
    "ScanStats",
    "TransactionDB",
    "brute_force_frequent",
    "build_f1_index",
    "build_fptree",
    "conditional_pattern_base",
    "generate_candidates",
    "generate_rules",
    "mine_classic",
    "mine_fpgrowth",
    "mine_improved",
    "parse_basket_file",
    "read_basket_file",
]
