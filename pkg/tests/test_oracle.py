from itertools import combinations

import pytest
from hypothesis import given

from freqmine.errors import OracleLimitExceeded
from freqmine.oracle import brute_force_frequent
from freqmine.transactions import TransactionDB

from .conftest import databases, ids


def universe_count(db, min_sup, max_k):
    """Second, independent enumeration: every subset of the item universe."""
    out = {}
    items = sorted({i for t in db for i in t.items})
    for k in range(1, max_k + 1):
        for c in combinations(items, k):
            tids = tuple(t.tid for t in db if set(c) <= set(t.items))
            if len(tids) >= min_sup:
                out[c] = tids
    return out


def test_table1_single_items(table1):
    got = brute_force_frequent(table1, 2, max_k=1)
    d = table1.dictionary
    assert {d.name(k[0]): v.support for k, v in got.items()} == {
        "Milk": 5, "Cheese": 3, "Coffee": 2, "Bread": 4, "Butter": 4, "Jam": 3,
    }


def test_min_sup_above_m(table1):
    assert brute_force_frequent(table1, 8) == {}


def test_milk_coffee_pair(table1):
    got = brute_force_frequent(table1, 2, max_k=2)
    entry = got[ids(table1, "Milk", "Coffee")]
    assert entry.support == 2 and entry.tids == (2, 5)


def test_max_k_beyond_longest_transaction(table1):
    assert brute_force_frequent(table1, 1, max_k=50) == brute_force_frequent(table1, 1)


@given(databases())
def test_agrees_with_universe_enumeration(db):
    got = {k: v.tids for k, v in brute_force_frequent(db, 2, max_k=3).items()}
    assert got == universe_count(db, 2, 3)


@given(databases())
def test_support_is_tid_count_and_antimonotone(db):
    got = brute_force_frequent(db, 1)
    for itemset, entry in got.items():
        assert entry.support == len(entry.tids)
        for k in range(1, len(itemset)):
            for sub in combinations(itemset, k):
                assert got[sub].support >= entry.support


def test_guard_on_long_transactions():
    db = TransactionDB.from_itemsets([[f"x{i}" for i in range(20)]])
    with pytest.raises(OracleLimitExceeded):
        brute_force_frequent(db, 1)
    assert len(brute_force_frequent(db, 1, max_k=2)) == 20 + 190
