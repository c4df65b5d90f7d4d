import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from freqmine.transactions import TransactionDB, read_basket_file

DATA = Path(__file__).parent / "data"
TABLE1_PATH = DATA / "table1.basket"

TABLE1 = [
    ["Milk", "Cheese"],
    ["Milk", "Coffee", "Butter"],
    ["Jam", "Bread"],
    ["Bread", "Butter", "Cheese"],
    ["Coffee", "Milk"],
    ["Milk", "Bread", "Butter", "Jam"],
    ["Milk", "Bread", "Butter", "Jam", "Cheese"],
]


@pytest.fixture
def table1() -> TransactionDB:
    return read_basket_file(TABLE1_PATH)


def ids(db, *names):
    return db.dictionary.ids(names)


def random_db(rng: random.Random, max_m: int = 40, max_items: int = 10) -> TransactionDB:
    n_items = rng.randint(1, max_items)
    alphabet = [f"i{j}" for j in range(n_items)]
    rows = []
    for _ in range(rng.randint(1, max_m)):
        rows.append(rng.sample(alphabet, rng.randint(1, n_items)))
    return TransactionDB.from_itemsets(rows)


item_names = st.sampled_from([f"i{j}" for j in range(8)])
baskets = st.lists(st.lists(item_names, min_size=1, max_size=8), min_size=1, max_size=30)


@st.composite
def databases(draw):
    return TransactionDB.from_itemsets(draw(baskets))


_acceptance: list[tuple[str, str]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome.upper()))
    elif "test_acceptance.py" in report.nodeid and report.when == "setup" and report.outcome != "passed":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome.upper()))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'PASSED' else 'FAIL'}  {name}")
