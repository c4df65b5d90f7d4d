import io
import json

import pytest

from freqmine.cli import parse_levels_csv, run

from .conftest import TABLE1_PATH


def cli(*argv):
    out = io.StringIO()
    code = run([str(a) for a in argv], stdout=out)
    return code, out.getvalue()


def test_mine_table_layout():
    code, out = cli("mine", "--input", TABLE1_PATH, "--min-sup", 2, "--algorithm", "improved")
    assert code == 0
    assert "Milk, Butter | 3 | T2,T6,T7" in out
    assert "Milk, Cheese | 2 | T1,T7" in out


def test_fractional_min_sup_uses_ceiling():
    code, out = cli("mine", "-i", TABLE1_PATH, "--min-sup", "0.3", "-o", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["min_sup"] == 3


def test_compare():
    code, out = cli("compare", "--input", TABLE1_PATH, "--min-sup", 2, "-o", "json")
    assert code == 0
    s = json.loads(out)
    assert s["frequent_count"]["classic"] == s["frequent_count"]["improved"]
    assert s["identical_results"]
    assert s["records_read"]["improved"] < s["records_read"]["classic"]
    code, text = cli("compare", "--input", TABLE1_PATH, "--min-sup", 2)
    assert "2 | 105 | 43 | 59.05" in text


@pytest.mark.parametrize("algorithm", ["classic", "improved", "fpgrowth"])
def test_csv_round_trip(algorithm):
    code, out = cli("mine", "-i", TABLE1_PATH, "--min-sup", 2, "-a", algorithm, "-o", "csv")
    assert code == 0
    got = parse_levels_csv(out)
    assert got[("Milk", "Butter")] == 3
    assert got[("Milk", "Butter", "Jam", "Bread")] == 2
    assert len(got) == 22


def test_output_is_byte_identical():
    a = cli("mine", "-i", TABLE1_PATH, "--min-sup", 2, "-o", "json")
    b = cli("mine", "-i", TABLE1_PATH, "--min-sup", 2, "-o", "json")
    assert a == b


def test_partitioned_mine_matches_plain():
    _, plain = cli("mine", "-i", TABLE1_PATH, "--min-sup", 2, "-o", "csv")
    _, parted = cli("mine", "-i", TABLE1_PATH, "--min-sup", 2, "-o", "csv", "--base", 2)
    assert plain == parted


def test_only_partition_is_watermarked():
    code, out = cli("mine", "-i", TABLE1_PATH, "--min-sup", 2, "--partitions", 2, "--only-partition", 0, "-o", "csv")
    assert code == 0
    assert out.startswith("# PARTIAL (single-cluster)")
    assert parse_levels_csv(out)[("Milk",)] == 2
    code, out = cli("mine", "-i", TABLE1_PATH, "--min-sup", 2, "--partitions", 2, "--only-partition", 1)
    assert out.splitlines()[0].startswith("PARTIAL (single-cluster): partition 1 of 2, T5..T7")


def test_rules_output():
    code, out = cli("rules", "-i", TABLE1_PATH, "--min-sup", 2, "--min-conf", "0.75")
    assert code == 0
    assert "Butter -> Milk | support 3 | confidence 0.7500" in out
    assert "Coffee -> Milk | support 2 | confidence 1.0000" in out


def test_dump_tree():
    code, out = cli("dump-tree", "-i", TABLE1_PATH, "--min-sup", 3)
    assert code == 0
    assert out.splitlines()[1] == "  Milk:5"


@pytest.mark.parametrize(
    "argv",
    [
        ("mine", "-i", TABLE1_PATH, "--min-sup", "1.5"),
        ("mine", "-i", TABLE1_PATH, "--min-sup", "0"),
        ("mine", "-i", TABLE1_PATH, "--min-sup", "abc"),
        ("mine", "-i", TABLE1_PATH, "--min-sup", 2, "--bogus"),
        ("mine", "-i", TABLE1_PATH, "--min-sup", 2, "--only-partition", 0),
        ("mine", "-i", TABLE1_PATH, "--min-sup", 2, "-a", "classic", "--partitions", 2),
        ("rules", "-i", TABLE1_PATH, "--min-sup", 2, "--min-conf", "0"),
    ],
)
def test_usage_errors(argv):
    assert cli(*argv)[0] == 2


def test_data_errors(tmp_path):
    assert cli("mine", "-i", tmp_path / "missing.basket", "--min-sup", 2)[0] == 1
    empty = tmp_path / "empty.basket"
    empty.write_text("# nothing\n")
    assert cli("mine", "-i", empty, "--min-sup", 2)[0] == 1
    blank = tmp_path / "blank.basket"
    blank.write_text("A B\n\nC\n")
    assert cli("mine", "-i", blank, "--min-sup", 1)[0] == 0
    assert cli("mine", "-i", blank, "--min-sup", 1, "--strict")[0] == 1


def test_bench_command(tmp_path):
    code, out = cli("bench", "--out-dir", tmp_path, "--no-figures", "--sweep", "0.08,0.1", "--group-min-sup", "0.1")
    assert code == 0
    assert out.startswith("dataset,algorithm,min_sup,elapsed_ms,records_read,candidates,frequent_count,reduction_pct")
    assert sorted(p.name for p in tmp_path.iterdir()) == ["groups.csv", "groups.json", "minsup.csv", "minsup.json"]
