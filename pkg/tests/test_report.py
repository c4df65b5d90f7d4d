import csv

from freqmine.report import run_bench


def test_run_bench_writes_tables_and_figures(tmp_path):
    report = run_bench(tmp_path, group_sizes=(200, 300, 400, 500, 600), sweep=(0.06, 0.1), algorithms=("classic", "improved", "fpgrowth"))
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["groups.csv", "groups.json", "groups.png", "minsup.csv", "minsup.json", "minsup.png"]
    for png in ("groups.png", "minsup.png"):
        assert (tmp_path / png).read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
    with open(tmp_path / "groups.csv") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 15 == len(report.groups)


def test_run_bench_without_output_dir():
    report = run_bench(None, group_sizes=(100, 100, 100, 100, 100), sweep=(0.1,))
    assert report.files == []
    assert len(report.sweep) == 2
