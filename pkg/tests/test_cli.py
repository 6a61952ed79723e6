import subprocess
import sys

from stableprobe.cli import main
from stableprobe.harness import read_csv


def test_bench_writes_csv(tmp_path):
    out = tmp_path / "f.csv"
    code = main(["bench", "--m", "1000", "--alpha", "0.6", "--policy", "random",
                 "--rounds", "500", "--measure-every", "100", "--seed", "3",
                 "--variant", "minimal", "--out", str(out)])
    assert code == 0
    records = read_csv(out)
    assert [r.deletions for r in records] == [0, 100, 200, 300, 400, 500]
    assert all(r.elements == 600 for r in records)


def test_bench_is_deterministic(tmp_path):
    args = ["bench", "--m", "300", "--rounds", "1000", "--variant", "naive", "--seed", "8"]
    main(args + ["--out", str(tmp_path / "a.csv")])
    main(args + ["--out", str(tmp_path / "b.csv")])
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_bench_stdout(capsys):
    assert main(["bench", "--m", "100", "--rounds", "0"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "deletions,avg_successful,avg_unsuccessful,tombstones,elements"
    assert len(lines) == 2


def test_bench_rejects_bad_alpha(capsys):
    assert main(["bench", "--alpha", "1.5"]) == 2
    assert "usage:" in capsys.readouterr().err


def test_bench_rejects_tiny_fill(capsys):
    assert main(["bench", "--m", "10", "--alpha", "0.01"]) == 2
    assert "usage:" in capsys.readouterr().err


def test_unknown_subcommand_and_flag(capsys):
    assert main(["frobnicate"]) == 2
    assert main(["check", "--bogus"]) == 2
    assert main([]) == 2
    assert "usage:" in capsys.readouterr().err


def test_check_passes(capsys):
    assert main(["check", "--seed", "42", "--ops", "3000", "--m", "64"]) == 0
    assert capsys.readouterr().out.startswith("ok:")


def test_check_reports_violation(capsys):
    assert main(["check", "--seed", "1", "--ops", "3000", "--m", "64", "--variant", "naive"]) == 1
    assert capsys.readouterr().out.startswith("UnjustifiedTombstone\t")


def test_demo_lru(capsys):
    assert main(["demo-lru", "--capacity", "8", "--ops", "2000", "--seed", "1"]) == 0
    assert capsys.readouterr().out.startswith("ok:")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "stableprobe", "bench", "--alpha", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert "usage:" in proc.stderr
