"""Tests for the command-line interface."""

import json

from vantage.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitCodes:
    def test_unknown_subcommand(self, capsys):
        code, _, err = run_cli(capsys, "frobnicate")
        assert code == 2

    def test_no_arguments(self, capsys):
        assert main([]) == 2

    def test_missing_file(self, capsys):
        code, _, err = run_cli(capsys, "count-regions", "/no/such/file")
        assert code == 3

    def test_bad_formula(self, capsys):
        code, _, _ = run_cli(capsys, "formula", "nonexistent", "3")
        assert code == 3


class TestFormula:
    def test_max(self, capsys):
        code, out, _ = run_cli(capsys, "formula", "max", "5", "2")
        assert code == 0 and out.strip() == "46"

    def test_table(self, capsys):
        code, out, _ = run_cli(capsys, "formula", "table")
        assert code == 0 and "351" in out and "33632" in out


class TestConstructAndCount:
    def test_gap1d_pipeline(self, capsys, tmp_path):
        cfg = tmp_path / "gap.cfg"
        code, _, _ = run_cli(capsys, "construct", "gap1d", "-n", "8",
                             "-k", "20", "-o", str(cfg))
        assert code == 0
        code, out, _ = run_cli(capsys, "count-regions", str(cfg))
        assert code == 0 and "intervals=20" in out

    def test_round_trip_bit_exact(self, capsys, tmp_path):
        cfg = tmp_path / "free.cfg"
        code, _, _ = run_cli(capsys, "construct", "free", "-n", "4",
                             "--seed", "5", "-o", str(cfg))
        assert code == 0
        text = cfg.read_text()
        from vantage.geometry import config_from_text, config_to_text

        assert config_to_text(config_from_text(text)) == text

    def test_construct_requires_seed(self, capsys):
        code, _, err = run_cli(capsys, "construct", "free", "-n", "4")
        assert code == 3 and "seed" in err

    def test_summary_json(self, capsys, tmp_path):
        cfg = tmp_path / "f.cfg"
        run_cli(capsys, "construct", "free", "-n", "4", "--seed", "5",
                "-o", str(cfg))
        code, out, _ = run_cli(capsys, "count-regions", str(cfg),
                               "--summary-json")
        assert code == 0
        data = json.loads(out)
        assert data["regions_total"] == 18
        assert data["lines"] == 6 and data["raw_pairs"] == 6

    def test_count_sphere(self, capsys, tmp_path):
        cfg = tmp_path / "r.cfg"
        run_cli(capsys, "construct", "rectangle", "-o", str(cfg))
        code, out, _ = run_cli(capsys, "count-sphere", str(cfg))
        assert code == 0 and "total=8" in out


class TestOrdering:
    def test_basic(self, capsys, tmp_path):
        cfg = tmp_path / "line.cfg"
        run_cli(capsys, "construct", "line", "-n", "3", "-o", str(cfg))
        code, out, _ = run_cli(capsys, "ordering", str(cfg),
                               "--vantage", "0,0")
        assert code == 0 and out.splitlines()[0] == "1 < 2 < 3"

    def test_tie_reported(self, capsys, tmp_path):
        cfg = tmp_path / "line.cfg"
        run_cli(capsys, "construct", "line", "-n", "3", "-o", str(cfg))
        code, out, _ = run_cli(capsys, "ordering", str(cfg),
                               "--vantage", "3/2,0")
        assert code == 0 and "ties present" in out and "{1,2}" in out

    def test_weighted(self, capsys, tmp_path):
        cfg = tmp_path / "pts.cfg"
        cfg.write_text("dim=2 field=Q sphere=0\n1 2\n2 1\n")
        code, out, _ = run_cli(capsys, "ordering", str(cfg),
                               "--vantage", "0,0", "--weights", "2,1")
        assert code == 0 and out.splitlines()[0] == "1 < 2"


class TestTwoVantage:
    def test_collinear_run(self, capsys, tmp_path):
        cfg = tmp_path / "line.cfg"
        run_cli(capsys, "construct", "line", "-n", "4", "-o", str(cfg))
        code, out, _ = run_cli(capsys, "two-vantage", str(cfg),
                               "--budget", "2000", "--seed", "9",
                               "--collinear-checks")
        assert code == 0
        assert "distinct=8" in out and "violations: 0" in out


class TestSearchAndReport:
    def test_search_report_cycle(self, capsys, tmp_path):
        store = tmp_path / "w.jsonl"
        code, out, _ = run_cli(capsys, "search-achievable", "-n", "3",
                               "--budget", "300", "--seed", "4",
                               "--store", str(store), "--jobs", "1")
        assert code == 0 and "min=4 max=6" in out
        code, out, _ = run_cli(capsys, "report", "--store", str(store))
        assert code == 0 and "re-verify" in out


class TestTables:
    def test_platonic_table(self, capsys):
        code, out, _ = run_cli(capsys, "platonic-table")
        assert code == 0
        assert "tetrahedron" in out and "240" in out

    def test_verify_single_criterion(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--only", "1")
        assert code == 0 and "[PASS] criterion 1" in out
