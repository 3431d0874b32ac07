import pytest

from datamarket import cli
from datamarket.cli import cli_main

SCENARIO = """M = 300
k = 0.5
gamma = 1
N = 100
a = 0.4944
b = 0.0079
q = 50
tau = 180
seed = 5
trials = 10
"""


@pytest.fixture
def scenario_file(tmp_path):
    path = tmp_path / "scenario.cfg"
    path.write_text(SCENARIO, encoding="utf-8")
    return str(path)


def lines_of(text):
    return dict(
        line.split(" = ", 1) for line in text.strip().splitlines() if " = " in line
    )


class TestFit:
    def test_writes_coefficients(self, tmp_path, capsys):
        points = tmp_path / "points.csv"
        points.write_text(
            "q,performance\n1,0.4944\n10,0.512589\n100,0.530781\n", encoding="utf-8"
        )
        out = tmp_path / "curve.txt"
        assert cli_main(["fit", "--points", str(points), "--out", str(out)]) == 0
        report = lines_of(out.read_text(encoding="utf-8"))
        assert float(report["a"]) == pytest.approx(0.4944, abs=1e-4)
        assert float(report["b"]) == pytest.approx(0.0079, abs=1e-5)
        assert float(report["rmse"]) < 1e-5
        assert report["n_points"] == "3"

    def test_prints_to_stdout_without_out(self, tmp_path, capsys):
        points = tmp_path / "points.csv"
        points.write_text("q,performance\n1,0.49\n100,0.53\n", encoding="utf-8")
        assert cli_main(["fit", "--points", str(points)]) == 0
        assert "a = " in capsys.readouterr().out

    def test_nonpositive_slope_warns_on_stderr(self, tmp_path, capsys):
        points = tmp_path / "points.csv"
        points.write_text("q,performance\n1,0.6\n100,0.4\n", encoding="utf-8")
        assert cli_main(["fit", "--points", str(points)]) == 0
        assert "not positive" in capsys.readouterr().err


class TestMetric:
    def test_reports_rate(self, tmp_path, capsys):
        preds = tmp_path / "preds.csv"
        preds.write_text("y_true,y_pred\n600,630\n600,850\n600,595\n", encoding="utf-8")
        assert cli_main(["metric", "--predictions", str(preds), "--tau", "60"]) == 0
        report = lines_of(capsys.readouterr().out)
        assert float(report["satisfaction_rate"]) == pytest.approx(2 / 3, abs=1e-6)
        assert report["n_records"] == "3"


class TestAuction:
    def test_allocation_table_and_summary(self, tmp_path, scenario_file, capsys):
        bids = tmp_path / "bids.csv"
        bids.write_text("customer_id,bid\nalice,0.6\nbob,0.3\ncarol,0.1\n", encoding="utf-8")
        assert cli_main(["auction", "--bids", str(bids), "--config", scenario_file]) == 0
        out = capsys.readouterr().out
        assert "customer_id,bid,allocation,payment" in out
        assert "alice,0.6,1,0.262652" in out
        assert "bob,0.3,1,0.262652" in out
        assert "carol,0.1,0,0" in out
        summary = lines_of(out)
        assert summary["winners"] == "2"
        assert float(summary["gross_profit"]) == pytest.approx(-24.4747, abs=1e-3)

    def test_table_goes_to_file_with_out(self, tmp_path, scenario_file, capsys):
        bids = tmp_path / "bids.csv"
        bids.write_text("customer_id,bid\nalice,0.6\n", encoding="utf-8")
        table = tmp_path / "table.csv"
        code = cli_main(
            ["auction", "--bids", str(bids), "--config", scenario_file, "--out", str(table)]
        )
        assert code == 0
        assert table.read_text(encoding="utf-8").startswith("customer_id,bid,")
        assert "threshold_price" in capsys.readouterr().out

    def test_requires_q_in_scenario(self, tmp_path, capsys):
        config = tmp_path / "noq.cfg"
        config.write_text(SCENARIO.replace("q = 50\n", ""), encoding="utf-8")
        bids = tmp_path / "bids.csv"
        bids.write_text("customer_id,bid\nalice,0.6\n", encoding="utf-8")
        assert cli_main(["auction", "--bids", str(bids), "--config", str(config)]) == 1
        assert "field q" in capsys.readouterr().err


class TestOptimize:
    def test_reports_optimum(self, scenario_file, capsys):
        assert cli_main(["optimize", "--config", scenario_file]) == 0
        report = lines_of(capsys.readouterr().out)
        # M=300: q* = 300*0.0079/2 = 1.185
        assert float(report["q_star"]) == pytest.approx(1.185, abs=1e-4)
        assert report["rejected"] == "false"

    def test_reports_rejection(self, tmp_path, capsys):
        config = tmp_path / "reject.cfg"
        config.write_text(
            "M = 10\nk = 1\ngamma = 1\nN = 100\na = 0.001\nb = 0.01\n", encoding="utf-8"
        )
        assert cli_main(["optimize", "--config", str(config)]) == 0
        report = lines_of(capsys.readouterr().out)
        assert report["rejected"] == "true"
        assert report["q_star"] == "0"


class TestSimulate:
    def test_summary_lines(self, scenario_file, capsys):
        assert cli_main(["simulate", "--config", scenario_file]) == 0
        report = lines_of(capsys.readouterr().out)
        assert report["M"] == "300"
        assert report["trials"] == "10"
        assert report["within_three_se"] in ("true", "false")

    def test_deterministic_output_bytes(self, scenario_file, capsys):
        assert cli_main(["simulate", "--config", scenario_file]) == 0
        first = capsys.readouterr().out
        assert cli_main(["simulate", "--config", scenario_file]) == 0
        assert capsys.readouterr().out == first

    def test_seed_override_changes_output(self, scenario_file, capsys):
        assert cli_main(["simulate", "--config", scenario_file, "--seed", "99"]) == 0
        first = capsys.readouterr().out
        assert cli_main(["simulate", "--config", scenario_file]) == 0
        assert capsys.readouterr().out != first


class TestSweep:
    def test_csv_written(self, tmp_path, scenario_file):
        out = tmp_path / "sweep.csv"
        code = cli_main(
            [
                "sweep", "--config", scenario_file, "--param", "q",
                "--lo", "1", "--hi", "100", "--steps", "10",
                "--trials", "2", "--out", str(out),
            ]
        )
        assert code == 0
        lines = out.read_text(encoding="utf-8").strip().splitlines()
        assert lines[0] == "value,expected_profit,optimal_price,optimal_q,empirical_mean,empirical_std"
        assert len(lines) == 11

    def test_identical_seeds_give_identical_files(self, tmp_path, scenario_file):
        args = [
            "sweep", "--config", scenario_file, "--param", "price",
            "--lo", "0", "--hi", "0.5", "--steps", "7", "--trials", "3",
        ]
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        assert cli_main(args + ["--out", str(a)]) == 0
        assert cli_main(args + ["--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_stdout_by_default(self, scenario_file, capsys):
        code = cli_main(
            ["sweep", "--config", scenario_file, "--param", "gamma",
             "--lo", "0.5", "--hi", "2", "--steps", "4", "--trials", "2"]
        )
        assert code == 0
        assert capsys.readouterr().out.startswith("value,")


class TestExitCodes:
    def test_no_arguments_is_usage_error(self, capsys):
        assert cli_main([]) == 1
        assert "usage" in capsys.readouterr().err

    def test_unknown_subcommand(self, capsys):
        assert cli_main(["appraise"]) == 1
        assert "usage" in capsys.readouterr().err

    def test_unknown_flag(self, scenario_file, capsys):
        assert cli_main(["optimize", "--config", scenario_file, "--fast"]) == 1
        assert "usage" in capsys.readouterr().err

    def test_missing_required_flag(self, capsys):
        assert cli_main(["fit"]) == 1
        assert "usage" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert cli_main(["optimize", "--config", "no/such/file.cfg"]) == 1
        assert "error" in capsys.readouterr().err

    def test_invalid_config_value(self, tmp_path, capsys):
        config = tmp_path / "bad.cfg"
        config.write_text(SCENARIO.replace("b = 0.0079", "b = -1"), encoding="utf-8")
        assert cli_main(["optimize", "--config", str(config)]) == 1
        assert "field b" in capsys.readouterr().err

    def test_invalid_sweep_parameter(self, scenario_file, capsys):
        code = cli_main(
            ["sweep", "--config", scenario_file, "--param", "price",
             "--lo", "5", "--hi", "1", "--steps", "4"]
        )
        assert code == 1
        assert "lo < hi" in capsys.readouterr().err

    def test_help_exits_zero(self, capsys):
        assert cli_main(["--help"]) == 0
        assert "usage" in capsys.readouterr().out

    def test_internal_error_maps_to_two(self, scenario_file, monkeypatch, capsys):
        def boom(config):
            raise RuntimeError("kaboom")

        monkeypatch.setattr(cli, "simulate", boom)
        assert cli_main(["simulate", "--config", scenario_file]) == 2
        assert "internal error" in capsys.readouterr().err
