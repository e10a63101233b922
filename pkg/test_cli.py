"""
Tests for the command line interface
"""
import json
import logging
import math

import pandas as pd
import pytest
from click.testing import CliRunner

import main
from main import cli
from measure_io import write_measure_file
from reports import VerificationReport
from starlike import gh_ratio, koebe_map


@pytest.fixture
def runner():
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        return CliRunner()


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


def _value(output: str, key: str) -> float:
    for line in output.splitlines():
        parts = line.split()
        if len(parts) == 2 and parts[0] == key:
            return float(parts[1])
    raise AssertionError(f"no {key!r} line in output:\n{output}")


class TestConstant:
    def test_alpha_zero(self, runner):
        result = runner.invoke(cli, ["constant", "--alpha", "0"])
        assert result.exit_code == 0
        assert _value(result.output, "beta") == pytest.approx(2.0, abs=1e-12)
        assert _value(result.output, "crude") == pytest.approx(2.0, abs=1e-12)

    def test_alpha_half(self, runner):
        result = runner.invoke(cli, ["constant", "--alpha", "0.5"])
        assert result.exit_code == 0
        assert _value(result.output, "beta") == pytest.approx(math.pi / 2, abs=1e-12)
        assert 1.588 <= _value(result.output, "crude") <= 1.589
        assert _value(result.output, "gap") > 0.0

    @pytest.mark.parametrize("alpha", ["1", "-0.5"])
    def test_out_of_range(self, runner, alpha):
        result = runner.invoke(cli, ["constant", "--alpha", alpha])
        assert result.exit_code == 2


class TestVerify:
    def test_lemma2_writes_report(self, runner, tmp_path):
        out = tmp_path / "lemma2.json"
        result = runner.invoke(cli, ["verify", "--suite", "lemma2", "--grid", "10", "--out", str(out)])
        assert result.exit_code == 0
        report = json.loads(out.read_text(encoding="utf-8"))
        assert report["suite"] == "lemma2"
        assert report["passed"] is True
        assert report["grid"] == "10x10x10"

    def test_main_writes_both_reports(self, runner, tmp_path):
        out = tmp_path / "main.json"
        args = ["verify", "--suite", "main", "--alpha", "0.5", "--grid", "2", "--workers", "1", "--out", str(out)]
        result = runner.invoke(cli, args)
        assert result.exit_code == 0
        reports = json.loads(out.read_text(encoding="utf-8"))
        assert [r["suite"] for r in reports] == ["main", "main_boundary"]
        assert all(r["alpha"] == 0.5 for r in reports)

    def test_failure_exit_code(self, runner, tmp_path, monkeypatch):
        failing = VerificationReport.from_margins("demo", [-1.0], [{"x": 0.0}], 0.0, "1")
        monkeypatch.setattr(main, "run_suite", lambda *args, **kwargs: [failing])
        out = tmp_path / "demo.json"
        result = runner.invoke(cli, ["verify", "--suite", "lemma2", "--out", str(out)])
        assert result.exit_code == 1
        assert json.loads(out.read_text(encoding="utf-8"))["passed"] is False

    def test_lemma1_runs_without_seed(self, runner, tmp_path):
        out = tmp_path / "lemma1.json"
        args = ["verify", "--suite", "lemma1", "--alpha", "0.5", "--grid", "4", "--maps", "1", "--out", str(out)]
        result = runner.invoke(cli, args)
        assert result.exit_code == 0
        reports = json.loads(out.read_text(encoding="utf-8"))
        assert len(reports) == 5
        assert all(r["passed"] for r in reports)

    def test_theorem_without_seed(self, runner):
        result = runner.invoke(cli, ["verify", "--suite", "theorem", "--alpha", "0.5"])
        assert result.exit_code == 2

    def test_unknown_suite(self, runner):
        result = runner.invoke(cli, ["verify", "--suite", "lemma9"])
        assert result.exit_code == 2

    def test_unwritable_output(self, runner, tmp_path):
        out = tmp_path / "missing" / "report.json"
        result = runner.invoke(cli, ["verify", "--suite", "lemma2", "--grid", "5", "--out", str(out)])
        assert result.exit_code == 2


class TestSweep:
    def test_main_csv(self, runner, tmp_path):
        out = tmp_path / "main.csv"
        result = runner.invoke(cli, ["sweep", "--what", "main", "--alpha", "0", "--grid", "2", "--out", str(out)])
        assert result.exit_code == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "alpha,s,t,I_sum,bound,margin"
        df = pd.read_csv(out)
        assert len(df) == 4
        assert (df["margin"] >= -1e-6).all()
        assert df["I_sum"].tolist() == pytest.approx(df.iloc[[0, 2, 1, 3]]["I_sum"].tolist())

    def test_lemma5_two_alphas(self, runner, tmp_path):
        out = tmp_path / "lemma5.csv"
        args = ["sweep", "--what", "lemma5", "--alpha", "0", "--alpha", "0.5", "--grid", "3", "--out", str(out)]
        result = runner.invoke(cli, args)
        assert result.exit_code == 0
        df = pd.read_csv(out)
        assert list(df.columns) == ["alpha", "a", "U", "G_gamma_at_1"]
        assert len(df) == 6
        assert df["a"].iloc[1] == pytest.approx(1.0)

    def test_g1_json(self, runner, tmp_path):
        out = tmp_path / "g1.json"
        result = runner.invoke(cli, ["sweep", "--what", "g1", "--grid", "3", "--format", "json", "--out", str(out)])
        assert result.exit_code == 0
        rows = json.loads(out.read_text(encoding="utf-8"))
        assert [row["a"] for row in rows] == pytest.approx([0.25, 0.5, 0.75])

    @pytest.mark.parametrize("output_format", ["csv", "json"])
    def test_rerun_is_byte_identical(self, runner, tmp_path, output_format):
        outputs = []
        for run, workers in enumerate(["1", "2"]):
            out = tmp_path / f"run{run}.{output_format}"
            args = [
                "sweep", "--what", "main", "--alpha", "0.25", "--grid", "3",
                "--format", output_format, "--workers", workers, "--out", str(out),
            ]
            assert runner.invoke(cli, args).exit_code == 0
            outputs.append(out.read_bytes())
        assert outputs[0] == outputs[1]

    def test_invalid_alpha(self, runner, tmp_path):
        result = runner.invoke(cli, ["sweep", "--alpha", "1.0", "--out", str(tmp_path / "x.csv")])
        assert result.exit_code == 2

    def test_unwritable_path(self, runner, tmp_path):
        result = runner.invoke(cli, ["sweep", "--grid", "2", "--out", str(tmp_path / "missing" / "x.csv")])
        assert result.exit_code == 2


class TestRatio:
    @pytest.fixture
    def koebe_file(self, tmp_path):
        path = tmp_path / "koebe.json"
        write_measure_file(koebe_map(0.0), path)
        return path

    def test_koebe_positive_axis(self, runner, koebe_file):
        result = runner.invoke(cli, ["ratio", str(koebe_file), "--r", "0.9", "--theta", "0"])
        assert result.exit_code == 0
        assert _value(result.output, "ratio") == pytest.approx(1.0, abs=1e-8)
        assert _value(result.output, "modulus") == pytest.approx(90.0, rel=1e-12)
        assert _value(result.output, "beta") == pytest.approx(2.0)

    def test_matches_library_ratio(self, runner, koebe_file):
        result = runner.invoke(cli, ["ratio", str(koebe_file), "--r", "0.7", "--theta", "1.0"])
        assert result.exit_code == 0
        assert _value(result.output, "ratio") == pytest.approx(gh_ratio(koebe_map(0.0), 0.7, 1.0), rel=1e-12)

    def test_near_boundary_example(self, runner, koebe_file):
        result = runner.invoke(cli, ["ratio", str(koebe_file), "--r", "0.99999", "--theta", "0.001"])
        assert result.exit_code == 0
        assert _value(result.output, "ratio") == pytest.approx(2.0, rel=0.03)
        assert _value(result.output, "slack") >= -1e-9

    @pytest.mark.parametrize("raw", ["inf", "1e400"])
    def test_non_finite_budget_is_ignored(self, runner, koebe_file, raw):
        result = runner.invoke(cli, ["ratio", str(koebe_file), "--r", "0.9", "--theta", "0"], env={"HALLGH_MAX_EVALS": raw})
        assert result.exit_code == 0
        assert _value(result.output, "ratio") == pytest.approx(1.0, abs=1e-8)

    def test_radius_out_of_range(self, runner, koebe_file):
        result = runner.invoke(cli, ["ratio", str(koebe_file), "--r", "1.0"])
        assert result.exit_code == 2

    def test_malformed_measure(self, runner, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        result = runner.invoke(cli, ["ratio", str(path), "--r", "0.5"])
        assert result.exit_code == 2


class TestSharpness:
    def test_limit_approaches_beta(self, runner):
        result = runner.invoke(cli, ["sharpness", "--alpha", "0", "--t-min", "1e-6"])
        assert result.exit_code == 0
        rows = [line.split() for line in result.output.splitlines() if line.strip() and line.split()[0] != "T"]
        rows = [row for row in rows if len(row) == 3]
        assert len(rows) == 7
        T, limit, beta = (float(x) for x in rows[-1])
        assert T == pytest.approx(1e-6)
        assert limit == pytest.approx(beta, rel=0.01)

    def test_non_finite_budget_does_not_crash(self, runner):
        result = runner.invoke(cli, ["sharpness", "--alpha", "0", "--t-min", "0.1"], env={"HALLGH_MAX_EVALS": "inf"})
        assert result.exit_code == 0

    def test_budget_exhaustion_exits_three(self, runner):
        result = runner.invoke(
            cli, ["sharpness", "--alpha", "0", "--t-min", "1e-6"], env={"HALLGH_MAX_EVALS": "60"}
        )
        assert result.exit_code == 3

    def test_bad_t_min(self, runner):
        result = runner.invoke(cli, ["sharpness", "--alpha", "0", "--t-min", "2"])
        assert result.exit_code == 2
