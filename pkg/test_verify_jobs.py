"""
Tests for verification reports and the verification suites on small grids
"""
import json
import logging
import math

import numpy as np
import pytest
from pydantic import ValidationError

import verify_jobs
from errors import DomainError
from grid_runner import GridRunner
from reports import VerificationReport
from verify_jobs import (
    THEOREM_ALPHAS,
    corner_points,
    interior_grid,
    run_suite,
    theorem_map_seeds,
    verify_beta,
    verify_chain,
    verify_lemma1,
    verify_lemma2,
    verify_lemma3,
    verify_lemma4,
    verify_lemma5,
    verify_main_boundary,
    verify_main_claim,
    verify_sharpness,
    verify_theorem,
)


@pytest.fixture
def serial():
    return GridRunner(1)


class TestVerificationReport:
    def test_from_margins_picks_the_worst(self):
        report = VerificationReport.from_margins(
            "demo", [0.5, -2e-9, 0.1], [{"x": 0.0}, {"x": 1.0}, {"x": 2.0}], 1e-8, grid="3"
        )
        assert report.worst_margin == -2e-9
        assert report.worst_location == {"x": 1.0}
        assert report.passed

    def test_ties_resolve_to_first_index(self):
        report = VerificationReport.from_margins("demo", [1.0, 0.0, 0.0], [{"i": 0}, {"i": 1}, {"i": 2}], 0.0, "3")
        assert report.worst_location == {"i": 1.0}

    def test_nan_margin_fails(self):
        report = VerificationReport.from_margins("demo", [1.0, math.nan], [{"i": 0}, {"i": 1}], 1.0, "2")
        assert report.worst_margin == -math.inf
        assert report.worst_location == {"i": 1.0}
        assert not report.passed
        assert json.loads(report.model_dump_json())["worst_margin"] is None

    def test_from_grid_location(self):
        margins = np.array([[1.0, 2.0, 3.0], [4.0, 5.0, -6.0]])
        report = VerificationReport.from_grid("demo", margins, {"a": np.array([10.0, 20.0]), "b": np.arange(3.0)}, 0.1)
        assert report.grid == "2x3"
        assert report.worst_location == {"a": 20.0, "b": 2.0}
        assert not report.passed

    def test_from_grid_shape_mismatch(self):
        with pytest.raises(ValueError):
            VerificationReport.from_grid("demo", np.zeros((2, 2)), {"a": np.arange(3.0)}, 0.0)

    def test_from_margins_length_mismatch(self):
        with pytest.raises(ValueError):
            VerificationReport.from_margins("demo", [1.0, 2.0], [{"i": 0}], 0.0, "2")

    def test_passed_must_agree_with_margin(self):
        with pytest.raises(ValidationError):
            VerificationReport(suite="demo", grid="1", tolerance=0.0, worst_margin=-1.0, passed=True)

    def test_tolerance_is_nonnegative(self):
        with pytest.raises(ValidationError):
            VerificationReport(suite="demo", grid="1", tolerance=-1.0, worst_margin=1.0, passed=True)

    def test_summary(self):
        report = VerificationReport.from_margins("demo", [0.25], [{"s": 0.5}], 0.0, "1", alpha=0.5)
        assert report.summary().startswith("PASS demo alpha=0.5 grid=1")


class TestGrids:
    def test_interior_grid(self):
        assert interior_grid(3, 4.0).tolist() == [1.0, 2.0, 3.0]
        with pytest.raises(DomainError):
            interior_grid(1, 1.0)

    def test_corner_points(self):
        assert corner_points(1.0, 2) == [(0.5, 0.5), (0.5, 1.0), (0.25, 0.25), (0.25, 0.5)]

    def test_theorem_seeds_are_deterministic(self):
        assert theorem_map_seeds(7, 5) == theorem_map_seeds(7, 5)
        assert len(set(theorem_map_seeds(7, 5))) == 5


class TestSuites:
    def test_lemma1(self, serial):
        reports = verify_lemma1(0.5, seed=3, n_maps=2, u_points=8, runner=serial)
        assert [r.suite for r in reports] == [
            "lemma1_identity", "lemma1_jensen", "lemma1_pointwise", "lemma1_bound", "lemma1_length",
        ]
        assert all(r.passed and r.grid == "2x8" and r.alpha == 0.5 for r in reports)
        assert reports[-1].details["max_ratio"] <= reports[-1].details["beta"]

    def test_lemma1_is_reproducible(self, serial):
        first = verify_lemma1(0.0, seed=11, n_maps=2, u_points=4, runner=serial)
        second = verify_lemma1(0.0, seed=11, n_maps=2, u_points=4, runner=serial)
        assert [r.worst_margin for r in first] == [r.worst_margin for r in second]

    def test_lemma1_domain(self, serial):
        with pytest.raises(DomainError):
            verify_lemma1(0.5, n_maps=0, runner=serial)

    def test_lemma2(self):
        report = verify_lemma2(10)
        assert report.passed
        assert report.grid == "10x10x10"
        assert report.details["phi_min"] >= -1e-12
        assert report.details["phi_at_zero_max_abs"] <= 1e-15

    def test_lemma3(self, serial):
        report = verify_lemma3(3, gammas=(0.5, 1.0), runner=serial)
        assert report.passed
        assert set(report.worst_location) == {"gamma", "S", "T"}

    def test_lemma4(self):
        report = verify_lemma4(20)
        assert report.passed
        assert report.details["closed_vs_quadrature"] >= -1e-8
        assert report.details["monotone_step_min"] > 0.0

    def test_lemma5(self, serial):
        report = verify_lemma5(a_values=(0.5, 2.0), gammas=(0.0, 1.0), runner=serial)
        assert report.passed
        assert report.details["G_gamma_at_1"]["1"] == pytest.approx(2.0, abs=1e-10)

    def test_main_claim(self, serial):
        report = verify_main_claim(0.0, grid_n=3, corner_levels=2, runner=serial)
        assert report.passed
        assert report.alpha == 0.0
        assert report.grid == "3x3+corner2"
        assert report.details["bound"] == pytest.approx(2.0)
        assert len(report.details["corner_sups"]) == 4

    def test_main_boundary(self, serial):
        report = verify_main_boundary(0.5, grid_n=2, runner=serial)
        assert report.suite == "main_boundary"
        assert report.grid == "2x4"
        assert report.passed

    def test_beta(self):
        report = verify_beta((0.0, 0.5))
        assert report.passed
        assert report.worst_margin >= -1e-9

    def test_chain(self, serial):
        reports = verify_chain(3, gammas=(0.0, 1.0), runner=serial)
        assert [r.suite for r in reports] == ["chain_domination", "chain_argmax", "chain_identity"]
        assert all(r.passed for r in reports)

    def test_theorem_is_reproducible(self, serial):
        first = verify_theorem(0.5, seed=7, n_maps=2, grid_n=3, runner=serial)
        second = verify_theorem(0.5, seed=7, n_maps=2, grid_n=3, runner=serial)
        assert first.passed
        assert first.worst_margin == second.worst_margin
        assert first.details["min_ratio"] >= 1.0 - 1e-9

    def test_theorem_domain(self, serial):
        with pytest.raises(DomainError):
            verify_theorem(0.5, seed=7, n_maps=0, runner=serial)

    def test_sharpness(self):
        report = verify_sharpness()
        assert report.passed
        assert report.tolerance == 0.0
        assert report.details["limit_alpha_0"] == pytest.approx(2.0, rel=0.01)


class TestRunSuite:
    def test_unknown_suite(self):
        with pytest.raises(DomainError):
            run_suite("lemma9")

    def test_theorem_needs_seed(self):
        with pytest.raises(DomainError):
            run_suite("theorem", alpha=0.5)

    def test_invalid_alpha(self):
        with pytest.raises(DomainError):
            run_suite("beta", alpha=1.0)

    def test_main_yields_claim_and_boundary(self, serial):
        reports = run_suite("main", alpha=0.0, grid=2, runner=serial)
        assert [r.suite for r in reports] == ["main", "main_boundary"]

    def test_lemma1_overrides(self, serial):
        reports = run_suite("lemma1", alpha=0.25, grid=4, n_maps=1, seed=5, runner=serial)
        assert len(reports) == 5
        assert all(r.grid == "1x4" and r.details["seed"] == 5 for r in reports)

    @pytest.mark.parametrize("suite, target", [("lemma5", "verify_lemma5"), ("sharpness", "verify_sharpness")])
    def test_grid_without_effect_is_reported(self, monkeypatch, caplog, suite, target):
        monkeypatch.setattr(verify_jobs, target, lambda *args, **kwargs: "report")
        with caplog.at_level(logging.WARNING, logger="verify_jobs"):
            assert run_suite(suite, grid=7) == ["report"]
        assert any("no effect" in rec.getMessage() and suite in rec.getMessage() for rec in caplog.records)

    def test_grid_with_effect_is_silent(self, caplog):
        with caplog.at_level(logging.WARNING, logger="verify_jobs"):
            run_suite("lemma2", grid=3)
        assert not [rec for rec in caplog.records if rec.levelno >= logging.WARNING]

    def test_overrides(self):
        reports = run_suite("lemma2", grid=5, tol=0.0)
        assert len(reports) == 1
        assert reports[0].grid == "5x5x5"
        assert reports[0].tolerance == 0.0


@pytest.mark.slow
class TestFullSizeSuites:
    def test_lemma2_default_grid(self):
        assert verify_lemma2().passed

    def test_lemma4_default_grid(self):
        assert verify_lemma4().passed

    def test_lemma3_default_grid(self):
        assert verify_lemma3().passed

    def test_lemma5_default_points(self):
        assert verify_lemma5().passed

    def test_beta_default_alphas(self):
        report = verify_beta()
        assert report.passed
        assert report.grid == "20"

    @pytest.mark.parametrize("alpha", [0.0, 0.25, 0.5, 0.75])
    def test_main_claim_default_grid(self, alpha):
        report = verify_main_claim(alpha)
        assert report.passed
        assert report.details["grid_sup"] <= report.details["bound"] + 1e-6

    @pytest.mark.parametrize("alpha", [0.0, 0.25, 0.5, 0.75])
    def test_lemma1_default_maps(self, alpha):
        assert all(r.passed for r in verify_lemma1(alpha))

    @pytest.mark.parametrize("alpha", THEOREM_ALPHAS)
    def test_theorem_default_maps(self, alpha):
        assert verify_theorem(alpha, seed=2024).passed
