"""
Tests for the adaptive quadrature engine
"""
import math

import numpy as np
import pytest

import quadrature
from errors import DomainError, NonFiniteIntegrandError, QuadratureConvergenceError
from hall_config import DEFAULT_MAX_EVALS, get_max_evals
from quadrature import (
    QuadResult,
    SingularitySpec,
    halfline_transform,
    integrate_finite,
    integrate_graded,
    integrate_halfline,
)

# (label, runner, exact value) with closed-form answers
CORPUS = [
    ("constant", lambda: integrate_finite(lambda u: np.ones_like(u), 0.0, 1.0), 1.0),
    (
        "left inverse sqrt",
        lambda: integrate_finite(lambda u: u ** -0.5, 0.0, 1.0, SingularitySpec(left_exponent=-0.5)),
        2.0,
    ),
    (
        "right inverse sqrt",
        lambda: integrate_finite(lambda u: (1.0 - u) ** -0.5, 0.0, 1.0, SingularitySpec(right_exponent=-0.5)),
        2.0,
    ),
    ("halfline square", lambda: integrate_halfline(lambda w: (1.0 + w) ** -2.0), 1.0),
    (
        "halfline beta(1/2, 1)",
        lambda: integrate_halfline(lambda w: w ** -0.5 * (1.0 + w) ** -1.5, sing0=-0.5),
        2.0,
    ),
    (
        "halfline beta(1/2, 1/2)",
        lambda: integrate_halfline(lambda w: w ** -0.5 * (1.0 + w) ** -1.0, sing0=-0.5, decay=-1.5),
        math.pi,
    ),
]


@pytest.mark.parametrize("label, run, exact", CORPUS, ids=[c[0] for c in CORPUS])
def test_corpus_error_is_honest(label, run, exact):
    result = run()
    true_error = abs(result.value - exact)
    assert true_error <= 1e-10
    assert true_error <= result.err_estimate
    assert result.evals >= 1


def test_smooth_integrand():
    result = integrate_finite(np.exp, 0.0, 1.0, tol=1e-13, rel_tol=1e-13)
    assert result.value == pytest.approx(math.e - 1.0, abs=1e-13)


def test_both_endpoints_singular():
    # ∫_0^1 u^{-1/2}(1-u)^{-1/2} du = π
    result = integrate_finite(
        lambda u: (u * (1.0 - u)) ** -0.5,
        0.0,
        1.0,
        SingularitySpec(left_exponent=-0.5, right_exponent=-0.5),
        tol=1e-12,
        rel_tol=1e-12,
    )
    assert result.value == pytest.approx(math.pi, abs=1e-10)


@pytest.mark.parametrize("c", [2.0, -3.0])
def test_linearity(c):
    def f(u):
        return np.cos(3.0 * u) + u ** 2

    base = integrate_finite(f, 0.0, 2.0).value
    scaled = integrate_finite(lambda u: c * f(u), 0.0, 2.0).value
    assert scaled == pytest.approx(c * base, rel=1e-12)


def test_interval_additivity():
    def f(u):
        return 1.0 / (1.0 + 25.0 * u * u)

    whole = integrate_finite(f, 0.0, 1.0)
    left = integrate_finite(f, 0.0, 0.5)
    right = integrate_finite(f, 0.5, 1.0)
    budget = whole.err_estimate + left.err_estimate + right.err_estimate
    assert abs(whole.value - (left.value + right.value)) <= max(budget, 1e-14)


def test_substitution_consistency():
    def f(w):
        return w ** -0.5 * (1.0 + w) ** -1.5

    direct = integrate_halfline(f, sing0=-0.5)
    mapped = integrate_finite(
        halfline_transform(f), 0.0, 1.0, SingularitySpec(left_exponent=-0.5, right_exponent=-0.5)
    )
    assert direct.value == pytest.approx(mapped.value, abs=1e-12)


def test_graded_mesh_resolves_narrow_peak():
    # Lorentzian of width 1e-6 sitting at the right end: ∫_0^1 h/((1-u)²+h²) du = atan(1/h)
    h = 1e-6
    result = integrate_graded(lambda u: h / ((1.0 - u) ** 2 + h * h), 0.0, 1.0, h, tol=1e-12, rel_tol=1e-12)
    assert result.value == pytest.approx(math.atan(1.0 / h), rel=1e-9)


def test_graded_rejects_bad_scale():
    with pytest.raises(DomainError):
        integrate_graded(np.exp, 0.0, 1.0, 0.0)


def test_budget_exhaustion_carries_partial_result():
    with pytest.raises(QuadratureConvergenceError) as excinfo:
        integrate_finite(lambda u: np.sqrt(np.abs(u - 1.0 / 3.0)), 0.0, 1.0, tol=1e-15, rel_tol=0.0, max_evals=60)
    partial = excinfo.value.result
    assert isinstance(partial, QuadResult)
    assert partial.evals <= 60
    assert "budget" in str(excinfo.value)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("HALLGH_MAX_EVALS", "60")
    assert get_max_evals() == 60
    with pytest.raises(QuadratureConvergenceError):
        integrate_finite(lambda u: np.sqrt(np.abs(u - 1.0 / 3.0)), 0.0, 1.0, tol=1e-15, rel_tol=0.0)


def test_invalid_budget_falls_back(monkeypatch):
    monkeypatch.setenv("HALLGH_MAX_EVALS", "lots")
    assert get_max_evals() == DEFAULT_MAX_EVALS


@pytest.mark.parametrize("raw", ["inf", "-inf", "1e400", "nan"])
def test_non_finite_budget_falls_back(monkeypatch, raw):
    monkeypatch.setenv("HALLGH_MAX_EVALS", raw)
    assert get_max_evals() == DEFAULT_MAX_EVALS


def test_resolution_limit_raises_with_partial_result(monkeypatch):
    # no initial panel is wide enough to split
    monkeypatch.setattr(quadrature, "MIN_PANEL_WIDTH", 0.3)
    with pytest.raises(QuadratureConvergenceError) as excinfo:
        integrate_finite(lambda u: np.sqrt(np.abs(u - 1.0 / 3.0)), 0.0, 1.0, tol=1e-15, rel_tol=0.0)
    partial = excinfo.value.result
    assert isinstance(partial, QuadResult)
    assert partial.evals == 60
    assert "resolution" in str(excinfo.value)


def test_non_integrable_singularity_never_returns():
    with pytest.raises(QuadratureConvergenceError) as excinfo:
        integrate_finite(lambda u: 1.0 / (np.abs(u - 1.0 / 3.0) + 1e-300), 0.0, 1.0, max_evals=20_000)
    assert excinfo.value.result.evals <= 20_000


def test_non_finite_integrand():
    with pytest.raises(NonFiniteIntegrandError):
        integrate_finite(lambda u: np.full_like(u, np.nan), 0.0, 1.0)


@pytest.mark.parametrize("a, b", [(1.0, 0.0), (0.0, 0.0), (0.0, math.inf)])
def test_interval_domain(a, b):
    with pytest.raises(DomainError):
        integrate_finite(np.exp, a, b)


def test_singularity_spec_rejects_non_integrable():
    with pytest.raises(DomainError):
        SingularitySpec(left_exponent=-1.0)


def test_halfline_rejects_bad_exponents():
    with pytest.raises(DomainError):
        integrate_halfline(lambda w: (1.0 + w) ** -2.0, sing0=-1.5)
    with pytest.raises(DomainError):
        integrate_halfline(lambda w: (1.0 + w) ** -2.0, decay=-0.5)


def test_quad_result_invariants():
    with pytest.raises(DomainError):
        QuadResult(1.0, -1e-3, 15)
    with pytest.raises(DomainError):
        QuadResult(1.0, 0.0, 0)


def test_deterministic():
    first = integrate_halfline(lambda w: w ** -0.5 * (1.0 + w) ** -1.0, sing0=-0.5)
    second = integrate_halfline(lambda w: w ** -0.5 * (1.0 + w) ** -1.0, sing0=-0.5)
    assert first == second
