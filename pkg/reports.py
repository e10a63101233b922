"""
Verification Reports
Pydantic model shared by every verification suite and the command line
"""
import math
from typing import Any, Dict, Optional, Sequence

import numpy as np
from pydantic import BaseModel, Field, model_validator


class VerificationReport(BaseModel):
    """
    Outcome of one verification suite

    Margins are oriented so that a nonnegative value means the checked
    inequality holds; equality checks report -|difference|.
    """

    suite: str
    alpha: Optional[float] = None
    grid: str
    tolerance: float = Field(ge=0.0)
    worst_margin: float
    worst_location: Dict[str, float] = Field(default_factory=dict)
    passed: bool
    details: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_passed(self) -> "VerificationReport":
        expected = self.worst_margin >= -self.tolerance
        if self.passed != expected:
            raise ValueError(
                f"passed={self.passed} contradicts worst_margin={self.worst_margin!r} "
                f"with tolerance={self.tolerance!r}"
            )
        return self

    @classmethod
    def from_margins(
        cls,
        suite: str,
        margins: Sequence[float],
        locations: Sequence[Dict[str, float]],
        tolerance: float,
        grid: str,
        alpha: Optional[float] = None,
        details: Optional[Dict[str, Any]] = None,
    ) -> "VerificationReport":
        """
        Reduce margins to the worst one

        Ties resolve to the first grid index, so the result does not depend
        on the order in which cells were evaluated.
        """
        values = np.asarray(margins, dtype=float)
        if values.size == 0 or values.size != len(locations):
            raise ValueError("margins and locations must be non-empty and of equal length")
        if np.any(np.isnan(values)):
            worst = int(np.argmax(np.isnan(values)))
            worst_margin = -math.inf
        else:
            worst = int(np.argmin(values))
            worst_margin = float(values[worst])
        return cls(
            suite=suite,
            alpha=alpha,
            grid=grid,
            tolerance=tolerance,
            worst_margin=worst_margin,
            worst_location={k: float(v) for k, v in locations[worst].items()},
            passed=worst_margin >= -tolerance,
            details=details or {},
        )

    @classmethod
    def from_grid(
        cls,
        suite: str,
        margins: np.ndarray,
        axes: Dict[str, np.ndarray],
        tolerance: float,
        alpha: Optional[float] = None,
        details: Optional[Dict[str, Any]] = None,
    ) -> "VerificationReport":
        """Report for a margin array whose dimensions follow the named axes"""
        margins = np.asarray(margins, dtype=float)
        names = list(axes)
        if margins.shape != tuple(len(axes[n]) for n in names):
            raise ValueError(f"margin shape {margins.shape} does not match axes {names}")
        flat = int(np.argmin(np.where(np.isnan(margins), -np.inf, margins)))
        index = np.unravel_index(flat, margins.shape)
        location = {n: float(axes[n][i]) for n, i in zip(names, index)}
        worst_margin = float(margins[index])
        if math.isnan(worst_margin):
            worst_margin = -math.inf
        return cls(
            suite=suite,
            alpha=alpha,
            grid="x".join(str(len(axes[n])) for n in names),
            tolerance=tolerance,
            worst_margin=worst_margin,
            worst_location=location,
            passed=worst_margin >= -tolerance,
            details=details or {},
        )

    def summary(self) -> str:
        """One-line human readable outcome"""
        status = "PASS" if self.passed else "FAIL"
        where = ", ".join(f"{k}={v:.6g}" for k, v in self.worst_location.items())
        alpha = f" alpha={self.alpha:g}" if self.alpha is not None else ""
        return (
            f"{status} {self.suite}{alpha} grid={self.grid} "
            f"worst_margin={self.worst_margin:.3e} at ({where}) tol={self.tolerance:.1e}"
        )
