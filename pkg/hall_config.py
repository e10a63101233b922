"""
Verification Configuration Module
Centralizes quadrature budgets, tolerances, worker and logging settings
"""
import os
import logging
from dotenv import load_dotenv

load_dotenv()

logger = logging.getLogger(__name__)

# Quadrature settings
DEFAULT_MAX_EVALS = 1_000_000  # evaluation budget per quadrature call
MAX_EVALS_ENV = "HALLGH_MAX_EVALS"
DEFAULT_ABS_TOL = 1e-10
DEFAULT_REL_TOL = 1e-9

# Herglotz measure settings
NODE_MERGE_TOL = 1e-14  # nodes closer than this are one atom
WEIGHT_SUM_TOL = 1e-12  # normalized measures sum to 1 within this
RENORMALIZE_WARN_TOL = 1e-6  # measure files further off than this get a warning

# Ray evaluation is allowed up to this radius
MAX_RADIUS = 1.0 - 1e-6

# Grid sweep workers (1 runs every cell in-process)
WORKERS = int(os.getenv("HALLGH_WORKERS", "1"))

LOG_LEVEL = os.getenv("HALLGH_LOG_LEVEL", "INFO").upper()
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def get_max_evals() -> int:
    """Quadrature evaluation budget, honouring HALLGH_MAX_EVALS at call time"""
    raw = os.getenv(MAX_EVALS_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_MAX_EVALS
    try:
        value = int(float(raw))
    except (ValueError, OverflowError):
        logger.warning(f"⚠️ Ignoring {MAX_EVALS_ENV}={raw!r}: not a finite number")
        return DEFAULT_MAX_EVALS
    if value < 15:
        logger.warning(f"⚠️ Ignoring {MAX_EVALS_ENV}={raw!r}: budget must allow one panel")
        return DEFAULT_MAX_EVALS
    return value


def configure_logging(level: str = None) -> None:
    """Route log records to stderr so stdout stays machine-parseable"""
    logging.basicConfig(
        level=getattr(logging, (level or LOG_LEVEL).upper(), logging.INFO),
        format=LOG_FORMAT,
        force=True,
    )
