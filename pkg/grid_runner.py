"""
Grid Runner Module
Distributes independent grid cells over worker processes and gathers the
results in grid order
"""
import logging
from multiprocessing import Pool
from typing import Any, Callable, Dict, Iterable, List, Optional

from errors import DomainError
from hall_config import WORKERS

logger = logging.getLogger(__name__)


class GridRunner:
    """Runs a cell function over a grid, in-process or on a process pool"""

    def __init__(self, workers: Optional[int] = None):
        """
        Args:
            workers: Number of processes; 1 evaluates every cell in-process.
                Defaults to HALLGH_WORKERS.
        """
        workers = WORKERS if workers is None else workers
        if int(workers) < 1:
            raise DomainError(f"workers must be >= 1, got {workers!r}")
        self.workers = int(workers)
        self.cells_run = 0
        self.batches_run = 0
        logger.debug(f"Grid runner ready with {self.workers} worker(s)")

    def map(self, func: Callable[[Any], Any], cells: Iterable[Any], label: str = "grid") -> List[Any]:
        """
        Evaluate func on every cell

        func and the cells must be picklable when workers > 1. The returned
        list is in the order of `cells` whatever the number of workers, and
        the first exception raised by a cell propagates to the caller.

        Args:
            func: Module-level function of one cell
            cells: Grid cells in row-major order
            label: Name used in log messages

        Returns:
            list: func(cell) for every cell, in input order
        """
        cells = list(cells)
        if not cells:
            return []

        logger.info(f"🚀 Evaluating {len(cells)} {label} cell(s) on {self.workers} worker(s)")
        if self.workers == 1 or len(cells) == 1:
            results = [func(cell) for cell in cells]
        else:
            processes = min(self.workers, len(cells))
            chunksize = max(1, len(cells) // (4 * processes))
            try:
                with Pool(processes=processes) as pool:
                    results = pool.map(func, cells, chunksize=chunksize)
            except Exception as e:
                logger.error(f"❌ Grid evaluation failed for {label}: {e}")
                raise

        self.cells_run += len(cells)
        self.batches_run += 1
        logger.info(f"✅ Finished {len(cells)} {label} cell(s)")
        return results

    def get_stats(self) -> Dict[str, int]:
        """Counters since construction"""
        return {
            "workers": self.workers,
            "cells_run": self.cells_run,
            "batches_run": self.batches_run,
        }


# Singleton instance
_grid_runner = None


def get_grid_runner(workers: Optional[int] = None) -> GridRunner:
    """Get or create the GridRunner singleton; a different worker count replaces it"""
    global _grid_runner
    if _grid_runner is None or (workers is not None and workers != _grid_runner.workers):
        _grid_runner = GridRunner(workers)
    return _grid_runner
