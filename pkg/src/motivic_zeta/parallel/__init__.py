"""Parallel batch execution."""

from motivic_zeta.parallel.executor import BatchExecutor, BatchTimeoutError
from motivic_zeta.parallel.worker import analysis_worker

__all__ = ["BatchExecutor", "BatchTimeoutError", "analysis_worker"]
