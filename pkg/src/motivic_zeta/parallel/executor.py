"""Batch executor: one subcommand over many inputs in a process pool."""

import logging
import multiprocessing as mp
import time
from typing import List, Optional

from motivic_zeta.config import get_settings
from motivic_zeta.orchestrator import RunConfig, RunResult
from motivic_zeta.parallel.worker import analysis_worker

logger = logging.getLogger(__name__)


class BatchTimeoutError(Exception):
    """Raised when a batch exceeds its timeout."""
    pass


class BatchExecutor:
    """
    Evaluates inputs in a spawn-context multiprocessing pool.

    Each input's pipeline is independent; results come back in input order,
    so batch output is deterministic.
    """

    def __init__(self, workers: Optional[int] = None, timeout: Optional[int] = None):
        """
        Args:
            workers: pool size (uses config if not provided)
            timeout: seconds for the whole batch (uses config if not provided)
        """
        settings = get_settings()
        self.workers = workers or settings.batch.workers
        self.timeout = timeout or settings.batch.timeout_seconds
        logger.info(f"BatchExecutor initialized with workers={self.workers}, timeout={self.timeout}s")

    def run(self, config: RunConfig) -> List[RunResult]:
        """
        Run config.subcommand on every input.

        Raises:
            BatchTimeoutError: If the pool does not finish within the timeout
        """
        sources = list(config.inputs)
        if not sources:
            return []
        start_time = time.time()
        payload = config.to_dict()
        payload["batch"] = False
        tasks = [(payload, source) for source in sources]

        ctx = mp.get_context("spawn")
        with ctx.Pool(processes=min(self.workers, len(tasks))) as pool:
            async_result = pool.starmap_async(analysis_worker, tasks)
            try:
                raw = async_result.get(timeout=self.timeout)
            except mp.TimeoutError:
                logger.warning(f"Batch timed out after {self.timeout}s, terminating workers")
                pool.terminate()
                pool.join()
                raise BatchTimeoutError(
                    f"batch of {len(tasks)} inputs exceeded {self.timeout}s"
                ) from None

        results = [RunResult.from_dict(r) for r in raw]
        failed = sum(1 for r in results if r.exit_code != 0)
        logger.info(
            f"Batch {config.subcommand} over {len(results)} inputs finished in "
            f"{time.time() - start_time:.2f}s, {failed} failed"
        )
        return results
