"""Worker function for batch runs.

Must stay at module level so that spawn-context pools can pickle it.
"""

import logging
from typing import Any, Dict

# quiet per-input records in workers
logging.getLogger("motivic_zeta.orchestrator").setLevel(logging.WARNING)


def analysis_worker(config: Dict[str, Any], source: str) -> Dict[str, Any]:
    """
    Run one subcommand on one input in a worker process.

    Args:
        config: RunConfig as a plain dict
        source: model or abelian input

    Returns:
        RunResult as a plain dict
    """
    from motivic_zeta.orchestrator import AnalysisOrchestrator, RunConfig

    run_config = RunConfig(**config)
    return AnalysisOrchestrator().run_one(run_config, source).to_dict()
