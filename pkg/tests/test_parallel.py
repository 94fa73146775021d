"""Tests for batch execution in worker processes."""

import multiprocessing as mp
from unittest.mock import MagicMock, patch

import pytest

from motivic_zeta.corpus import list_corpus
from motivic_zeta.orchestrator import EXIT_PARSE, RunConfig, RunResult, worst_exit_code
from motivic_zeta.output import ReportExporter
from motivic_zeta.parallel import BatchExecutor, BatchTimeoutError
from motivic_zeta.parallel.worker import analysis_worker


class TestAnalysisWorker:
    def test_returns_plain_dict(self):
        config = RunConfig("poles", ["quartic_k3"]).to_dict()
        data = analysis_worker(config, "quartic_k3")
        assert isinstance(data, dict)
        result = RunResult.from_dict(data)
        assert result.ok
        assert [e["q"] for e in result.report] == ["-1/2", "0"]

    def test_errors_are_results(self):
        data = analysis_worker(RunConfig("zeta", ["missing"]).to_dict(), "missing")
        assert data["exit_code"] == EXIT_PARSE
        assert data["report"] is None


class TestBatchExecutor:
    def test_config_defaults(self, isolated_settings):
        executor = BatchExecutor()
        assert executor.workers == 2
        assert executor.timeout == 60

    def test_empty_batch(self):
        assert BatchExecutor(workers=2).run(RunConfig("zeta", [])) == []

    def test_results_in_input_order(self):
        sources = ["trivial_smooth", "quartic_k3", "kodaira_II", "missing"]
        results = BatchExecutor(workers=2).run(RunConfig("check-mp", sources))
        assert [r.source for r in results] == sources
        assert [r.exit_code for r in results] == [0, 0, 0, EXIT_PARSE]
        assert worst_exit_code(results) == EXIT_PARSE

    def test_matches_sequential_and_is_deterministic(self):
        from motivic_zeta.orchestrator import AnalysisOrchestrator

        sources = [str(p) for p in list_corpus("model")]
        config = RunConfig("zeta", sources)
        exporter = ReportExporter()

        def render(results):
            return exporter.to_json(
                [exporter.envelope(r.subcommand, r.source, r.report) for r in results]
            )

        first = render(BatchExecutor(workers=3).run(config))
        second = render(BatchExecutor(workers=2).run(config))
        sequential = render(AnalysisOrchestrator().run(config))
        assert first == second == sequential

    def test_timeout(self):
        pool = MagicMock()
        pool.__enter__.return_value = pool
        pool.starmap_async.return_value.get.side_effect = mp.TimeoutError()
        context = MagicMock()
        context.Pool.return_value = pool
        with patch("motivic_zeta.parallel.executor.mp.get_context", return_value=context):
            with pytest.raises(BatchTimeoutError, match="exceeded 5s"):
                BatchExecutor(workers=2, timeout=5).run(RunConfig("zeta", ["quartic_k3"]))
        pool.terminate.assert_called_once()
