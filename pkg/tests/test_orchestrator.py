"""Tests for subcommand dispatch and exit codes."""

import json

import pytest

from motivic_zeta.orchestrator import (
    EXIT_INVALID,
    EXIT_OK,
    EXIT_PARSE,
    AnalysisOrchestrator,
    RunConfig,
    RunResult,
    worst_exit_code,
)


@pytest.fixture
def orchestrator():
    return AnalysisOrchestrator()


def run_one(orchestrator, subcommand, source, **options) -> RunResult:
    return orchestrator.run_one(RunConfig(subcommand, [str(source)], **options), str(source))


class TestRunConfig:
    def test_defaults_from_settings(self, isolated_settings):
        config = RunConfig("series", ["quartic_k3"])
        assert config.depth == 6
        assert config.output_format == "text"

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"subcommand": "plot"},
            {"subcommand": "zeta", "output_format": "xml"},
            {"subcommand": "series", "depth": 0},
            {"subcommand": "poles", "q": "2/4"},
            {"subcommand": "blowup"},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            RunConfig(**kwargs)

    def test_to_dict_round_trip(self):
        config = RunConfig("poles", ["a", "b"], q="-1/2", depth=3)
        assert RunConfig(**config.to_dict()) == config


class TestRunResult:
    def test_round_trip(self):
        result = RunResult("zeta", "m", EXIT_OK, report={"x": 1}, execution_time=0.5)
        assert RunResult.from_dict(result.to_dict()) == result
        assert result.ok

    def test_worst_exit_code(self):
        codes = {"a": EXIT_OK, "b": EXIT_PARSE, "c": EXIT_INVALID}
        results = [RunResult("zeta", source, code) for source, code in codes.items()]
        assert worst_exit_code(results) == EXIT_PARSE
        assert worst_exit_code([]) == EXIT_OK


class TestSubcommands:
    def test_zeta(self, orchestrator):
        result = run_one(orchestrator, "zeta", "quartic_k3")
        assert result.exit_code == EXIT_OK
        assert result.report["poles"] == {"-1/2": 1, "0": 1}
        assert result.report["denominator"] == [{"a": -1, "b": 2, "m": 1}, {"a": 0, "b": 1, "m": 1}]

    def test_series(self, orchestrator):
        result = run_one(orchestrator, "series", "kodaira_In", depth=3, n=4)
        assert result.report == {
            "depth": 3,
            "coefficients": ["4*u^2 - 4", "8*u^2 - 8", "12*u^2 - 12"],
        }

    def test_poles(self, orchestrator):
        result = run_one(orchestrator, "poles", "quartic_k3")
        assert result.report == [
            {"q": "-1/2", "upper": 1, "lower": 1, "certified": True},
            {"q": "0", "upper": 1, "lower": 1, "certified": True},
        ]

    def test_single_pole_target(self, orchestrator):
        result = run_one(orchestrator, "poles", "quartic_k3", q="1/3")
        assert result.report == [{"q": "1/3", "upper": 0, "lower": 0, "certified": True}]

    def test_skeleton(self, orchestrator):
        report = run_one(orchestrator, "skeleton", "quartic_k3").report
        assert (report["delta"], report["min_weight"], report["largest_pole"]) == (0, "1", "0")
        assert report["weights"] == {"D": "1", "E": "3/2"}
        assert report["kulikov_type"] is None

    def test_topology(self, orchestrator):
        report = run_one(orchestrator, "topology", "kodaira_In", n=5).report
        assert report["betti"] == [1, 1]
        assert report["pseudo_manifold"]["closed"] is True
        assert report["kulikov"] is None

    def test_monodromy(self, orchestrator):
        report = run_one(orchestrator, "monodromy", "quartic_k3").report
        assert report["acampo"] == {"1": -22, "2": -1}
        assert report["cyclotomic"] == {"1": -23, "2": -1}
        assert report["degree"] == -24
        assert report["nearby_euler"] == 24

    def test_check_mp(self, orchestrator):
        report = run_one(orchestrator, "check-mp", "quartic_k3").report
        assert report["verdict"] == "certified"
        assert [p["c_m"] for p in report["poles"]] == [-1, -23]

    def test_blowup(self, orchestrator):
        report = run_one(orchestrator, "blowup", "octahedron_typeIII", piece="XpYpZp").report
        assert report["zeta_unchanged"] is True
        assert report["nearby_euler_unchanged"] is True
        assert len(report["model"]["components"]) == 7

    def test_describe(self, orchestrator):
        report = run_one(orchestrator, "describe", "quartic_k3").report
        assert report["components"][1] == {"id": "E", "N": 2, "nu": 1, "ratio": "1/2", "chi": 1}
        assert report["strata"][-1] == {"J": ["D", "E"], "N_J": 1, "pieces": ["C"], "class": "u^2 + 1"}
        assert report["nearby_euler"] == 24

    def test_validate_ok(self, orchestrator):
        result = run_one(orchestrator, "validate", "trivial_smooth")
        assert result.exit_code == EXIT_OK
        assert result.report == {"valid": True, "diagnostics": []}

    def test_abelian_semiabelian(self, orchestrator):
        result = run_one(orchestrator, "abelian", "abelian_semiabelian_I3", depth=3)
        assert result.exit_code == EXIT_OK
        assert result.report["theorem"]["passed"] is True
        assert result.report["coefficients"] == ["3*u^2 - 3", "6*u^2 - 6", "9*u^2 - 9"]

    def test_abelian_table(self, orchestrator):
        result = run_one(orchestrator, "abelian", "abelian_table_e2")
        assert result.exit_code == EXIT_OK
        assert result.report["scale"] == 2
        assert len(result.report["coefficients"]) == 8

    def test_run_keeps_input_order(self, orchestrator):
        config = RunConfig("validate", ["trivial_smooth", "quartic_k3"])
        assert [r.source for r in orchestrator.run(config)] == ["trivial_smooth", "quartic_k3"]


class TestExitCodes:
    def test_malformed_json(self, orchestrator, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"name": "x", "dim": 2,\n "components": [}')
        result = run_one(orchestrator, "validate", path)
        assert result.exit_code == EXIT_PARSE
        assert "line 2, column" in result.error

    def test_missing_input(self, orchestrator):
        assert run_one(orchestrator, "zeta", "no_such_model").exit_code == EXIT_PARSE

    def test_bad_class(self, orchestrator, tmp_path):
        path = tmp_path / "bad_class.json"
        path.write_text(
            json.dumps(
                {
                    "name": "bad",
                    "dim": 1,
                    "components": [{"id": "A", "N": 1, "nu": 0}],
                    "pieces": [{"id": "A_o", "J": ["A"], "tilde_class": "L +"}],
                }
            )
        )
        assert run_one(orchestrator, "zeta", path).exit_code == EXIT_PARSE

    @pytest.mark.parametrize("subcommand", ["validate", "zeta", "poles", "skeleton", "check-mp"])
    def test_model_without_components(self, orchestrator, tmp_path, subcommand):
        path = tmp_path / "empty.json"
        path.write_text(json.dumps({"name": "empty", "dim": 1, "components": [], "pieces": []}))
        result = run_one(orchestrator, subcommand, path)
        assert result.exit_code == EXIT_INVALID
        if subcommand == "validate":
            assert result.report["diagnostics"] == ["model empty: model has no components"]
        else:
            assert "no components" in result.error

    def test_invalid_model(self, orchestrator, tmp_path):
        path = tmp_path / "invalid.json"
        path.write_text(
            json.dumps(
                {
                    "name": "invalid",
                    "dim": 1,
                    "components": [{"id": "A", "N": 0, "nu": 0}],
                    "pieces": [{"id": "A_o", "J": ["A"], "tilde_class": "L"}],
                }
            )
        )
        validated = run_one(orchestrator, "validate", path)
        assert validated.exit_code == EXIT_INVALID
        assert any("multiplicity must be positive" in d for d in validated.report["diagnostics"])
        zeta = run_one(orchestrator, "zeta", path)
        assert zeta.exit_code == EXIT_INVALID
        assert "multiplicity must be positive" in zeta.error

    def test_unsupported_blowup(self, orchestrator):
        result = run_one(orchestrator, "blowup", "quartic_k3", piece="C")
        assert result.exit_code == EXIT_INVALID
        assert "unequal multiplicities" in result.error

    def test_missing_facets(self, orchestrator, tmp_path):
        path = tmp_path / "no_facets.json"
        path.write_text(
            json.dumps(
                {
                    "name": "no_facets",
                    "dim": 1,
                    "components": [{"id": "A", "N": 1, "nu": 0}, {"id": "B", "N": 1, "nu": 0}],
                    "pieces": [
                        {"id": "A_o", "J": ["A"], "tilde_class": "L"},
                        {"id": "B_o", "J": ["B"], "tilde_class": "L"},
                        {"id": "p", "J": ["A", "B"], "tilde_class": "1"},
                    ],
                }
            )
        )
        assert run_one(orchestrator, "topology", path).exit_code == EXIT_INVALID
        assert run_one(orchestrator, "zeta", path).exit_code == EXIT_OK

    def test_inconsistent_table(self, orchestrator, tmp_path):
        path = tmp_path / "table.json"
        path.write_text(
            json.dumps(
                {
                    "mode": "table",
                    "e": 1,
                    "c": "1",
                    "t_pot": 0,
                    "rows": {
                        "1": {"class": "1", "ord": 1, "t": 0},
                        "2": {"class": "1", "ord": 1, "t": 0},
                    },
                }
            )
        )
        result = run_one(orchestrator, "abelian", path)
        assert result.exit_code == EXIT_INVALID
        assert any("ord progression" in d for d in result.report["diagnostics"])

    def test_abelian_schema_error(self, orchestrator, tmp_path):
        path = tmp_path / "abelian.json"
        path.write_text(json.dumps({"mode": "semiabelian"}))
        assert run_one(orchestrator, "abelian", path).exit_code == EXIT_PARSE
