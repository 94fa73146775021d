"""End-to-end checks over the bundled corpus."""

from fractions import Fraction

import pytest

from motivic_zeta.corpus import list_corpus, load_corpus_model
from motivic_zeta.monodromy import acampo_zeta, degree_identity_holds
from motivic_zeta.orchestrator import EXIT_OK, MODEL_SUBCOMMANDS, AnalysisOrchestrator, RunConfig
from motivic_zeta.sncmodel import (
    blowup_stratum,
    degeneracy_index,
    dual_complex_homology,
    essential_skeleton,
    largest_pole,
    nearby_euler,
    zeta_from_model,
)
from motivic_zeta.zeta import candidate_poles, certify_pole_order


class TestCorpusPipeline:
    """Every model subcommand succeeds on every corpus model."""

    @pytest.mark.parametrize("subcommand", [s for s in MODEL_SUBCOMMANDS if s != "blowup"])
    def test_subcommand_over_corpus(self, isolated_settings, subcommand):
        orchestrator = AnalysisOrchestrator()
        inputs = [str(p) for p in list_corpus("model")]
        results = orchestrator.run(RunConfig(subcommand, inputs))
        assert [r.source for r in results] == inputs
        for result in results:
            assert result.exit_code == EXIT_OK, (result.source, result.error)
            assert result.report is not None


class TestWorkedExamples:
    def test_quartic_k3(self, quartic_k3):
        z = zeta_from_model(quartic_k3)
        assert candidate_poles(z) == {Fraction(0): 1, Fraction(-1, 2): 1}
        assert certify_pole_order(z, 0) == (1, 1)
        assert certify_pole_order(z, "-1/2") == (1, 1)
        assert degeneracy_index(quartic_k3) == 0
        assert acampo_zeta(quartic_k3).degree() == -24

    @pytest.mark.parametrize(
        "name,conductor",
        [("kodaira_II", "1/6"), ("kodaira_III", "1/4"), ("kodaira_IV", "1/3"), ("kodaira_I0star", "1/2")],
    )
    def test_additive_reduction_conductor(self, name, conductor):
        model = load_corpus_model(name)
        assert largest_pole(model) == Fraction(conductor)
        assert candidate_poles(zeta_from_model(model)) == {Fraction(conductor): 1}

    @pytest.mark.parametrize("n", range(2, 9))
    def test_neron_polygon(self, kodaira_I, n):
        model = kodaira_I(n)
        assert candidate_poles(zeta_from_model(model)) == {Fraction(0): 2}
        assert dual_complex_homology(essential_skeleton(model)) == (1, 1)
        assert degeneracy_index(model) == 1

    def test_octahedron(self, octahedron):
        assert degeneracy_index(octahedron) == 2
        assert dual_complex_homology(essential_skeleton(octahedron)) == (1, 0, 1)
        assert certify_pole_order(zeta_from_model(octahedron), largest_pole(octahedron)) == (3, 3)


class TestBlowupInvariance:
    """Blowing up any deeper stratum leaves the zeta function and the monodromy degree alone."""

    @pytest.mark.parametrize("name", ["kodaira_I", "octahedron"])
    def test_every_deeper_piece(self, request, name):
        model = request.getfixturevalue(name)
        if callable(model):
            model = model(4)
        before = zeta_from_model(model)
        for piece in [p for p in model.pieces if p.size >= 2]:
            blown = blowup_stratum(model, piece.id)
            assert zeta_from_model(blown) == before, piece.id
            assert nearby_euler(blown) == nearby_euler(model), piece.id
            assert degree_identity_holds(blown), piece.id
            assert acampo_zeta(blown).degree() == acampo_zeta(model).degree(), piece.id
