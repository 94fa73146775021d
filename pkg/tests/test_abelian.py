"""Tests for abelian-variety zeta functions, oracle tables and the unique-pole check."""

from fractions import Fraction

import pytest

from motivic_zeta.abelian import (
    AbelianInputError,
    AbelianOracleTable,
    GranularityError,
    MissingRowError,
    OracleRow,
    SemiAbelianInput,
    TruncatedSeries,
    abelian_from_dict,
    check_abelian_theorem,
    chevalley_class,
    closed_form_table,
    eulerian_zeta,
    load_abelian,
    semiabelian_table,
    single_row_mutations,
    validate_oracle_table,
    zeta_semiabelian,
    zeta_truncated,
)
from motivic_zeta.corpus import load_corpus_model
from motivic_zeta.sncmodel import zeta_from_model
from motivic_zeta.vpoly import LaurentPoly, MotClass, parse_class
from motivic_zeta.zeta import candidate_poles, series_expand

L_MINUS_1 = MotClass.lefschetz() - 1


def table_cases():
    """Closed-form tables over a range of e, c and toric ranks."""
    u = MotClass(LaurentPoly.monomial(1))
    return [
        closed_form_table(1, 0, 1, {1: L_MINUS_1 * 2}, {}, depth=6),
        closed_form_table(2, "1/2", 0, {1: parse_class("u^2 + 2"), 2: (u - 1) ** 2}, {1: 0}, depth=8),
        closed_form_table(2, "3/2", 1, {1: parse_class("u^2 + u + 1"), 2: L_MINUS_1}, {1: 0}, depth=8),
        closed_form_table(3, "1/3", 2, {1: parse_class("u^4 + 1"), 3: L_MINUS_1**2}, {1: 1}, depth=12),
        closed_form_table(
            4,
            "1/4",
            1,
            {1: parse_class("u^2 + 3"), 2: parse_class("2*u^2 - u + 1"), 4: L_MINUS_1},
            {1: 0, 2: 1},
            depth=20,
        ),
    ]


class TestSemiAbelian:
    @pytest.mark.parametrize("t", [0, 1, 2, 3])
    def test_eulerian_series(self, t):
        assert series_expand(eulerian_zeta(t), 10) == [MotClass.of(d**t) for d in range(1, 11)]

    def test_unique_pole_of_order_t_plus_one(self):
        z = zeta_semiabelian(SemiAbelianInput(parse_class("3*(L - 1)"), t=1))
        assert candidate_poles(z) == {Fraction(0): 2}
        assert check_abelian_theorem(z, 0, 1).passed

    @pytest.mark.parametrize("shift", [1, 2, 5])
    def test_shift_moves_the_pole(self, shift):
        inp = SemiAbelianInput(parse_class("L^2 - 2*L + 1"), t=2, ord=3, shift=shift)
        check = check_abelian_theorem(zeta_semiabelian(inp), shift, 2)
        assert check.passed
        assert check.to_dict()["certified"] == {"lower": 3, "upper": 3}

    def test_toric_rank_bounded_by_dimension(self):
        with pytest.raises(AbelianInputError, match="exceeds the dimension"):
            SemiAbelianInput(parse_class("3*(L - 1)"), t=2)

    def test_negative_toric_rank(self):
        with pytest.raises(AbelianInputError):
            SemiAbelianInput(MotClass.one(), t=-1)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_matches_neron_polygon(self, kodaira_I, n):
        inp = SemiAbelianInput(MotClass.of(n) * L_MINUS_1, t=1)
        assert zeta_semiabelian(inp) == zeta_from_model(kodaira_I(n))

    @pytest.mark.parametrize(
        "name,c",
        [("kodaira_II", "1/6"), ("kodaira_III", "1/4"), ("kodaira_IV", "1/3"), ("kodaira_I0star", "1/2")],
    )
    def test_additive_reduction_models(self, name, c):
        assert check_abelian_theorem(zeta_from_model(load_corpus_model(name)), c, 0).passed

    def test_two_poles_fail(self, quartic_k3):
        check = check_abelian_theorem(zeta_from_model(quartic_k3), 0, 0)
        assert not check.passed
        assert check.to_dict()["candidates"] == {"-1/2": 1, "0": 1}


class TestOracleTables:
    def test_semiabelian_table_valid(self):
        inp = SemiAbelianInput(parse_class("u^2 - 2*u + 1"), t=1, ord=2, shift=1)
        tab = semiabelian_table(inp, depth=10)
        assert tab.e == 1 and tab.c == 1 and tab.t_pot == 1
        assert validate_oracle_table(tab) == []

    @pytest.mark.parametrize("shift", [0, 1, 3])
    def test_expansion_matches_closed_form(self, shift):
        inp = SemiAbelianInput(parse_class("4*(L - 1)"), t=1, ord=1, shift=shift)
        series = zeta_truncated(semiabelian_table(inp, depth=15))
        assert series.scale == 1
        assert series.as_classes() == series_expand(zeta_semiabelian(inp), 15)

    def test_negative_shift_rejected(self):
        with pytest.raises(AbelianInputError):
            semiabelian_table(SemiAbelianInput(MotClass.one(), t=0, shift=-1), depth=4)

    @pytest.mark.parametrize("tab", table_cases(), ids=lambda t: f"e{t.e}_c{t.c}")
    def test_closed_form_tables_valid(self, tab):
        assert validate_oracle_table(tab) == []

    @pytest.mark.parametrize("tab", table_cases(), ids=lambda t: f"e{t.e}_c{t.c}")
    def test_every_single_row_mutation_detected(self, tab):
        mutations = list(single_row_mutations(tab))
        assert len(mutations) == 4 * len(tab.rows)
        for label, mutated in mutations:
            assert validate_oracle_table(mutated), label

    def test_c_times_e_integral(self):
        with pytest.raises(AbelianInputError, match="integer"):
            closed_form_table(2, "1/3", 0, {1: MotClass.one(), 2: MotClass.one()}, {}, depth=4)

    def test_missing_base_class(self):
        with pytest.raises(AbelianInputError, match="missing"):
            closed_form_table(2, "1/2", 0, {1: MotClass.one()}, {}, depth=4)

    def test_row_diagnostics(self):
        tab = AbelianOracleTable(
            e=2,
            c=Fraction(-1, 2),
            t_pot=0,
            rows={1: OracleRow(MotClass.one(), Fraction(1, 3), 0), 2: OracleRow(MotClass.one(), Fraction(0), 1)},
        )
        problems = validate_oracle_table(tab)
        assert any("must be nonnegative" in p for p in problems)
        assert any("d=1: ord 1/3 is not in (1/2)Z" in p for p in problems)
        assert any("d=2: toric rank 1 outside" in p for p in problems)

    def test_invalid_e(self):
        with pytest.raises(AbelianInputError):
            AbelianOracleTable(e=0, c=0, t_pot=0)


class TestTruncatedExpansion:
    def test_ramified_table(self, bundled_dir):
        tab = load_abelian(bundled_dir / "abelian_table_e2.json")
        series = zeta_truncated(tab)
        assert series.scale == 2 and series.variable == "w"
        assert len(series.coefficients) == 8
        assert series.render()[:2] == ["w^4 + 2", "w^8 - 2*w^6 + w^4"]
        assert series.as_classes()[1] == parse_class("u^4 - 2*u^3 + u^2")

    def test_explicit_depth(self, bundled_dir):
        tab = load_abelian(bundled_dir / "abelian_table_e2.json")
        assert len(zeta_truncated(tab, depth=3).coefficients) == 3

    def test_missing_row(self, bundled_dir):
        tab = load_abelian(bundled_dir / "abelian_table_e2.json")
        with pytest.raises(MissingRowError, match="d=9"):
            zeta_truncated(tab, depth=9)

    def test_granularity(self):
        tab = AbelianOracleTable(e=2, c=0, t_pot=0, rows={1: OracleRow(MotClass.one(), Fraction(1, 3), 0)})
        with pytest.raises(GranularityError):
            zeta_truncated(tab)

    def test_fractional_exponents(self):
        series = TruncatedSeries(scale=3, coefficients=[LaurentPoly.monomial(2)])
        assert series.render() == ["w^2"]
        with pytest.raises(GranularityError):
            series.as_classes()


class TestLoader:
    def test_semiabelian(self, bundled_dir):
        inp = load_abelian(bundled_dir / "abelian_semiabelian_I3.json")
        assert inp == SemiAbelianInput(parse_class("3*(L - 1)"), t=1, ord=0)

    def test_table(self, bundled_dir):
        tab = load_abelian(bundled_dir / "abelian_table_e2.json")
        assert (tab.e, tab.c, tab.t_pot, tab.depth) == (2, Fraction(1, 2), 0, 8)
        assert validate_oracle_table(tab) == []

    def test_schema_violation(self):
        with pytest.raises(AbelianInputError, match="schema"):
            abelian_from_dict({"mode": "semiabelian", "class": "L"})

    def test_bad_class(self):
        with pytest.raises(AbelianInputError, match="class"):
            abelian_from_dict({"mode": "semiabelian", "class": "L ^", "t": 0, "ord": 0})

    def test_table_rational_ord(self):
        tab = abelian_from_dict(
            {"mode": "table", "e": 2, "c": "1/2", "t_pot": 0, "rows": {"1": {"class": "1", "ord": "1/2", "t": 0}}}
        )
        assert tab.row(1).ord == Fraction(1, 2)

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{")
        with pytest.raises(AbelianInputError, match="invalid JSON"):
            load_abelian(path)


class TestChevalley:
    def test_class(self):
        sharp = parse_class("u^2 + 2*u + 1")
        assert chevalley_class(sharp, 1, 1) == sharp.times_lefschetz(1) * L_MINUS_1

    def test_pure_torus(self):
        assert chevalley_class(MotClass.one(), 0, 2) == L_MINUS_1**2

    def test_negative_ranks(self):
        with pytest.raises(ValueError):
            chevalley_class(MotClass.one(), -1, 0)
