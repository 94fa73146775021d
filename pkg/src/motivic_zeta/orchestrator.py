"""Subcommand dispatch: load an input, run one analysis, build its report."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional

from motivic_zeta.abelian import (
    AbelianError,
    AbelianInputError,
    SemiAbelianInput,
    check_abelian_theorem,
    load_abelian,
    validate_oracle_table,
    zeta_semiabelian,
    zeta_truncated,
)
from motivic_zeta.config import get_settings
from motivic_zeta.corpus import resolve_input
from motivic_zeta.logging import get_logger
from motivic_zeta.monodromy import (
    acampo_zeta,
    check_monodromy_property,
    cyclotomic_multiplicities,
)
from motivic_zeta.output import ReportExporter, ReportValidationError
from motivic_zeta.sncmodel import (
    ModelError,
    ModelParseError,
    ModelValidationError,
    SncModelData,
    blowup_stratum,
    dual_complex_homology,
    essential_skeleton,
    euler_open_strata,
    grouped_classes,
    kulikov_type,
    largest_pole,
    load_model,
    model_to_dict,
    nearby_euler,
    pseudo_manifold_check,
    validate,
    zeta_from_model,
)
from motivic_zeta.vpoly import ClassError, ClassParseError
from motivic_zeta.zeta import (
    PoleEntry,
    ZetaError,
    ZetaExpr,
    certify_pole_order,
    candidate_poles,
    parse_pole,
    pole_report,
    series_expand,
)
from motivic_zeta.zeta.models import format_rational

logger = get_logger("orchestrator")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2

MODEL_SUBCOMMANDS = (
    "zeta",
    "series",
    "poles",
    "skeleton",
    "topology",
    "monodromy",
    "check-mp",
    "blowup",
    "validate",
    "describe",
)
SUBCOMMANDS = MODEL_SUBCOMMANDS + ("abelian",)
FORMATS = ("text", "json")


@dataclass
class RunConfig:
    """
    One invocation: a subcommand applied to one or more inputs.

    Args:
        subcommand: one of SUBCOMMANDS
        inputs: model or abelian files, or corpus names
        output_format: "text" or "json"
        depth: series depth D, at least 1
        q: pole target "a/b" in lowest terms, for `poles`
        n: generator parameter for generator stubs
        piece: stratum piece to blow up, for `blowup`
        batch: evaluate inputs in worker processes
    """

    subcommand: str
    inputs: List[str] = field(default_factory=list)
    output_format: str = "text"
    depth: Optional[int] = None
    q: Optional[str] = None
    n: Optional[int] = None
    piece: Optional[str] = None
    batch: bool = False

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise ValueError(f"unknown subcommand '{self.subcommand}'")
        if self.output_format not in FORMATS:
            raise ValueError(f"output format must be one of {FORMATS}, got '{self.output_format}'")
        if self.depth is None:
            self.depth = get_settings().analysis.series_depth
        if self.depth < 1:
            raise ValueError(f"series depth must be at least 1, got {self.depth}")
        if self.q is not None:
            try:
                parse_pole(self.q)
            except ZetaError as e:
                raise ValueError(str(e)) from e
        if self.subcommand == "blowup" and not self.piece:
            raise ValueError("blowup needs a piece id")

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class RunResult:
    """Outcome of one subcommand on one input."""

    subcommand: str
    source: str
    exit_code: int
    report: Any = None
    error: Optional[str] = None
    execution_time: float = 0.0

    @property
    def ok(self) -> bool:
        return self.exit_code == EXIT_OK

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "RunResult":
        return cls(**data)


def worst_exit_code(results: List[RunResult]) -> int:
    """Exit code of a run over several inputs: the largest one, 0 for none."""
    return max((r.exit_code for r in results), default=EXIT_OK)


def _poles_map(x: ZetaExpr) -> Dict[str, int]:
    return {format_rational(q): m for q, m in candidate_poles(x).items()}


def _zeta_body(x: ZetaExpr) -> Dict[str, Any]:
    nf = x.normal_form
    return {
        "normal_form": nf.render(),
        "numerator": [{"tpow": k, "coeff": c.render()} for k, c in nf.numerator.items()],
        "denominator": [{"a": f.a, "b": f.b, "m": m} for f, m in nf.denominator],
        "poles": _poles_map(x),
    }


class AnalysisOrchestrator:
    """
    Runs subcommands on single inputs and maps failures to exit codes.

    Parse errors exit with 2, validation failures and other model or zeta
    errors with 1. Reports are validated against their schemas before they
    are returned.
    """

    def __init__(self, exporter: Optional[ReportExporter] = None):
        self.logger = logger
        self.exporter = exporter or ReportExporter()
        self._handlers: Dict[str, Callable[[SncModelData, RunConfig], Any]] = {
            "zeta": self._zeta,
            "series": self._series,
            "poles": self._poles,
            "skeleton": self._skeleton,
            "topology": self._topology,
            "monodromy": self._monodromy,
            "check-mp": self._check_mp,
            "blowup": self._blowup,
            "describe": self._describe,
        }

    def run(self, config: RunConfig) -> List[RunResult]:
        """Run the subcommand on every input, in order."""
        return [self.run_one(config, source) for source in config.inputs]

    def run_one(self, config: RunConfig, source: str) -> RunResult:
        start_time = time.time()
        extra = {"model": source, "subcommand": config.subcommand}
        try:
            if config.subcommand == "abelian":
                exit_code, report = self._abelian(source, config)
            elif config.subcommand == "validate":
                exit_code, report = self._validate(source, config)
            else:
                model = load_model(resolve_input(source), n=config.n)
                exit_code, report = EXIT_OK, self._handlers[config.subcommand](model, config)
            self.exporter.envelope(config.subcommand, source, report)
            error = None
        except (ClassParseError, ModelParseError, AbelianInputError) as e:
            exit_code, report, error = EXIT_PARSE, None, str(e)
        except ModelValidationError as e:
            exit_code, report, error = EXIT_INVALID, None, str(e)
        except (ModelError, ZetaError, AbelianError, ClassError, ReportValidationError) as e:
            exit_code, report, error = EXIT_INVALID, None, str(e)

        execution_time = time.time() - start_time
        extra["execution_time"] = round(execution_time, 4)
        if error:
            self.logger.warning(f"{config.subcommand} {source} failed: {error}", extra=extra)
        else:
            self.logger.info(f"{config.subcommand} {source} done", extra=extra)
        return RunResult(
            subcommand=config.subcommand,
            source=source,
            exit_code=exit_code,
            report=report,
            error=error,
            execution_time=execution_time,
        )

    def _validate(self, source: str, config: RunConfig) -> tuple[int, Dict[str, Any]]:
        model = load_model(resolve_input(source), n=config.n)
        diagnostics = validate(model)
        report = {"valid": not diagnostics, "diagnostics": diagnostics}
        return (EXIT_INVALID if diagnostics else EXIT_OK), report

    def _zeta(self, model: SncModelData, config: RunConfig) -> Dict[str, Any]:
        return _zeta_body(zeta_from_model(model))

    def _series(self, model: SncModelData, config: RunConfig) -> Dict[str, Any]:
        coefficients = series_expand(zeta_from_model(model), config.depth)
        return {"depth": config.depth, "coefficients": [c.render() for c in coefficients]}

    def _poles(self, model: SncModelData, config: RunConfig) -> List[Dict[str, Any]]:
        zeta = zeta_from_model(model)
        if config.q is None:
            return pole_report(zeta).to_list()
        lower, upper = certify_pole_order(zeta, config.q)
        return [PoleEntry(q=parse_pole(config.q), upper=upper, lower=lower).to_dict()]

    def _skeleton(self, model: SncModelData, config: RunConfig) -> Dict[str, Any]:
        skeleton = essential_skeleton(model)
        kulikov = kulikov_type(model)
        return {
            "vertices": list(skeleton.vertices),
            "faces": [
                {"id": p.id, "J": list(p.ordered_J()), "class": p.tilde_class.render()}
                for p in skeleton.faces
            ],
            "delta": skeleton.delta,
            "min_weight": format_rational(skeleton.min_weight),
            "largest_pole": format_rational(largest_pole(model)),
            "weights": {cid: format_rational(w) for cid, w in sorted(skeleton.weights.items())},
            "kulikov_type": kulikov.kind if kulikov else None,
        }

    def _topology(self, model: SncModelData, config: RunConfig) -> Dict[str, Any]:
        skeleton = essential_skeleton(model)
        kulikov = kulikov_type(model)
        return {
            "betti": list(dual_complex_homology(model)),
            "skeleton_betti": list(dual_complex_homology(skeleton)),
            "pseudo_manifold": pseudo_manifold_check(skeleton).to_dict(),
            "kulikov": (
                {
                    "kind": kulikov.kind,
                    "delta": kulikov.delta,
                    "shape_consistent": kulikov.shape_consistent,
                }
                if kulikov
                else None
            ),
        }

    def _monodromy(self, model: SncModelData, config: RunConfig) -> Dict[str, Any]:
        product = acampo_zeta(model)
        multiplicities = cyclotomic_multiplicities(product)
        return {
            "acampo": {str(d): e for d, e in product.factors},
            "rendered": product.render(),
            "cyclotomic": {str(m): c for m, c in sorted(multiplicities.items())},
            "certified_eigenvalues": sorted(multiplicities),
            "degree": product.degree(),
            "nearby_euler": nearby_euler(model),
            "euler_open_strata": dict(sorted(euler_open_strata(model).items())),
        }

    def _check_mp(self, model: SncModelData, config: RunConfig) -> Dict[str, Any]:
        return check_monodromy_property(model).to_dict()

    def _blowup(self, model: SncModelData, config: RunConfig) -> Dict[str, Any]:
        blown_up = blowup_stratum(model, config.piece)
        new_component = blown_up.components[-1].id
        return {
            "piece": config.piece,
            "new_component": new_component,
            "model": model_to_dict(blown_up),
            "zeta_unchanged": zeta_from_model(blown_up) == zeta_from_model(model),
            "nearby_euler_unchanged": nearby_euler(blown_up) == nearby_euler(model),
        }

    def _describe(self, model: SncModelData, config: RunConfig) -> Dict[str, Any]:
        chis = euler_open_strata(model)
        pieces_by_J: Dict[frozenset, List[str]] = {}
        for p in model.pieces:
            pieces_by_J.setdefault(p.J, []).append(p.id)
        strata = []
        for J, cls in sorted(grouped_classes(model).items(), key=lambda kv: (len(kv[0]), sorted(kv[0]))):
            strata.append(
                {
                    "J": sorted(J),
                    "N_J": model.N_J(J),
                    "pieces": sorted(pieces_by_J[J]),
                    "class": cls.render(),
                }
            )
        return {
            "name": model.name,
            "dim": model.dim,
            "components": [
                {
                    "id": c.id,
                    "N": c.N,
                    "nu": c.nu,
                    "ratio": format_rational(c.ratio),
                    "chi": chis[c.id],
                }
                for c in model.components
            ],
            "strata": strata,
            "nearby_euler": nearby_euler(model),
        }

    def _abelian(self, source: str, config: RunConfig) -> tuple[int, Dict[str, Any]]:
        data = load_abelian(resolve_input(source))
        if isinstance(data, SemiAbelianInput):
            zeta = zeta_semiabelian(data)
            theorem = check_abelian_theorem(zeta, Fraction(data.shift), data.t)
            report = {
                "mode": "semiabelian",
                "diagnostics": [] if theorem.passed else ["unique-pole check failed"],
                "normal_form": zeta.render(),
                "poles": pole_report(zeta).to_list(),
                "theorem": theorem.to_dict(),
                "coefficients": [c.render() for c in series_expand(zeta, config.depth)],
                "scale": 1,
            }
            return (EXIT_OK if theorem.passed else EXIT_INVALID), report

        diagnostics = validate_oracle_table(data)
        series = zeta_truncated(data, data.depth or config.depth)
        report = {
            "mode": "table",
            "diagnostics": diagnostics,
            "coefficients": series.render(),
            "scale": series.scale,
        }
        return (EXIT_INVALID if diagnostics else EXIT_OK), report
