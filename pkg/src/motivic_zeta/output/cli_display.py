"""Rich text rendering of analysis reports."""

from typing import Any, Callable, Dict, List, Optional

from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.markup import escape
from rich.table import Table
from rich.text import Text


class CLIDisplay:
    """
    Terminal output using the Rich library.

    Reports go to stdout; errors and warnings go to stderr so that piping a
    report never mixes in diagnostics.
    """

    STATUS_STYLE = {"certified": "green", "inconclusive": "yellow"}

    def __init__(self, console: Optional[Console] = None, err_console: Optional[Console] = None):
        self.console = console or Console(highlight=False)
        self.err_console = err_console or Console(stderr=True, highlight=False)

    def show_report(self, subcommand: str, source: str, report: Any) -> None:
        """Render one report; unknown subcommands fall back to a key/value table."""
        handlers: Dict[str, Callable[[Any], None]] = {
            "zeta": self._show_zeta,
            "series": self._show_series,
            "poles": self._show_poles,
            "skeleton": self._show_skeleton,
            "topology": self._show_topology,
            "monodromy": self._show_monodromy,
            "check-mp": self._show_mp,
            "blowup": self._show_blowup,
            "abelian": self._show_abelian,
            "validate": self._show_validate,
            "describe": self._show_describe,
        }
        self.console.print(f"[bold cyan]{subcommand}[/bold cyan] {escape(source)}")
        handlers.get(subcommand, self._show_mapping)(report)

    def _table(self, title: str, *columns: str) -> Table:
        table = Table(title=title, box=box.SIMPLE, title_justify="left")
        for column in columns:
            table.add_column(column)
        return table

    def _show_mapping(self, report: Dict[str, Any]) -> None:
        table = self._table("Report", "Key", "Value")
        for key, value in report.items():
            table.add_row(key, str(value))
        self.console.print(table)

    def _show_zeta(self, report: Dict[str, Any]) -> None:
        self.console.print(Panel(Text(report["normal_form"]), title="Z(T)", box=box.ROUNDED))
        self._show_pole_map(report["poles"])

    def _show_pole_map(self, poles: Dict[str, int]) -> None:
        table = self._table("Candidate poles", "q", "order")
        for q, order in poles.items():
            table.add_row(q, str(order))
        self.console.print(table)

    def _show_series(self, report: Dict[str, Any]) -> None:
        table = self._table(f"Series to depth {report['depth']}", "d", "coefficient of T^d")
        for d, coeff in enumerate(report["coefficients"], start=1):
            table.add_row(str(d), Text(coeff))
        self.console.print(table)

    def _show_poles(self, entries: List[Dict[str, Any]]) -> None:
        table = self._table("Poles", "q", "lower", "upper", "certified")
        for entry in entries:
            style = "green" if entry["certified"] else "yellow"
            table.add_row(
                entry["q"],
                str(entry["lower"]),
                str(entry["upper"]),
                f"[{style}]{'yes' if entry['certified'] else 'no'}[/{style}]",
            )
        self.console.print(table)

    def _show_skeleton(self, report: Dict[str, Any]) -> None:
        self.console.print(
            f"delta = {report['delta']}, min(omega) = {report['min_weight']}, "
            f"largest pole = {report['largest_pole']}"
        )
        if report.get("kulikov_type"):
            self.console.print(f"Kulikov type {report['kulikov_type']}")
        table = self._table("Essential skeleton", "face", "J", "class")
        for face in report["faces"]:
            table.add_row(face["id"], ", ".join(face["J"]), Text(face["class"]))
        self.console.print(table)
        weights = self._table("Vertex weights", "component", "weight")
        for cid, w in report["weights"].items():
            weights.add_row(cid, w)
        self.console.print(weights)

    def _show_topology(self, report: Dict[str, Any]) -> None:
        self.console.print(f"Betti numbers of the dual complex: {tuple(report['betti'])}")
        self.console.print(f"Betti numbers of the skeleton: {tuple(report['skeleton_betti'])}")
        self._show_mapping(report["pseudo_manifold"])
        kulikov = report.get("kulikov")
        if kulikov:
            self.console.print(
                f"Kulikov type {kulikov['kind']} "
                f"({'consistent' if kulikov['shape_consistent'] else 'inconsistent'} skeleton shape)"
            )

    def _show_monodromy(self, report: Dict[str, Any]) -> None:
        self.console.print(Panel(Text(report["rendered"]), title="A'Campo zeta", box=box.ROUNDED))
        table = self._table("Cyclotomic multiplicities", "m", "c_m")
        for m, c in report["cyclotomic"].items():
            table.add_row(m, str(c))
        self.console.print(table)
        self.console.print(
            f"degree {report['degree']}, nearby Euler characteristic {report['nearby_euler']}"
        )

    def _show_mp(self, report: Dict[str, Any]) -> None:
        table = self._table("Monodromy Property", "q", "m", "c_m", "status")
        for entry in report["poles"]:
            style = self.STATUS_STYLE[entry["status"]]
            table.add_row(
                entry["q"], str(entry["m"]), str(entry["c_m"]), f"[{style}]{entry['status']}[/{style}]"
            )
        self.console.print(table)
        verdict = "MP certified" if report["verdict"] == "certified" else "inconclusive (never refuted)"
        self.console.print(f"[bold]verdict:[/bold] {verdict}")
        predictions = report["predictions"]
        self.console.print(
            f"predicted: eigenvalue {predictions['eigenvalue']}, "
            f"Jordan block of size >= {predictions['jordan_block_at_least']}"
        )
        if report.get("equivariant_kulikov_possible") is False:
            self.console.print("no equivariant Kulikov model: more than one pole")

    def _show_blowup(self, report: Dict[str, Any]) -> None:
        model = report["model"]
        self.console.print(
            f"blew up {report['piece']}: new component {report['new_component']}, "
            f"{len(model['components'])} components, {len(model['pieces'])} pieces"
        )
        self.console.print(f"zeta unchanged: {report['zeta_unchanged']}")

    def _show_abelian(self, report: Dict[str, Any]) -> None:
        if "normal_form" in report:
            self.console.print(Panel(Text(report["normal_form"]), title="Z(T)", box=box.ROUNDED))
        if "poles" in report:
            self._show_poles(report["poles"])
        if "theorem" in report:
            theorem = report["theorem"]
            self.console.print(
                f"unique pole {theorem['expected_pole']} of order {theorem['expected_order']}: "
                f"{'pass' if theorem['passed'] else 'fail'}"
            )
        if "coefficients" in report:
            variable = "u" if report.get("scale", 1) == 1 else f"w = u^(1/{report['scale']})"
            table = self._table(f"Coefficients in {variable}", "d", "coefficient")
            for d, coeff in enumerate(report["coefficients"], start=1):
                table.add_row(str(d), Text(coeff))
            self.console.print(table)
        self._show_diagnostics(report["diagnostics"])

    def _show_validate(self, report: Dict[str, Any]) -> None:
        if report["valid"]:
            self.console.print("[green]valid[/green]")
        self._show_diagnostics(report["diagnostics"])

    def _show_diagnostics(self, diagnostics: List[str]) -> None:
        for message in diagnostics:
            self.print_warning(message)

    def _show_describe(self, report: Dict[str, Any]) -> None:
        self.console.print(f"{report['name']} (dim {report['dim']})")
        components = self._table("Components", "id", "N", "nu", "nu/N", "chi(E^o)")
        for c in report["components"]:
            components.add_row(c["id"], str(c["N"]), str(c["nu"]), c["ratio"], str(c["chi"]))
        self.console.print(components)
        strata = self._table("Strata", "J", "N_J", "pieces", "class")
        for s in report["strata"]:
            strata.add_row(", ".join(s["J"]), str(s["N_J"]), ", ".join(s["pieces"]), Text(s["class"]))
        self.console.print(strata)

    def print_error(self, message: str) -> None:
        self.err_console.print(f"[bold red]Error:[/bold red] {escape(message)}")

    def print_warning(self, message: str) -> None:
        self.err_console.print(f"[bold yellow]Warning:[/bold yellow] {escape(message)}")

    def print_info(self, message: str) -> None:
        self.console.print(f"[bold cyan]Info:[/bold cyan] {escape(message)}")
