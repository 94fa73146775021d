"""CLI entry point for motivic-zeta."""

import click

FORMAT_CHOICE = click.Choice(["text", "json"])
JSON_OUTPUT_OPTION = click.option(
    "--json-output", type=click.Path(dir_okay=False), help="Also write the JSON report to a file"
)


def _emit(results, output_format: str, json_output=None) -> int:
    """Print reports (stdout) and errors (stderr); return the worst exit code."""
    from pathlib import Path

    from motivic_zeta.orchestrator import worst_exit_code
    from motivic_zeta.output import CLIDisplay, ReportExporter

    display = CLIDisplay()
    exporter = ReportExporter()
    envelopes = []
    for result in results:
        if result.error:
            display.print_error(f"{result.source}: {result.error}")
            continue
        envelopes.append(exporter.envelope(result.subcommand, result.source, result.report))
        if output_format == "text":
            display.show_report(result.subcommand, result.source, result.report)
    if envelopes:
        payload = envelopes[0] if len(results) == 1 else envelopes
        if output_format == "json":
            click.echo(exporter.to_json(payload))
        if json_output:
            exporter.export(payload, Path(json_output))
            if output_format == "text":
                display.print_info(f"Exported to {json_output}")
    return worst_exit_code(results)


def _run(
    subcommand: str, inputs, output_format=None, batch=False, workers=None, json_output=None, **options
) -> None:
    from motivic_zeta.config import get_settings
    from motivic_zeta.logging import setup_logging
    from motivic_zeta.orchestrator import AnalysisOrchestrator, RunConfig

    setup_logging()
    try:
        config = RunConfig(
            subcommand=subcommand,
            inputs=list(inputs),
            output_format=output_format or get_settings().analysis.output_format,
            batch=batch,
            **options,
        )
    except ValueError as e:
        raise click.UsageError(str(e)) from e

    if config.batch:
        from motivic_zeta.parallel import BatchExecutor, BatchTimeoutError

        try:
            results = BatchExecutor(workers=workers).run(config)
        except BatchTimeoutError as e:
            click.echo(f"Error: {e}", err=True)
            raise SystemExit(1) from e
    else:
        results = AnalysisOrchestrator().run(config)
    raise SystemExit(_emit(results, config.output_format, json_output))


def model_command(name: str, help_text: str):
    """Register a subcommand taking one model argument and the shared options."""

    def decorator(fn):
        fn = click.option("--n", "n", type=int, help="Parameter for generator stubs (kodaira_In)")(fn)
        fn = click.option("--format", "output_format", type=FORMAT_CHOICE, help="Report format")(fn)
        fn = JSON_OUTPUT_OPTION(fn)
        fn = click.argument("model")(fn)
        return main.command(name=name, help=help_text)(fn)

    return decorator


@click.group()
@click.version_option()
def main():
    """Motivic zeta functions of snc-degenerations: poles, skeleta and monodromy."""
    pass


@model_command("zeta", "Normal form of the motivic zeta function.")
def zeta(model, output_format, json_output, n):
    _run("zeta", [model], output_format, json_output=json_output, n=n)


@model_command("series", "Coefficients of T^1..T^D.")
@click.option("--depth", type=int, help="Series depth D (default from settings)")
def series(model, output_format, json_output, n, depth):
    _run("series", [model], output_format, json_output=json_output, n=n, depth=depth)


@model_command("poles", "Candidate poles with certified orders.")
@click.option("--q", "q", help="Only certify the pole a/b")
def poles(model, output_format, json_output, n, q):
    _run("poles", [model], output_format, json_output=json_output, n=n, q=q)


@model_command("skeleton", "Essential skeleton, degeneracy index and weights.")
def skeleton(model, output_format, json_output, n):
    _run("skeleton", [model], output_format, json_output=json_output, n=n)


@model_command("topology", "Homology of the dual complex and pseudo-manifold checks.")
def topology(model, output_format, json_output, n):
    _run("topology", [model], output_format, json_output=json_output, n=n)


@model_command("monodromy", "A'Campo zeta function and cyclotomic multiplicities.")
def monodromy(model, output_format, json_output, n):
    _run("monodromy", [model], output_format, json_output=json_output, n=n)


@model_command("check-mp", "Monodromy Property check.")
def check_mp(model, output_format, json_output, n):
    _run("check-mp", [model], output_format, json_output=json_output, n=n)


@model_command("blowup", "Blow up a stratum piece and compare zeta functions.")
@click.option("--piece", required=True, help="Id of the stratum piece to blow up")
def blowup(model, output_format, json_output, n, piece):
    _run("blowup", [model], output_format, json_output=json_output, n=n, piece=piece)


@model_command("validate", "Check model invariants.")
def validate(model, output_format, json_output, n):
    _run("validate", [model], output_format, json_output=json_output, n=n)


@model_command("describe", "Summary of components and strata.")
def describe(model, output_format, json_output, n):
    _run("describe", [model], output_format, json_output=json_output, n=n)


@main.command()
@click.argument("source")
@click.option("--format", "output_format", type=FORMAT_CHOICE, help="Report format")
@click.option("--depth", type=int, help="Expansion depth (tables may set their own)")
@JSON_OUTPUT_OPTION
def abelian(source, output_format, depth, json_output):
    """Zeta functions of abelian varieties: semi-abelian closed forms and oracle tables."""
    _run("abelian", [source], output_format, json_output=json_output, depth=depth)


@main.command()
@click.argument("subcommand")
@click.argument("inputs", nargs=-1)
@click.option("--format", "output_format", type=FORMAT_CHOICE, help="Report format")
@click.option("--depth", type=int, help="Series depth D")
@click.option("--n", "n", type=int, help="Parameter for generator stubs")
@click.option("--workers", type=int, help="Worker processes (default from settings)")
@JSON_OUTPUT_OPTION
def batch(subcommand, inputs, output_format, depth, n, workers, json_output):
    """Run SUBCOMMAND over INPUTS in parallel (default: the whole corpus)."""
    from motivic_zeta.corpus import list_corpus

    if not inputs:
        kind = "abelian" if subcommand == "abelian" else "model"
        inputs = [str(p) for p in list_corpus(kind)]
    _run(
        subcommand,
        inputs,
        output_format,
        batch=True,
        workers=workers,
        json_output=json_output,
        depth=depth,
        n=n,
    )


@main.command()
@click.option("--kind", type=click.Choice(["model", "abelian", "all"]), default="all")
def corpus(kind):
    """List the example corpus."""
    from rich.console import Console
    from rich.table import Table
    from rich import box
    from motivic_zeta.corpus import corpus_dir, list_corpus

    console = Console()
    table = Table(title=f"Corpus in {corpus_dir()}", box=box.SIMPLE, title_justify="left")
    table.add_column("Name")
    table.add_column("Kind")
    kinds = ["model", "abelian"] if kind == "all" else [kind]
    for k in kinds:
        for path in list_corpus(k):
            table.add_row(path.stem, k)
    console.print(table)


if __name__ == "__main__":
    main()
