"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (the validation message is
printed to stderr), 2 on a usage error.
"""

import sys
from typing import Any, Sequence

import click

from app import __version__
from app.bounds.complexity import complexity_interval
from app.bounds.covers import cover_bound
from app.bounds.families import cor2_family, pretzel_spine
from app.census.report import census_report, rows_to_csv, rows_to_json
from app.census.volumes import ingest_volumes
from app.cli import formatting
from app.common.config import get_settings
from app.common.errors import ComplexityError, NonCanonicalError, require_two_entries
from app.common.logger import get_logger, set_level
from app.links.continued_fraction import ContinuedFraction, cf_value
from app.links.two_bridge import normalize
from app.observability.run_manager import get_run_manager
from app.observability.tracer import get_tracer
from app.spine.ledger import simulate, trace_lines

logger = get_logger(__name__)


class IntListType(click.ParamType):
    """Comma-separated integers such as 3,2,1,3,3 or -2,3,-2."""

    name = "a1,a2,..."

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> tuple[int, ...]:
        if isinstance(value, tuple):
            return value
        parts = [part.strip() for part in str(value).strip("[]").split(",") if part.strip()]
        try:
            return tuple(int(part) for part in parts)
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of integers", param, ctx)


INT_LIST = IntListType()


class ComplexityGroup(click.Group):
    """Group mapping domain errors to exit status 1."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except ComplexityError as e:
            click.echo(f"Error: {e}", err=True)
            ctx.exit(1)


def format_option(*choices: str):
    """--format option restricted to the given choices."""

    def default() -> str:
        preferred = get_settings().default_format
        return preferred if preferred in choices else choices[0]

    return click.option(
        "--format",
        "fmt",
        type=click.Choice(choices),
        default=default,
        show_default="table",
        help="Output format.",
    )


@click.group(cls=ComplexityGroup, no_args_is_help=True)
@click.version_option(__version__, prog_name="twobridge")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
    help="Override the configured log level.",
)
def cli(log_level: str | None) -> None:
    """Complexity bounds for two-bridge link complements."""
    if log_level:
        set_level(log_level)


@cli.command()
@click.argument("p", type=int)
@click.argument("q", type=int)
@format_option("table", "json")
def expand(p: int, q: int, fmt: str) -> None:
    """Normalize K(P,Q) and print its canonical continued fraction."""
    link = normalize(p, q)
    if fmt == "json":
        click.echo(formatting.dumps(formatting.expand_dict(link)))
    else:
        click.echo(formatting.expand_line(link))


@cli.command()
@click.argument("p", type=int, required=False)
@click.argument("q", type=int, required=False)
@click.option("--cf", "cf_entries", type=INT_LIST, help="Continued fraction a1,a2,...,an.")
@format_option("table", "json", "csv")
def bound(p: int | None, q: int | None, cf_entries: tuple[int, ...] | None, fmt: str) -> None:
    """All bounds for K(P,Q), or for the link given by --cf."""
    if cf_entries is not None:
        if p is not None or q is not None:
            raise click.UsageError("give either P Q or --cf, not both")
        cf = ContinuedFraction(cf_entries)
        p, q = cf_value(cf)
        link = normalize(p, q)
        if link.cf != cf:
            raise NonCanonicalError(f"{cf} is not canonical; its canonical form is {link.cf}")
    elif p is not None and q is not None:
        link = normalize(p, q)
    else:
        raise click.UsageError("bound needs P Q or --cf")

    report = complexity_interval(link)
    if fmt == "json":
        click.echo(formatting.dumps(report.to_dict()))
    elif fmt == "csv":
        click.echo(formatting.bound_csv(report))
    else:
        click.echo(formatting.bound_table(report))


@cli.command()
@click.option("--cf", "cf_entries", type=INT_LIST, required=True, help="Continued fraction.")
@click.option("--save", "run_id", default=None, help="Write the trace to runs/RUN_ID/trace.jsonl.")
@format_option("table", "json")
def spine(cf_entries: tuple[int, ...], run_id: str | None, fmt: str) -> None:
    """Simulate the spine construction and print the ledger trace."""
    ledger = simulate(ContinuedFraction(cf_entries))
    if run_id:
        path = get_tracer().record(run_id, ledger)
        if path is not None:
            click.echo(f"trace saved to {path}", err=True)

    if fmt == "json":
        for event in ledger.events:
            click.echo(event.to_json())
    else:
        click.echo("\n".join(trace_lines(ledger)))


@cli.command()
@click.argument("p", type=int)
@click.argument("q", type=int)
@click.argument("d", type=int)
@format_option("table", "json")
def cover(p: int, q: int, d: int, fmt: str) -> None:
    """Bound the complexity of the D-fold meridian-cyclic branched cover."""
    result = cover_bound(normalize(p, q), d)
    if fmt == "json":
        click.echo(formatting.dumps(result.model_dump(mode="json")))
    else:
        click.echo(formatting.cover_table(result))


@cli.command()
@click.option("--n", "n", type=int, required=True, help="Length of [2,1,...,1,2].")
@click.option("--upto", is_flag=True, help="List every member from n = 2 up to N.")
@format_option("table", "json")
def family(n: int, upto: bool, fmt: str) -> None:
    """Links [2,1,...,1,2] whose complexity is exactly 2n - 2."""
    require_two_entries(n)
    lengths = range(2, n + 1) if upto else [n]
    members = [(k, *cor2_family(k)) for k in lengths]
    if fmt == "json":
        data = [
            {"n": k, "p": link.p, "q": link.q, "cf": link.cf.to_list(), "complexity": exact}
            for k, link, exact in members
        ]
        click.echo(formatting.dumps(data if upto else data[0]))
    else:
        click.echo(formatting.family_table(members))


@cli.command(context_settings={"ignore_unknown_options": True})
@click.argument("twists", type=INT_LIST)
@format_option("table", "json")
def pretzel(twists: tuple[int, ...], fmt: str) -> None:
    """Upper bound for the pretzel link P(a1,...,an)."""
    result = pretzel_spine(twists)
    if fmt == "json":
        click.echo(formatting.dumps(result.model_dump(mode="json")))
    else:
        click.echo(formatting.pretzel_table(result))


@cli.command()
@click.option("--max-p", "max_p", type=int, required=True, help="Largest p to include.")
@click.option(
    "--volumes",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="CSV with header p,q,volume.",
)
@click.option("--serial", is_flag=True, help="Compute rows without a worker pool.")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Worker count.")
@click.option("--save", "run_id", default=None, help="Save outputs under runs/RUN_ID/.")
@format_option("table", "json", "csv")
def census(
    max_p: int,
    volumes: str | None,
    serial: bool,
    workers: int | None,
    run_id: str | None,
    fmt: str,
) -> None:
    """Bounds for every two-bridge link complement with p <= MAX_P."""
    table = ingest_volumes(volumes) if volumes else None
    rows = census_report(max_p, volumes=table, parallel=not serial, workers=workers)

    if run_id:
        params = {"max_p": max_p, "volumes": volumes, "serial": serial}
        run_dir = get_run_manager().save_census(run_id, rows, params)
        click.echo(f"census saved to {run_dir}", err=True)

    if fmt == "json":
        click.echo(rows_to_json(rows))
    elif fmt == "csv":
        click.echo(rows_to_csv(rows), nl=False)
    else:
        click.echo(formatting.census_table(rows))


def dispatch(argv: Sequence[str]) -> int:
    """Run one CLI invocation and return its exit status."""
    try:
        result = cli.main(args=list(argv), prog_name="twobridge", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return result if isinstance(result, int) else 0


def main() -> None:
    """Console script entry point."""
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
