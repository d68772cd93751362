"""Plain-text renderers for CLI output."""

import csv
import io
import json
from typing import Any, Iterable

from rich import box
from rich.console import Console
from rich.table import Table

from app.bounds.complexity import BoundReport
from app.bounds.covers import CoverBound
from app.bounds.families import PretzelSpine
from app.census.report import CensusRow
from app.links.two_bridge import TwoBridgeLink, equivalence_class, is_hyperbolic


def render(table: Table, width: int = 120) -> str:
    """Render a rich table to uncolored fixed-width text."""
    buffer = io.StringIO()
    console = Console(file=buffer, width=width, color_system=None, force_terminal=False)
    console.print(table)
    return buffer.getvalue().rstrip("\n")


def dumps(data: Any) -> str:
    """Stable JSON used for every machine-readable output."""
    return json.dumps(data, indent=2, ensure_ascii=False)


def _volume(value: float | None) -> str:
    return "" if value is None else f"{value:.6f}"


def _cell(value: Any) -> str:
    return "" if value is None else str(value)


def key_value_table(title: str, rows: Iterable[tuple[str, Any]]) -> Table:
    table = Table(title=title, box=box.SIMPLE, show_header=False)
    table.add_column("field", style="bold")
    table.add_column("value")
    for key, value in rows:
        table.add_row(key, _cell(value))
    return table


def expand_line(link: TwoBridgeLink) -> str:
    """Summary such as: mirror applied; 121/36 = [3,2,1,3,3]"""
    body = f"{link.p}/{link.q} = {link.cf}"
    if link.trace:
        steps = ", ".join(step.value for step in link.trace)
        return f"{steps} applied; {body}"
    return body


def expand_dict(link: TwoBridgeLink) -> dict[str, Any]:
    return {
        "p": link.p,
        "q": link.q,
        "cf": link.cf.to_list(),
        "n": link.n,
        "trace": [step.value for step in link.trace],
        "hyperbolic": is_hyperbolic(link),
        "class_members": sorted(equivalence_class(link)),
    }


def bound_table(report: BoundReport) -> str:
    rows = [
        ("link", f"K({report.p},{report.q})"),
        ("cf", "[" + ",".join(str(a) for a in report.cf) + "]"),
        ("n", report.n),
        ("upper_thm1", report.upper_thm1),
        ("upper_lemma1", report.upper_lemma1),
        ("upper_sw", report.upper_sw),
        ("lower", report.lower),
        ("lower_volume", _volume(report.lower_volume)),
        ("exact", report.exact),
        ("hyperbolic", str(report.hyperbolic).lower()),
    ]
    return render(key_value_table("complexity bounds", rows))


def bound_csv(report: BoundReport) -> str:
    data = report.to_dict()
    data["cf"] = "[" + ",".join(str(a) for a in report.cf) + "]"
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(list(data))
    writer.writerow(
        [str(v).lower() if isinstance(v, bool) else _cell(v) for v in data.values()]
    )
    return buffer.getvalue().rstrip("\n")


def cover_table(bound: CoverBound) -> str:
    rows = [
        ("link", f"K({bound.p},{bound.q})"),
        ("d", bound.d),
        ("r", bound.r),
        ("upper_thm1", bound.upper_thm1),
        ("lifted_vertices", bound.lifted_vertices),
        ("disk_vertices", bound.disk_vertices),
        ("value", bound.value),
    ]
    return render(key_value_table("branched cover bound", rows))


def family_table(members: list[tuple[int, TwoBridgeLink, int]]) -> str:
    table = Table(title="[2,1,...,1,2] family", box=box.SIMPLE)
    for column in ("n", "p", "q", "cf", "complexity"):
        table.add_column(column, justify="right")
    for n, link, exact in members:
        table.add_row(str(n), str(link.p), str(link.q), str(link.cf), str(exact))
    return render(table)


def pretzel_table(spine: PretzelSpine) -> str:
    rows = [
        ("twists", ",".join(str(a) for a in spine.twists)),
        ("tubes", spine.tubes),
        ("disks", spine.disks),
        ("upper", spine.vertices),
    ]
    return render(key_value_table("pretzel link bound", rows))


def census_table(rows: list[CensusRow]) -> str:
    table = Table(box=box.SIMPLE)
    headers = ["p", "q", "cf", "n", "thm1", "lemma1", "sw", "lower", "eff", "exact", "hyp"]
    for header in headers:
        table.add_column(header, justify="right")
    for row in rows:
        report = row.report
        table.add_row(
            str(row.p),
            str(row.q),
            "[" + ",".join(str(a) for a in report.cf) + "]",
            str(report.n),
            _cell(report.upper_thm1),
            _cell(report.upper_lemma1),
            _cell(report.upper_sw),
            str(report.lower),
            str(row.effective_lower),
            _cell(row.exact),
            "y" if report.hyperbolic else "n",
        )
    return render(table, width=160)
