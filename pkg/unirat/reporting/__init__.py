"""
Report rendering for unirat.

Every report starts as a list of plain record dicts. JSON is the canonical
form; CSV and markdown are renderings of the same records.
"""

import json
from pathlib import Path
from typing import Any, Mapping, Optional, Sequence, Union

import click
import pandas as pd
from jinja2 import Environment, FileSystemLoader, StrictUndefined
from tabulate import tabulate

from ..config import settings
from ..models import Convention, IncidenceRow, PointCountRecord, Verdict
from ..utils import UniratError, get_logger

logger = get_logger(__name__)

FORMATS = ("json", "csv", "markdown")
EXTENSIONS = {"json": "json", "csv": "csv", "markdown": "md"}

TABLE1_COLUMNS = ["point", "multiplicity", "surfaces", "curves"]
COUNT_COLUMNS = ["p", "count", "residue_weight4", "good_reduction"]

# Primes per block in the markdown rendering of point counts.
BLOCK_WIDTH = 8


class ReportError(UniratError):
    pass


def to_json(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def to_csv(rows: Sequence[Mapping[str, Any]], columns: Sequence[str]) -> str:
    frame = pd.DataFrame(list(rows), columns=list(columns))
    return frame.to_csv(index=False, lineterminator="\n")


def _joined(values: Sequence[str]) -> str:
    return " ".join(values)


class ReportManager:
    """
    Renders unirat reports as JSON, CSV or markdown.

    Markdown goes through the jinja2 templates in ``template_dir``; tables
    inside them are produced by tabulate in pipe format.
    """

    def __init__(self, template_dir: Optional[str] = None, output_dir: Optional[str] = None):
        self.template_dir = Path(template_dir or settings.reporting.template_dir)
        self.output_dir = Path(output_dir or settings.reporting.output_dir)
        self.env = Environment(
            loader=FileSystemLoader(str(self.template_dir)),
            undefined=StrictUndefined,
            keep_trailing_newline=True,
            trim_blocks=True,
            lstrip_blocks=True,
        )

    def _check_format(self, fmt: str) -> None:
        if fmt not in FORMATS:
            expected = ", ".join(FORMATS)
            raise ReportError(f"unknown report format {fmt!r}; expected one of {expected}")

    def _markdown(self, template: str, **context) -> str:
        return self.env.get_template(template).render(**context)

    def table1(self, rows: Sequence[IncidenceRow], fmt: str = "json") -> str:
        """Special points of the branch octic with multiplicities and incidences."""
        self._check_format(fmt)
        records = [row.to_dict() for row in rows]
        if fmt == "json":
            return to_json(records)
        if fmt == "csv":
            flat = [
                {
                    "point": row.label,
                    "multiplicity": row.multiplicity,
                    "surfaces": _joined(row.surfaces),
                    "curves": _joined(row.curves),
                }
                for row in rows
            ]
            return to_csv(flat, TABLE1_COLUMNS)
        table = tabulate(
            [
                [row.label, row.multiplicity, ", ".join(row.surfaces), ", ".join(row.curves)]
                for row in rows
            ],
            headers=["point", "mult", "surfaces", "curves"],
            tablefmt="pipe",
        )
        return self._markdown("table1.md.j2", title="Special points of B", table=table)

    def point_counts(
        self, records: Sequence[PointCountRecord], fmt: str = "json", title: str = "Point counts"
    ) -> str:
        """Counts with the weight-4 residue, in blocks of primes for markdown."""
        self._check_format(fmt)
        if fmt == "json":
            return to_json([record.to_dict() for record in records])
        if fmt == "csv":
            return to_csv([record.to_dict() for record in records], COUNT_COLUMNS)

        blocks = []
        for start in range(0, len(records), BLOCK_WIDTH):
            chunk = records[start : start + BLOCK_WIDTH]
            blocks.append(
                tabulate(
                    [
                        ["#(F_p)"] + [record.count for record in chunk],
                        ["1 - # mod p"] + [record.residue(Convention.WEIGHT4) for record in chunk],
                    ],
                    headers=["p"] + [record.p for record in chunk],
                    tablefmt="pipe",
                )
            )
        bad = [record.p for record in records if not record.good_reduction]
        return self._markdown("table2.md.j2", title=title, blocks=blocks, bad_primes=bad)

    def verdicts(self, verdicts: Mapping[str, Any], fmt: str = "json") -> str:
        """Named verdicts plus optional exact-fit dicts."""
        self._check_format(fmt)
        data = {
            name: value.to_dict() if hasattr(value, "to_dict") else value
            for name, value in verdicts.items()
        }
        if fmt == "json":
            return to_json(data)

        summary = []
        for name, value in verdicts.items():
            if isinstance(value, Verdict):
                summary.append(
                    {
                        "test": name,
                        "kind": value.kind.value,
                        "sigma": len(value.sigma),
                        "sigma0": len(value.sigma0),
                        "threshold_met": value.threshold_met,
                    }
                )
        if fmt == "csv":
            return to_csv(summary, ["test", "kind", "sigma", "sigma0", "threshold_met"])

        caveats = sorted({v.caveat for v in verdicts.values() if isinstance(v, Verdict)})
        extras = {name: v for name, v in data.items() if not isinstance(verdicts[name], Verdict)}
        return self._markdown(
            "verdicts.md.j2",
            table=tabulate(summary, headers="keys", tablefmt="pipe") if summary else "",
            extras=extras,
            caveats=caveats,
        )

    def paper(self, report: Mapping[str, Any], fmt: str = "json") -> str:
        """Reproduction summary produced by PaperWorkflow."""
        self._check_format(fmt)
        if fmt == "json":
            return to_json(report)

        rows = []
        for section in report["sections"]:
            rows.append(
                {
                    "section": section["name"],
                    "matched": section["matched"],
                    "total": section["total"],
                    "ok": section["ok"],
                }
            )
        if fmt == "csv":
            return to_csv(rows, ["section", "matched", "total", "ok"])
        return self._markdown(
            "paper.md.j2",
            ok=report["ok"],
            table=tabulate(rows, headers="keys", tablefmt="pipe"),
            sections=report["sections"],
        )

    def records(self, rows: Sequence[Mapping[str, Any]], columns: Sequence[str], fmt: str) -> str:
        """Generic rendering of flat rows."""
        self._check_format(fmt)
        if fmt == "json":
            return to_json(list(rows))
        if fmt == "csv":
            return to_csv(rows, columns)
        table = [[row[c] for c in columns] for row in rows]
        return tabulate(table, headers=list(columns), tablefmt="pipe") + "\n"

    def default_path(self, stem: str, fmt: str) -> Path:
        self._check_format(fmt)
        return self.output_dir / f"{stem}.{EXTENSIONS[fmt]}"

    def write(self, text: str, out: Optional[Union[str, Path]] = None) -> Optional[Path]:
        """Write a rendered report to ``out``, or to stdout when no path is given."""
        if out is None:
            click.echo(text, nl=False)
            return None
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        logger.info(f"Report written to {path}")
        return path


__all__ = [
    "BLOCK_WIDTH",
    "EXTENSIONS",
    "FORMATS",
    "ReportError",
    "ReportManager",
    "to_csv",
    "to_json",
]
