import io
import json

import pandas as pd
import pytest

from unirat.models import Convention, PointCountRecord, Verdict, VerdictKind
from unirat.reporting import ReportError, ReportManager
from unirat.workflows.expectations import TABLE1, TABLE2_COUNTS, TABLE2_RESIDUES


@pytest.fixture
def manager(output_dir):
    return ReportManager()


@pytest.fixture
def table2_records():
    return [
        PointCountRecord(p=p, count=count, zeros=count, good_reduction=p != 3)
        for p, count in TABLE2_COUNTS.items()
    ]


def test_table1_json(manager):
    data = json.loads(manager.table1(TABLE1, "json"))
    assert len(data) == 16
    assert data[0] == {
        "point": [1, 0, 0, 1],
        "multiplicity": 4,
        "surfaces": ["B_2", "B_4", "B_5"],
        "curves": ["B_{2,4}", "B_{2,5}", "B_{4,5}^1", "B_{4,5}^2"],
    }


def test_table1_csv_and_markdown(manager):
    frame = pd.read_csv(io.StringIO(manager.table1(TABLE1, "csv")))
    assert list(frame.columns) == ["point", "multiplicity", "surfaces", "curves"]
    assert frame.loc[0, "point"] == "(1:0:0:1)"
    assert frame["multiplicity"].tolist() == [row.multiplicity for row in TABLE1]

    text = manager.table1(TABLE1, "markdown")
    assert text.startswith("# Special points of B\n")
    assert "(1:1:4:3)" in text and "B_{5,6}^1, B_{5,6}^2" in text


def test_point_counts_formats(manager, table2_records):
    data = json.loads(manager.point_counts(table2_records, "json"))
    assert [row["residue_weight4"] for row in data] == list(TABLE2_RESIDUES.values())

    csv = manager.point_counts(table2_records, "csv")
    assert csv.splitlines()[0] == "p,count,residue_weight4,good_reduction"
    assert csv.splitlines()[1] == "3,46,0,False"

    markdown = manager.point_counts(table2_records, "markdown", title="Point counting on X")
    headers = [line for line in markdown.splitlines() if line.startswith("| p ")]
    assert len(headers) == 3
    assert "948380" in markdown
    assert "Bad reduction at p = 3." in markdown


def test_empty_counts(manager):
    assert manager.point_counts([], "json") == "[]\n"
    assert manager.point_counts([], "csv") == "p,count,residue_weight4,good_reduction\n"


def test_verdict_rendering(manager):
    verdict = Verdict(VerdictKind.NOT_UNIRATIONAL_GUESS, (5, 7), (5,), False, ({"p": 5},))
    fit = {"c1": -8, "c2": 4}
    data = json.loads(manager.verdicts({"guess": verdict, "exact_fit": fit}, "json"))
    assert data["guess"]["kind"] == "not_unirational_guess"
    assert data["exact_fit"] == fit

    csv = manager.verdicts({"guess": verdict}, "csv")
    assert csv.splitlines()[1] == "guess,not_unirational_guess,2,1,False"

    markdown = manager.verdicts({"guess": verdict, "exact_fit": fit}, "markdown")
    assert "## exact_fit" in markdown and "- c1: -8" in markdown
    assert verdict.caveat in markdown


def test_paper_rendering(manager):
    report = {
        "ok": False,
        "sections": [
            {"name": "count", "ok": False, "matched": 47, "total": 48, "mismatches": ["#X_5: off"]},
        ],
    }
    markdown = manager.paper(report, "markdown")
    assert markdown.startswith("# Reproduction FAILED")
    assert "- #X_5: off" in markdown
    assert manager.paper(report, "csv").splitlines()[1] == "count,47,48,False"


def test_rendering_is_deterministic(manager, table2_records):
    for fmt in ("json", "csv", "markdown"):
        first = manager.point_counts(table2_records, fmt)
        assert first == manager.point_counts(table2_records, fmt)


def test_paths_and_writing(manager, output_dir, tmp_path, capsys):
    assert manager.default_path("table1", "markdown") == output_dir / "table1.md"
    assert manager.default_path("counts_X", "csv") == output_dir / "counts_X.csv"

    target = manager.write("hello\n", tmp_path / "nested" / "out.txt")
    assert target.read_text(encoding="utf-8") == "hello\n"
    assert manager.write("to stdout\n") is None
    assert capsys.readouterr().out == "to stdout\n"


def test_unknown_format(manager):
    with pytest.raises(ReportError):
        manager.table1(TABLE1, "html")
    with pytest.raises(ReportError):
        manager.default_path("table1", "xml")


def test_residue_column_uses_weight4_convention(table2_records):
    record = table2_records[1]
    assert record.to_dict()["residue_weight4"] == record.residue(Convention.WEIGHT4) == 1
