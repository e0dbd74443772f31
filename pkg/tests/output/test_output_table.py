# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

import json

import jsonschema
import pytest

from strata_betti.issue import Issue, IssueIdentifiers, IssueType
from strata_betti.output import (
    OUTPUT_TABLE_SCHEMA,
    OutputFormat,
    OutputRow,
    OutputTable,
    render_tables,
)


@pytest.fixture
def table():
    return OutputTable(
        title="Stable H_*(w_{1^j 2 3}(C^1); Q)",
        rows=[
            OutputRow(0, 1, {"series": 1, "gerstenhaber": 1, "published": 1}),
            OutputRow(
                1,
                4,
                {"series": 4, "gerstenhaber": 4, "published": 0},
                note="computed 4, published table gives 0",
            ),
        ],
        d=1,
        j=3,
        notes=["provenance: 2 engines agree"],
        discrepancies=[
            Issue(
                IssueType.PUBLISHED_DISCREPANCY,
                IssueIdentifiers(degree=1, d=1, engine="published"),
                "computed 4, published table gives 0",
            )
        ],
    )


def test_output_format_names():
    assert OutputFormat.names() == ["text", "csv", "json"]


def test_to_text__plain():
    table = OutputTable(title="T", rows=[OutputRow(0, 1), OutputRow(10, 2, note="x")], d=2)
    assert table.to_text() == "T\nd = 2\ndegree  dim\n     0    1\n    10    2  # x\n"


def test_to_text__engines_notes_and_discrepancies(table):
    lines = table.to_text().splitlines()
    assert lines[0] == "Stable H_*(w_{1^j 2 3}(C^1); Q)"
    assert lines[1] == "d = 1, j = 3"
    assert lines[2] == "degree  dim  series  gerstenhaber  published"
    assert lines[4] == (
        "     1    4       4             4          0  # computed 4, published table gives 0"
    )
    assert lines[5] == "provenance: 2 engines agree"
    assert lines[6].startswith("! PublishedDiscrepancy(d=1, degree=1, engine=published)")


def test_to_csv(table):
    assert table.to_csv() == (
        "degree,dim,series,gerstenhaber,published\n0,1,1,1,1\n1,4,4,4,0\n"
    )


def test_to_csv__without_engines():
    table = OutputTable(title="T", rows=[OutputRow(0, 1), OutputRow(1, 0)])
    assert table.to_csv() == "degree,dim\n0,1\n1,0\n"


def test_to_json(table):
    data = json.loads(table.to_json())
    assert data["title"] == table.title
    assert data["d"] == 1
    assert data["j"] == 3
    assert "m" not in data
    assert data["rows"][1] == {
        "degree": 1,
        "dim": 4,
        "engines": {"series": 4, "gerstenhaber": 4, "published": 0},
    }
    assert data["discrepancies"][0]["type"] == "PublishedDiscrepancy"
    jsonschema.validate(data, OUTPUT_TABLE_SCHEMA)


def test_to_json__schema_violation():
    table = OutputTable(title="T", rows=[OutputRow(0, 1)], d=0)
    with pytest.raises(jsonschema.ValidationError):
        table.to_json()


def test_render(table):
    assert table.render("text") == table.to_text()
    assert table.render(OutputFormat.CSV) == table.to_csv()
    assert table.render("json") == table.to_json() + "\n"
    with pytest.raises(ValueError):
        table.render("xml")


def test_dims_and_engine_names(table):
    assert table.dims == [1, 4]
    assert table.engine_names == ["series", "gerstenhaber", "published"]


def test_render_tables__json_array(table):
    other = OutputTable(title="T", rows=[OutputRow(0, 1)], m=2)
    data = json.loads(render_tables([table, other], "json"))
    assert isinstance(data, list)
    assert [entry["title"] for entry in data] == [table.title, "T"]


def test_render_tables__single_json_object(table):
    data = json.loads(render_tables([table], "json"))
    assert isinstance(data, dict)


def test_render_tables__text_joined(table):
    other = OutputTable(title="T", rows=[OutputRow(0, 1)], m=2)
    assert render_tables([table, other], "text") == table.to_text() + "\n" + other.to_text()


if __name__ == "__main__":
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear", "-v"])
