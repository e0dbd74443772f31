# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

import json

import pytest
from click.testing import CliRunner

from strata_betti.__main__ import cli, run
from strata_betti.models import PoincareSeries


@pytest.fixture
def runner():
    return CliRunner()


def _broken_loop_sphere_series(d, max_degree):
    return PoincareSeries((1,) + (0,) * max_degree)


class TestBettiMapspace:
    """Tests for `betti mapspace`."""

    def test_m1_json(self, runner):
        result = runner.invoke(cli, ["betti", "mapspace", "--m", "1", "--max-degree", "4", "--format", "json"])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert [row["dim"] for row in data["rows"]] == [1, 0, 0, 1, 0]
        assert data["m"] == 1

    def test_m2_csv(self, runner):
        result = runner.invoke(cli, ["betti", "mapspace", "--m", "2", "--max-degree", "7", "--format", "csv"])
        assert result.exit_code == 0
        assert result.output == "degree,dim\n0,1\n1,0\n2,1\n3,0\n4,1\n5,0\n6,0\n7,1\n"

    def test_m2_text(self, runner):
        result = runner.invoke(cli, ["betti", "mapspace", "--m", "2", "--max-degree", "3"])
        assert result.exit_code == 0
        assert result.output.splitlines()[0] == "H^*(map_l(CP^2, S^4); Q) via MR(2)"
        assert result.output.splitlines()[1] == "m = 2"

    def test_m0_is_usage_error(self, runner):
        result = runner.invoke(cli, ["betti", "mapspace", "--m", "0"])
        assert result.exit_code == 2

    def test_ring(self, runner):
        result = runner.invoke(cli, ["betti", "mapspace", "--m", "2", "--max-degree", "4", "--ring"])
        assert result.exit_code == 0
        assert "c7 = b2*v5 + 4*v7" in result.output
        assert "verified up to degree 22" in result.output

    def test_ring_json_is_array(self, runner):
        result = runner.invoke(
            cli, ["betti", "mapspace", "--m", "2", "--max-degree", "4", "--ring", "--format", "json"]
        )
        assert result.exit_code == 0
        assert len(json.loads(result.output)) == 2

    def test_ring_unavailable(self, runner):
        result = runner.invoke(cli, ["betti", "mapspace", "--m", "5", "--ring"])
        assert result.exit_code == 2
        assert "--ring is only available" in result.output


class TestBettiStratum:
    """Tests for `betti stratum`."""

    def test_fixed_partition(self, runner):
        result = runner.invoke(
            cli,
            ["betti", "stratum", "--lambda", "1^5 2", "--d", "1", "--max-degree", "7", "--format", "csv"],
        )
        assert result.exit_code == 0
        dims = [int(line.split(",")[1]) for line in result.output.splitlines()[1:]]
        assert dims == [1, 2, 2, 2, 2, 1, 0, 0]

    def test_j_sets_number_of_ones(self, runner):
        result = runner.invoke(
            cli,
            ["betti", "stratum", "--lambda", "1 2", "--j", "5", "--d", "1", "--max-degree", "7", "--format", "json"],
        )
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["j"] == 5
        assert data["title"] == "H_*(w_{1^5 2}(C^1); Q)"
        assert [row["dim"] for row in data["rows"]] == [1, 2, 2, 2, 2, 1, 0, 0]

    def test_stable(self, runner):
        result = runner.invoke(
            cli, ["betti", "stratum", "--lambda", "2", "--d", "2", "--stable", "--max-degree", "9"]
        )
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "Stable H_*(w_{1^j 2}(C^2); Q)"
        assert lines[1] == "d = 2, j = 11"
        assert lines[2] == "degree  dim  closed_form  series  gerstenhaber"
        assert "provenance: 3 engines agree" in lines

    def test_stable_published_discrepancy(self, runner):
        result = runner.invoke(
            cli,
            ["betti", "stratum", "--lambda", "2 3", "--d", "1", "--stable", "--max-degree", "5", "--format", "json"],
        )
        assert result.exit_code == 0
        data = json.loads(result.output.split("warning:")[0])
        assert [row["dim"] for row in data["rows"]] == [1, 4, 8, 12, 16, 20]
        assert [issue["type"] for issue in data["discrepancies"]] == ["PublishedDiscrepancy"]
        assert "warning: w_{1^j 2 3}, d=1, degree 1: computed 4, published table gives 0" in result.output

    def test_stable_engine_disagreement_exits_1(self, runner, monkeypatch):
        monkeypatch.setattr(
            "strata_betti.models.section_spaces.loop_sphere_series", _broken_loop_sphere_series
        )
        result = runner.invoke(
            cli, ["betti", "stratum", "--lambda", "2", "--d", "1", "--stable", "--max-degree", "4"]
        )
        assert result.exit_code == 1
        assert "engines disagree in degrees 1, 2, 3, 4" in result.output
        assert "closed_form=2, series=1, gerstenhaber=2" in result.output

    def test_stable_and_j_exclusive(self, runner):
        result = runner.invoke(
            cli, ["betti", "stratum", "--lambda", "2", "--d", "1", "--stable", "--j", "3"]
        )
        assert result.exit_code == 2

    def test_bad_partition(self, runner):
        result = runner.invoke(cli, ["betti", "stratum", "--lambda", "1^x", "--d", "1"])
        assert result.exit_code == 2
        assert "--lambda" in result.output

    def test_empty_partition(self, runner):
        result = runner.invoke(cli, ["betti", "stratum", "--lambda", "1^3", "--j", "0", "--d", "1"])
        assert result.exit_code == 2

    def test_d_zero(self, runner):
        result = runner.invoke(cli, ["betti", "stratum", "--lambda", "2", "--d", "0"])
        assert result.exit_code == 2


class TestCompareFormulas:
    """Tests for `compare-formulas`."""

    def test_d2(self, runner):
        result = runner.invoke(cli, ["compare-formulas", "--d", "2", "--max-degree", "8", "--format", "csv"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "degree,dim,predicted,corrected"
        assert lines[7] == "6,2,0,2"
        assert lines[9] == "8,0,2,0"

    def test_text_names_first_disagreement(self, runner):
        result = runner.invoke(cli, ["compare-formulas", "--d", "3", "--max-degree", "12"])
        assert result.exit_code == 0
        assert "first disagreement at degree 10" in result.output
        assert "  # first disagreement" in result.output


class TestVerify:
    """Tests for `verify`."""

    def test_conjecture_g(self, runner):
        result = runner.invoke(cli, ["verify", "conjecture-g"])
        assert result.exit_code == 0
        assert result.output.splitlines()[-1] == "conjecture-g: PASS"

    def test_w1j23_reports_discrepancy_and_passes(self, runner):
        result = runner.invoke(cli, ["verify", "w1j23"])
        assert result.exit_code == 0
        assert "documented discrepancy(ies) with printed tables" in result.output
        assert "w1j23: PASS" in result.output

    def test_conjecture_h_fails_on_broken_engine(self, runner, monkeypatch):
        monkeypatch.setattr(
            "strata_betti.models.section_spaces.loop_sphere_series", _broken_loop_sphere_series
        )
        result = runner.invoke(cli, ["verify", "conjecture-h"])
        assert result.exit_code == 1
        assert "conjecture-h: FAIL" in result.output
        assert "EngineDisagreement" in result.output

    def test_unknown_check(self, runner):
        result = runner.invoke(cli, ["verify", "conjecture-x"])
        assert result.exit_code == 2


class TestRun:
    """Tests for the run entry point."""

    def test_success(self, capsys):
        assert run(["betti", "mapspace", "--m", "1", "--max-degree", "3"]) == 0
        assert capsys.readouterr().out.startswith("H^*(map_l(CP^1, S^2); Q) via MR(1)")

    def test_usage_error(self, capsys):
        assert run(["betti", "mapspace", "--m", "0"]) == 2
        assert "Invalid value" in capsys.readouterr().err

    def test_failure_exit_code(self, monkeypatch, capsys):
        monkeypatch.setattr(
            "strata_betti.models.section_spaces.loop_sphere_series", _broken_loop_sphere_series
        )
        args = ["betti", "stratum", "--lambda", "2", "--d", "1", "--stable", "--max-degree", "4"]
        assert run(args) == 1


if __name__ == "__main__":
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear", "-v"])
