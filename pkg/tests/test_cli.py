"""Command-line front end: parsing, reports, and exit codes."""

from __future__ import annotations

import math

import pytest

from screwalgebra.cli import (
    ParseError,
    RotRecord,
    TransRecord,
    format_motion_file,
    main,
    parse_motion_file,
)


def run_cli(capsys, *argv: str) -> tuple[int, dict[str, str]]:
    code = main(list(argv))
    out = capsys.readouterr().out
    report = {}
    for line in out.splitlines():
        key, _, value = line.partition("=")
        report[key] = value
    return code, report


def vec(report: dict[str, str], key: str) -> tuple[float, ...]:
    return tuple(float(part) for part in report[key].split(","))


class TestMotionFileParsing:
    def test_records_comments_and_blanks(self):
        text = """
        # heading comment
        rot 0 0 1  0 0 0  90

        trans 1 2 3   # trailing comment
        """
        records = parse_motion_file(text)
        assert records == [
            RotRecord(0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 90.0),
            TransRecord(1.0, 2.0, 3.0),
        ]

    def test_empty_file_rejected(self):
        with pytest.raises(ParseError) as exc:
            parse_motion_file("# only a comment\n")
        assert exc.value.line == 0

    def test_unknown_keyword_reports_line(self):
        with pytest.raises(ParseError) as exc:
            parse_motion_file("rot 0 0 1 0 0 0 90\nspin 1 2 3\n")
        assert exc.value.line == 2

    def test_wrong_arity_reports_line(self):
        with pytest.raises(ParseError) as exc:
            parse_motion_file("trans 1 2\n")
        assert exc.value.line == 1

    def test_print_parse_roundtrip(self):
        records = [
            RotRecord(0.1, -0.2, 0.97, 1.5, 0.0, -2.0, 33.75),
            TransRecord(1e-17, 2.5, -3.125),
            RotRecord(0.0, 1.0, 0.0, 0.0, 0.0, 0.0, -179.999),
        ]
        assert parse_motion_file(format_motion_file(records)) == records


class TestCompose:
    def test_turn_then_lift(self, tmp_path, capsys):
        src = tmp_path / "m.txt"
        src.write_text("rot 0 0 1 0 0 0 90\ntrans 0 0 3\n")
        code, report = run_cli(capsys, "compose", str(src))
        assert code == 0
        assert report["kind"] == "screw"
        assert vec(report, "axis.point") == pytest.approx((0, 0, 0), abs=1e-9)
        assert vec(report, "axis.dir") == pytest.approx((0, 0, 1), abs=1e-9)
        assert float(report["angle"]) == pytest.approx(90.0, abs=1e-9)
        assert float(report["slide"]) == pytest.approx(3.0, abs=1e-9)
        assert vec(report, "q") == pytest.approx((0, 0, 2), abs=1e-9)

    def test_two_skewless_quarter_turns(self, tmp_path, capsys):
        src = tmp_path / "m.txt"
        src.write_text("rot 1 0 0 0 0 0 90\nrot 0 1 0 0 0 0 90\n")
        code, report = run_cli(capsys, "compose", str(src))
        assert code == 0
        assert float(report["angle"]) == pytest.approx(120.0, abs=1e-9)
        root3 = math.sqrt(3.0)
        assert vec(report, "axis.dir") == pytest.approx(
            (1 / root3, 1 / root3, -1 / root3), abs=1e-9
        )
        assert float(report["slide"]) == pytest.approx(0.0, abs=1e-9)

    def test_empty_file_exits_2(self, tmp_path, capsys):
        src = tmp_path / "m.txt"
        src.write_text("")
        code, report = run_cli(capsys, "compose", str(src))
        assert code == 2
        assert report["error"] == "parse"

    def test_parse_error_carries_line_number(self, tmp_path, capsys):
        src = tmp_path / "m.txt"
        src.write_text("rot 0 0 1 0 0 0 90\nrot 1 2\n")
        code, report = run_cli(capsys, "compose", str(src))
        assert code == 2
        assert report["error.line"] == "2"

    def test_half_turn_overflows_but_screw_is_printed(self, tmp_path, capsys):
        src = tmp_path / "m.txt"
        src.write_text("rot 0 0 1 0 0 0 180\n")
        code, report = run_cli(capsys, "compose", str(src))
        assert code == 3
        assert report["gibbs"] == "overflow"
        assert report["kind"] == "screw"
        assert float(report["angle"]) == pytest.approx(180.0, abs=1e-9)

    def test_radians_flag(self, tmp_path, capsys):
        src = tmp_path / "m.txt"
        src.write_text(f"rot 0 0 1 0 0 0 {math.pi / 2}\ntrans 0 0 2\n")
        code, report = run_cli(capsys, "compose", "--radians", str(src))
        assert code == 0
        assert float(report["angle"]) == pytest.approx(math.pi / 2, abs=1e-9)
        assert float(report["slide"]) == pytest.approx(2.0, abs=1e-9)

    def test_flags_accepted_before_subcommand(self, tmp_path, capsys):
        src = tmp_path / "m.txt"
        src.write_text(f"rot 0 0 1 0 0 0 {math.pi / 2}\n")
        code, report = run_cli(capsys, "--radians", "compose", str(src))
        assert code == 0
        assert float(report["angle"]) == pytest.approx(math.pi / 2, abs=1e-9)


class TestDecompose:
    def test_quarter_screw_with_slide(self, tmp_path, capsys):
        src = tmp_path / "m.txt"
        src.write_text("rot 0 0 1 0 0 0 90\ntrans 0 0 2\n")
        code, report = run_cli(capsys, "decompose", str(src))
        assert code == 0
        root3 = math.sqrt(3.0)
        assert vec(report, "lineA.dir") == pytest.approx(
            (1 / root3, -1 / root3, 1 / root3), abs=1e-9
        )
        assert float(report["lineA.angle"]) == pytest.approx(120.0, abs=1e-9)
        assert vec(report, "lineB.point") == pytest.approx((0, 1, 1), abs=1e-9)
        assert vec(report, "lineB.dir") == pytest.approx((1, 0, 0), abs=1e-9)
        assert float(report["lineB.angle"]) == pytest.approx(-90.0, abs=1e-9)
        assert float(report["invariant.difference"]) == pytest.approx(
            0.0, abs=1e-9
        )

    def test_invariant_sides_printed(self, tmp_path, capsys):
        src = tmp_path / "m.txt"
        src.write_text("rot 0 0 1 0 0 0 90\ntrans 0 0 2\n")
        code, report = run_cli(capsys, "decompose", str(src))
        assert code == 0
        expected = math.sqrt(2.0) / 2.0
        assert float(report["invariant.lhs"]) == pytest.approx(expected, abs=1e-9)
        assert float(report["invariant.rhs"]) == pytest.approx(expected, abs=1e-9)

    def test_pure_translation_is_degenerate(self, tmp_path, capsys):
        src = tmp_path / "m.txt"
        src.write_text("trans 1 2 3\n")
        code, report = run_cli(capsys, "decompose", str(src))
        assert code == 4
        assert report["degenerate"] == "true"

    def test_zero_slide_is_degenerate(self, tmp_path, capsys):
        src = tmp_path / "m.txt"
        src.write_text("rot 1 0 0 0 0 0 90\nrot 0 1 0 0 0 0 90\n")
        code, report = run_cli(capsys, "decompose", str(src))
        assert code == 4
        assert report["degenerate"] == "true"
        assert "lineA.dir" in report


class TestFit:
    def test_recovers_turn_with_lift(self, tmp_path, capsys):
        src = tmp_path / "points.csv"
        src.write_text(
            "x,y,z,xp,yp,zp\n"
            "0,0,0,0,0,1\n"
            "1,0,0,0,1,1\n"
            "0,1,0,-1,0,1\n"
        )
        code, report = run_cli(capsys, "fit", str(src))
        assert code == 0
        assert vec(report, "q") == pytest.approx((0, 0, 2), abs=1e-9)
        assert vec(report, "delta") == pytest.approx((0, 0, 1), abs=1e-9)
        assert float(report["angle"]) == pytest.approx(90.0, abs=1e-9)

    def test_headerless_csv(self, tmp_path, capsys):
        src = tmp_path / "points.csv"
        src.write_text("0,0,0,0,0,1\n1,0,0,0,1,1\n0,1,0,-1,0,1\n")
        code, report = run_cli(capsys, "fit", str(src))
        assert code == 0
        assert vec(report, "q") == pytest.approx((0, 0, 2), abs=1e-9)

    def test_four_rows_report_rigidity(self, tmp_path, capsys):
        src = tmp_path / "points.csv"
        src.write_text(
            "0,0,0,0,0,1\n1,0,0,0,1,1\n0,1,0,-1,0,1\n2,2,0,-2,2,1\n"
        )
        code, report = run_cli(capsys, "fit", str(src))
        assert code == 0
        assert report["rigidity.rigid"] == "true"

    def test_mirrored_tetrahedron_flagged_improper(self, tmp_path, capsys):
        src = tmp_path / "points.csv"
        src.write_text(
            "0,0,0,0,0,0\n1,0,0,1,0,0\n0,1,0,0,1,0\n0,0,1,0,0,-1\n"
        )
        code, report = run_cli(capsys, "fit", str(src))
        assert code == 5
        assert report["rigidity.proper"] == "false"
        assert report["error"] == "improper"

    def test_collinear_points_exit_6(self, tmp_path, capsys):
        src = tmp_path / "points.csv"
        src.write_text("0,0,0,0,0,0\n1,0,0,1,0,0\n2,0,0,2,0,0\n")
        code, report = run_cli(capsys, "fit", str(src))
        assert code == 6
        assert report["error"] == "collinear"

    def test_stretched_data_exit_5(self, tmp_path, capsys):
        src = tmp_path / "points.csv"
        src.write_text("0,0,0,0,0,0\n1,0,0,2,0,0\n0,1,0,0,1,0\n")
        code, report = run_cli(capsys, "fit", str(src))
        assert code == 5
        assert report["error"] == "non-rigid"

    def test_too_few_rows_exit_2(self, tmp_path, capsys):
        src = tmp_path / "points.csv"
        src.write_text("0,0,0,0,0,1\n1,0,0,0,1,1\n")
        code, report = run_cli(capsys, "fit", str(src))
        assert code == 2

    def test_malformed_row_reports_line(self, tmp_path, capsys):
        src = tmp_path / "points.csv"
        src.write_text("0,0,0,0,0,1\n1,0,oops,0,1,1\n0,1,0,-1,0,1\n")
        code, report = run_cli(capsys, "fit", str(src))
        assert code == 2
        assert report["error.line"] == "2"


class TestCheck:
    def test_small_budget_passes(self, capsys):
        code, report = run_cli(capsys, "check", "--samples", "10")
        assert code == 0
        assert report["checks.failed"] == "0"

    def test_reports_are_deterministic(self, capsys):
        main(["check", "--samples", "10", "--seed", "3"])
        first = capsys.readouterr().out
        main(["check", "--samples", "10", "--seed", "3"])
        second = capsys.readouterr().out
        assert first == second

    def test_hostile_tolerance_fails_loudly(self, capsys):
        code, report = run_cli(
            capsys, "check", "--samples", "10", "--tol", "1e-30"
        )
        assert code == 1
        assert int(report["checks.failed"]) > 0
