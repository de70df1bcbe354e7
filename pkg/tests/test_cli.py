"""Tests for the command-line front door."""

import json

import pytest

from cli.commands import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, execute_command
from cli.design_document import DesignDocumentError, load_design_document
from tests.conftest import DESIGNS_DIR

ANTENNA1 = str(DESIGNS_DIR / "antenna1.toml")
ANTENNA2 = str(DESIGNS_DIR / "antenna2.toml")

CROWDED_DOCUMENT = """
[geometry]
shape = "square"
outer_length_mm = 80.0
turns = 17
trace_width_mm = 0.6
turn_spacing_mm = 2.0
"""


def _run(argv: list[str], out_dir) -> int:
    return execute_command(argv + ["--out-dir", str(out_dir)])


class TestDesignDocument:

    def test_fixture_documents_load(self):
        document = load_design_document(ANTENNA1)
        geometry = document.require_geometry()
        assert (geometry.outer_length, geometry.outer_width, geometry.turns) == (160.0, 80.0, 4)
        assert document.tuning.topology == "series"
        assert document.chip.to_chip().capacitance_cc == pytest.approx(50e-12)

    def test_square_width_defaults(self, tmp_path):
        path = tmp_path / "crowded.toml"
        path.write_text(CROWDED_DOCUMENT)
        document = load_design_document(path)
        assert document.name == "crowded"
        assert document.require_geometry().outer_width == 80.0

    def test_infinite_chip_resistance(self, tmp_path):
        path = tmp_path / "ideal.toml"
        path.write_text(CROWDED_DOCUMENT + "\n[chip]\ncapacitance_pf = 50.0\nresistance_kohm = inf\n")
        chip = load_design_document(path).chip.to_chip()
        assert chip.resistance_rc == float("inf")

    def test_missing_geometry(self, tmp_path):
        path = tmp_path / "empty.toml"
        path.write_text("[chip]\ncapacitance_pf = 50.0\n")
        with pytest.raises(DesignDocumentError):
            load_design_document(path).require_geometry()


class TestAnalyze:

    def test_antenna2_report(self, tmp_path, capsys):
        assert _run(["analyze", ANTENNA2], tmp_path) == EXIT_OK
        report = json.loads((tmp_path / "antenna2_report.json").read_text())
        assert report["inductance_uh"] == pytest.approx(1.616, rel=5e-3)
        assert report["inductance_source"] == "measured"
        assert report["tuning"]["topology"] == "parallel"
        assert report["configured_resonance_mhz"] == pytest.approx(13.98, rel=5e-3)
        assert "ANTENNA ANALYSIS: antenna2" in capsys.readouterr().out
        assert (tmp_path / "antenna2_report.txt").exists()

    def test_antenna1_warns_about_rectangle(self, tmp_path):
        assert _run(["analyze", ANTENNA1], tmp_path) == EXIT_OK
        report = json.loads((tmp_path / "antenna1_report.json").read_text())
        assert report["inductance_uh"] == pytest.approx(4.40, rel=5e-3)
        assert report["configured_resonance_mhz"] == pytest.approx(14.06, rel=5e-3)
        assert any("rectangular" in warning for warning in report["warnings"])

    def test_missing_document(self, tmp_path, capsys):
        assert _run(["analyze", str(tmp_path / "missing.toml")], tmp_path / "out") == EXIT_USAGE
        assert not (tmp_path / "out").exists()
        assert capsys.readouterr().err.startswith("error:")

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "typo.toml"
        path.write_text(CROWDED_DOCUMENT.replace("turns = 17", "turns = 3\ntrace_widht_mm = 0.6"))
        assert _run(["analyze", str(path)], tmp_path) == EXIT_USAGE
        assert list(tmp_path.glob("typo_*")) == []

    def test_toml_syntax_error(self, tmp_path):
        path = tmp_path / "broken.toml"
        path.write_text("[geometry\nturns = 3\n")
        assert _run(["analyze", str(path)], tmp_path) == EXIT_USAGE

    def test_domain_error(self, tmp_path, capsys):
        path = tmp_path / "crowded.toml"
        path.write_text(CROWDED_DOCUMENT)
        assert _run(["analyze", str(path)], tmp_path) == EXIT_DOMAIN
        assert "InnerOpeningNonPositive" in capsys.readouterr().err
        assert list(tmp_path.glob("crowded_*")) == []


class TestTune:

    def test_antenna1_series(self, tmp_path, capsys):
        assert _run(["tune", ANTENNA1, "--target-mhz", "13.56", "--snap", "exact"], tmp_path) == EXIT_OK
        assert capsys.readouterr().out == "series, 65.8 pF\n"
        tuning = json.loads((tmp_path / "antenna1_tuning.json").read_text())
        assert tuning["c_tune_pf"] == pytest.approx(65.77, rel=1e-3)

    def test_antenna2_snapped(self, tmp_path, capsys):
        assert _run(["tune", ANTENNA2, "--snap", "e12"], tmp_path) == EXIT_OK
        assert capsys.readouterr().out == "parallel, 33.0 pF\n"

    def test_bad_snap_choice(self, tmp_path):
        assert _run(["tune", ANTENNA1, "--snap", "e96"], tmp_path) == EXIT_USAGE


class TestSweep:

    def test_csv_and_plot(self, tmp_path, capsys):
        argv = ["sweep", ANTENNA2, "--from-mhz", "10", "--to-mhz", "20", "--points", "501", "--plot"]
        assert _run(argv, tmp_path) == EXIT_OK
        lines = (tmp_path / "antenna2_sweep.csv").read_text().splitlines()
        assert lines[0] == "frequency_hz,re_ohm,im_ohm"
        assert len(lines) == 502
        assert (tmp_path / "antenna2_sweep.svg").read_text().lstrip().startswith("<?xml")
        assert capsys.readouterr().out.startswith("resonance: 13.9")

    def test_byte_identical_reruns(self, tmp_path):
        argv = ["sweep", ANTENNA1, "--points", "101", "--plot"]
        assert _run(argv, tmp_path / "a") == EXIT_OK
        assert _run(argv, tmp_path / "b") == EXIT_OK
        for name in ("antenna1_sweep.csv", "antenna1_sweep.svg"):
            assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()

    def test_bad_range(self, tmp_path, capsys):
        assert _run(["sweep", ANTENNA1, "--from-mhz", "20", "--to-mhz", "10"], tmp_path) == EXIT_DOMAIN
        assert "BadRange" in capsys.readouterr().err


class TestSynthesize:

    def test_top_candidates(self, tmp_path):
        assert _run(["synthesize", ANTENNA2, "--top", "3"], tmp_path) == EXIT_OK
        report = json.loads((tmp_path / "antenna2_candidates.json").read_text())
        assert report["mode"] == "inductance"
        assert 0 < len(report["candidates"]) <= 3
        errors = [round(row["relative_error"], 12) for row in report["candidates"]]
        assert errors == sorted(errors)
        assert all(error <= 0.05 for error in errors)


class TestExport:

    def test_both_formats_by_default(self, tmp_path):
        assert _run(["export", ANTENNA1], tmp_path) == EXIT_OK
        assert (tmp_path / "antenna1.svg").exists()
        assert "%ADD10C,0.500*%" in (tmp_path / "antenna1.gbr").read_text()

    def test_svg_only(self, tmp_path):
        assert _run(["export", ANTENNA2, "--svg"], tmp_path) == EXIT_OK
        assert (tmp_path / "antenna2.svg").exists()
        assert not (tmp_path / "antenna2.gbr").exists()


class TestRange:

    def test_needs_threshold(self, tmp_path):
        assert _run(["range", ANTENNA1, "--points", "3"], tmp_path) == EXIT_USAGE
        assert not (tmp_path / "antenna1_range.csv").exists()

    def test_calibration_needs_range(self, tmp_path):
        assert _run(["range", ANTENNA1, "--calibrate-with", ANTENNA2], tmp_path) == EXIT_USAGE

    def test_zero_calibration_range(self, tmp_path, capsys):
        argv = ["range", ANTENNA1, "--calibrate-with", ANTENNA2, "--calibrate-range-cm", "0", "--points", "3"]
        assert _run(argv, tmp_path) == EXIT_DOMAIN
        assert "NonPositiveSeparation" in capsys.readouterr().err
        assert not (tmp_path / "antenna1_range.csv").exists()

    def test_calibrated_ordering(self, tmp_path, capsys):
        argv = ["range", ANTENNA1, "--calibrate-with", ANTENNA2, "--calibrate-range-cm", "5", "--points", "5"]
        assert _run(argv, tmp_path) == EXIT_OK
        out = capsys.readouterr().out
        estimate_cm = float(out.split("estimated range:")[1].split("cm")[0])
        assert estimate_cm > 5.0
        lines = (tmp_path / "antenna1_range.csv").read_text().splitlines()
        assert lines[0] == "z_m,mutual_h,emf_v"
        assert len(lines) == 6


class TestUsage:

    def test_no_arguments(self):
        assert execute_command([]) == EXIT_USAGE

    def test_unknown_subcommand(self):
        assert execute_command(["bend", ANTENNA1]) == EXIT_USAGE

    def test_help(self):
        assert execute_command(["--help"]) == EXIT_OK
