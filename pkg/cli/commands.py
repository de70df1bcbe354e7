"""
Command-line front door.

Subcommands read a design document, run the library and emit reports and
files. Every artifact is computed before the first file is written, so a
failing command never leaves partial output behind.

Exit codes:
    0  success
    1  domain error raised by the antenna library
    2  usage, missing document, TOML syntax or validation error
"""

import argparse
import sys
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from pydantic import ValidationError

from antenna.circuit_model import bandwidth, find_resonance, network_resonance, q_factor, sweep, sweep_to_csv, synthesize_tuning
from antenna.coil_model import coil_centerline, derive_dimensions, inductance_wheeler, skin_depth, trace_length, trace_resistance
from antenna.constants import MHZ, MM, PF, UH
from antenna.coupling_range import calibrate_threshold, estimate_range, range_curve, range_curve_to_csv
from antenna.errors import AntennaDesignError, NoResonanceInRange, ZeroResistance
from antenna.geometry_synthesis import drc_check, search_geometry
from antenna.layout_export import build_layout, to_gerber, to_svg
from antenna.models import TagNetwork
from cli.design_document import DesignDocument, DesignDocumentError, load_design_document
from cli.plots import sweep_plot_svg
from cli.report import AnalysisReport, CandidateRow, SynthesisReport, TuningReport

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2

# AC resistance above this multiple of DC gets flagged in the analysis report
AC_RESISTANCE_WARNING_RATIO = 3.0


class UsageError(Exception):
    """Arguments that argparse accepts but the command cannot use."""


@dataclass
class CommandResult:
    stdout: str
    artifacts: dict[str, str] = field(default_factory=dict)


def _circuit_values(document: DesignDocument, frequency: float) -> tuple[float, float, str]:
    """(Ls, Rs, source): bench values when the document has them, model values otherwise."""
    geometry = document.require_geometry()
    measured = document.measured
    if measured is not None and measured.inductance_uh is not None:
        ls = measured.inductance_uh * UH
        source = "measured"
    else:
        ls = inductance_wheeler(geometry, document.wheeler.to_constants())
        source = "wheeler"

    if measured is not None and measured.resistance_ohm is not None:
        rs = measured.resistance_ohm
    else:
        rs = trace_resistance(geometry, document.conductor.to_material(), frequency)
    return ls, rs, source


def _tuning_report(document: DesignDocument, target_frequency: float, snap: str) -> TuningReport:
    ls, _, source = _circuit_values(document, target_frequency)
    solution = synthesize_tuning(ls, document.chip.to_chip(), target_frequency, snap)
    return TuningReport(
        topology=solution.topology,
        c_tune_pf=solution.c_tune / PF,
        achieved_frequency_mhz=solution.achieved_frequency / MHZ,
        target_frequency_mhz=target_frequency / MHZ,
        snap=snap,
        snapped=solution.snapped,
        inductance_uh=ls / UH,
        inductance_source=source,
    )


def _network(document: DesignDocument, frequency: float) -> TagNetwork:
    """Tag loop with the document's fixed tuning, or the exact synthesized one."""
    ls, rs, _ = _circuit_values(document, frequency)
    chip = document.chip.to_chip()
    if document.tuning is not None:
        tuning = document.tuning.to_tuning(ls, chip)
    else:
        tuning = synthesize_tuning(ls, chip, frequency)
    return TagNetwork(antenna_ls=ls, antenna_rs=rs, chip=chip, tuning=tuning)


def run_analyze(document: DesignDocument, args: argparse.Namespace) -> CommandResult:
    geometry = document.require_geometry()
    frequency = args.frequency_mhz * MHZ
    material = document.conductor.to_material()

    dims = derive_dimensions(geometry)
    inductance = inductance_wheeler(geometry, document.wheeler.to_constants())
    r_dc = trace_resistance(geometry, material)
    r_ac = trace_resistance(geometry, material, frequency)
    ls, rs, source = _circuit_values(document, frequency)
    network = _network(document, frequency)

    warnings = [
        f"DRC {violation.rule}: {violation.message}"
        for violation in drc_check(geometry, document.rules.to_rules())
    ]
    if geometry.outer_length != geometry.outer_width:
        warnings.append(
            "rectangular outline: square-spiral Wheeler constants on side-averaged diameters, "
            "expect up to 15% inductance error"
        )
    if r_ac > AC_RESISTANCE_WARNING_RATIO * r_dc:
        warnings.append("AC resistance exceeds 3x DC; proximity effect is not modelled")

    try:
        q = q_factor(network)
        bw = bandwidth(network)
    except ZeroResistance:
        q = bw = None
        warnings.append("zero series resistance: Q factor is unbounded")

    measured = document.measured
    measured_l = measured.inductance_uh if measured else None
    measured_r = measured.resistance_ohm if measured else None

    report = AnalysisReport(
        name=document.name,
        shape=geometry.shape,
        outer_length_mm=geometry.outer_length,
        outer_width_mm=geometry.outer_width,
        turns=geometry.turns,
        trace_width_mm=geometry.trace_width,
        turn_spacing_mm=geometry.turn_spacing,
        d_out_mm=dims.d_out,
        d_in_mm=dims.d_in,
        d_mean_mm=dims.d_mean,
        fill_ratio=dims.fill_ratio,
        inductance_uh=inductance / UH,
        trace_length_mm=trace_length(coil_centerline(geometry)) / MM,
        frequency_mhz=args.frequency_mhz,
        skin_depth_um=skin_depth(frequency, material) / 1e-6,
        dc_resistance_ohm=r_dc,
        ac_resistance_ohm=r_ac,
        inductance_source=source,
        circuit_inductance_uh=ls / UH,
        circuit_resistance_ohm=rs,
        q_factor=q,
        bandwidth_khz=bw / 1e3 if bw is not None else None,
        configured_resonance_mhz=network_resonance(network) / MHZ if document.tuning else None,
        tuning=_tuning_report(document, frequency, "exact"),
        measured_inductance_uh=measured_l,
        inductance_deviation=(inductance / UH - measured_l) / measured_l if measured_l else None,
        measured_resistance_ohm=measured_r,
        resistance_deviation=(r_ac - measured_r) / measured_r if measured_r else None,
        warnings=warnings,
    )
    text = report.render_text()
    return CommandResult(
        stdout=text,
        artifacts={
            f"{args.stem}_report.txt": text,
            f"{args.stem}_report.json": report.model_dump_json(indent=2) + "\n",
        },
    )


def run_tune(document: DesignDocument, args: argparse.Namespace) -> CommandResult:
    report = _tuning_report(document, args.target_mhz * MHZ, args.snap)
    return CommandResult(
        stdout=report.summary_line() + "\n",
        artifacts={f"{args.stem}_tuning.json": report.model_dump_json(indent=2) + "\n"},
    )


def run_sweep(document: DesignDocument, args: argparse.Namespace) -> CommandResult:
    network = _network(document, args.frequency_mhz * MHZ)
    points = sweep(network, args.from_mhz * MHZ, args.to_mhz * MHZ, args.points)

    try:
        resonance = find_resonance(points)
        stdout = f"resonance: {resonance / MHZ:.4f} MHz\n"
    except NoResonanceInRange:
        resonance = None
        stdout = "no resonance in the swept range\n"

    artifacts = {f"{args.stem}_sweep.csv": sweep_to_csv(points)}
    if args.plot:
        artifacts[f"{args.stem}_sweep.svg"] = sweep_plot_svg(points, f"{document.name} loop impedance", resonance)
    return CommandResult(stdout=stdout, artifacts=artifacts)


def run_synthesize(document: DesignDocument, args: argparse.Namespace) -> CommandResult:
    geometry = document.require_geometry()
    chip = document.chip.to_chip()
    target_section = document.target
    if target_section is None:
        raise DesignDocumentError("document has no [target] section")
    target = target_section.to_target(chip)

    candidates = search_geometry(
        target,
        (geometry.outer_length, geometry.outer_width),
        document.rules.to_rules(),
        conductor_thickness=geometry.conductor_thickness,
        constants=document.wheeler.to_constants(),
    )
    inductance_mode = target.mode == "inductance"
    report = SynthesisReport(
        name=document.name,
        mode=target.mode,
        target_value=target.target_value / (UH if inductance_mode else MHZ),
        target_unit="uH" if inductance_mode else "MHz",
        outline_mm=(geometry.outer_length, geometry.outer_width),
        total_candidates=len(candidates),
        candidates=[
            CandidateRow.from_candidate(rank, candidate)
            for rank, candidate in enumerate(candidates[:args.top], start=1)
        ],
    )
    return CommandResult(
        stdout=report.render_text(),
        artifacts={f"{args.stem}_candidates.json": report.model_dump_json(indent=2) + "\n"},
    )


def run_export(document: DesignDocument, args: argparse.Namespace) -> CommandResult:
    layout = build_layout(
        document.require_geometry(),
        document.layout.pad_width_mm,
        document.layout.pad_height_mm,
    )
    both = not args.svg and not args.gerber
    artifacts = {}
    if args.svg or both:
        artifacts[f"{args.stem}.svg"] = to_svg(layout)
    if args.gerber or both:
        artifacts[f"{args.stem}.gbr"] = to_gerber(layout)
    return CommandResult(stdout="", artifacts=artifacts)


def run_range(document: DesignDocument, args: argparse.Namespace) -> CommandResult:
    geometry = document.require_geometry()
    frequency = document.scenario.frequency_mhz * MHZ
    scenario = document.scenario.to_scenario(geometry)

    if args.calibrate_with is not None:
        if args.calibrate_range_cm is None:
            raise UsageError("--calibrate-with needs --calibrate-range-cm")
        reference = load_design_document(args.calibrate_with)
        reference_scenario = scenario.model_copy(update={"tag_geometry": reference.require_geometry()})
        calibrated = calibrate_threshold(reference_scenario, args.calibrate_range_cm / 100, frequency)
        scenario = scenario.model_copy(update={"threshold_emf": calibrated.threshold_emf})
    elif scenario.threshold_emf is None:
        raise UsageError("no threshold: set [scenario] threshold_emf_v or pass --calibrate-with")

    estimate = estimate_range(scenario, frequency)
    z_values = np.linspace(scenario.max_range / args.points, scenario.max_range, args.points).tolist()
    points = range_curve(scenario, frequency, z_values)

    stdout = (
        f"threshold: {scenario.threshold_emf:.6g} V\n"
        f"estimated range: {estimate * 100:.1f} cm\n"
    )
    return CommandResult(stdout=stdout, artifacts={f"{args.stem}_range.csv": range_curve_to_csv(points)})


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nfc-antenna",
        description="Design, tune, export and range-check flexible 13.56 MHz NFC tag antennas.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("document", help="Design document (TOML)")
    common.add_argument("--out-dir", default=".", help="Directory for emitted files")

    subparsers = parser.add_subparsers(dest="command", required=True)

    analyze = subparsers.add_parser("analyze", parents=[common], help="Coil and circuit report")
    analyze.add_argument("--frequency-mhz", type=float, default=13.56)
    analyze.set_defaults(handler=run_analyze)

    tune = subparsers.add_parser("tune", parents=[common], help="Tuning topology and capacitor")
    tune.add_argument("--target-mhz", type=float, default=13.56)
    tune.add_argument("--snap", choices=["exact", "e12", "e24"], default="exact")
    tune.set_defaults(handler=run_tune)

    sweep_parser = subparsers.add_parser("sweep", parents=[common], help="Loop impedance sweep")
    sweep_parser.add_argument("--from-mhz", type=float, default=10.0)
    sweep_parser.add_argument("--to-mhz", type=float, default=20.0)
    sweep_parser.add_argument("--points", type=int, default=1001)
    sweep_parser.add_argument("--frequency-mhz", type=float, default=13.56, help="Operating frequency for AC resistance and tuning")
    sweep_parser.add_argument("--plot", action="store_true", help="Also write an SVG magnitude/phase plot")
    sweep_parser.set_defaults(handler=run_sweep)

    synthesize = subparsers.add_parser("synthesize", parents=[common], help="Search coil geometries for the [target]")
    synthesize.add_argument("--top", type=_positive_int, default=5)
    synthesize.set_defaults(handler=run_synthesize)

    export = subparsers.add_parser("export", parents=[common], help="Etch-mask layout files")
    export.add_argument("--svg", action="store_true")
    export.add_argument("--gerber", action="store_true")
    export.set_defaults(handler=run_export)

    range_parser = subparsers.add_parser("range", parents=[common], help="Coupling curve and read-range estimate")
    range_parser.add_argument("--calibrate-with", help="Reference design document")
    range_parser.add_argument("--calibrate-range-cm", type=float, help="Measured range of the reference tag")
    range_parser.add_argument("--points", type=_positive_int, default=60)
    range_parser.set_defaults(handler=run_range)

    return parser


def execute_command(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    args.stem = Path(args.document).stem
    try:
        document = load_design_document(args.document)
        result = args.handler(document, args)
    except AntennaDesignError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (OSError, tomllib.TOMLDecodeError, ValidationError, DesignDocumentError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        for filename, content in result.artifacts.items():
            path = out_dir / filename
            with open(path, "w", encoding="utf-8", newline="\n") as f:
                f.write(content)
            print(f"✅ Wrote {path}", file=sys.stderr)
    except OSError as exc:
        print(f"❌ error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    sys.stdout.write(result.stdout)
    return EXIT_OK
