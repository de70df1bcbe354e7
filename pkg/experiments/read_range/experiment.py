import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from antenna.constants import MM, NFC_CARRIER_HZ
from antenna.coupling_range import CouplingScenario, calibrate_threshold, estimate_range, mutual_inductance, rectangular_loop
from antenna.models import CoilGeometry
from experiments.read_range.data.dataset import ReadRangeDataset
from pydantic import BaseModel

# Separation at which the coupling of every tag is reported
REFERENCE_SEPARATION = 0.05


class TagRangePrediction(BaseModel):
    """Estimated read range of one tag next to its measured range."""
    name: str
    measured_range_cm: float
    estimated_range_cm: float
    mutual_inductance_nh: float  # At the reference separation
    duration: float


class ExperimentResults(BaseModel):
    """Complete read range experiment results."""
    calibration_antenna: str
    threshold_emf_v: float
    predictions: list[TagRangePrediction]
    skipped: list[str]  # Tags without geometry
    failed: list[str]


class ReadRangeExperiment:
  def __init__(self, frequency: float = NFC_CARRIER_HZ):
    self.frequency = frequency

  def run(self, dataset: ReadRangeDataset) -> ExperimentResults:
    reader = dataset.get_reader()
    calibration_tag = dataset.get_calibration_tag()

    base = CouplingScenario(
        reader=rectangular_loop(
            reader["length_mm"] * MM,
            reader["width_mm"] * MM,
            0.0,
            reader["subdivisions_per_side"],
        ),
        tag_geometry=CoilGeometry.model_validate(calibration_tag["geometry"]),
        subdivisions_per_side=reader["subdivisions_per_side"],
        drive_current=reader["drive_current_a"],
    )
    scenario = calibrate_threshold(base, calibration_tag["measured_range_cm"] / 100, self.frequency)
    print(f"📡 Threshold {scenario.threshold_emf:.4g} V calibrated on {calibration_tag['name']}")

    tags = dataset.get_tags_with_geometry()
    skipped = sorted(t["name"] for t in dataset.get_tags() if not t.get("geometry"))

    with ThreadPoolExecutor(max_workers=4) as executor:
        future_to_name = {
            executor.submit(self._estimate, scenario, tag): tag["name"]
            for tag in tags
        }

        results = {}
        for future in as_completed(future_to_name):
            name = future_to_name[future]
            try:
                results[name] = future.result()
                print(f"✅ {name}: {results[name].estimated_range_cm:.1f} cm")
            except Exception as e:
                print(f"❌ {name} failed: {e}")
                results[name] = None

    return ExperimentResults(
        calibration_antenna=calibration_tag["name"],
        threshold_emf_v=scenario.threshold_emf,
        predictions=[results[name] for name in sorted(results) if results[name] is not None],
        skipped=skipped,
        failed=sorted(name for name, prediction in results.items() if prediction is None),
    )

  def _estimate(self, calibrated: CouplingScenario, tag: dict) -> TagRangePrediction:
    start_time = time.time()

    scenario = calibrated.model_copy(update={"tag_geometry": CoilGeometry.model_validate(tag["geometry"])})
    estimate = estimate_range(scenario, self.frequency)
    m = mutual_inductance(scenario.reader, scenario.tag_at(REFERENCE_SEPARATION))

    return TagRangePrediction(
        name=tag["name"],
        measured_range_cm=tag["measured_range_cm"],
        estimated_range_cm=estimate * 100,
        mutual_inductance_nh=m / 1e-9,
        duration=time.time() - start_time,
    )
