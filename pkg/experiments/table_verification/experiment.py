import math
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from antenna.circuit_model import equivalent_capacitance, resonance_frequency, synthesize_tuning
from antenna.coil_model import inductance_wheeler, trace_resistance
from antenna.constants import MHZ, NFC_CARRIER_HZ, PF, UH
from antenna.models import ChipModel, CoilGeometry, ConductorMaterial, WheelerConstants
from experiments.table_verification.data.dataset import TableVerificationDataset
from pydantic import BaseModel

# Accepted relative deviation of the Wheeler inductance from the bench value
INDUCTANCE_BANDS = {"square": 0.05, "rectangular": 0.15}


class AntennaPrediction(BaseModel):
    """Model predictions for one fabricated antenna next to its bench values."""
    name: str
    shape: str
    predicted_inductance_uh: float  # Modified Wheeler from the design geometry
    measured_inductance_uh: float
    inductance_band: float
    predicted_resistance_ohm: float  # Trace resistance with skin effect at the carrier
    measured_resistance_ohm: float
    predicted_resonance_mhz: float  # From measured L and the stated capacitors
    measured_resonance_mhz: float
    predicted_topology: str  # Synthesized at the carrier from measured L
    measured_topology: str
    synthesized_c_tune_pf: float
    duration: float


class ExperimentResults(BaseModel):
    """All predictions of the verification run."""
    predictions: list[AntennaPrediction]
    failed: list[str]
    average_duration: float


class TableVerificationExperiment:
  def __init__(self, material: ConductorMaterial = ConductorMaterial(), constants: WheelerConstants = WheelerConstants()):
    self.material = material
    self.constants = constants

  def run(self, dataset: TableVerificationDataset) -> ExperimentResults:
    antennas = dataset.get_antennas()
    print(f"📐 Verifying {len(antennas)} antennas...")

    with ThreadPoolExecutor(max_workers=4) as executor:
        future_to_name = {
            executor.submit(self._predict, antenna): antenna["name"]
            for antenna in antennas
        }

        results = {}
        for future in as_completed(future_to_name):
            name = future_to_name[future]
            try:
                results[name] = future.result()
                print(f"✅ {name} completed")
            except Exception as e:
                print(f"❌ {name} failed: {e}")
                results[name] = None

    predictions = [results[name] for name in sorted(results) if results[name] is not None]
    failed = sorted(name for name, prediction in results.items() if prediction is None)
    average_duration = sum(p.duration for p in predictions) / len(predictions) if predictions else 0.0

    return ExperimentResults(predictions=predictions, failed=failed, average_duration=average_duration)

  def _predict(self, antenna: dict) -> AntennaPrediction:
    start_time = time.time()

    geometry = CoilGeometry.model_validate(antenna["geometry"])
    measured = antenna["measured"]
    ls = measured["inductance_uh"] * UH
    # Bench resonance is read with the chip unloaded
    chip = ChipModel(capacitance_cc=measured["chip_capacitance_pf"] * PF, resistance_rc=math.inf)

    ceq = equivalent_capacitance(chip.capacitance_cc, measured["c_tune_pf"] * PF, measured["connection"])
    tuning = synthesize_tuning(ls, chip, NFC_CARRIER_HZ)

    return AntennaPrediction(
        name=antenna["name"],
        shape=geometry.shape,
        predicted_inductance_uh=inductance_wheeler(geometry, self.constants) / UH,
        measured_inductance_uh=measured["inductance_uh"],
        inductance_band=INDUCTANCE_BANDS[geometry.shape],
        predicted_resistance_ohm=trace_resistance(geometry, self.material, NFC_CARRIER_HZ),
        measured_resistance_ohm=measured["resistance_ohm"],
        predicted_resonance_mhz=resonance_frequency(ls, ceq) / MHZ,
        measured_resonance_mhz=measured["resonance_mhz"],
        predicted_topology=tuning.topology,
        measured_topology=measured["connection"],
        synthesized_c_tune_pf=tuning.c_tune / PF,
        duration=time.time() - start_time,
    )
