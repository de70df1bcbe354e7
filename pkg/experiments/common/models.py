from pydantic import BaseModel

class RegressionEvaluationMetrics(BaseModel):
    """Evaluation metrics for one predicted quantity against bench measurements."""
    quantity: str
    unit: str
    total_predictions: int
    mean_absolute_error: float
    mean_squared_error: float
    root_mean_squared_error: float
    mean_absolute_percentage_error: float
    accuracy_within_5_percent: float  # Percentage of predictions within 5% of the measurement
    accuracy_within_10_percent: float  # Percentage of predictions within 10% of the measurement
    accuracy_within_20_percent: float  # Percentage of predictions within 20% of the measurement
    within_acceptance_band: float  # Percentage inside the quantity's own acceptance band


class ClassificationEvaluationMetrics(BaseModel):
    """Agreement of a categorical prediction with the bench record."""
    quantity: str
    total_predictions: int
    correct_predictions: int
    accuracy: float


class VerificationResults(BaseModel):
    """Complete evaluation of the design model against the verification table."""
    inductance: RegressionEvaluationMetrics | None = None
    resistance: RegressionEvaluationMetrics | None = None
    resonance: RegressionEvaluationMetrics | None = None
    topology: ClassificationEvaluationMetrics | None = None
    worst_quantity: str | None = None  # Highest MAPE among the regression quantities
    all_within_bands: bool = False


class OrderingEvaluationMetrics(BaseModel):
    """Rank agreement between estimated and measured read ranges."""
    total_pairs: int
    concordant_pairs: int
    discordant_pairs: int
    pairwise_accuracy: float
    calibration_error_cm: float  # Fixed-point error on the calibration antenna
    mean_absolute_error_cm: float  # Reported only, absolute ranges are not a model target
