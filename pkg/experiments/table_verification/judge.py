import math
from experiments.common.models import ClassificationEvaluationMetrics, RegressionEvaluationMetrics, VerificationResults
from experiments.table_verification.experiment import AntennaPrediction, ExperimentResults

# Resonance from the stated components must land this close to the bench reading
RESONANCE_BAND = 0.005
# Resistance omits proximity effect, so only a factor-of-three sanity band applies
RESISTANCE_FACTOR = 3.0


class TableVerificationJudge:

    def evaluate(self, results: ExperimentResults) -> VerificationResults:
        """Score every predicted quantity against the bench values."""
        predictions = results.predictions
        evaluation_results = VerificationResults()

        if not predictions:
            return evaluation_results

        evaluation_results.inductance = self._evaluate_quantity(
            "inductance", "uH",
            [(p.predicted_inductance_uh, p.measured_inductance_uh) for p in predictions],
            [self._within_relative(p.predicted_inductance_uh, p.measured_inductance_uh, p.inductance_band) for p in predictions],
        )
        evaluation_results.resistance = self._evaluate_quantity(
            "resistance", "ohm",
            [(p.predicted_resistance_ohm, p.measured_resistance_ohm) for p in predictions],
            [self._within_factor(p) for p in predictions],
        )
        evaluation_results.resonance = self._evaluate_quantity(
            "resonance", "MHz",
            [(p.predicted_resonance_mhz, p.measured_resonance_mhz) for p in predictions],
            [self._within_relative(p.predicted_resonance_mhz, p.measured_resonance_mhz, RESONANCE_BAND) for p in predictions],
        )

        correct = sum(p.predicted_topology == p.measured_topology for p in predictions)
        evaluation_results.topology = ClassificationEvaluationMetrics(
            quantity="topology",
            total_predictions=len(predictions),
            correct_predictions=correct,
            accuracy=correct / len(predictions) * 100,
        )

        evaluation_results.worst_quantity = self._find_worst_quantity(evaluation_results)
        evaluation_results.all_within_bands = (
            all(
                metrics.within_acceptance_band == 100.0
                for metrics in (evaluation_results.inductance, evaluation_results.resistance, evaluation_results.resonance)
            )
            and evaluation_results.topology.accuracy == 100.0
        )
        return evaluation_results

    def _evaluate_quantity(
        self,
        quantity: str,
        unit: str,
        pairs: list[tuple[float, float]],
        in_band: list[bool],
    ) -> RegressionEvaluationMetrics:
        """Regression metrics for one quantity over (predicted, measured) pairs."""
        n = len(pairs)
        mae = sum(abs(pred - true) for pred, true in pairs) / n
        mse = sum((pred - true) ** 2 for pred, true in pairs) / n

        mape_values = [abs((pred - true) / true) for pred, true in pairs if true != 0]
        mape = (sum(mape_values) / len(mape_values) * 100) if mape_values else float('inf')

        return RegressionEvaluationMetrics(
            quantity=quantity,
            unit=unit,
            total_predictions=n,
            mean_absolute_error=mae,
            mean_squared_error=mse,
            root_mean_squared_error=math.sqrt(mse),
            mean_absolute_percentage_error=mape,
            accuracy_within_5_percent=self._calculate_percentage_accuracy(pairs, 0.05),
            accuracy_within_10_percent=self._calculate_percentage_accuracy(pairs, 0.10),
            accuracy_within_20_percent=self._calculate_percentage_accuracy(pairs, 0.20),
            within_acceptance_band=sum(in_band) / n * 100,
        )

    def _calculate_percentage_accuracy(self, pairs: list[tuple[float, float]], threshold: float) -> float:
        """Percentage of predictions within a relative threshold of the measurement."""
        if not pairs:
            return 0.0
        within = sum(self._within_relative(pred, true, threshold) for pred, true in pairs)
        return within / len(pairs) * 100

    @staticmethod
    def _within_relative(predicted: float, measured: float, band: float) -> bool:
        if measured == 0:
            return predicted == 0
        return abs(predicted - measured) / abs(measured) <= band

    @staticmethod
    def _within_factor(prediction: AntennaPrediction) -> bool:
        ratio = prediction.predicted_resistance_ohm / prediction.measured_resistance_ohm
        return 1 / RESISTANCE_FACTOR <= ratio <= RESISTANCE_FACTOR

    def _find_worst_quantity(self, results: VerificationResults) -> str | None:
        """The regression quantity with the highest MAPE."""
        quantities = [
            (metrics.quantity, metrics.mean_absolute_percentage_error)
            for metrics in (results.inductance, results.resistance, results.resonance)
            if metrics and not math.isinf(metrics.mean_absolute_percentage_error)
        ]
        if not quantities:
            return None
        return max(quantities, key=lambda x: x[1])[0]

    def print_evaluation_summary(self, results: VerificationResults) -> None:
        """Print a formatted summary of the verification results."""
        print("\n" + "="*70)
        print("VERIFICATION TABLE EVALUATION RESULTS")
        print("="*70)

        for metrics in (results.inductance, results.resistance, results.resonance):
            if metrics:
                print(f"\n{metrics.quantity.capitalize()} ({metrics.unit}):")
                print(f"  Total Predictions: {metrics.total_predictions}")
                print(f"  MAE:              {metrics.mean_absolute_error:.4f}")
                print(f"  RMSE:             {metrics.root_mean_squared_error:.4f}")
                print(f"  MAPE:             {metrics.mean_absolute_percentage_error:.2f}%")
                print(f"  Accuracy (±5%):   {metrics.accuracy_within_5_percent:.1f}%")
                print(f"  Accuracy (±10%):  {metrics.accuracy_within_10_percent:.1f}%")
                print(f"  Accuracy (±20%):  {metrics.accuracy_within_20_percent:.1f}%")
                print(f"  In band:          {metrics.within_acceptance_band:.1f}%")

        if results.topology:
            print(f"\nTopology:")
            print(f"  Correct:          {results.topology.correct_predictions}/{results.topology.total_predictions}")

        print(f"\nWorst quantity:     {results.worst_quantity}")
        print(f"All within bands:   {'✅' if results.all_within_bands else '❌'}")
        print("="*70)
