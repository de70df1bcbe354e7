from itertools import combinations
from experiments.common.models import OrderingEvaluationMetrics
from experiments.read_range.experiment import ExperimentResults


class ReadRangeJudge:

    def evaluate(self, results: ExperimentResults) -> OrderingEvaluationMetrics:
        """Pairwise rank agreement of estimated against measured ranges."""
        predictions = results.predictions

        concordant = discordant = 0
        for a, b in combinations(predictions, 2):
            measured = a.measured_range_cm - b.measured_range_cm
            estimated = a.estimated_range_cm - b.estimated_range_cm
            if measured * estimated > 0:
                concordant += 1
            elif measured * estimated < 0:
                discordant += 1

        total_pairs = len(predictions) * (len(predictions) - 1) // 2
        calibration = next((p for p in predictions if p.name == results.calibration_antenna), None)

        return OrderingEvaluationMetrics(
            total_pairs=total_pairs,
            concordant_pairs=concordant,
            discordant_pairs=discordant,
            pairwise_accuracy=concordant / total_pairs * 100 if total_pairs else 0.0,
            calibration_error_cm=(
                abs(calibration.estimated_range_cm - calibration.measured_range_cm)
                if calibration else float('inf')
            ),
            mean_absolute_error_cm=(
                sum(abs(p.estimated_range_cm - p.measured_range_cm) for p in predictions) / len(predictions)
                if predictions else float('inf')
            ),
        )

    def print_evaluation_summary(self, results: ExperimentResults, metrics: OrderingEvaluationMetrics) -> None:
        """Print a formatted summary of the read range results."""
        print("\n" + "="*60)
        print("READ RANGE EVALUATION RESULTS")
        print("="*60)

        for prediction in results.predictions:
            print(f"\n{prediction.name}:")
            print(f"  Measured:   {prediction.measured_range_cm:.1f} cm")
            print(f"  Estimated:  {prediction.estimated_range_cm:.1f} cm")
            print(f"  M at 5 cm:  {prediction.mutual_inductance_nh:.3f} nH")

        if results.skipped:
            print(f"\nNot modelled: {', '.join(results.skipped)}")

        print(f"\nPairwise ordering:  {metrics.concordant_pairs}/{metrics.total_pairs} concordant")
        print(f"Calibration error:  {metrics.calibration_error_cm:.3f} cm")
        print(f"Mean abs. error:    {metrics.mean_absolute_error_cm:.2f} cm (not a model target)")
        print("="*60)
