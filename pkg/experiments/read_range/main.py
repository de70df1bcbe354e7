import os
from datetime import datetime
from data.factory import create_dataset
from experiments.read_range.experiment import ReadRangeExperiment
from experiments.read_range.judge import ReadRangeJudge

def main():
    """Calibrate the coupling model on one tag and rank the others by read range."""

    print("=== Read Range Dataset ===")

    dataset = create_dataset()
    metadata = dataset.get_metadata()
    print(f"Total tags: {metadata['total_tags']}")
    print(f"Modelled tags: {metadata['modelled_tags']} (calibrated on {metadata['calibration_antenna']})")

    experiment = ReadRangeExperiment()
    results = experiment.run(dataset)

    judge = ReadRangeJudge()
    metrics = judge.evaluate(results)
    judge.print_evaluation_summary(results, metrics)

    current_dir = os.path.dirname(__file__)
    timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')

    metrics_filepath = os.path.join(current_dir, f"read_range_results_{timestamp}.json")
    with open(metrics_filepath, "w") as f:
        f.write(metrics.model_dump_json(indent=2))
    print(f"📊 Evaluation metrics saved to: {metrics_filepath}")

    predictions_filepath = os.path.join(current_dir, f"read_range_predictions_{timestamp}.json")
    with open(predictions_filepath, "w") as f:
        f.write(results.model_dump_json(indent=2))
    print(f"🔍 Raw predictions saved to: {predictions_filepath}")

if __name__ == "__main__":
    main()
