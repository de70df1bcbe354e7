import os
from datetime import datetime
from data.factory import create_dataset
from experiments.table_verification.experiment import TableVerificationExperiment
from experiments.table_verification.judge import TableVerificationJudge

def main():
    """Reproduce the verification table from the design model and score it."""

    print("=== Verification Table Dataset ===")

    dataset = create_dataset()
    metadata = dataset.get_metadata()
    print(f"Total antennas: {metadata['total_antennas']}")
    print(f"Shapes: {', '.join(metadata['shapes'])}")
    print(f"Tuning connections: {', '.join(metadata['connections'])}")

    # Run the experiment
    experiment = TableVerificationExperiment()
    results = experiment.run(dataset)

    # Evaluate the results
    judge = TableVerificationJudge()
    evaluation_results = judge.evaluate(results)
    judge.print_evaluation_summary(evaluation_results)

    # Save the results to JSON files with timestamp
    current_dir = os.path.dirname(__file__)
    timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')

    metrics_filepath = os.path.join(current_dir, f"table_verification_results_{timestamp}.json")
    with open(metrics_filepath, "w") as f:
        f.write(evaluation_results.model_dump_json(indent=2))
    print(f"📊 Evaluation metrics saved to: {metrics_filepath}")

    predictions_filepath = os.path.join(current_dir, f"table_verification_predictions_{timestamp}.json")
    with open(predictions_filepath, "w") as f:
        f.write(results.model_dump_json(indent=2))
    print(f"🔍 Raw predictions saved to: {predictions_filepath}")

if __name__ == "__main__":
    main()
