#ifndef MINKCHEB_EVAL_HPP
#define MINKCHEB_EVAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "minkcheb/knn.hpp"
#include "minkcheb/metrics.hpp"

namespace minkcheb::eval {

/// Per-instance fold assignment for stratified cross-validation.
struct FoldPlan {
    int folds = 0;
    std::uint64_t seed = 0;
    std::vector<int> assignment;  // instance index -> fold 0..folds-1
    std::vector<std::string> warnings;

    std::size_t fold_size(int fold) const;
    /// Size of the smallest training split (n minus the largest fold).
    std::size_t smallest_train_size() const;
};

/// Deterministic stratified assignment: per class, seeded shuffle then
/// round-robin over folds. Per-class fold sizes differ by at most 1. A
/// class smaller than the fold count produces a warning, not a failure.
FoldPlan stratified_folds(const Dataset& dataset, int folds, std::uint64_t seed);

/// One (dataset, spec) cell: cross-validated accuracy for every k, the best
/// k (smallest argmax) and the macro TP/TN rates at that k.
struct SweepResult {
    std::string dataset;
    DistanceSpec spec;
    std::vector<double> accuracy_by_k;  // index k-1
    int best_k = 0;
    double best_accuracy = 0.0;
    double tp_at_best = 0.0;
    double tn_at_best = 0.0;
};

/// Sweeps k = 1..min(k_max, smallest training-split size) with pooled
/// cross-validated predictions. One distance ranking is computed per test
/// instance and reused for every k.
SweepResult sweep_k(const Dataset& dataset, const DistanceSpec& spec, int k_max,
                    const FoldPlan& plan);

/// One summary row per spec, aggregated over datasets.
struct EvalSummary {
    DistanceSpec spec;
    double mean_accuracy = 0.0;
    double mean_tp = 0.0;
    double mean_tn = 0.0;
    double mean_k = 0.0;
    int max_k = 0;
    double p_value = 1.0;  // paired over datasets, against the reference spec
    int better_than_average = 0;
    int best_count = 0;
};

/// results[dataset][spec]; every spec shares the dataset's fold plan.
using ResultMatrix = std::vector<std::vector<SweepResult>>;

ResultMatrix run_experiment(const std::vector<Dataset>& datasets,
                            const std::vector<DistanceSpec>& specs,
                            int k_max, int folds, std::uint64_t seed);

std::vector<EvalSummary> aggregate(const ResultMatrix& matrix, const DistanceSpec& reference);

/// The 15 distance rows of the reference evaluation, all with w1 = w2 = 1.
std::vector<DistanceSpec> default_spec_list();

// CSV / table serialization --------------------------------------------------

/// "dataset,family,p,w1,w2,best_k,best_accuracy,tp,tn"
std::string results_csv(const ResultMatrix& matrix);
/// Long format: "dataset,family,p,w1,w2,k,accuracy"
std::string per_k_csv(const ResultMatrix& matrix);
/// "family,p,w1,w2,mean_accuracy,mean_tp,mean_tn,mean_k,max_k,p_value,better_than_average,best"
std::string summary_csv(const std::vector<EvalSummary>& rows);
/// Aligned human-readable view of the summary.
std::string summary_table(const std::vector<EvalSummary>& rows);

}  // namespace minkcheb::eval

#endif
