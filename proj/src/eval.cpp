#include "minkcheb/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "minkcheb/stats.hpp"

namespace minkcheb::eval {

namespace {

std::string fmt(double v, const char* spec = "%.10g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string param_or_empty(bool present, double v) {
    return present ? fmt(v, "%g") : std::string();
}

double round_accuracy(double v) {
    // absorbs float noise before equality comparisons
    return std::round(v * 1e12) / 1e12;
}

}  // namespace

std::size_t FoldPlan::fold_size(int fold) const {
    return std::size_t(std::count(assignment.begin(), assignment.end(), fold));
}

std::size_t FoldPlan::smallest_train_size() const {
    std::size_t largest_fold = 0;
    for (int f = 0; f < folds; ++f) largest_fold = std::max(largest_fold, fold_size(f));
    return assignment.size() - largest_fold;
}

FoldPlan stratified_folds(const Dataset& dataset, int folds, std::uint64_t seed) {
    if (folds < 2) throw std::invalid_argument("fold count must be >= 2");
    dataset.validate();

    FoldPlan plan;
    plan.folds = folds;
    plan.seed = seed;
    plan.assignment.assign(dataset.size(), 0);

    std::mt19937_64 engine(seed);
    int next_fold = 0;  // carried across classes so overall fold sizes stay balanced
    for (std::size_t c = 0; c < dataset.n_classes(); ++c) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < dataset.size(); ++i)
            if (std::size_t(dataset.instances[i].label) == c) members.push_back(i);
        if (members.empty())
            throw std::invalid_argument("class '" + dataset.class_table[c] + "' has no instances");
        if (members.size() < std::size_t(folds)) {
            plan.warnings.push_back("class '" + dataset.class_table[c] + "' has fewer instances (" +
                                    std::to_string(members.size()) + ") than folds (" +
                                    std::to_string(folds) + "); some folds will lack it");
        }
        std::shuffle(members.begin(), members.end(), engine);
        for (std::size_t member : members) {
            plan.assignment[member] = next_fold;
            next_fold = (next_fold + 1) % folds;
        }
    }
    return plan;
}

SweepResult sweep_k(const Dataset& dataset, const DistanceSpec& spec, int k_max,
                    const FoldPlan& plan) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    if (plan.assignment.size() != dataset.size())
        throw std::invalid_argument("fold plan does not cover the dataset");
    spec.validate();

    const std::size_t n = dataset.size();
    const std::size_t K = std::min<std::size_t>(std::size_t(k_max), plan.smallest_train_size());
    if (K < 1) throw std::invalid_argument("training splits are empty");

    // predictions[k-1][i] for every test instance i
    std::vector<std::vector<int>> predictions(K, std::vector<int>(n, -1));

    for (int f = 0; f < plan.folds; ++f) {
        Dataset train;
        train.name = dataset.name;
        train.class_table = dataset.class_table;
        train.n_features = dataset.n_features;
        std::vector<std::size_t> test_indices;
        for (std::size_t i = 0; i < n; ++i) {
            if (plan.assignment[i] == f) test_indices.push_back(i);
            else train.instances.push_back(dataset.instances[i]);
        }
        if (test_indices.empty()) continue;

        for (std::size_t i : test_indices) {
            auto ranking = neighbor_ranking(train, spec, dataset.instances[i].features);
            // one ranking pass serves every k
            std::vector<std::size_t> votes(dataset.n_classes(), 0);
            std::vector<std::size_t> first_rank(dataset.n_classes(),
                                                std::numeric_limits<std::size_t>::max());
            int best = -1;
            for (std::size_t r = 0; r < K; ++r) {
                int label = train.instances[ranking[r]].label;
                ++votes[label];
                first_rank[label] = std::min(first_rank[label], r);
                if (best < 0 || votes[label] > votes[best] ||
                    (votes[label] == votes[best] && first_rank[label] < first_rank[best])) {
                    best = label;
                }
                predictions[r][i] = best;
            }
        }
    }

    SweepResult result;
    result.dataset = dataset.name;
    result.spec = spec;
    result.accuracy_by_k.resize(K);
    std::size_t tested = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (predictions[0][i] >= 0) ++tested;
    for (std::size_t k = 0; k < K; ++k) {
        std::size_t correct = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (predictions[k][i] == dataset.instances[i].label) ++correct;
        result.accuracy_by_k[k] = tested ? double(correct) / double(tested) : 0.0;
    }

    result.best_k = 1;
    result.best_accuracy = result.accuracy_by_k[0];
    for (std::size_t k = 1; k < K; ++k) {
        if (result.accuracy_by_k[k] > result.best_accuracy) {
            result.best_accuracy = result.accuracy_by_k[k];
            result.best_k = int(k + 1);
        }
    }

    ConfusionStats stats;
    for (std::size_t i = 0; i < n; ++i) {
        int predicted = predictions[std::size_t(result.best_k) - 1][i];
        if (predicted < 0) continue;
        tally_prediction(stats, dataset.instances[i].label, predicted, dataset.n_classes());
    }
    finalize_stats(stats);
    result.tp_at_best = stats.macro_tp_rate;
    result.tn_at_best = stats.macro_tn_rate;
    return result;
}

ResultMatrix run_experiment(const std::vector<Dataset>& datasets,
                            const std::vector<DistanceSpec>& specs,
                            int k_max, int folds, std::uint64_t seed) {
    if (datasets.empty()) throw std::invalid_argument("no datasets");
    if (specs.empty()) throw std::invalid_argument("no distance specs");

    ResultMatrix matrix;
    matrix.reserve(datasets.size());
    for (const auto& dataset : datasets) {
        FoldPlan plan = stratified_folds(dataset, folds, seed);  // shared by all specs
        std::vector<SweepResult> row;
        row.reserve(specs.size());
        for (const auto& spec : specs) row.push_back(sweep_k(dataset, spec, k_max, plan));
        matrix.push_back(std::move(row));
    }
    return matrix;
}

std::vector<EvalSummary> aggregate(const ResultMatrix& matrix, const DistanceSpec& reference) {
    if (matrix.empty() || matrix.front().empty())
        throw std::invalid_argument("empty result matrix");
    const std::size_t n_datasets = matrix.size();
    const std::size_t n_specs = matrix.front().size();

    std::size_t ref_index = n_specs;
    for (std::size_t s = 0; s < n_specs; ++s)
        if (matrix.front()[s].spec == reference) { ref_index = s; break; }
    if (ref_index == n_specs)
        throw std::invalid_argument("reference spec not present in the result matrix");

    // per-dataset mean and max of best accuracies, for the count columns
    std::vector<double> dataset_mean(n_datasets, 0.0), dataset_max(n_datasets, 0.0);
    for (std::size_t d = 0; d < n_datasets; ++d) {
        double sum = 0.0, best = -1.0;
        for (std::size_t s = 0; s < n_specs; ++s) {
            double acc = round_accuracy(matrix[d][s].best_accuracy);
            sum += acc;
            best = std::max(best, acc);
        }
        dataset_mean[d] = sum / double(n_specs);
        dataset_max[d] = best;
    }

    std::vector<double> reference_acc(n_datasets);
    for (std::size_t d = 0; d < n_datasets; ++d)
        reference_acc[d] = matrix[d][ref_index].best_accuracy;

    std::vector<EvalSummary> rows(n_specs);
    for (std::size_t s = 0; s < n_specs; ++s) {
        EvalSummary& row = rows[s];
        row.spec = matrix.front()[s].spec;
        std::vector<double> accs(n_datasets);
        for (std::size_t d = 0; d < n_datasets; ++d) {
            const SweepResult& cell = matrix[d][s];
            accs[d] = cell.best_accuracy;
            row.mean_accuracy += cell.best_accuracy;
            row.mean_tp += cell.tp_at_best;
            row.mean_tn += cell.tn_at_best;
            row.mean_k += cell.best_k;
            row.max_k = std::max(row.max_k, cell.best_k);
            double rounded = round_accuracy(cell.best_accuracy);
            if (rounded > dataset_mean[d]) ++row.better_than_average;
            if (rounded == dataset_max[d]) ++row.best_count;
        }
        row.mean_accuracy /= double(n_datasets);
        row.mean_tp /= double(n_datasets);
        row.mean_tn /= double(n_datasets);
        row.mean_k /= double(n_datasets);
        row.p_value = n_datasets >= 2 ? stats::paired_t_test(accs, reference_acc) : 1.0;
    }
    return rows;
}

std::vector<DistanceSpec> default_spec_list() {
    return {
        DistanceSpec::euclidean(),
        DistanceSpec::chebyshev(),
        DistanceSpec::manhattan(),
        DistanceSpec::minkowski(0.5),
        DistanceSpec::minkowski(0.75),
        DistanceSpec::minkowski(3),
        DistanceSpec::minkowski(4),
        DistanceSpec::canberra(),
        DistanceSpec::squared_euclidean(),
        DistanceSpec::rodrigues(0.5),
        DistanceSpec::rodrigues(0.75),
        DistanceSpec::rodrigues(1),
        DistanceSpec::rodrigues(2),
        DistanceSpec::rodrigues(3),
        DistanceSpec::rodrigues(4),
    };
}

std::string results_csv(const ResultMatrix& matrix) {
    std::ostringstream out;
    out << "dataset,family,p,w1,w2,best_k,best_accuracy,tp,tn\n";
    for (const auto& row : matrix) {
        for (const auto& cell : row) {
            out << cell.dataset << ',' << family_name(cell.spec.family) << ','
                << param_or_empty(cell.spec.has_p(), cell.spec.p) << ','
                << param_or_empty(cell.spec.has_weights(), cell.spec.w1) << ','
                << param_or_empty(cell.spec.has_weights(), cell.spec.w2) << ','
                << cell.best_k << ',' << fmt(cell.best_accuracy) << ','
                << fmt(cell.tp_at_best) << ',' << fmt(cell.tn_at_best) << '\n';
        }
    }
    return out.str();
}

std::string per_k_csv(const ResultMatrix& matrix) {
    std::ostringstream out;
    out << "dataset,family,p,w1,w2,k,accuracy\n";
    for (const auto& row : matrix) {
        for (const auto& cell : row) {
            for (std::size_t k = 0; k < cell.accuracy_by_k.size(); ++k) {
                out << cell.dataset << ',' << family_name(cell.spec.family) << ','
                    << param_or_empty(cell.spec.has_p(), cell.spec.p) << ','
                    << param_or_empty(cell.spec.has_weights(), cell.spec.w1) << ','
                    << param_or_empty(cell.spec.has_weights(), cell.spec.w2) << ','
                    << (k + 1) << ',' << fmt(cell.accuracy_by_k[k]) << '\n';
            }
        }
    }
    return out.str();
}

std::string summary_csv(const std::vector<EvalSummary>& rows) {
    std::ostringstream out;
    out << "family,p,w1,w2,mean_accuracy,mean_tp,mean_tn,mean_k,max_k,p_value,"
           "better_than_average,best\n";
    for (const auto& row : rows) {
        out << family_name(row.spec.family) << ','
            << param_or_empty(row.spec.has_p(), row.spec.p) << ','
            << param_or_empty(row.spec.has_weights(), row.spec.w1) << ','
            << param_or_empty(row.spec.has_weights(), row.spec.w2) << ','
            << fmt(row.mean_accuracy) << ',' << fmt(row.mean_tp) << ','
            << fmt(row.mean_tn) << ',' << fmt(row.mean_k) << ',' << row.max_k << ','
            << fmt(row.p_value) << ',' << row.better_than_average << ','
            << row.best_count << '\n';
    }
    return out.str();
}

std::string summary_table(const std::vector<EvalSummary>& rows) {
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof(line), "%-28s %8s %8s %8s %7s %6s %8s %7s %5s\n",
                  "distance", "mean_acc", "mean_tp", "mean_tn", "mean_k", "max_k",
                  "p_value", "better", "best");
    out << line;
    for (const auto& row : rows) {
        std::snprintf(line, sizeof(line), "%-28s %8.3f %8.3f %8.3f %7.1f %6d %8.3f %7d %5d\n",
                      row.spec.name().c_str(), row.mean_accuracy, row.mean_tp, row.mean_tn,
                      row.mean_k, row.max_k, row.p_value, row.better_than_average,
                      row.best_count);
        out << line;
    }
    return out.str();
}

}  // namespace minkcheb::eval
