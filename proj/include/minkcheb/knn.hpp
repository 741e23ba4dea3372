#ifndef MINKCHEB_KNN_HPP
#define MINKCHEB_KNN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "minkcheb/metrics.hpp"

namespace minkcheb {

struct Instance {
    FeatureVector features;
    int label = 0;  // index into the dataset's class table
};

struct Dataset {
    std::string name;
    std::vector<std::string> class_table;
    std::vector<Instance> instances;
    std::size_t n_features = 0;

    std::size_t size() const { return instances.size(); }
    std::size_t n_classes() const { return class_table.size(); }

    /// Checks the structural invariants (uniform dimensionality, finite
    /// features, >= 2 classes, labels in range); throws on violation.
    void validate() const;
};

/// One-vs-rest confusion counts plus the derived rates.
struct ConfusionStats {
    std::vector<std::size_t> tp, fp, tn, fn;  // per class
    std::size_t total = 0;
    std::size_t correct = 0;
    double accuracy = 0.0;
    double macro_tp_rate = 0.0;  // mean recall over classes present in test
    double macro_tn_rate = 0.0;  // mean specificity over classes with negatives
};

/// All training indices sorted by ascending distance to the query; ties are
/// broken by ascending index (stable).
std::vector<std::size_t> neighbor_ranking(const Dataset& train, const DistanceSpec& spec,
                                          const FeatureVector& query);

/// Modal label among the first k neighbours of a precomputed ranking.
/// Mode ties go to the tied class whose nearest member has the smallest
/// rank.
int predict_from_ranking(const Dataset& train, const std::vector<std::size_t>& ranking,
                         std::size_t k);

int predict(const Dataset& train, const DistanceSpec& spec, std::size_t k,
            const FeatureVector& query);

/// Accumulates one (actual, predicted) pair into per-class counts.
void tally_prediction(ConfusionStats& stats, int actual, int predicted,
                      std::size_t n_classes);

/// Computes accuracy and macro rates from accumulated counts. Classes with
/// no positives (or no negatives) in the test split are left out of the
/// corresponding macro average.
void finalize_stats(ConfusionStats& stats);

ConfusionStats evaluate(const Dataset& train, const Dataset& test, const DistanceSpec& spec,
                        std::size_t k);

}  // namespace minkcheb

#endif
