#include "minkcheb/knn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace minkcheb {

void Dataset::validate() const {
    if (class_table.size() < 2) throw std::invalid_argument("dataset needs at least 2 classes");
    for (std::size_t i = 0; i < class_table.size(); ++i)
        for (std::size_t j = i + 1; j < class_table.size(); ++j)
            if (class_table[i] == class_table[j])
                throw std::invalid_argument("duplicate class name: " + class_table[i]);
    for (const auto& inst : instances) {
        if (inst.features.size() != n_features)
            throw std::invalid_argument("instance dimensionality mismatch in " + name);
        if (inst.label < 0 || std::size_t(inst.label) >= class_table.size())
            throw std::invalid_argument("instance label out of range in " + name);
        for (double v : inst.features)
            if (!std::isfinite(v))
                throw std::invalid_argument("non-finite feature value in " + name);
    }
}

std::vector<std::size_t> neighbor_ranking(const Dataset& train, const DistanceSpec& spec,
                                          const FeatureVector& query) {
    if (train.instances.empty()) throw std::invalid_argument("empty training set");
    if (query.size() != train.n_features)
        throw std::invalid_argument("query dimensionality mismatch");

    std::vector<double> dists(train.size());
    for (std::size_t i = 0; i < train.size(); ++i)
        dists[i] = distance(spec, train.instances[i].features, query);

    std::vector<std::size_t> order(train.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return dists[a] < dists[b]; });
    return order;
}

int predict_from_ranking(const Dataset& train, const std::vector<std::size_t>& ranking,
                         std::size_t k) {
    if (k < 1 || k > ranking.size()) throw std::invalid_argument("k out of range");

    std::vector<std::size_t> votes(train.n_classes(), 0);
    std::vector<std::size_t> first_rank(train.n_classes(), std::numeric_limits<std::size_t>::max());
    for (std::size_t r = 0; r < k; ++r) {
        int label = train.instances[ranking[r]].label;
        ++votes[label];
        first_rank[label] = std::min(first_rank[label], r);
    }

    int best = -1;
    for (std::size_t c = 0; c < votes.size(); ++c) {
        if (votes[c] == 0) continue;
        if (best < 0 || votes[c] > votes[best] ||
            (votes[c] == votes[best] && first_rank[c] < first_rank[best])) {
            best = int(c);
        }
    }
    return best;
}

int predict(const Dataset& train, const DistanceSpec& spec, std::size_t k,
            const FeatureVector& query) {
    return predict_from_ranking(train, neighbor_ranking(train, spec, query), k);
}

void tally_prediction(ConfusionStats& stats, int actual, int predicted,
                      std::size_t n_classes) {
    if (stats.tp.empty()) {
        stats.tp.assign(n_classes, 0);
        stats.fp.assign(n_classes, 0);
        stats.tn.assign(n_classes, 0);
        stats.fn.assign(n_classes, 0);
    }
    ++stats.total;
    if (actual == predicted) ++stats.correct;
    for (std::size_t c = 0; c < n_classes; ++c) {
        bool is_actual = std::size_t(actual) == c;
        bool is_pred = std::size_t(predicted) == c;
        if (is_actual && is_pred) ++stats.tp[c];
        else if (!is_actual && is_pred) ++stats.fp[c];
        else if (is_actual && !is_pred) ++stats.fn[c];
        else ++stats.tn[c];
    }
}

void finalize_stats(ConfusionStats& stats) {
    stats.accuracy = stats.total ? double(stats.correct) / double(stats.total) : 0.0;

    double recall_sum = 0.0, spec_sum = 0.0;
    std::size_t recall_classes = 0, spec_classes = 0;
    for (std::size_t c = 0; c < stats.tp.size(); ++c) {
        std::size_t positives = stats.tp[c] + stats.fn[c];
        std::size_t negatives = stats.tn[c] + stats.fp[c];
        if (positives > 0) {
            recall_sum += double(stats.tp[c]) / double(positives);
            ++recall_classes;
        }
        if (negatives > 0) {
            spec_sum += double(stats.tn[c]) / double(negatives);
            ++spec_classes;
        }
    }
    stats.macro_tp_rate = recall_classes ? recall_sum / double(recall_classes) : 0.0;
    stats.macro_tn_rate = spec_classes ? spec_sum / double(spec_classes) : 0.0;
}

ConfusionStats evaluate(const Dataset& train, const Dataset& test, const DistanceSpec& spec,
                        std::size_t k) {
    if (train.n_features != test.n_features)
        throw std::invalid_argument("train/test dimensionality mismatch");
    if (train.class_table != test.class_table)
        throw std::invalid_argument("train/test class tables differ");
    if (k < 1 || k > train.size()) throw std::invalid_argument("k out of range");

    ConfusionStats stats;
    stats.tp.assign(train.n_classes(), 0);
    stats.fp.assign(train.n_classes(), 0);
    stats.tn.assign(train.n_classes(), 0);
    stats.fn.assign(train.n_classes(), 0);
    for (const auto& inst : test.instances) {
        int predicted = predict(train, spec, k, inst.features);
        tally_prediction(stats, inst.label, predicted, train.n_classes());
    }
    finalize_stats(stats);
    return stats;
}

}  // namespace minkcheb
