#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>

#include "minkcheb/knn.hpp"

using namespace minkcheb;

namespace {

Dataset make_dataset(std::vector<std::pair<FeatureVector, int>> rows,
                     std::vector<std::string> classes) {
    Dataset ds;
    ds.name = "synthetic";
    ds.class_table = std::move(classes);
    ds.n_features = rows.front().first.size();
    for (auto& [features, label] : rows) ds.instances.push_back({std::move(features), label});
    return ds;
}

Dataset random_dataset(std::mt19937_64& rng, std::size_t n, std::size_t dim, int classes) {
    std::uniform_real_distribution<double> coord(-10, 10);
    std::uniform_int_distribution<int> label(0, classes - 1);
    Dataset ds;
    ds.name = "random";
    for (int c = 0; c < classes; ++c) ds.class_table.push_back("c" + std::to_string(c));
    ds.n_features = dim;
    for (std::size_t i = 0; i < n; ++i) {
        FeatureVector v(dim);
        for (auto& x : v) x = coord(rng);
        ds.instances.push_back({std::move(v), label(rng)});
    }
    return ds;
}

}  // namespace

TEST_CASE("neighbor ranking") {
    auto ds = make_dataset({{{0}, 0}, {{10}, 1}}, {"a", "b"});
    CHECK(neighbor_ranking(ds, DistanceSpec::euclidean(), {1}) ==
          std::vector<std::size_t>{0, 1});

    auto tie = make_dataset({{{0}, 0}, {{0}, 1}}, {"a", "b"});
    CHECK(neighbor_ranking(tie, DistanceSpec::manhattan(), {5}) ==
          std::vector<std::size_t>{0, 1});

    CHECK_THROWS_AS(neighbor_ranking(ds, DistanceSpec::euclidean(), {1, 2}),
                    std::invalid_argument);
}

TEST_CASE("ranking agrees between euclidean and squared euclidean") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        auto ds = random_dataset(rng, 40, 4, 3);
        FeatureVector query(4);
        std::uniform_real_distribution<double> coord(-10, 10);
        for (auto& x : query) x = coord(rng);
        CHECK(neighbor_ranking(ds, DistanceSpec::euclidean(), query) ==
              neighbor_ranking(ds, DistanceSpec::squared_euclidean(), query));
        // weight scaling leaves the ordering alone too
        CHECK(neighbor_ranking(ds, DistanceSpec::rodrigues(2, 1, 1), query) ==
              neighbor_ranking(ds, DistanceSpec::rodrigues(2, 5, 5), query));
    }
}

TEST_CASE("majority vote prediction") {
    // 9 near instances of one class beat 1 of another at k = 10
    std::vector<std::pair<FeatureVector, int>> rows;
    for (int i = 0; i < 9; ++i) rows.push_back({{double(i) * 0.1}, 0});
    rows.push_back({{0.95}, 1});
    auto ds = make_dataset(std::move(rows), {"apple", "grape"});
    CHECK(predict(ds, DistanceSpec::euclidean(), 10, {0.0}) == 0);

    CHECK(predict(ds, DistanceSpec::euclidean(), 1, {0.95}) == 1);  // coincident point
    CHECK_THROWS_AS(predict(ds, DistanceSpec::euclidean(), 0, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(predict(ds, DistanceSpec::euclidean(), 11, {0.0}), std::invalid_argument);
}

TEST_CASE("mode ties go to the class with the nearest member") {
    // 2-2 tie at k=4; class b holds the single nearest point
    auto ds = make_dataset({{{1}, 1}, {{2}, 0}, {{3}, 0}, {{4}, 1}}, {"a", "b"});
    CHECK(predict(ds, DistanceSpec::euclidean(), 4, {0.0}) == 1);
}

TEST_CASE("k = train size returns the majority label everywhere") {
    auto ds = make_dataset({{{0}, 0}, {{5}, 0}, {{9}, 0}, {{2}, 1}, {{7}, 1}}, {"a", "b"});
    for (double q : {-100.0, 0.0, 4.5, 100.0})
        CHECK(predict(ds, DistanceSpec::euclidean(), ds.size(), {q}) == 0);
}

TEST_CASE("feature permutation leaves predictions unchanged") {
    std::mt19937_64 rng(13);
    auto ds = random_dataset(rng, 30, 5, 3);
    std::vector<std::size_t> perm{3, 0, 4, 1, 2};

    Dataset permuted = ds;
    for (auto& inst : permuted.instances) {
        FeatureVector v(5);
        for (std::size_t i = 0; i < 5; ++i) v[i] = inst.features[perm[i]];
        inst.features = v;
    }
    std::uniform_real_distribution<double> coord(-10, 10);
    for (int trial = 0; trial < 20; ++trial) {
        FeatureVector q(5);
        for (auto& x : q) x = coord(rng);
        FeatureVector pq(5);
        for (std::size_t i = 0; i < 5; ++i) pq[i] = q[perm[i]];
        for (const auto& spec : {DistanceSpec::euclidean(), DistanceSpec::canberra(),
                                 DistanceSpec::rodrigues(3)})
            CHECK(predict(ds, spec, 5, q) == predict(permuted, spec, 5, pq));
    }
}

TEST_CASE("evaluate computes pooled accuracy and macro rates") {
    auto train = make_dataset({{{0}, 0}, {{1}, 0}, {{10}, 1}, {{11}, 1}}, {"a", "b"});
    auto self = evaluate(train, train, DistanceSpec::euclidean(), 1);
    CHECK(self.accuracy == 1.0);
    CHECK(self.macro_tp_rate == 1.0);
    CHECK(self.macro_tn_rate == 1.0);

    // all-wrong 2-class test set
    auto flipped = train;
    for (auto& inst : flipped.instances) inst.label = 1 - inst.label;
    auto wrong = evaluate(train, flipped, DistanceSpec::euclidean(), 1);
    CHECK(wrong.accuracy == 0.0);
    CHECK(wrong.macro_tp_rate == 0.0);

    auto other = train;
    other.class_table = {"x", "y"};
    CHECK_THROWS_AS(evaluate(train, other, DistanceSpec::euclidean(), 1),
                    std::invalid_argument);
}

TEST_CASE("hand-computed one-vs-rest rates") {
    // 2-class confusion TP=40 FN=10 TN=35 FP=15
    ConfusionStats stats;
    for (int i = 0; i < 40; ++i) tally_prediction(stats, 0, 0, 2);
    for (int i = 0; i < 10; ++i) tally_prediction(stats, 0, 1, 2);
    for (int i = 0; i < 35; ++i) tally_prediction(stats, 1, 1, 2);
    for (int i = 0; i < 15; ++i) tally_prediction(stats, 1, 0, 2);
    finalize_stats(stats);
    CHECK(stats.accuracy == doctest::Approx(0.75));
    CHECK(stats.macro_tp_rate == doctest::Approx(0.75));  // (0.8 + 0.7) / 2
    // per-class counts always total the population
    for (std::size_t c = 0; c < 2; ++c)
        CHECK(stats.tp[c] + stats.fp[c] + stats.tn[c] + stats.fn[c] == stats.total);
}
