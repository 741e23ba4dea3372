#ifndef MINKCHEB_METRICS_HPP
#define MINKCHEB_METRICS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace minkcheb {

/// A point in R^n. Coordinates must be finite; n >= 1.
using FeatureVector = std::vector<double>;

enum class Family {
    Discrete,
    Euclidean,
    Manhattan,
    Minkowski,
    Chebyshev,
    SquaredEuclidean,
    Canberra,
    Rodrigues,
};

/// A distance family together with its parameters. p applies to Minkowski
/// and Rodrigues; w1/w2 apply to Rodrigues only.
struct DistanceSpec {
    Family family = Family::Euclidean;
    double p = 2.0;
    double w1 = 1.0;
    double w2 = 1.0;

    static DistanceSpec discrete() { return {Family::Discrete}; }
    static DistanceSpec euclidean() { return {Family::Euclidean}; }
    static DistanceSpec manhattan() { return {Family::Manhattan}; }
    static DistanceSpec chebyshev() { return {Family::Chebyshev}; }
    static DistanceSpec squared_euclidean() { return {Family::SquaredEuclidean}; }
    static DistanceSpec canberra() { return {Family::Canberra}; }
    static DistanceSpec minkowski(double p);
    static DistanceSpec rodrigues(double p, double w1 = 1.0, double w2 = 1.0);

    /// True iff the family/parameter combination satisfies all four metric
    /// axioms: Minkowski and Rodrigues need p >= 1; SquaredEuclidean fails
    /// the triangle inequality; everything else qualifies.
    bool is_metric() const;

    /// Validates parameter ranges (p > 0, w1 > 0, w2 > 0 where present);
    /// throws std::invalid_argument otherwise.
    void validate() const;

    bool has_p() const { return family == Family::Minkowski || family == Family::Rodrigues; }
    bool has_weights() const { return family == Family::Rodrigues; }

    /// Canonical textual form, e.g. "rodrigues:p=1,w1=1,w2=1".
    std::string name() const;

    bool operator==(const DistanceSpec& other) const;
};

const char* family_name(Family f);

/// Parses the textual spec grammar: "<family>[:key=value,...]" with keys
/// p, w1, w2. Unknown families or keys throw std::invalid_argument.
DistanceSpec parse_spec(const std::string& text);

double discrete_distance(const FeatureVector& x, const FeatureVector& y);
double manhattan(const FeatureVector& x, const FeatureVector& y);
double euclidean(const FeatureVector& x, const FeatureVector& y);
double minkowski(double p, const FeatureVector& x, const FeatureVector& y);
double chebyshev(const FeatureVector& x, const FeatureVector& y);
double squared_euclidean(const FeatureVector& x, const FeatureVector& y);
double canberra(const FeatureVector& x, const FeatureVector& y);
double rodrigues(double p, double w1, double w2,
                 const FeatureVector& x, const FeatureVector& y);

/// Single dispatch point over all families.
double distance(const DistanceSpec& spec, const FeatureVector& x, const FeatureVector& y);

/// Witness of a failed axiom: the offending triple and both sides of the
/// violated inequality.
struct AxiomWitness {
    FeatureVector x, y, z;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct AxiomReport {
    std::uint64_t trials = 0;
    std::uint64_t nonnegativity_violations = 0;
    std::uint64_t identity_violations = 0;
    std::uint64_t symmetry_violations = 0;
    std::uint64_t triangle_violations = 0;
    std::optional<AxiomWitness> nonnegativity_witness;
    std::optional<AxiomWitness> identity_witness;
    std::optional<AxiomWitness> symmetry_witness;
    std::optional<AxiomWitness> triangle_witness;

    bool clean() const {
        return nonnegativity_violations == 0 && identity_violations == 0 &&
               symmetry_violations == 0 && triangle_violations == 0;
    }
};

/// Draws `trials` random triples from `sampler` and checks the four metric
/// axioms. Symmetry and the triangle inequality are checked with an
/// additive tolerance; d(x,x) = 0 is required exactly. Violations are
/// counted, not thrown.
AxiomReport check_metric_axioms(const DistanceSpec& spec,
                                const std::function<FeatureVector()>& sampler,
                                std::uint64_t trials,
                                double tolerance = 1e-9);

/// Uniform sampler over [lo, hi]^dim driven by a caller-owned engine, for
/// reproducible axiom fuzzing.
std::function<FeatureVector()> uniform_vector_sampler(std::uint64_t seed, std::size_t dim,
                                                      double lo = -1000.0, double hi = 1000.0);

}  // namespace minkcheb

#endif
