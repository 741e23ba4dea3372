#include "minkcheb/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

namespace minkcheb {

namespace {

void require_same_dims(const FeatureVector& x, const FeatureVector& y) {
    if (x.size() != y.size()) {
        std::ostringstream msg;
        msg << "incompatible vectors: dimensions " << x.size() << " vs " << y.size();
        throw std::invalid_argument(msg.str());
    }
    if (x.empty()) throw std::invalid_argument("vectors must have at least one dimension");
}

std::string format_param(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

DistanceSpec DistanceSpec::minkowski(double p) {
    DistanceSpec s{Family::Minkowski};
    s.p = p;
    s.validate();
    return s;
}

DistanceSpec DistanceSpec::rodrigues(double p, double w1, double w2) {
    DistanceSpec s{Family::Rodrigues};
    s.p = p;
    s.w1 = w1;
    s.w2 = w2;
    s.validate();
    return s;
}

bool DistanceSpec::is_metric() const {
    switch (family) {
        case Family::SquaredEuclidean: return false;
        case Family::Minkowski: return p >= 1.0;
        case Family::Rodrigues: return p >= 1.0 && w1 > 0.0 && w2 > 0.0;
        default: return true;
    }
}

void DistanceSpec::validate() const {
    if (has_p() && !(p > 0.0)) throw std::invalid_argument("p must be positive");
    if (has_weights() && !(w1 > 0.0 && w2 > 0.0))
        throw std::invalid_argument("w1 and w2 must be positive");
}

std::string DistanceSpec::name() const {
    std::string out = family_name(family);
    if (family == Family::Minkowski) {
        out += ":p=" + format_param(p);
    } else if (family == Family::Rodrigues) {
        out += ":p=" + format_param(p) + ",w1=" + format_param(w1) + ",w2=" + format_param(w2);
    }
    return out;
}

bool DistanceSpec::operator==(const DistanceSpec& other) const {
    if (family != other.family) return false;
    if (has_p() && p != other.p) return false;
    if (has_weights() && (w1 != other.w1 || w2 != other.w2)) return false;
    return true;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Discrete: return "discrete";
        case Family::Euclidean: return "euclidean";
        case Family::Manhattan: return "manhattan";
        case Family::Minkowski: return "minkowski";
        case Family::Chebyshev: return "chebyshev";
        case Family::SquaredEuclidean: return "sqeuclidean";
        case Family::Canberra: return "canberra";
        case Family::Rodrigues: return "rodrigues";
    }
    return "?";
}

DistanceSpec parse_spec(const std::string& text) {
    std::string head = text;
    std::string params;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        head = text.substr(0, colon);
        params = text.substr(colon + 1);
    }

    DistanceSpec spec;
    if (head == "discrete") spec.family = Family::Discrete;
    else if (head == "euclidean") spec.family = Family::Euclidean;
    else if (head == "manhattan") spec.family = Family::Manhattan;
    else if (head == "minkowski") spec.family = Family::Minkowski;
    else if (head == "chebyshev") spec.family = Family::Chebyshev;
    else if (head == "sqeuclidean") spec.family = Family::SquaredEuclidean;
    else if (head == "canberra") spec.family = Family::Canberra;
    else if (head == "rodrigues") spec.family = Family::Rodrigues;
    else throw std::invalid_argument("unknown distance family: '" + head + "'");

    std::istringstream in(params);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("malformed parameter '" + item + "' in spec '" + text + "'");
        std::string key = item.substr(0, eq);
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad numeric value in spec '" + text + "'");
        }
        if (key == "p" && spec.has_p()) spec.p = value;
        else if (key == "w1" && spec.has_weights()) spec.w1 = value;
        else if (key == "w2" && spec.has_weights()) spec.w2 = value;
        else throw std::invalid_argument("unknown key '" + key + "' for family '" + head + "'");
    }
    spec.validate();
    return spec;
}

double discrete_distance(const FeatureVector& x, const FeatureVector& y) {
    require_same_dims(x, y);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return 1.0;
    return 0.0;
}

double manhattan(const FeatureVector& x, const FeatureVector& y) {
    require_same_dims(x, y);
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += std::abs(x[i] - y[i]);
    return sum;
}

double euclidean(const FeatureVector& x, const FeatureVector& y) {
    return std::sqrt(squared_euclidean(x, y));
}

double minkowski(double p, const FeatureVector& x, const FeatureVector& y) {
    if (!(p > 0.0)) throw std::invalid_argument("p must be positive");
    require_same_dims(x, y);
    if (p == 1.0) return manhattan(x, y);
    if (p == 2.0) return euclidean(x, y);
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += std::pow(std::abs(x[i] - y[i]), p);
    return std::pow(sum, 1.0 / p);
}

double chebyshev(const FeatureVector& x, const FeatureVector& y) {
    require_same_dims(x, y);
    double best = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double diff = std::abs(x[i] - y[i]);
        if (diff > best) best = diff;
    }
    return best;
}

double squared_euclidean(const FeatureVector& x, const FeatureVector& y) {
    require_same_dims(x, y);
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double diff = x[i] - y[i];
        sum += diff * diff;
    }
    return sum;
}

double canberra(const FeatureVector& x, const FeatureVector& y) {
    require_same_dims(x, y);
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double num = std::abs(x[i] - y[i]);
        double den = std::abs(x[i]) + std::abs(y[i]);
        // a term with x_i = y_i = 0 contributes 0 (limit convention)
        if (den > 0.0) sum += num / den;
    }
    return sum;
}

double rodrigues(double p, double w1, double w2,
                 const FeatureVector& x, const FeatureVector& y) {
    if (!(w1 > 0.0 && w2 > 0.0)) throw std::invalid_argument("w1 and w2 must be positive");
    return w1 * minkowski(p, x, y) + w2 * chebyshev(x, y);
}

double distance(const DistanceSpec& spec, const FeatureVector& x, const FeatureVector& y) {
    switch (spec.family) {
        case Family::Discrete: return discrete_distance(x, y);
        case Family::Euclidean: return euclidean(x, y);
        case Family::Manhattan: return manhattan(x, y);
        case Family::Minkowski: return minkowski(spec.p, x, y);
        case Family::Chebyshev: return chebyshev(x, y);
        case Family::SquaredEuclidean: return squared_euclidean(x, y);
        case Family::Canberra: return canberra(x, y);
        case Family::Rodrigues: return rodrigues(spec.p, spec.w1, spec.w2, x, y);
    }
    throw std::logic_error("unreachable distance family");
}

AxiomReport check_metric_axioms(const DistanceSpec& spec,
                                const std::function<FeatureVector()>& sampler,
                                std::uint64_t trials,
                                double tolerance) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (tolerance < 0.0) throw std::invalid_argument("tolerance must be >= 0");
    spec.validate();

    AxiomReport report;
    report.trials = trials;
    for (std::uint64_t t = 0; t < trials; ++t) {
        FeatureVector x = sampler();
        FeatureVector y = sampler();
        FeatureVector z = sampler();

        double dxy = distance(spec, x, y);
        double dyx = distance(spec, y, x);
        double dxz = distance(spec, x, z);
        double dyz = distance(spec, y, z);
        double dxx = distance(spec, x, x);

        if (dxy < 0.0) {
            ++report.nonnegativity_violations;
            if (!report.nonnegativity_witness)
                report.nonnegativity_witness = AxiomWitness{x, y, z, dxy, 0.0};
        }
        if (dxx != 0.0) {
            ++report.identity_violations;
            if (!report.identity_witness)
                report.identity_witness = AxiomWitness{x, x, z, dxx, 0.0};
        }
        if (std::abs(dxy - dyx) > tolerance) {
            ++report.symmetry_violations;
            if (!report.symmetry_witness)
                report.symmetry_witness = AxiomWitness{x, y, z, dxy, dyx};
        }
        if (dxz > dxy + dyz + tolerance) {
            ++report.triangle_violations;
            if (!report.triangle_witness)
                report.triangle_witness = AxiomWitness{x, y, z, dxz, dxy + dyz};
        }
    }
    return report;
}

std::function<FeatureVector()> uniform_vector_sampler(std::uint64_t seed, std::size_t dim,
                                                      double lo, double hi) {
    auto engine = std::make_shared<std::mt19937_64>(seed);
    auto dist = std::uniform_real_distribution<double>(lo, hi);
    return [engine, dist, dim]() mutable {
        FeatureVector v(dim);
        for (auto& c : v) c = dist(*engine);
        return v;
    };
}

}  // namespace minkcheb
