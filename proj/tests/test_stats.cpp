#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "minkcheb/stats.hpp"

using namespace minkcheb::stats;

namespace {

// Independent oracle: Simpson integration of the t density.
double t_density(double x, double df) {
    double log_c = std::lgamma((df + 1.0) / 2.0) - std::lgamma(df / 2.0) -
                   0.5 * std::log(df * std::acos(-1.0));
    return std::exp(log_c - (df + 1.0) / 2.0 * std::log1p(x * x / df));
}

double t_cdf_by_quadrature(double t, double df) {
    // integrate the density from 0 to |t|; symmetry gives the rest
    double upper = std::abs(t);
    const int steps = 20000;  // even
    double h = upper / steps;
    double sum = t_density(0.0, df) + t_density(upper, df);
    for (int i = 1; i < steps; ++i)
        sum += t_density(i * h, df) * (i % 2 ? 4.0 : 2.0);
    double integral = sum * h / 3.0;
    return t >= 0.0 ? 0.5 + integral : 0.5 - integral;
}

}  // namespace

TEST_CASE("t CDF matches numerical integration of the density") {
    for (double df : {2.0, 3.0, 5.0, 8.0, 13.0, 21.0, 34.0, 40.0}) {
        for (double t : {-6.0, -2.5, -1.0, -0.3, 0.0, 0.5, 1.3, 2.0, 4.0, 9.0}) {
            INFO("t=", t, " df=", df);
            CHECK(std::abs(student_t_cdf(t, df) - t_cdf_by_quadrature(t, df)) < 1e-6);
        }
    }
}

TEST_CASE("incomplete beta endpoints and symmetry") {
    CHECK(regularized_incomplete_beta(2, 3, 0.0) == 0.0);
    CHECK(regularized_incomplete_beta(2, 3, 1.0) == 1.0);
    // I_x(a,b) + I_{1-x}(b,a) = 1
    for (double x : {0.1, 0.37, 0.5, 0.9})
        CHECK(regularized_incomplete_beta(2.5, 4.0, x) +
                  regularized_incomplete_beta(4.0, 2.5, 1.0 - x) ==
              doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(regularized_incomplete_beta(0, 1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(regularized_incomplete_beta(1, 1, 1.5), std::invalid_argument);
}

TEST_CASE("paired t-test") {
    std::vector<double> a{0.5, 0.6, 0.7};
    CHECK(paired_t_test(a, a) == 1.0);

    // frozen from the quadrature oracle: t = sqrt(5)/0.1581... = 14.142,
    // df = 4, two-tailed p ~= 1.45e-4
    std::vector<double> d{1.1, 0.9, 1.0, 1.2, 0.8};
    std::vector<double> zero(5, 0.0);
    double p = paired_t_test(d, zero);
    CHECK(p == doctest::Approx(1.45e-4).epsilon(0.05));

    // symmetry of the two-tailed test
    std::vector<double> b{0.4, 0.8, 0.65};
    CHECK(paired_t_test(a, b) == doctest::Approx(paired_t_test(b, a)).epsilon(1e-12));

    // exactly constant nonzero difference: zero variance, certain effect
    std::vector<double> exact_a{1.0, 2.0, 3.0};
    std::vector<double> exact_b{1.5, 2.5, 3.5};
    CHECK(paired_t_test(exact_b, exact_a) == 0.0);

    // near-constant difference (rounding noise in the deltas): p is vanishingly small
    std::vector<double> shifted{0.6, 0.7, 0.8};
    CHECK(paired_t_test(shifted, a) < 1e-12);

    CHECK_THROWS_AS(paired_t_test({1.0}, {2.0}), std::invalid_argument);
    CHECK_THROWS_AS(paired_t_test({1.0, 2.0}, {1.0}), std::invalid_argument);
}
