#ifndef MINKCHEB_STATS_HPP
#define MINKCHEB_STATS_HPP

#include <cstddef>
#include <vector>

namespace minkcheb::stats {

/// Regularized incomplete beta function I_x(a, b), evaluated with the
/// Lentz continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

/// CDF of Student's t distribution with `df` degrees of freedom.
double student_t_cdf(double t, double df);

/// Two-tailed p-value for |T| >= |t| under the t distribution.
double student_t_two_tailed(double t, double df);

/// Two-tailed paired t-test on equally sized samples. Returns 1.0 when all
/// pairwise differences are zero, and 0.0 when the differences are constant
/// but nonzero (zero variance, certain effect).
double paired_t_test(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace minkcheb::stats

#endif
