#pragma once

#include <map>
#include <vector>

namespace zm::stats {

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a),
/// a > 0, x >= 0. Series for x < a+1, continued fraction otherwise.
double gamma_q(double a, double x);

/// Survival function of the chi-square distribution with dof degrees of
/// freedom (the p-value of a goodness-of-fit statistic).
double chi_square_sf(double stat, int dof);

/// Pearson chi-square test of observed counts against expected
/// probabilities. Cells with expected count below min_expected are
/// pooled into the remainder cell (which always exists and carries
/// 1 - sum of probabilities). Returns the statistic, the degrees of
/// freedom after pooling, and the p-value.
struct ChiSquare {
  double statistic = 0;
  int dof = 0;
  double p_value = 1;
  int pooled_cells = 0;
};
ChiSquare chi_square_test(const std::vector<double>& expected_probs,
                          const std::vector<long>& observed_counts,
                          long total_draws, double min_expected = 5.0);

}  // namespace zm::stats
