#include "zm/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace zm::stats {

namespace {

// Regularized lower incomplete gamma by power series.
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int n = 0; n < 500; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::abs(del) < std::abs(sum) * 1e-15)
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  throw std::runtime_error("gamma_p_series: no convergence");
}

// Regularized upper incomplete gamma by Lentz continued fraction.
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15)
      return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
  }
  throw std::runtime_error("gamma_q_cf: no convergence");
}

}  // namespace

double gamma_q(double a, double x) {
  if (a <= 0.0 || x < 0.0) throw std::domain_error("gamma_q: bad arguments");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_square_sf(double stat, int dof) {
  if (dof < 1) throw std::domain_error("chi_square_sf: dof must be positive");
  if (stat <= 0.0) return 1.0;
  return gamma_q(dof / 2.0, stat / 2.0);
}

ChiSquare chi_square_test(const std::vector<double>& expected_probs,
                          const std::vector<long>& observed_counts,
                          long total_draws, double min_expected) {
  if (expected_probs.size() != observed_counts.size())
    throw std::invalid_argument("chi_square_test: size mismatch");
  double rest_prob = 1.0;
  long rest_count = total_draws;
  double stat = 0.0;
  int cells = 0;
  ChiSquare out;
  for (size_t i = 0; i < expected_probs.size(); ++i) {
    double e = expected_probs[i] * total_draws;
    if (e < min_expected) {
      ++out.pooled_cells;
      continue;  // pooled into the remainder cell
    }
    double o = static_cast<double>(observed_counts[i]);
    stat += (o - e) * (o - e) / e;
    rest_prob -= expected_probs[i];
    rest_count -= observed_counts[i];
    ++cells;
  }
  double rest_e = rest_prob * total_draws;
  if (rest_e > 0) {
    stat += (rest_count - rest_e) * (rest_count - rest_e) / rest_e;
    ++cells;
  }
  out.statistic = stat;
  out.dof = cells - 1;
  out.p_value = out.dof >= 1 ? chi_square_sf(stat, out.dof) : 1.0;
  return out;
}

}  // namespace zm::stats
