#include "zm/measure.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace zm::measure {

GaussianRational normalization_sum(int n, const ExactParams& p) {
  GaussianRational total(0);
  for (const Partition& lam : partitions_of(n)) total += z_measure(lam, p);
  return total;
}

template <>
Complex mixture_prefactor(const FloatParams& p) {
  if (p.xi.imag() != 0.0 || p.xi.real() < 0.0 || p.xi.real() >= 1.0)
    throw std::domain_error("mixture_prefactor: xi must be real in [0,1)");
  return std::pow(Complex(1.0) - p.xi, p.z * p.zp);
}

template <>
GaussianRational mixture_prefactor(const ExactParams& p) {
  if (!p.xi.is_real() || p.xi.real() < 0 || p.xi.real() >= 1)
    throw std::domain_error("mixture_prefactor: xi must be real in [0,1)");
  GaussianRational zz = p.z * p.zp;
  if (!zz.is_real() || zz.real() < 0 || zz.real().get_den() != 1)
    throw std::domain_error(
        "mixture_prefactor: exact mode needs zz' a non-negative integer");
  long e = zz.real().get_num().get_si();
  return pow_int(GaussianRational(1) - p.xi, static_cast<int>(e));
}

TailBound negative_binomial_tail(const FloatParams& p, int N) {
  TailBound tb;
  tb.truncation = N;
  sl2::SeriesClass sc = sl2::SeriesClass::classify(p.z, p.zp);
  tb.rigorous = sc.tag != sl2::Series::generic;
  double xi = p.xi.real();
  Complex zz = p.z * p.zp;
  Complex sum{0.0, 0.0};
  Complex term{1.0, 0.0};  // xi^n (zz')_n / n!
  for (int n = 0; n <= N; ++n) {
    if (n > 0) term *= Complex(xi) * (zz + Complex(n - 1)) / Complex(n);
    sum += term;
  }
  Complex covered = std::pow(Complex(1.0) - p.xi, zz) * sum;
  if (tb.rigorous) {
    tb.bound = std::abs(Complex(1.0) - covered);
  } else {
    tb.bound = std::abs(std::pow(Complex(1.0) - p.xi, zz) * term);
  }
  return tb;
}

EnumeratedMixture::EnumeratedMixture(const FloatParams& p, int N)
    : params_(p), trunc_(N), tail_(negative_binomial_tail(p, N)) {
  for (int n = 0; n <= N; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      Complex w = mixed_weight(lam, p);
      total_ += w;
      entries_.emplace_back(maya(lam), w);
    }
  }
}

BruteResult EnumeratedMixture::correlation(const std::vector<HalfInt>& X) const {
  Complex sum{0.0, 0.0};
  for (const auto& [s, w] : entries_) {
    bool all_in = true;
    for (HalfInt x : X) {
      if (!s.contains(x)) {
        all_in = false;
        break;
      }
    }
    if (all_in) sum += w;
  }
  return {sum, tail_};
}

BruteResult brute_correlation(const std::vector<HalfInt>& X,
                              const FloatParams& p, int N) {
  return EnumeratedMixture(p, N).correlation(X);
}

std::map<Partition, double> mixture_masses(const FloatParams& p, int max_size) {
  std::map<Partition, double> out;
  for (int n = 0; n <= max_size; ++n)
    for (const Partition& lam : partitions_of(n))
      out[lam] = mixed_weight(lam, p).real();
  return out;
}

std::vector<Partition> sample(const FloatParams& p, int count, int N,
                              std::uint64_t seed, double tail_tol) {
  sl2::SeriesClass sc = sl2::SeriesClass::classify(p.z, p.zp);
  if (sc.tag == sl2::Series::generic)
    throw std::domain_error("sample: parameters outside the positive regimes");
  TailBound tail = negative_binomial_tail(p, N);
  if (tail.bound > tail_tol)
    throw std::domain_error("sample: truncation tail " +
                            std::to_string(tail.bound) + " above tolerance");

  // Size distribution, renormalized over n <= N.
  double xi = p.xi.real();
  double zz = (p.z * p.zp).real();
  std::vector<double> size_cdf;
  double term = 1.0, acc = 0.0;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) term *= xi * (zz + n - 1) / n;
    acc += term;
    size_cdf.push_back(acc);
  }
  for (double& c : size_cdf) c /= acc;

  // Per-size tables built on first use.
  std::vector<std::vector<double>> lam_cdf(N + 1);
  std::vector<std::vector<Partition>> lam_list(N + 1);
  auto ensure_size_table = [&](int n) {
    if (!lam_list[n].empty() || n == 0) return;
    lam_list[n] = partitions_of(n);
    double running = 0.0;
    for (const Partition& lam : lam_list[n]) {
      double w = z_measure(lam, p).real();
      if (w < 0 && w > -1e-12) w = 0;  // clip float noise at regime edges
      if (w < 0)
        throw std::domain_error("sample: negative weight for " + lam.str());
      running += w;
      lam_cdf[n].push_back(running);
    }
    for (double& c : lam_cdf[n]) c /= running;
  };

  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  std::vector<Partition> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    double u = uniform();
    int n = static_cast<int>(
        std::lower_bound(size_cdf.begin(), size_cdf.end(), u) - size_cdf.begin());
    if (n > N) n = N;
    if (n == 0) {
      out.emplace_back();
      continue;
    }
    ensure_size_table(n);
    double v = uniform();
    size_t idx = std::lower_bound(lam_cdf[n].begin(), lam_cdf[n].end(), v) -
                 lam_cdf[n].begin();
    if (idx >= lam_list[n].size()) idx = lam_list[n].size() - 1;
    out.push_back(lam_list[n][idx]);
  }
  return out;
}

}  // namespace zm::measure
