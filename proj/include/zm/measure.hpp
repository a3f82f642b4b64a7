#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "zm/partition.hpp"
#include "zm/scalar.hpp"
#include "zm/sl2me.hpp"

namespace zm::measure {

/// Measure parameters (z, z', xi). xi is carried in the scalar type but
/// must be real and in [0, 1).
template <class S>
struct Params {
  S z;
  S zp;
  S xi = ScalarOps<S>::from_int(0);
};

using ExactParams = Params<GaussianRational>;
using FloatParams = Params<Complex>;

/// Weight of lambda under the n-point measure:
/// n!/(zz')_n * prod (z+c)(z'+c)/h^2 over the diagram. Exact in exact
/// mode. Throws when the Pochhammer denominator (zz')_n vanishes.
template <class S>
S z_measure(const Partition& lam, const Params<S>& p) {
  int n = lam.size();
  S denom = sl2::poch_rising(p.z * p.zp, n);
  if (ScalarOps<S>::is_zero(denom))
    throw std::domain_error("z_measure: (zz')_n vanishes (degenerate zz')");
  S w = ScalarOps<S>::factorial(n) / denom;
  for (int r = 1; r <= lam.rows(); ++r) {
    for (int c = 1; c <= lam.part(r); ++c) {
      S cont = ScalarOps<S>::from_int(content({r, c}));
      int h = hook_length(lam, {r, c});
      w = w * (p.z + cont) * (p.zp + cont) / ScalarOps<S>::from_int(h * h);
    }
  }
  return w;
}

/// Sum of z_measure over all partitions of n; equals 1 identically.
/// Exact arithmetic only — this is the normalization identity check.
GaussianRational normalization_sum(int n, const ExactParams& p);

/// (1-xi)^{zz'}. Exact mode requires zz' to be a non-negative integer.
template <class S>
S mixture_prefactor(const Params<S>& p);

/// Weight of lambda under the xi-mixture:
/// (1-xi)^{zz'} xi^{|lambda|} (zz')_{|lambda|}/|lambda|! * z_measure.
template <class S>
S mixed_weight(const Partition& lam, const Params<S>& p) {
  int n = lam.size();
  return mixture_prefactor(p) * pow_int(p.xi, n) *
         sl2::poch_rising(p.z * p.zp, n) / ScalarOps<S>::factorial(n) *
         z_measure(lam, p);
}

/// Mass of the mixture beyond truncation size N. The bound is rigorous
/// only in the positive (principal/complementary) regimes where the
/// mixture is a probability measure; otherwise it is the magnitude of
/// the last partial-sum increment, reported as a heuristic.
struct TailBound {
  int truncation = 0;
  double bound = 0;
  bool rigorous = false;
};
TailBound negative_binomial_tail(const FloatParams& p, int N);

struct BruteResult {
  Complex value;
  TailBound tail;
};

/// All partitions of size <= N with their mixture weights and Maya sets,
/// reusable across many correlation queries.
class EnumeratedMixture {
 public:
  EnumeratedMixture(const FloatParams& p, int N);

  /// Partial correlation sum over the table: total weight of
  /// {lambda : X subset of S(lambda)}, with the truncation tail attached.
  BruteResult correlation(const std::vector<HalfInt>& X) const;

  Complex total_mass() const { return total_; }
  int truncation() const { return trunc_; }
  const FloatParams& params() const { return params_; }

 private:
  FloatParams params_;
  int trunc_;
  TailBound tail_;
  Complex total_{0.0, 0.0};
  std::vector<std::pair<MayaSet, Complex>> entries_;
};

/// One-shot brute-force correlation (enumerates afresh each call).
BruteResult brute_correlation(const std::vector<HalfInt>& X,
                              const FloatParams& p, int N);

/// Exact mixture masses of all partitions of size <= max_size, for
/// goodness-of-fit checks against sampled data.
std::map<Partition, double> mixture_masses(const FloatParams& p, int max_size);

/// Draws i.i.d. partitions from the truncated mixture: size n from the
/// negative binomial restricted to n <= N, then lambda from the exact
/// n-point weights. Deterministic per seed (mt19937_64, 53-bit uniform).
/// Requires a positive parameter regime and a truncation tail below
/// tail_tol.
std::vector<Partition> sample(const FloatParams& p, int count, int N,
                              std::uint64_t seed, double tail_tol = 1e-9);

}  // namespace zm::measure
