#include "zm/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "zm/kerov.hpp"

namespace zm::kernel {

namespace {

constexpr int kMaxModes = 4000;

void check_xi(const KernelSpec& ks) {
  if (ks.xi < 0.0 || ks.xi >= 1.0)
    throw std::domain_error("kernel: xi must lie in [0,1)");
  if (ks.r < 1) throw std::domain_error("kernel: r must be >= 1");
}

// Residue of a mode in {1/2, 3/2, ..., r-1/2} (twice-values 1..2r-1).
int residue_twice(HalfInt k, int r) {
  int m = k.twice % (2 * r);
  return m <= 0 ? m + 2 * r : m;
}

// t = (k - c)/r + 1/2 in twice-values.
HalfInt component_index(HalfInt k, int c2, int r) {
  return HalfInt((k.twice - c2) / r + 1);
}

KernelSpec component_spec(const KernelSpec& ks, int c2) {
  KernelSpec sub = ks;
  sub.r = 1;
  double shift = -0.5 + static_cast<double>(c2) / (2.0 * ks.r);
  sub.z = ks.z + Complex(shift);
  sub.zp = ks.zp + Complex(shift);
  return sub;
}

Complex series_r1(HalfInt i, HalfInt j, const KernelSpec& ks, double tol) {
  sl2::LadderParams lp = ks.ladder();
  // Degenerate parameters make leading terms vanish exactly; hold the
  // stop rule until the mode sum has walked past both arguments.
  int lead = std::max(0, (-1 - std::min(i.twice, j.twice)) / 2 + 1);
  Complex sum{0.0, 0.0};
  int small_run = 0;
  for (int n = 0; n < kMaxModes; ++n) {
    HalfInt m(-1 - 2 * n);
    Complex term = sl2::me(i, m, lp, tol) * sl2::me_dual(j, m, lp, tol);
    sum += term;
    bool small = term == Complex{0.0, 0.0} ||
                 std::abs(term) < tol * std::abs(sum);
    if (small && n >= lead) {
      if (++small_run >= 3) return sum;
    } else if (!small) {
      small_run = 0;
    }
  }
  throw std::domain_error("kernel series did not converge");
}

Complex closed_r1(HalfInt i, HalfInt j, const KernelSpec& ks, double tol) {
  if (i == j) return series_r1(i, j, ks, tol);
  sl2::LadderParams lp = ks.ladder();
  Complex a = lp.alpha, b = lp.beta;
  HalfInt ph = HalfInt::plus_half(0), mh = HalfInt::minus_half(0);
  Complex num = b * ks.zp * sl2::me(i, ph, lp, tol) * sl2::me_dual(j, mh, lp, tol) -
                a * (a * b - Complex(1)) * ks.z * sl2::me(i, mh, lp, tol) *
                    sl2::me_dual(j, ph, lp, tol);
  return num / Complex(i - j);
}

}  // namespace

Complex eval_series(HalfInt i, HalfInt j, const KernelSpec& ks, double tol) {
  check_xi(ks);
  if (ks.r == 1) return series_r1(i, j, ks, tol);
  int ci = residue_twice(i, ks.r), cj = residue_twice(j, ks.r);
  if (ci != cj) return {0.0, 0.0};
  return series_r1(component_index(i, ci, ks.r), component_index(j, cj, ks.r),
                   component_spec(ks, ci), tol);
}

Complex eval_closed(HalfInt i, HalfInt j, const KernelSpec& ks, double tol) {
  check_xi(ks);
  if (ks.r == 1) return closed_r1(i, j, ks, tol);
  int ci = residue_twice(i, ks.r), cj = residue_twice(j, ks.r);
  if (ci != cj) return {0.0, 0.0};
  return closed_r1(component_index(i, ci, ks.r), component_index(j, cj, ks.r),
                   component_spec(ks, ci), tol);
}

Complex eval(HalfInt i, HalfInt j, const KernelSpec& ks, double tol) {
  return eval_closed(i, j, ks, tol);
}

KernelMatrix build_matrix(const std::vector<HalfInt>& X, const KernelSpec& ks,
                          double tol) {
  KernelMatrix m;
  m.points = X;
  m.entries.assign(X.size(), std::vector<Complex>(X.size()));
  for (size_t a = 0; a < X.size(); ++a)
    for (size_t b = 0; b < X.size(); ++b)
      m.entries[a][b] = eval(X[a], X[b], ks, tol);
  return m;
}

DetResult determinant(const KernelMatrix& m) {
  size_t n = m.points.size();
  DetResult res;
  if (n == 0) return res;
  std::vector<std::vector<Complex>> a = m.entries;
  Complex det{1.0, 0.0};
  double max_piv = 0.0, min_piv = HUGE_VAL;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    Complex pivot = a[col][col];
    max_piv = std::max(max_piv, std::abs(pivot));
    min_piv = std::min(min_piv, std::abs(pivot));
    if (pivot == Complex{0.0, 0.0}) return {Complex{0.0, 0.0}, HUGE_VAL};
    det *= pivot;
    for (size_t r = col + 1; r < n; ++r) {
      Complex f = a[r][col] / pivot;
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  res.value = det;
  res.pivot_ratio = min_piv > 0 ? max_piv / min_piv : HUGE_VAL;
  return res;
}

DetResult correlation_det(const std::vector<HalfInt>& X, const KernelSpec& ks,
                          double tol) {
  if (X.size() > 12)
    throw std::invalid_argument("correlation_det: point set larger than 12");
  return determinant(build_matrix(X, ks, tol));
}

RimhookBrute rimhook_brute(const std::vector<HalfInt>& X, const KernelSpec& ks,
                           int N) {
  check_xi(ks);
  if (N < 0) throw std::invalid_argument("rimhook_brute: negative truncation");
  RimhookBrute out;
  Complex sq = std::sqrt(Complex(ks.xi));
  kerov::KerovParams<Complex> kp{ks.z, ks.zp, ks.r};

  auto up_side = kerov::exp_apply(
      kerov::Ladder::up, sq, kerov::PartitionVector<Complex>::unit(Partition{}),
      kp, N);
  Complex corr{0.0, 0.0};
  for (const auto& [lam, uc] : up_side.terms()) {
    auto down_side = kerov::exp_apply(kerov::Ladder::down, sq,
                                      kerov::PartitionVector<Complex>::unit(lam),
                                      kp, N);
    Complex w = uc * down_side.coeff(Partition{});
    out.z_truncated += w;
    MayaSet s = maya(lam);
    bool all_in = true;
    for (HalfInt x : X)
      if (!s.contains(x)) all_in = false;
    if (all_in) corr += w;
  }
  out.rho = corr / out.z_truncated;

  // Predicted partition function: product over residues c of
  // (1-xi)^{-z_c z'_c}, i.e. (1-xi)^{-A} with A the sum of the products.
  Complex A{0.0, 0.0};
  for (int c2 = 1; c2 <= 2 * ks.r - 1; c2 += 2) {
    double shift = -0.5 + static_cast<double>(c2) / (2.0 * ks.r);
    A += (ks.z + Complex(shift)) * (ks.zp + Complex(shift));
  }
  out.z_predicted = std::pow(Complex(1.0 - ks.xi), -A);

  // Tail of the product series sum_m xi^m (A)_m / m! beyond m = N/r,
  // scaled back to the unnormalized Z.
  int M = N / ks.r;
  Complex term{1.0, 0.0}, covered{0.0, 0.0};
  for (int m = 0; m <= M; ++m) {
    if (m > 0) term *= Complex(ks.xi) * (A + Complex(m - 1)) / Complex(m);
    covered += term;
  }
  out.tail.truncation = N;
  out.tail.rigorous =
      sl2::SeriesClass::classify(ks.z, ks.zp).tag != sl2::Series::generic;
  out.tail.bound = std::abs(out.z_predicted - covered);
  return out;
}

}  // namespace zm::kernel
