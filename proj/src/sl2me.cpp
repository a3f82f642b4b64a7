#include "zm/sl2me.hpp"

#include <cmath>
#include <stdexcept>

namespace zm::sl2 {

namespace {

constexpr int kMaxTerms = 10000;

double intpart_dist(double x) { return std::abs(x - std::round(x)); }

Complex series_2f1(Complex a, Complex b, int c, Complex x, double tol) {
  Complex term{1.0, 0.0};
  Complex sum{1.0, 0.0};
  int small_run = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (a + Complex(k)) * (b + Complex(k)) /
            ((Complex(c) + Complex(k)) * Complex(k + 1)) * x;
    if (term == Complex{0.0, 0.0}) return sum;  // terminated
    sum += term;
    if (std::abs(term) < tol * std::abs(sum)) {
      if (++small_run >= 3) return sum;
    } else {
      small_run = 0;
    }
  }
  throw std::domain_error("gauss_2f1: series did not converge");
}

}  // namespace

Complex gauss_2f1(Complex a, Complex b, int c, Complex x, double tol) {
  if (c < 1) throw std::domain_error("gauss_2f1: c must be a positive integer");
  if (tol <= 0) throw std::domain_error("gauss_2f1: tol must be positive");
  if (x.real() < 0.0) {
    // Pfaff: argument moves to x/(x-1), strictly smaller in modulus here.
    Complex y = x / (x - Complex(1));
    return std::pow(Complex(1) - x, -a) * series_2f1(a, Complex(c) - b, c, y, tol);
  }
  if (std::abs(x) >= 1.0)
    throw std::domain_error("gauss_2f1: argument outside convergence region");
  return series_2f1(a, b, c, x, tol);
}

Exact2F1 gauss_2f1_partial(const GaussianRational& a, const GaussianRational& b,
                           int c, const GaussianRational& x, int order) {
  if (c < 1) throw std::domain_error("gauss_2f1_partial: c must be positive");
  if (order < 0) throw std::domain_error("gauss_2f1_partial: negative order");
  GaussianRational term(1);
  GaussianRational sum(1);
  for (int k = 0; k < order; ++k) {
    term = term * (a + GaussianRational(k)) * (b + GaussianRational(k)) /
           (GaussianRational(c + k) * GaussianRational(k + 1));
    term = term * x;
    if (term.is_zero()) return {sum, GaussianRational(0)};
    sum += term;
  }
  GaussianRational next = term * (a + GaussianRational(order)) *
                          (b + GaussianRational(order)) /
                          (GaussianRational(c + order) * GaussianRational(order + 1)) *
                          x;
  return {sum, next};
}

SeriesClass SeriesClass::classify(Complex z, Complex zp) {
  if (z.imag() != 0.0 && zp == std::conj(z)) return {Series::principal, 0};
  if (z.imag() == 0.0 && zp.imag() == 0.0) {
    double zr = z.real(), zpr = zp.real();
    if (intpart_dist(zr) > 0 && intpart_dist(zpr) > 0 &&
        std::floor(zr) == std::floor(zpr)) {
      return {Series::complementary, static_cast<int>(std::floor(zr))};
    }
  }
  return {Series::generic, 0};
}

// Eq. ladder matrix elements. With ip = i + 1/2 and im = i - 1/2 (both
// integers), the i <= j branch reads
//   alpha^{j-i}/(j-i)! (z+ip)_{j-i} 2F1(-z-im, -z'-im; j-i+1; alpha beta)
// and the i >= j branch swaps the roles of alpha/beta, z/z' and i/j.

Complex me_upper(HalfInt i, HalfInt j, const LadderParams& p, double tol) {
  int d = j - i;
  if (d < 0) throw std::logic_error("me_upper needs i <= j");
  Complex pref = pow_int(p.alpha, d) / ScalarOps<Complex>::factorial(d) *
                 poch_rising(p.z + Complex(i.up()), d);
  if (pref == Complex{0.0, 0.0}) return pref;
  return pref * gauss_2f1(-p.z - Complex(i.down()), -p.zp - Complex(i.down()),
                          d + 1, p.alpha * p.beta, tol);
}

Complex me_lower(HalfInt i, HalfInt j, const LadderParams& p, double tol) {
  int d = i - j;
  if (d < 0) throw std::logic_error("me_lower needs i >= j");
  Complex pref = pow_int(p.beta, d) / ScalarOps<Complex>::factorial(d) *
                 poch_rising(p.zp + Complex(j.up()), d);
  if (pref == Complex{0.0, 0.0}) return pref;
  return pref * gauss_2f1(-p.z - Complex(j.down()), -p.zp - Complex(j.down()),
                          d + 1, p.alpha * p.beta, tol);
}

Complex me(HalfInt i, HalfInt j, const LadderParams& p, double tol) {
  return i <= j ? me_upper(i, j, p, tol) : me_lower(i, j, p, tol);
}

Complex me_dual(HalfInt i, HalfInt j, const LadderParams& p, double tol) {
  if (i <= j) {
    int d = j - i;
    Complex pref = pow_int(-p.beta, d) / ScalarOps<Complex>::factorial(d) *
                   poch_rising(p.zp + Complex(i.up()), d);
    if (pref == Complex{0.0, 0.0}) return pref;
    return pref * gauss_2f1(p.z + Complex(j.up()), p.zp + Complex(j.up()), d + 1,
                            p.alpha * p.beta, tol);
  }
  int d = i - j;
  Complex pref = pow_int(-p.alpha, d) / ScalarOps<Complex>::factorial(d) *
                 poch_rising(p.z + Complex(j.up()), d);
  if (pref == Complex{0.0, 0.0}) return pref;
  return pref * gauss_2f1(p.z + Complex(i.up()), p.zp + Complex(i.up()), d + 1,
                          p.alpha * p.beta, tol);
}

Complex me_series(HalfInt i, HalfInt j, const LadderParams& p, int order) {
  if (order < 0) throw std::domain_error("me_series: negative order");
  Complex total{0.0, 0.0};
  // D^t first: each step k -> k-1 carries (z' + k - 1/2).
  Complex down_coef{1.0, 0.0};
  for (int t = 0; t <= order; ++t) {
    if (t > 0) {
      HalfInt k = i - (t - 1);
      down_coef *= p.beta / Complex(t) * (p.zp + Complex(k.down()));
    }
    int s = (j - i) + t;  // U^s must land on j
    if (s < 0 || s > order) continue;
    Complex up_coef{1.0, 0.0};
    for (int u = 1; u <= s; ++u) {
      HalfInt k = i - t + (u - 1);
      up_coef *= p.alpha / Complex(u) * (p.z + Complex(k.up()));
    }
    total += down_coef * up_coef;
  }
  return total;
}

Complex me_dual_series(HalfInt i, HalfInt j, const LadderParams& p, int order) {
  if (order < 0) throw std::domain_error("me_dual_series: negative order");
  Complex total{0.0, 0.0};
  // Dual ladders: D v*_k = -(z'+k+1/2) v*_{k+1}, U v*_k = -(z+k-1/2) v*_{k-1}.
  Complex down_coef{1.0, 0.0};
  for (int t = 0; t <= order; ++t) {
    if (t > 0) {
      HalfInt k = i + (t - 1);
      down_coef *= p.beta / Complex(t) * (-(p.zp + Complex(k.up())));
    }
    int s = (i - j) + t;
    if (s < 0 || s > order) continue;
    Complex up_coef{1.0, 0.0};
    for (int u = 1; u <= s; ++u) {
      HalfInt k = i + t - (u - 1);
      up_coef *= p.alpha / Complex(u) * (-(p.z + Complex(k.down())));
    }
    total += down_coef * up_coef;
  }
  return total;
}

ExactLadderME me_exact_upper(HalfInt i, HalfInt j, const ExactLadderParams& p,
                             int order) {
  int d = j - i;
  if (d < 0) throw std::logic_error("me_exact_upper needs i <= j");
  GaussianRational pref = pow_int(p.alpha, d) /
                          ScalarOps<GaussianRational>::factorial(d) *
                          poch_rising(p.z + GaussianRational(i.up()), d);
  if (pref.is_zero()) return {GaussianRational(0), GaussianRational(0)};
  Exact2F1 f =
      gauss_2f1_partial(-p.z - GaussianRational(i.down()),
                        -p.zp - GaussianRational(i.down()), d + 1,
                        p.alpha * p.beta, order);
  return {pref * f.value, pref * f.next_term};
}

ExactLadderME me_exact_lower(HalfInt i, HalfInt j, const ExactLadderParams& p,
                             int order) {
  int d = i - j;
  if (d < 0) throw std::logic_error("me_exact_lower needs i >= j");
  GaussianRational pref = pow_int(p.beta, d) /
                          ScalarOps<GaussianRational>::factorial(d) *
                          poch_rising(p.zp + GaussianRational(j.up()), d);
  if (pref.is_zero()) return {GaussianRational(0), GaussianRational(0)};
  Exact2F1 f =
      gauss_2f1_partial(-p.z - GaussianRational(j.down()),
                        -p.zp - GaussianRational(j.down()), d + 1,
                        p.alpha * p.beta, order);
  return {pref * f.value, pref * f.next_term};
}

ExactLadderME me_exact(HalfInt i, HalfInt j, const ExactLadderParams& p,
                       int order) {
  return i <= j ? me_exact_upper(i, j, p, order) : me_exact_lower(i, j, p, order);
}

Complex q_norm(HalfInt k, const SeriesClass& sc, Complex z, Complex zp) {
  if (sc.tag == Series::principal) return {1.0, 0.0};
  if (sc.tag != Series::complementary)
    throw std::domain_error("q_norm: no invariant form for generic parameters");
  // Walk the exact recurrence Q(v_{m+1})/Q(v_m) = (z'+m+1/2)/(z+m+1/2)
  // from the base point -1/2.
  Complex q{1.0, 0.0};
  if (k.twice > -1) {
    for (int m2 = -1; m2 < k.twice; m2 += 2) {
      HalfInt m(m2);
      q *= (zp + Complex(m.up())) / (z + Complex(m.up()));
    }
  } else {
    for (int m2 = -3; m2 >= k.twice; m2 -= 2) {
      HalfInt m(m2);
      q *= (z + Complex(m.up())) / (zp + Complex(m.up()));
    }
  }
  return q;
}

}  // namespace zm::sl2
