#pragma once

#include "zm/halfint.hpp"
#include "zm/scalar.hpp"

namespace zm::sl2 {

/// Rising factorial x(x+1)...(x+n-1); empty product for n = 0.
template <class S>
S poch_rising(const S& x, int n) {
  S acc = ScalarOps<S>::from_int(1);
  for (int k = 0; k < n; ++k) acc = acc * (x + ScalarOps<S>::from_int(k));
  return acc;
}

/// Falling factorial a(a-1)...(a-s+1); empty product for s = 0.
template <class S>
S poch_falling(const S& a, int s) {
  S acc = ScalarOps<S>::from_int(1);
  for (int k = 0; k < s; ++k) acc = acc * (a - ScalarOps<S>::from_int(k));
  return acc;
}

/// Positivity regime of the parameter pair (z, z').
enum class Series { principal, complementary, generic };

struct SeriesClass {
  Series tag = Series::generic;
  int interval = 0;  // complementary: z, z' in (interval, interval+1)

  static SeriesClass classify(Complex z, Complex zp);
  const char* name() const {
    switch (tag) {
      case Series::principal: return "principal";
      case Series::complementary: return "complementary";
      default: return "generic";
    }
  }
};

/// Gauss hypergeometric 2F1(a, b; c; x) with positive integer c.
///
/// Arguments with negative real part are mapped into the unit disk by the
/// Pfaff transformation F(a,b;c;x) = (1-x)^{-a} F(a, c-b; c; x/(x-1)); the
/// raw series is used otherwise and rejected when |x| >= 1. The series
/// stops once three consecutive terms fall below tol * |partial sum|
/// (zero terms from negative-integer parameters would fool a single-term
/// rule).
Complex gauss_2f1(Complex a, Complex b, int c, Complex x, double tol);

/// Exact-mode partial sum of 2F1 up to `order` terms, with the first
/// omitted term as a crude error indicator. No argument transformation is
/// applied: the caller owns convergence. Terminating series (a or b a
/// non-positive integer) are detected and the indicator is exactly zero.
struct Exact2F1 {
  GaussianRational value;
  GaussianRational next_term;
};
Exact2F1 gauss_2f1_partial(const GaussianRational& a, const GaussianRational& b,
                           int c, const GaussianRational& x, int order);

/// Parameters of the weight-basis module: ladder coefficients use z and
/// z', exponential coefficients alpha (up) and beta (down).
template <class S>
struct LadderParamsT {
  S z;
  S zp;
  S alpha;
  S beta;
};
using LadderParams = LadderParamsT<Complex>;
using ExactLadderParams = LadderParamsT<GaussianRational>;

/// Coefficient of v_j in e^{alpha U} e^{beta D} v_i.
Complex me(HalfInt i, HalfInt j, const LadderParams& p, double tol);
/// Coefficient of v*_j in e^{alpha U} e^{beta D} v*_i (dual module).
Complex me_dual(HalfInt i, HalfInt j, const LadderParams& p, double tol);

/// The two closed-form branches of `me`, each valid on its half of the
/// index range and both defined at i = j. Exposed so tests can check that
/// they coincide there.
Complex me_upper(HalfInt i, HalfInt j, const LadderParams& p, double tol);
Complex me_lower(HalfInt i, HalfInt j, const LadderParams& p, double tol);

/// Independent oracle: the truncated double series
/// sum_{s,t <= order} (alpha^s U^s / s!)(beta^t D^t / t!) v_i, computed
/// from the raw ladder actions step by step. Converges to `me` as the
/// order grows; exact equality once both series terminate.
Complex me_series(HalfInt i, HalfInt j, const LadderParams& p, int order);
/// Same for the dual module.
Complex me_dual_series(HalfInt i, HalfInt j, const LadderParams& p, int order);

/// Exact-mode matrix element: rational prefactor times the order-term
/// partial sum of the hypergeometric factor, with the first omitted term
/// scaled by the prefactor as the truncation indicator. Exact (zero
/// indicator) whenever the series terminates.
struct ExactLadderME {
  GaussianRational value;
  GaussianRational next_term;
};
ExactLadderME me_exact(HalfInt i, HalfInt j, const ExactLadderParams& p,
                       int order);
/// Branch forms of me_exact, both defined at i = j.
ExactLadderME me_exact_upper(HalfInt i, HalfInt j, const ExactLadderParams& p,
                             int order);
ExactLadderME me_exact_lower(HalfInt i, HalfInt j, const ExactLadderParams& p,
                             int order);

/// Diagonal of the invariant Hermitian form Q on the weight basis,
/// normalized to Q(v_{-1/2}, v_{-1/2}) = 1 (only ratios are meaningful;
/// the ratio Q(v_{k+1})/Q(v_k) = (z'+k+1/2)/(z+k+1/2) is computed as an
/// exact finite product, never through a gamma function). Principal
/// series: identically 1. Generic parameters are rejected.
Complex q_norm(HalfInt k, const SeriesClass& sc, Complex z, Complex zp);

}  // namespace zm::sl2
