#pragma once

#include <vector>

#include "zm/halfint.hpp"
#include "zm/measure.hpp"
#include "zm/scalar.hpp"
#include "zm/sl2me.hpp"

namespace zm::kernel {

/// Kernel parameterization: the ladder exponentials are specialized at
/// alpha = sqrt(xi)/(xi-1), beta = sqrt(xi), so alpha*beta = xi/(xi-1)
/// is negative and the hypergeometric argument is pushed back into
/// [0, 1) by the Pfaff transform inside gauss_2f1. r > 1 selects the
/// rim-hook kernel.
struct KernelSpec {
  Complex z;
  Complex zp;
  double xi = 0.0;
  int r = 1;

  Complex alpha() const { return Complex(std::sqrt(xi) / (xi - 1.0)); }
  Complex beta() const { return Complex(std::sqrt(xi)); }
  sl2::LadderParams ladder() const { return {z, zp, alpha(), beta()}; }
};

/// K(i,j) as the mode sum over m = -1/2, -3/2, ...:
/// sum_m me<i,m> me_dual<j,m>. Valid on the diagonal; this is the
/// diagonal's definition of record. Terms decay geometrically (ratio xi)
/// and the sum stops after three consecutive relatively-small terms.
Complex eval_series(HalfInt i, HalfInt j, const KernelSpec& ks, double tol);

/// K(i,j) in closed form:
/// (beta z' me<i,1/2> me_dual<j,-1/2>
///   - alpha(alpha beta - 1) z me<i,-1/2> me_dual<j,1/2>) / (i-j).
/// On the diagonal the quotient is 0/0 and the series definition is
/// used instead.
Complex eval_closed(HalfInt i, HalfInt j, const KernelSpec& ks, double tol);

/// Kernel entry with the r-block structure: zero across residue classes
/// mod r; within a class, the classical kernel at re-indexed arguments
/// t = (k-c)/r + 1/2 and shifted parameters (z-1/2+c/r, z'-1/2+c/r).
/// For r = 1 this is eval_closed (series on the diagonal).
Complex eval(HalfInt i, HalfInt j, const KernelSpec& ks, double tol);

struct KernelMatrix {
  std::vector<HalfInt> points;
  std::vector<std::vector<Complex>> entries;
};
KernelMatrix build_matrix(const std::vector<HalfInt>& X, const KernelSpec& ks,
                          double tol);

/// Determinant by LU with partial pivoting; pivot_ratio = max/min pivot
/// magnitude is a cheap conditioning report. Empty matrix has
/// determinant 1.
struct DetResult {
  Complex value{1.0, 0.0};
  double pivot_ratio = 1.0;
};
DetResult determinant(const KernelMatrix& m);

/// rho(X) = det[K(x_i, x_j)] over a finite point set, |X| <= 12.
DetResult correlation_det(const std::vector<HalfInt>& X, const KernelSpec& ks,
                          double tol);

/// Brute-force rim-hook correlation: normalized sum of
/// W_r(lambda) = (e^{sqrt(xi) U_r} delta_empty, delta_lambda)
///             * (e^{sqrt(xi) D_r} delta_lambda, delta_empty)
/// over |lambda| <= N, together with the truncated partition function
/// and its predicted closed form prod_c (1-xi)^{-(z-1/2+c/r)(z'-1/2+c/r)}.
struct RimhookBrute {
  Complex rho{0.0, 0.0};       // correlation normalized by z_truncated
  Complex z_truncated{0.0, 0.0};
  Complex z_predicted{0.0, 0.0};
  measure::TailBound tail;     // tail of the product mixture series
};
RimhookBrute rimhook_brute(const std::vector<HalfInt>& X, const KernelSpec& ks,
                           int N);

}  // namespace zm::kernel
