#pragma once

#include <string>
#include <vector>

#include "zm/scalar.hpp"

namespace zm::verify {

struct SuiteResult {
  std::string suite;
  bool passed = false;
  double max_error = 0;
  double threshold = 0;
  long cases = 0;
  std::string note;
};

/// [down,up]=level, [level,up]=2 up, [level,down]=-2 down, exactly, on
/// all partitions of size <= max_size, for each r (level := commutator
/// when r > 1).
SuiteResult commutators(int max_size, const std::vector<int>& rs);

/// Residue of the exponential commutation identity at the given
/// parameters; both sides truncated at size_cap, compared on components
/// of size <= size_cap / 2.
SuiteResult du_identity(Complex alpha, Complex beta, Complex z, Complex zp,
                        int size_cap, int component_cap, double threshold);

/// Exact normalization sum over |lambda| = n equals 1 for all n <= max_n
/// at (2,3), (1/2,5/2) and (1+2i,1-2i).
SuiteResult normalization(int max_n);

/// Fermionic bilinears agree exactly with the partition operators under
/// delta_lambda <-> delta_S(lambda) for |lambda| <= max_size, and the
/// canonical anticommutation relations hold on a mode window.
SuiteResult fock_identification(int max_size, int car_window);

/// Shift identity me(i,j; z+1,z'+1) = me(i-1,j-1; z,z') over a grid.
SuiteResult periodicity(double threshold);

/// Q(up u, v) = Q(u, down v) for the diagonal invariant form on
/// windowed vectors, complementary-series parameters.
SuiteResult q_form(double threshold);

/// The rim-hook operator coefficient equals, up to the strip sign, the
/// single-box coefficient on the r-quotient with component parameters
/// (z - 1/2 + c/r, z' - 1/2 + c/r). Exact arithmetic.
SuiteResult rimhook_factorization(int max_size, const std::vector<int>& rs);

/// Every suite at its default parameters, in a fixed order.
std::vector<SuiteResult> run_all();

}  // namespace zm::verify
