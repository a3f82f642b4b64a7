#include "zm/kerov.hpp"

namespace zm::kerov {

namespace {

// (1-ab)^{-L}: diagonal scaling by (1-ab)^{-(zz'+2|lambda|)}.
PartitionVector<Complex> neg_level_power(const PartitionVector<Complex>& v,
                                         Complex base, Complex z, Complex zp) {
  PartitionVector<Complex> out;
  for (const auto& [lam, c] : v.terms())
    out.add(lam, c * std::pow(base, -(z * zp + Complex(2 * lam.size()))));
  return out;
}

}  // namespace

DuReport verify_du(Complex alpha, Complex beta, Complex z, Complex zp,
                   int size_cap, int component_cap) {
  if (std::abs(alpha * beta) >= 1.0)
    throw std::domain_error("verify_du: needs |alpha beta| < 1");
  if (component_cap > size_cap)
    throw std::invalid_argument("verify_du: component cap above size cap");
  Complex ab1 = Complex(1) - alpha * beta;
  KerovParams<Complex> p{z, zp, 1};
  DuReport rep;
  rep.size_cap = size_cap;
  rep.component_cap = component_cap;
  for (int n = 0; n <= component_cap; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      auto unit = PartitionVector<Complex>::unit(lam);
      auto lhs = exp_apply(Ladder::down, beta,
                           exp_apply(Ladder::up, alpha, unit, p, size_cap), p,
                           size_cap);
      auto rhs = exp_apply(
          Ladder::up, alpha / ab1,
          neg_level_power(
              exp_apply(Ladder::down, beta / ab1, unit, p, size_cap), ab1, z, zp),
          p, size_cap);
      auto diff = lhs - rhs;
      for (const auto& [mu, c] : diff.terms()) {
        if (mu.size() > rep.component_cap) continue;
        rep.max_residue = std::max(rep.max_residue, std::abs(c));
      }
      ++rep.cases;
    }
  }
  return rep;
}

}  // namespace zm::kerov
