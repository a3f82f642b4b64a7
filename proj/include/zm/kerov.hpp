#pragma once

#include <stdexcept>

#include "zm/combo.hpp"
#include "zm/partition.hpp"
#include "zm/sl2me.hpp"

namespace zm::kerov {

template <class S>
using PartitionVector = LinearCombo<Partition, S>;

/// Parameters of the raising/lowering operators; r = 1 gives the
/// classical single-box operators, r > 1 the rim-hook operators.
template <class S>
struct KerovParams {
  S z;
  S zp;
  int r = 1;
};

/// Weight carried by one rim hook move: z (or z') + content_sum / r^2,
/// with the fermionic sign (-1)^{height+1}.
template <class S>
S hook_coefficient(const S& base, const RimHook& h) {
  S c = base + ScalarOps<S>::from_ratio(h.content_sum, h.length * h.length);
  return (h.height % 2 == 0) ? ScalarOps<S>::from_int(-1) * c : c;
}

/// Raising operator: adds one rim hook of length r to every term.
/// For r = 1 this is the classical U with coefficient z + content.
template <class S>
PartitionVector<S> up(const PartitionVector<S>& v, const KerovParams<S>& p) {
  PartitionVector<S> out;
  for (const auto& [lam, c] : v.terms())
    for (const RimHook& h : addable_rim_hooks(lam, p.r))
      out.add(h.target, c * hook_coefficient(p.z, h));
  return out;
}

/// Lowering operator: removes one rim hook of length r from every term;
/// annihilates the vacuum.
template <class S>
PartitionVector<S> down(const PartitionVector<S>& v, const KerovParams<S>& p) {
  PartitionVector<S> out;
  for (const auto& [lam, c] : v.terms())
    for (const RimHook& h : removable_rim_hooks(lam, p.r))
      out.add(h.target, c * hook_coefficient(p.zp, h));
  return out;
}

/// Neutral operator. Diagonal with eigenvalue zz' + 2|lambda| for r = 1;
/// defined as the commutator [down, up] for r > 1.
template <class S>
PartitionVector<S> level(const PartitionVector<S>& v, const KerovParams<S>& p) {
  if (p.r == 1) {
    PartitionVector<S> out;
    for (const auto& [lam, c] : v.terms())
      out.add(lam, c * (p.z * p.zp + ScalarOps<S>::from_int(2 * lam.size())));
    return out;
  }
  return down(up(v, p), p) - up(down(v, p), p);
}

enum class Ladder { up, down };

/// Truncated exponential e^{coeff * gen} applied to v.
///
/// The down series is an exact finite sum (the operator is locally
/// nilpotent). The up series is truncated to components of size <=
/// size_cap; since each application strictly raises size, the retained
/// components are exact, not approximations.
template <class S>
PartitionVector<S> exp_apply(Ladder gen, const S& coeff,
                             const PartitionVector<S>& v,
                             const KerovParams<S>& p, int size_cap) {
  for (const auto& [lam, c] : v.terms())
    if (gen == Ladder::up && lam.size() > size_cap)
      throw std::invalid_argument("exp_apply: size_cap below input support");
  PartitionVector<S> acc = v;
  PartitionVector<S> term = v;
  for (int m = 1; !term.empty(); ++m) {
    term = (gen == Ladder::up) ? up(term, p) : down(term, p);
    term = term.scaled(coeff / ScalarOps<S>::from_int(m));
    if (gen == Ladder::up) {
      PartitionVector<S> kept;
      for (const auto& [lam, c] : term.terms())
        if (lam.size() <= size_cap) kept.add(lam, c);
      term = kept;
    }
    acc += term;
  }
  return acc;
}

/// (U^n delta_empty, delta_lambda)(D^n delta_lambda, delta_empty)
/// / (n! (zz')_n) with n = |lambda| — the z-measure of lambda expressed
/// through operator matrix elements. Throws when (zz')_n vanishes.
template <class S>
S transition_weight(const Partition& lam, const KerovParams<S>& p) {
  if (p.r != 1)
    throw std::invalid_argument("transition_weight is a single-box quantity");
  int n = lam.size();
  S poch = sl2::poch_rising(p.z * p.zp, n);
  if (ScalarOps<S>::is_zero(poch))
    throw std::domain_error("transition_weight: (zz')_n vanishes");
  PartitionVector<S> up_vec = PartitionVector<S>::unit(Partition{});
  for (int m = 0; m < n; ++m) up_vec = up(up_vec, p);
  PartitionVector<S> down_vec = PartitionVector<S>::unit(lam);
  for (int m = 0; m < n; ++m) down_vec = down(down_vec, p);
  S num = up_vec.coeff(lam) * down_vec.coeff(Partition{});
  return num / (ScalarOps<S>::factorial(n) * poch);
}

/// Residue report of the commutation identity
/// e^{beta D} e^{alpha U} = e^{alpha/(1-ab) U} (1-ab)^{-L} e^{beta/(1-ab) D}
/// applied to every delta_lambda with |lambda| <= component_cap; both
/// sides are expanded with the series truncated at size_cap and compared
/// on components of size <= component_cap. The residue on retained
/// components decays like |alpha beta|^(size_cap - component_cap) times
/// the ladder-coefficient growth, so the truncation cap needs headroom
/// over the comparison cap (see the component_cap = size_cap/2 overload).
struct DuReport {
  double max_residue = 0;
  int size_cap = 0;
  int component_cap = 0;
  int cases = 0;
};
DuReport verify_du(Complex alpha, Complex beta, Complex z, Complex zp,
                   int size_cap, int component_cap);
inline DuReport verify_du(Complex alpha, Complex beta, Complex z, Complex zp,
                          int size_cap) {
  return verify_du(alpha, beta, z, zp, size_cap, size_cap / 2);
}

}  // namespace zm::kerov
