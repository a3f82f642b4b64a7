#pragma once

#include <optional>
#include <utility>

#include "zm/combo.hpp"
#include "zm/partition.hpp"

namespace zm::fock {

/// Basis state of the truncated infinite wedge: the Maya set S with the
/// implicit vector v_{s_1} ^ v_{s_2} ^ ... over its descending
/// enumeration. The deviation representation keeps states canonical and
/// every operation below exact; no window can ever be too small.
using FermionState = MayaSet;

template <class S>
using WedgeVector = LinearCombo<FermionState, S>;

inline FermionState vacuum() { return MayaSet{}; }

/// Occupation number of mode k: 1 if k is in S, else 0. Equals the
/// eigenvalue of psi_k psi*_k on the state.
inline int occupation(HalfInt k, const FermionState& s) {
  return s.contains(k) ? 1 : 0;
}

inline int charge(const FermionState& s) { return s.charge(); }
/// Energy eigenvalue as an exact half-integer pair (numerator over 2);
/// equals |lambda| on charge-zero states.
inline long energy_twice(const FermionState& s) { return s.energy_twice(); }

namespace detail {

inline FermionState with_mode_added(const FermionState& s, HalfInt k) {
  std::vector<int> plus = s.plus();
  std::vector<int> minus = s.minus();
  if (k.twice > 0) {
    plus.push_back(k.twice);
  } else {
    minus.erase(std::find(minus.begin(), minus.end(), k.twice));
  }
  return MayaSet(std::move(plus), std::move(minus));
}

inline FermionState with_mode_removed(const FermionState& s, HalfInt k) {
  std::vector<int> plus = s.plus();
  std::vector<int> minus = s.minus();
  if (k.twice > 0) {
    plus.erase(std::find(plus.begin(), plus.end(), k.twice));
  } else {
    minus.push_back(k.twice);
  }
  return MayaSet(std::move(plus), std::move(minus));
}

}  // namespace detail

/// Creation operator: exterior multiplication by v_k. Kills states
/// already containing k; otherwise inserts k with sign (-1)^{#(members > k)}.
template <class S>
WedgeVector<S> psi(HalfInt k, const WedgeVector<S>& v) {
  WedgeVector<S> out;
  for (const auto& [state, c] : v.terms()) {
    if (state.contains(k)) continue;
    int sign = state.count_above(k) % 2 ? -1 : 1;
    out.add(detail::with_mode_added(state, k), c * ScalarOps<S>::from_int(sign));
  }
  return out;
}

/// Annihilation operator, adjoint of psi: kills states not containing k;
/// otherwise removes k = s_i with sign (-1)^{i+1}.
template <class S>
WedgeVector<S> psi_star(HalfInt k, const WedgeVector<S>& v) {
  WedgeVector<S> out;
  for (const auto& [state, c] : v.terms()) {
    if (!state.contains(k)) continue;
    // position i = count_above + 1, so (-1)^{i+1} = (-1)^{count_above}
    int sign = state.count_above(k) % 2 ? -1 : 1;
    out.add(detail::with_mode_removed(state, k),
            c * ScalarOps<S>::from_int(sign));
  }
  return out;
}

namespace detail {

// Modes where the occupancy pattern (k occupied, k+1 vacant) or its
// mirror can hold: everything between just below the deepest deviation
// and just above the highest one.
inline std::pair<int, int> hop_window(const FermionState& s) {
  int lo = (s.minus().empty() ? -1 : s.minus().front()) - 2;
  int hi = (s.plus().empty() ? -1 : s.plus().back()) + 2;
  return {lo, hi};
}

}  // namespace detail

/// The raising operator as the fermionic bilinear
/// sum_k (z + k + 1/2) psi_{k+1} psi*_k; only finitely many k act on any
/// basis state.
template <class S>
WedgeVector<S> up(const WedgeVector<S>& v, const S& z) {
  WedgeVector<S> out;
  for (const auto& [state, c] : v.terms()) {
    auto [lo, hi] = detail::hop_window(state);
    for (int k2 = lo; k2 <= hi; k2 += 2) {
      HalfInt k(k2);
      if (!state.contains(k) || state.contains(k + 1)) continue;
      WedgeVector<S> one(state, c * (z + ScalarOps<S>::from_int(k.up())));
      out += psi(k + 1, psi_star(k, one));
    }
  }
  return out;
}

/// The lowering operator sum_k (z' + k + 1/2) psi_k psi*_{k+1}.
template <class S>
WedgeVector<S> down(const WedgeVector<S>& v, const S& zp) {
  WedgeVector<S> out;
  for (const auto& [state, c] : v.terms()) {
    auto [lo, hi] = detail::hop_window(state);
    for (int k2 = lo; k2 <= hi; k2 += 2) {
      HalfInt k(k2);
      if (!state.contains(k + 1) || state.contains(k)) continue;
      WedgeVector<S> one(state, c * (zp + ScalarOps<S>::from_int(k.up())));
      out += psi(k, psi_star(k + 1, one));
    }
  }
  return out;
}

/// The neutral operator L = 2H + (z+z')C + zz', diagonal on basis states.
template <class S>
WedgeVector<S> level(const WedgeVector<S>& v, const S& z, const S& zp) {
  WedgeVector<S> out;
  for (const auto& [state, c] : v.terms()) {
    S eig = ScalarOps<S>::from_int(state.energy_twice())  // 2H
            + (z + zp) * ScalarOps<S>::from_int(state.charge()) + z * zp;
    out.add(state, c * eig);
  }
  return out;
}

}  // namespace zm::fock
