#pragma once

#include <map>

#include "zm/scalar.hpp"

namespace zm {

/// Finite-support linear combination of basis keys with scalar
/// coefficients. Coefficients that become exactly zero are dropped, so
/// exact-mode vectors stay canonical. Immutable-style usage: operators
/// return fresh values.
template <class Key, class S>
class LinearCombo {
 public:
  using Ops = ScalarOps<S>;

  LinearCombo() = default;
  LinearCombo(const Key& k, const S& coeff) { add(k, coeff); }

  static LinearCombo unit(const Key& k) {
    return LinearCombo(k, Ops::from_int(1));
  }

  void add(const Key& k, const S& coeff) {
    if (Ops::is_zero(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(k, coeff);
    if (!inserted) {
      it->second = it->second + coeff;
      if (Ops::is_zero(it->second)) terms_.erase(it);
    }
  }

  const std::map<Key, S>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t support_size() const { return terms_.size(); }

  S coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Ops::from_int(0) : it->second;
  }

  LinearCombo& operator+=(const LinearCombo& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinearCombo& operator-=(const LinearCombo& o) {
    for (const auto& [k, c] : o.terms_) add(k, Ops::from_int(-1) * c);
    return *this;
  }
  friend LinearCombo operator+(LinearCombo a, const LinearCombo& b) { return a += b; }
  friend LinearCombo operator-(LinearCombo a, const LinearCombo& b) { return a -= b; }

  LinearCombo scaled(const S& c) const {
    LinearCombo out;
    if (Ops::is_zero(c)) return out;
    for (const auto& [k, v] : terms_) out.add(k, v * c);
    return out;
  }

  /// Largest coefficient magnitude (0 for the zero vector).
  double max_abs() const {
    double m = 0;
    for (const auto& [k, v] : terms_) m = std::max(m, Ops::abs_approx(v));
    return m;
  }

  bool operator==(const LinearCombo& o) const { return terms_ == o.terms_; }

 private:
  std::map<Key, S> terms_;
};

}  // namespace zm
