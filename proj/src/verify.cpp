#include "zm/verify.hpp"

#include <cmath>
#include <map>

#include "zm/fock.hpp"
#include "zm/kerov.hpp"
#include "zm/measure.hpp"
#include "zm/sl2me.hpp"

namespace zm::verify {

namespace {

using GR = GaussianRational;
using kerov::KerovParams;
using kerov::PartitionVector;

std::vector<Partition> all_up_to(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m)
    for (const Partition& p : partitions_of(m)) out.push_back(p);
  return out;
}

double combo_norm(const PartitionVector<GR>& v) { return v.max_abs(); }

}  // namespace

SuiteResult commutators(int max_size, const std::vector<int>& rs) {
  SuiteResult res{"commutators", true, 0, 0, 0,
                  "exact residues of [D,U]-L, [L,U]-2U, [L,D]+2D"};
  KerovParams<GR> base{GR(2), GR(3), 1};
  for (int r : rs) {
    KerovParams<GR> p = base;
    p.r = r;
    for (const Partition& lam : all_up_to(max_size)) {
      auto v = PartitionVector<GR>::unit(lam);
      auto du = kerov::down(kerov::up(v, p), p) - kerov::up(kerov::down(v, p), p);
      auto lu = kerov::level(kerov::up(v, p), p) - kerov::up(kerov::level(v, p), p);
      auto ld =
          kerov::level(kerov::down(v, p), p) - kerov::down(kerov::level(v, p), p);
      auto r1 = du - kerov::level(v, p);
      auto r2 = lu - kerov::up(v, p).scaled(GR(2));
      auto r3 = ld + kerov::down(v, p).scaled(GR(2));
      double err = std::max({combo_norm(r1), combo_norm(r2), combo_norm(r3)});
      res.max_error = std::max(res.max_error, err);
      if (err != 0) res.passed = false;
      ++res.cases;
    }
  }
  return res;
}

SuiteResult du_identity(Complex alpha, Complex beta, Complex z, Complex zp,
                        int size_cap, int component_cap, double threshold) {
  kerov::DuReport rep =
      kerov::verify_du(alpha, beta, z, zp, size_cap, component_cap);
  SuiteResult res{"du_identity", rep.max_residue <= threshold, rep.max_residue,
                  threshold, rep.cases,
                  "components of size <= " + std::to_string(rep.component_cap)};
  return res;
}

SuiteResult normalization(int max_n) {
  SuiteResult res{"normalization", true, 0, 0, 0,
                  "exact sum over |lambda|=n equals 1"};
  std::vector<measure::ExactParams> params = {
      {GR(2), GR(3)},
      {GR(make_rational(1, 2)), GR(make_rational(5, 2))},
      {GR(Rational(1), Rational(2)), GR(Rational(1), Rational(-2))},
  };
  for (const auto& p : params) {
    for (int n = 0; n <= max_n; ++n) {
      if (!(measure::normalization_sum(n, p) == GR(1))) res.passed = false;
      ++res.cases;
    }
  }
  return res;
}

SuiteResult fock_identification(int max_size, int car_window) {
  SuiteResult res{"fock_identification", true, 0, 0, 0,
                  "wedge bilinears match partition operators; CAR relations"};
  GR z(make_rational(5, 7)), zp(make_rational(-3, 2));
  KerovParams<GR> p{z, zp, 1};

  auto to_partition_vector = [](const fock::WedgeVector<GR>& w) {
    PartitionVector<GR> out;
    for (const auto& [state, c] : w.terms()) out.add(from_maya(state), c);
    return out;
  };

  for (const Partition& lam : all_up_to(max_size)) {
    fock::WedgeVector<GR> state = fock::WedgeVector<GR>::unit(maya(lam));
    auto pv = PartitionVector<GR>::unit(lam);

    auto fu = to_partition_vector(fock::up(state, z));
    auto fd = to_partition_vector(fock::down(state, zp));
    auto fl = to_partition_vector(fock::level(state, z, zp));
    double err = std::max({combo_norm(fu - kerov::up(pv, p)),
                           combo_norm(fd - kerov::down(pv, p)),
                           combo_norm(fl - kerov::level(pv, p))});
    res.max_error = std::max(res.max_error, err);
    if (err != 0) res.passed = false;

    // charge conservation and energy eigenvalue
    auto raised = fock::up(state, z);
    for (const auto& [s, c] : raised.terms())
      if (s.charge() != 0) res.passed = false;
    if (maya(lam).energy_twice() != 2 * lam.size()) res.passed = false;
    ++res.cases;
  }

  // CAR on basis states drawn from small partitions, over a mode window.
  std::vector<fock::FermionState> states;
  for (const Partition& lam : all_up_to(4)) states.push_back(maya(lam));
  for (int k2 = -car_window + 1; k2 < car_window; k2 += 2) {
    for (int l2 = -car_window + 1; l2 < car_window; l2 += 2) {
      HalfInt k(k2), l(l2);
      for (const auto& s : states) {
        auto v = fock::WedgeVector<GR>::unit(s);
        auto anti1 = fock::psi(k, fock::psi_star(l, v)) +
                     fock::psi_star(l, fock::psi(k, v));
        auto anti2 = fock::psi(k, fock::psi(l, v)) + fock::psi(l, fock::psi(k, v));
        auto anti3 = fock::psi_star(k, fock::psi_star(l, v)) +
                     fock::psi_star(l, fock::psi_star(k, v));
        bool ok1 = (k == l) ? (anti1 == v) : anti1.empty();
        if (!ok1 || !anti2.empty() || !anti3.empty()) res.passed = false;
        ++res.cases;
      }
    }
  }
  return res;
}

SuiteResult periodicity(double threshold) {
  // Shifting (z,z') by +1 renumbers the weight basis downward:
  // v_k in the shifted module acts like v_{k+1} in the original, so
  // me(i,j; z+1,z'+1) = me(i+1,j+1; z,z').
  SuiteResult res{"periodicity", true, 0, threshold, 0,
                  "me(i,j; z+1,z'+1) = me(i+1,j+1; z,z')"};
  const double tol = 1e-14;
  std::vector<std::pair<Complex, Complex>> zs = {
      {Complex(0.3), Complex(0.7)}, {Complex(1, 2), Complex(1, -2)}};
  std::vector<std::pair<Complex, Complex>> abs_ = {
      {Complex(0.25), Complex(0.25)}, {Complex(-0.35), Complex(0.4)}};
  for (const auto& [z, zp] : zs) {
    for (const auto& [a, b] : abs_) {
      sl2::LadderParams base{z, zp, a, b};
      sl2::LadderParams shifted{z + Complex(1), zp + Complex(1), a, b};
      for (int i2 = -7; i2 <= 7; i2 += 2) {
        for (int j2 = -7; j2 <= 7; j2 += 2) {
          HalfInt i(i2), j(j2);
          Complex lhs = sl2::me(i, j, shifted, tol);
          Complex rhs = sl2::me(i + 1, j + 1, base, tol);
          res.max_error = std::max(res.max_error, std::abs(lhs - rhs));
          ++res.cases;
        }
      }
    }
  }
  res.passed = res.max_error <= threshold;
  return res;
}

SuiteResult q_form(double threshold) {
  SuiteResult res{"q_form", true, 0, threshold, 0,
                  "Q(U u, v) = Q(u, D v), complementary series"};
  Complex z(0.3), zp(0.7);
  sl2::SeriesClass sc = sl2::SeriesClass::classify(z, zp);
  const int lo = -9, hi = 9;  // twice-values of the window

  // Windowed weight-module vectors: twice-value -> coefficient.
  using Vec = std::map<int, Complex>;
  auto apply_up = [&](const Vec& u) {
    Vec out;
    for (const auto& [k2, c] : u) {
      HalfInt k(k2);
      out[k2 + 2] += c * (z + Complex(k.up()));
    }
    return out;
  };
  auto apply_down = [&](const Vec& u) {
    Vec out;
    for (const auto& [k2, c] : u) {
      HalfInt k(k2);
      out[k2 - 2] += c * (zp + Complex(k.down()));
    }
    return out;
  };
  auto form = [&](const Vec& u, const Vec& v) {
    Complex s{0, 0};
    for (const auto& [k2, c] : u) {
      auto it = v.find(k2);
      if (it == v.end()) continue;
      s += c * std::conj(it->second) * sl2::q_norm(HalfInt(k2), sc, z, zp);
    }
    return s;
  };

  // Deterministic pseudo-random coefficients.
  auto coeffs = [&](unsigned seed) {
    Vec u;
    unsigned state = seed;
    for (int k2 = lo; k2 <= hi; k2 += 2) {
      state = state * 1664525u + 1013904223u;
      u[k2] = Complex((state % 1000) / 500.0 - 1.0,
                      ((state / 1000) % 1000) / 500.0 - 1.0);
    }
    return u;
  };

  for (unsigned trial = 1; trial <= 8; ++trial) {
    Vec u = coeffs(trial), v = coeffs(100 + trial);
    Complex lhs = form(apply_up(u), v);
    Complex rhs = form(u, apply_down(v));
    res.max_error = std::max(res.max_error, std::abs(lhs - rhs));
    ++res.cases;
  }
  res.passed = res.max_error <= threshold;
  return res;
}

SuiteResult rimhook_factorization(int max_size, const std::vector<int>& rs) {
  SuiteResult res{"rimhook_factorization", true, 0, 0, 0,
                  "U_r coefficient = quotient single-box coefficient, exact"};
  GR z(make_rational(5, 7)), zp(make_rational(-3, 2));
  for (int r : rs) {
    for (const Partition& lam : all_up_to(max_size)) {
      CoreQuotient before = core_quotient(lam, r);
      for (const RimHook& h : addable_rim_hooks(lam, r)) {
        CoreQuotient after = core_quotient(h.target, r);
        if (!(after.core == before.core) || after.charges != before.charges) {
          res.passed = false;
          continue;
        }
        // Exactly one quotient component gains exactly one box.
        int changed = -1, n_changed = 0;
        for (int c = 0; c < r; ++c)
          if (!(after.quotients[c] == before.quotients[c])) {
            changed = c;
            ++n_changed;
          }
        if (n_changed != 1 ||
            after.quotients[changed].size() != before.quotients[changed].size() + 1) {
          res.passed = false;
          continue;
        }
        int box_content = 0;
        for (int i = 1; i <= after.quotients[changed].rows(); ++i)
          if (after.quotients[changed].part(i) != before.quotients[changed].part(i))
            box_content = after.quotients[changed].part(i) - i;
        // component parameters z - 1/2 + c/r with c = changed + 1/2
        int c2 = 2 * changed + 1;
        GR zc = z + GR(make_rational(c2 - r, 2 * r));
        GR expected = zc + GR(box_content);
        if (h.height % 2 == 0) expected = GR(-1) * expected;
        GR actual = kerov::hook_coefficient(z, h);
        if (!(actual == expected)) {
          res.passed = false;
          res.max_error =
              std::max(res.max_error,
                       ScalarOps<GR>::abs_approx(actual - expected));
        }
        ++res.cases;
      }
    }
  }
  return res;
}

std::vector<SuiteResult> run_all() {
  std::vector<SuiteResult> out;
  out.push_back(commutators(8, {1, 2, 3}));
  out.push_back(du_identity(Complex(0.25), Complex(0.25), Complex(2), Complex(3),
                            24, 6, 1e-10));
  out.push_back(normalization(12));
  out.push_back(fock_identification(8, 12));
  out.push_back(periodicity(1e-12));
  out.push_back(q_form(1e-12));
  out.push_back(rimhook_factorization(8, {2, 3}));
  return out;
}

}  // namespace zm::verify
