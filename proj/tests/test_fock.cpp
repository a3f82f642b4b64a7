#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zm/fock.hpp"
#include "zm/kerov.hpp"

using namespace zm;
using GR = GaussianRational;
using WV = fock::WedgeVector<GR>;

namespace {

std::vector<Partition> all_up_to(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m)
    for (const Partition& p : partitions_of(m)) out.push_back(p);
  return out;
}

kerov::PartitionVector<GR> as_partitions(const WV& w) {
  kerov::PartitionVector<GR> out;
  for (const auto& [state, c] : w.terms()) out.add(from_maya(state), c);
  return out;
}

}  // namespace

TEST_CASE("creation and annihilation on the vacuum") {
  WV vac = WV::unit(fock::vacuum());
  auto created = fock::psi(HalfInt(1), vac);
  REQUIRE(created.support_size() == 1);
  // no members above 1/2 in the vacuum: sign +1; result is the charge-1
  // state {1/2, -1/2, -3/2, ...}
  CHECK(created.coeff(MayaSet({1}, {})) == GR(1));

  CHECK(fock::psi(HalfInt(-1), vac).empty());  // -1/2 occupied
  auto removed = fock::psi_star(HalfInt(-1), vac);
  REQUIRE(removed.support_size() == 1);
  for (const auto& [s, c] : removed.terms()) {
    CHECK(c == GR(1));  // position 1, sign +1
    CHECK(s.charge() == -1);
  }
  CHECK(fock::psi_star(HalfInt(1), vac).empty());  // 1/2 unoccupied
}

TEST_CASE("anticommutation sign flips") {
  WV vac = WV::unit(fock::vacuum());
  auto ab = fock::psi(HalfInt(3), fock::psi(HalfInt(1), vac));
  auto ba = fock::psi(HalfInt(1), fock::psi(HalfInt(3), vac));
  CHECK(ab == ba.scaled(GR(-1)));
}

TEST_CASE("occupation numbers") {
  CHECK(fock::occupation(HalfInt(-1), fock::vacuum()) == 1);
  CHECK(fock::occupation(HalfInt(1), fock::vacuum()) == 0);
  CHECK(fock::occupation(HalfInt(3), maya(Partition({2, 1}))) == 1);
  // psi_k psi*_k delta_S = [k in S] delta_S
  for (const Partition& lam : all_up_to(6)) {
    WV v = WV::unit(maya(lam));
    for (int k2 = -9; k2 <= 9; k2 += 2) {
      HalfInt k(k2);
      auto proj = fock::psi(k, fock::psi_star(k, v));
      if (fock::occupation(k, maya(lam)))
        CHECK(proj == v);
      else
        CHECK(proj.empty());
    }
  }
}

TEST_CASE("canonical anticommutation relations on a window") {
  std::vector<MayaSet> states;
  for (const Partition& lam : all_up_to(4)) states.push_back(maya(lam));
  for (int k2 = -11; k2 <= 11; k2 += 2) {
    for (int l2 = -11; l2 <= 11; l2 += 2) {
      HalfInt k(k2), l(l2);
      for (const auto& s : states) {
        WV v = WV::unit(s);
        auto mixed =
            fock::psi(k, fock::psi_star(l, v)) + fock::psi_star(l, fock::psi(k, v));
        if (k == l)
          CHECK(mixed == v);
        else
          CHECK(mixed.empty());
        CHECK((fock::psi(k, fock::psi(l, v)) + fock::psi(l, fock::psi(k, v)))
                  .empty());
        CHECK((fock::psi_star(k, fock::psi_star(l, v)) +
               fock::psi_star(l, fock::psi_star(k, v)))
                  .empty());
      }
    }
  }
}

TEST_CASE("charge and energy eigenvalues") {
  CHECK(fock::charge(fock::vacuum()) == 0);
  CHECK(fock::energy_twice(fock::vacuum()) == 0);
  CHECK(fock::charge(maya(Partition({2, 1}))) == 0);
  CHECK(fock::energy_twice(maya(Partition({2, 1}))) == 6);  // H = 3
  MayaSet charged({1}, {});
  CHECK(fock::charge(charged) == 1);
  for (const Partition& lam : all_up_to(12))
    CHECK(fock::energy_twice(maya(lam)) == 2 * lam.size());
}

TEST_CASE("fermionic ladder operators on the vacuum") {
  GR z(2), zp(3);
  WV vac = WV::unit(fock::vacuum());
  auto u = fock::up(vac, z);
  REQUIRE(u.support_size() == 1);
  CHECK(u.coeff(maya(Partition({1}))) == z);
  CHECK(fock::down(vac, zp).empty());
}

TEST_CASE("zero-charge identification with the partition operators") {
  GR z(make_rational(5, 7)), zp(make_rational(-3, 2));
  kerov::KerovParams<GR> p{z, zp, 1};
  for (const Partition& lam : all_up_to(8)) {
    WV state = WV::unit(maya(lam));
    auto pv = kerov::PartitionVector<GR>::unit(lam);
    CHECK(as_partitions(fock::up(state, z)) == kerov::up(pv, p));
    CHECK(as_partitions(fock::down(state, zp)) == kerov::down(pv, p));
    CHECK(as_partitions(fock::level(state, z, zp)) == kerov::level(pv, p));
    // L eigenvalue zz' + 2|lambda|
    auto lv = fock::level(state, z, zp);
    CHECK(lv.coeff(maya(lam)) == z * zp + GR(2 * lam.size()));
    // charge preserved termwise
    auto raised = fock::up(state, z);
    auto lowered = fock::down(state, zp);
    for (const auto& [s, c] : raised.terms()) CHECK(s.charge() == 0);
    for (const auto& [s, c] : lowered.terms()) CHECK(s.charge() == 0);
  }
}

TEST_CASE("level as commutator of the bilinears") {
  GR z(2), zp(3);
  for (const Partition& lam : all_up_to(6)) {
    WV v = WV::unit(maya(lam));
    auto comm = fock::down(fock::up(v, z), zp) - fock::up(fock::down(v, zp), z);
    CHECK(comm == fock::level(v, z, zp));
  }
  // also on a charged state: L = 2H + (z+z')C + zz'
  MayaSet charged({1, 3}, {-1});  // charge +1
  WV v = WV::unit(charged);
  auto comm = fock::down(fock::up(v, z), zp) - fock::up(fock::down(v, zp), z);
  CHECK(comm == fock::level(v, z, zp));
}
