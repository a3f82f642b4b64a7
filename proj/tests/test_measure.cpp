#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "zm/kerov.hpp"
#include "zm/measure.hpp"
#include "zm/stats.hpp"

using namespace zm;
using namespace zm::measure;
using GR = GaussianRational;

namespace {
const ExactParams kExact{GR(2), GR(3)};
}

TEST_CASE("z-measure exact values") {
  CHECK(z_measure(Partition{}, kExact) == GR(1));
  CHECK(z_measure(Partition({1}), kExact) == GR(1));
  CHECK(z_measure(Partition({2}), kExact) == GR(make_rational(6, 7)));
  CHECK(z_measure(Partition({1, 1}), kExact) == GR(make_rational(1, 7)));
  ExactParams degenerate{GR(0), GR(3)};
  CHECK_THROWS_AS(z_measure(Partition({1}), degenerate), std::domain_error);
}

TEST_CASE("normalization sums to one exactly") {
  std::vector<ExactParams> params = {
      kExact,
      {GR(make_rational(1, 2)), GR(make_rational(5, 2))},
      {GR(Rational(1), Rational(2)), GR(Rational(1), Rational(-2))},
  };
  for (const auto& p : params)
    for (int n = 0; n <= 12; ++n) CHECK(normalization_sum(n, p) == GR(1));
}

TEST_CASE("positivity and degenerate-z structure") {
  // principal and complementary regimes: all weights non-negative
  FloatParams principal{Complex(1, 2), Complex(1, -2), Complex(0)};
  FloatParams comp{Complex(0.3), Complex(0.7), Complex(0)};
  for (int n = 0; n <= 12; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      CHECK(z_measure(lam, principal).real() >= -1e-12);
      CHECK(std::abs(z_measure(lam, principal).imag()) < 1e-12);
      CHECK(z_measure(lam, comp).real() >= -1e-12);
    }
  }
  // z = m integer: weight vanishes iff some square has content -m
  ExactParams degz{GR(2), GR(make_rational(22, 7))};
  for (int n = 0; n <= 10; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      bool has_bad_square = false;
      for (int r = 1; r <= lam.rows(); ++r)
        for (int c = 1; c <= lam.part(r); ++c)
          if (content({r, c}) == -2) has_bad_square = true;
      CHECK((z_measure(lam, degz) == GR(0)) == has_bad_square);
    }
  }
}

TEST_CASE("mixture weights") {
  // xi = 0: all mass at the empty partition
  ExactParams xi0 = kExact;
  CHECK(mixed_weight(Partition{}, xi0) == GR(1));
  CHECK(mixed_weight(Partition({2, 1}), xi0) == GR(0));

  ExactParams p = kExact;
  p.xi = GR(make_rational(1, 4));
  // M((1)) = (1-xi)^{zz'} xi zz'
  GR expect = pow_int(GR(make_rational(3, 4)), 6) * GR(make_rational(1, 4)) * GR(6);
  CHECK(mixed_weight(Partition({1}), p) == expect);

  // exact mode requires integer zz'
  ExactParams frac{GR(make_rational(1, 2)), GR(make_rational(5, 2)),
                   GR(make_rational(1, 4))};
  CHECK_THROWS_AS(mixed_weight(Partition({1}), frac), std::domain_error);
  ExactParams badxi = kExact;
  badxi.xi = GR(2);
  CHECK_THROWS_AS(mixed_weight(Partition{}, badxi), std::domain_error);
}

TEST_CASE("mixture weight equals the exponential matrix elements") {
  // with sqrt(xi) = 1/2 rational: M(lambda) =
  // (1-xi)^{zz'} (e^{s U} vac, lam)(e^{s D} lam, vac) exactly
  GR s(make_rational(1, 2));
  ExactParams p = kExact;
  p.xi = s * s;
  kerov::KerovParams<GR> kp{p.z, p.zp, 1};
  int N = 10;
  auto uvec = kerov::exp_apply(kerov::Ladder::up, s,
                               kerov::PartitionVector<GR>::unit(Partition{}), kp, N);
  for (int n = 0; n <= N; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      auto dvec = kerov::exp_apply(kerov::Ladder::down, s,
                                   kerov::PartitionVector<GR>::unit(lam), kp, N);
      GR rhs = mixture_prefactor(p) * uvec.coeff(lam) * dvec.coeff(Partition{});
      CHECK(mixed_weight(lam, p) == rhs);
    }
  }
}

TEST_CASE("truncated total mass matches the closed form") {
  ExactParams p = kExact;
  p.xi = GR(make_rational(1, 4));
  int N = 12;
  GR total(0);
  for (int n = 0; n <= N; ++n)
    for (const Partition& lam : partitions_of(n)) total += mixed_weight(lam, p);
  GR expect(0);
  for (int n = 0; n <= N; ++n)
    expect += pow_int(p.xi, n) * sl2::poch_rising(p.z * p.zp, n) /
              ScalarOps<GR>::factorial(n);
  expect = expect * mixture_prefactor(p);
  CHECK(total == expect);
}

TEST_CASE("brute-force correlations: degenerate cases") {
  FloatParams p{Complex(0.3), Complex(0.7), Complex(0)};
  // X = empty: the total mass, = 1 at xi = 0
  auto empty = brute_correlation({}, p, 6);
  CHECK(empty.value.real() == doctest::Approx(1.0).epsilon(1e-12));
  // negative modes belong to the vacuum; positive ones do not
  auto below = brute_correlation({HalfInt(-1), HalfInt(-3)}, p, 6);
  CHECK(below.value.real() == doctest::Approx(1.0).epsilon(1e-12));
  auto above = brute_correlation({HalfInt(1)}, p, 6);
  CHECK(above.value == Complex(0));
}

TEST_CASE("brute-force correlation approaches total mass") {
  FloatParams p{Complex(0.3), Complex(0.7), Complex(0.3)};
  auto r10 = brute_correlation({}, p, 10);
  auto r20 = brute_correlation({}, p, 20);
  CHECK(std::abs(r10.value - Complex(1)) <= r10.tail.bound + 1e-12);
  CHECK(std::abs(r20.value - Complex(1)) <= r20.tail.bound + 1e-12);
  CHECK(r20.tail.bound < r10.tail.bound);
  CHECK(r20.tail.rigorous);
}

TEST_CASE("enumerated mixture reuses one table") {
  FloatParams p{Complex(0.3), Complex(0.7), Complex(0.3)};
  EnumeratedMixture table(p, 15);
  auto one_shot = brute_correlation({HalfInt(-1)}, p, 15);
  auto reused = table.correlation({HalfInt(-1)});
  CHECK(reused.value == one_shot.value);
  CHECK(table.total_mass().real() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("tail bound is heuristic off the positive series") {
  FloatParams generic{Complex(0.3), Complex(1.7), Complex(0.3)};
  auto tb = negative_binomial_tail(generic, 10);
  CHECK(!tb.rigorous);
  FloatParams comp{Complex(0.3), Complex(0.7), Complex(0.3)};
  CHECK(negative_binomial_tail(comp, 10).rigorous);
}

TEST_CASE("sampler determinism and degenerate xi") {
  FloatParams p{Complex(0.3), Complex(0.7), Complex(0)};
  auto all_empty = sample(p, 50, 10, 7);
  for (const Partition& lam : all_empty) CHECK(lam.empty());

  FloatParams q{Complex(0.3), Complex(0.7), Complex(0.3)};
  auto a = sample(q, 200, 25, 42);
  auto b = sample(q, 200, 25, 42);
  CHECK(a == b);
  auto c = sample(q, 200, 25, 43);
  CHECK(a != c);

  FloatParams generic{Complex(0.3), Complex(1.7), Complex(0.3)};
  CHECK_THROWS_AS(sample(generic, 10, 25, 1), std::domain_error);
  CHECK_THROWS_AS(sample(q, 10, 1, 1), std::domain_error);  // huge tail
}

TEST_CASE("sampler matches exact masses at moderate volume") {
  FloatParams p{Complex(0.3), Complex(0.7), Complex(0.3)};
  const int draws = 20000;
  auto lams = sample(p, draws, 30, 12345);
  // empirical P(|lam| = 0) vs (1-xi)^{zz'} within 4 sigma
  double p0 = std::pow(0.7, 0.21);
  long n0 = 0;
  for (const Partition& lam : lams)
    if (lam.empty()) ++n0;
  double sigma = std::sqrt(p0 * (1 - p0) * draws);
  CHECK(std::abs(n0 - p0 * draws) < 4 * sigma);

  // empirical correlation rho({-1/2}) vs enumeration within 4 sigma
  double rho = brute_correlation({HalfInt(-1)}, p, 30).value.real();
  long hits = 0;
  for (const Partition& lam : lams)
    if (maya(lam).contains(HalfInt(-1))) ++hits;
  double sig_rho = std::sqrt(rho * (1 - rho) * draws);
  CHECK(std::abs(hits - rho * draws) < 4 * sig_rho);

  // chi-square across partitions of size <= 6
  auto masses = mixture_masses(p, 6);
  std::vector<double> probs;
  std::vector<long> counts;
  for (const auto& [lam, mass] : masses) {
    probs.push_back(mass);
    long c = 0;
    for (const Partition& l : lams)
      if (l == lam) ++c;
    counts.push_back(c);
  }
  auto chi = stats::chi_square_test(probs, counts, draws);
  CHECK(chi.p_value > 1e-3);
}

TEST_CASE("incomplete gamma sanity") {
  // Q(1, x) = exp(-x)
  for (double x : {0.1, 1.0, 3.5})
    CHECK(stats::gamma_q(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
  // chi-square survival at the 0.999 quantile (frozen reference values)
  CHECK(stats::chi_square_sf(45.3147466181, 20) ==
        doctest::Approx(1e-3).epsilon(1e-6));
  CHECK(stats::chi_square_sf(73.401957519, 40) ==
        doctest::Approx(1e-3).epsilon(1e-6));
}
