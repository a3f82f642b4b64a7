#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zm/scalar.hpp"

using namespace zm;

TEST_CASE("rational construction canonicalizes") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(-3, -6) == make_rational(1, 2));
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("gaussian rational field operations") {
  GaussianRational i(Rational(0), Rational(1));
  CHECK((i * i) == GaussianRational(-1));
  GaussianRational z(Rational(1), Rational(2));    // 1+2i
  GaussianRational zb(Rational(1), Rational(-2));  // 1-2i
  CHECK(z * zb == GaussianRational(5));
  CHECK(z.conj() == zb);
  CHECK((z / z) == GaussianRational(1));
  CHECK(((z / zb) * zb) == z);
  CHECK_THROWS_AS(z / GaussianRational(0), std::domain_error);
  CHECK(pow_int(GaussianRational(0), 0) == GaussianRational(1));
  CHECK(pow_int(z, 3) == z * z * z);
}

TEST_CASE("exact parsing") {
  CHECK(parse_gaussian("2") == GaussianRational(2));
  CHECK(parse_gaussian("-1/3") == GaussianRational(make_rational(-1, 3)));
  CHECK(parse_gaussian("1+2i") == GaussianRational(Rational(1), Rational(2)));
  CHECK(parse_gaussian("1/2-3/4i") ==
        GaussianRational(make_rational(1, 2), make_rational(-3, 4)));
  CHECK(parse_gaussian("0.3") == GaussianRational(make_rational(3, 10)));
  CHECK(parse_gaussian("i") == GaussianRational(Rational(0), Rational(1)));
  CHECK(parse_gaussian("-i") == GaussianRational(Rational(0), Rational(-1)));
  CHECK_THROWS(parse_gaussian(""));
  CHECK_THROWS(parse_gaussian("1+2j"));
  CHECK_THROWS(parse_gaussian("1/0"));
}

TEST_CASE("float parsing") {
  CHECK(parse_complex("0.3") == Complex(0.3, 0.0));
  CHECK(parse_complex("1+2i") == Complex(1.0, 2.0));
  CHECK(parse_complex("2.5e-1-1i") == Complex(0.25, -1.0));
  CHECK(parse_complex("1/4") == Complex(0.25, 0.0));
}

TEST_CASE("exact formatting has no floating point literals") {
  CHECK(GaussianRational(make_rational(3, 4), make_rational(-1, 2)).str() ==
        "3/4-1/2i");
  CHECK(GaussianRational(7).str() == "7");
  CHECK(GaussianRational(Rational(0), Rational(1)).str() == "1i");
  CHECK(parse_gaussian(GaussianRational(make_rational(-2, 7), Rational(5)).str()) ==
        GaussianRational(make_rational(-2, 7), Rational(5)));
}

TEST_CASE("scalar ops helpers") {
  CHECK(ScalarOps<GaussianRational>::factorial(5) == GaussianRational(120));
  CHECK(ScalarOps<Complex>::factorial(5) == Complex(120.0, 0.0));
  CHECK(ScalarOps<GaussianRational>::from_ratio(3, 9) ==
        GaussianRational(make_rational(1, 3)));
  CHECK(ScalarOps<Complex>::abs_approx(Complex(3, 4)) == doctest::Approx(5.0));
}
