#include <doctest.h>

#include "centersig/errors.hpp"
#include "centersig/scalar.hpp"

using namespace csig;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == mpq_class(1, 2));
  CHECK(parse_rational("-0.25") == mpq_class(-1, 4));
  CHECK(parse_rational("1e-2") == mpq_class(1, 100));
  CHECK(parse_rational("0.1") == mpq_class(1, 10));
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
}

TEST_CASE("exact scalars stay exact and canonical") {
  Scalar two_pi = Scalar::pi_power(1, GaussQ(2));
  Scalar s = two_pi * two_pi;
  CHECK(s.is_exact());
  CHECK(s == Scalar::pi_power(2, GaussQ(4)));
  CHECK((s - s).is_zero());
  CHECK((s - s).exact().terms().empty());
  CHECK(s.divided_by(GaussQ(4), 2) == Scalar(1));
}

TEST_CASE("exact op float promotes to float") {
  Scalar e = Scalar::pi_power(1);
  Scalar f = Scalar::from_float(1.0);
  CHECK((e + f).is_float());
  CHECK((e * f).is_float());
  CHECK((e + f).to_complex().real() == doctest::Approx(kPi + 1));
}

TEST_CASE("gaussian arithmetic") {
  GaussQ i = GaussQ::i_unit();
  CHECK(i * i == GaussQ(-1));
  CHECK(GaussQ(mpq_class(1), mpq_class(1)).inverse() == GaussQ(mpq_class(1, 2), mpq_class(-1, 2)));
  CHECK_THROWS(GaussQ(0).inverse());
}

TEST_CASE("formatting") {
  CHECK(Scalar().to_string() == "0");
  CHECK(Scalar::pi_power(1, GaussQ(2)).to_string() == "2π");
  CHECK(Scalar::pi_power(2, GaussQ(mpq_class(2, 3))).to_string() == "2π²/3");
  CHECK(Scalar::pi_power(-1, GaussQ(mpq_class(1, 2))).to_string() == "π⁻¹/2");
  CHECK((Scalar::pi_power(2) - Scalar(1)).to_string() == "π² - 1");
  CHECK(Scalar(GaussQ(0, mpq_class(-1, 3))).to_string() == "-i/3");
  CHECK(Scalar(GaussQ(1, 2)).to_string() == "(1+2i)");
}

TEST_CASE("pow") {
  Scalar c = Scalar::pi_power(1, GaussQ(0, 1));  // i*pi
  CHECK(pow(c, 2) == Scalar::pi_power(2, GaussQ(-1)));
  CHECK(pow(c, 0) == Scalar(1));
}
