#include <leibniz/field.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace leibniz;

TEST_CASE("rational canonical form") {
  auto q = parse_scalar<Rational>(FieldSpec::rationals(), "3/6");
  CHECK(q.str() == "1/2");
  CHECK(parse_scalar<Rational>(FieldSpec::rationals(), "-4/2").str() == "-2");
  CHECK((q + q).str() == "1");
  CHECK((q - q).is_zero());
  CHECK((q * Rational(4)).str() == "2");
  CHECK((Rational(1) / Rational(3)).str() == "1/3");
  CHECK_THROWS_AS(Rational(1) / Rational(0), error);
  CHECK_THROWS_AS(parse_scalar<Rational>(FieldSpec::rationals(), "1.5"), error);
  CHECK_THROWS_AS(parse_scalar<Rational>(FieldSpec::rationals(), "1/0"), error);
}

TEST_CASE("prime field arithmetic") {
  auto f7 = FieldSpec::prime(7);
  Fp a = scalar_of<Fp>(f7, 3), b = scalar_of<Fp>(f7, 5);
  CHECK((a + b).str() == "1");
  CHECK((a - b).str() == "5");
  CHECK((a * b).str() == "1");
  CHECK((a / b).value() == 2);  // 3 * 5^{-1} = 3 * 3 = 2
  CHECK((b * b.inverse()).str() == "1");
  CHECK(scalar_of<Fp>(f7, -1).value() == 6);
  CHECK(parse_scalar<Fp>(f7, "10").value() == 3);
  CHECK(parse_scalar<Fp>(f7, "1/2").value() == 4);

  // field-agnostic zero combines with everything
  Fp z;
  CHECK((z + a) == a);
  CHECK((a * z).is_zero());
  CHECK_THROWS_AS(a + scalar_of<Fp>(FieldSpec::prime(5), 1), error);
}

TEST_CASE("field spec validation") {
  CHECK_THROWS_AS(FieldSpec::prime(6), error);
  CHECK_THROWS_AS(FieldSpec::prime(1), error);
  CHECK(FieldSpec::prime(2).str() == "F2");
  CHECK(FieldSpec::rationals().str() == "Q");
  CHECK(is_prime_u32(2147483647));  // largest admissible prime
  CHECK_FALSE(is_prime_u32(2147483646));
}

TEST_CASE("every exhaustive F_p inverse for small p") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    auto fs = FieldSpec::prime(p);
    for (std::uint32_t v = 1; v < p; ++v) {
      Fp x = scalar_of<Fp>(fs, static_cast<long>(v));
      CHECK((x * x.inverse()).str() == "1");
    }
  }
}
