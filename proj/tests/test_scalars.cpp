#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "unival/pi_scalar.hpp"

using namespace unival;

TEST_CASE("BigInt basic arithmetic and string round trip") {
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(-123456789012345678LL).to_string() == "-123456789012345678");
  CHECK(BigInt::from_string("-987654321098765432109876543210").to_string() ==
        "-987654321098765432109876543210");
  CHECK(factorial(20).to_string() == "2432902008176640000");
  CHECK(factorial(41) / factorial(40) == BigInt(41));
  CHECK(binomial(40, 20).to_string() == "137846528820");
  CHECK(binomial(5, -1) == BigInt(0));
  CHECK(BigInt::pow(BigInt(2), 100).to_string() == "1267650600228229401496703205376");
}

TEST_CASE("BigInt division agrees with native arithmetic") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 2000; ++i) {
    long long a = static_cast<long long>(rng()) % 1000000000000000LL;
    long long b = static_cast<long long>(rng()) % 1000000000LL;
    if (b == 0) b = 7;
    BigInt q, r;
    BigInt::divmod(BigInt(a), BigInt(b), q, r);
    CHECK(q.to_int64() == a / b);
    CHECK(r.to_int64() == a % b);
    CHECK(BigInt::gcd(BigInt(a), BigInt(b)).to_int64() == std::gcd(a < 0 ? -a : a, b < 0 ? -b : b));
  }
}

TEST_CASE("BigInt multi-limb division") {
  BigInt a = BigInt::from_string("123456789012345678901234567890123456789");
  BigInt b = BigInt::from_string("987654321098765432109");
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  CHECK(q * b + r == a);
  CHECK(r.sign() >= 0);
  CHECK(r < b);
  // exercises the rare add-back branch via many random wide operands
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    BigInt x = BigInt(static_cast<long long>(rng() >> 1)) * BigInt(static_cast<long long>(rng() >> 1));
    BigInt y = BigInt(static_cast<long long>(rng() >> 1) % 1000000007LL + 1) *
               BigInt(static_cast<long long>(rng() >> 1) % 1000003LL + 1);
    BigInt qq, rr;
    BigInt::divmod(x, y, qq, rr);
    CHECK(qq * y + rr == x);
    CHECK(rr < y.abs());
  }
}

TEST_CASE("Rational stays reduced with positive denominator") {
  Rational r(6, -4);
  CHECK(r.num() == BigInt(-3));
  CHECK(r.den() == BigInt(2));
  CHECK(Rational(0, 5) == Rational());
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
  CHECK((Rational(1, 3) / Rational(1, 3)).is_one());
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational::from_string("-4/6") == Rational(-2, 3));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("PiScalar addition") {
  CHECK((PiScalar(2) + PiScalar(-2)).is_zero());
  CHECK(PiScalar::pi() + PiScalar::pi_power(1, Rational(3)) == PiScalar::pi_power(1, Rational(4)));
  PiScalar mixed = PiScalar::pi_power(-1) + PiScalar::pi();
  CHECK(mixed.terms().size() == 2);
  CHECK(mixed.to_string() == "pi^-1 + pi");
}

TEST_CASE("PiScalar multiplication") {
  CHECK(PiScalar::pi_power(1, Rational(2)) * PiScalar::pi_power(-1, Rational(3)) == PiScalar(6));
  PiScalar x = PiScalar::pi_power(2, Rational(7, 3)) + PiScalar(1);
  CHECK(PiScalar(1) * x == x);
  PiScalar pp1 = PiScalar::pi() + PiScalar(1);
  PiScalar pm1 = PiScalar::pi() - PiScalar(1);
  CHECK(pp1 * pm1 == PiScalar::pi_power(2) - PiScalar(1));
}

TEST_CASE("PiScalar monomial division") {
  PiScalar w3 = omega(3);
  CHECK(w3.div_monomial(PiScalar::pi_power(2)) == PiScalar::pi_power(-1, Rational(4, 3)));
  PiScalar x = PiScalar::pi_power(2, Rational(5)) + PiScalar(3);
  CHECK(x.div_monomial(PiScalar(1)) == x);
  PiScalar nonmono = PiScalar::pi() + PiScalar(1);
  CHECK_THROWS_AS(x.div_monomial(nonmono), std::domain_error);
  CHECK_THROWS_AS(x.div_monomial(PiScalar()), std::domain_error);
}

TEST_CASE("ball volumes") {
  CHECK(omega(0) == PiScalar(1));
  CHECK(omega(1) == PiScalar(2));
  CHECK(omega(2) == PiScalar::pi());
  CHECK(omega(3) == PiScalar::pi_power(1, Rational(4, 3)));
  CHECK(omega(4) == PiScalar::pi_power(2, Rational(1, 2)));
  // omega_{m+2} / omega_m = 2 pi / (m + 2)
  for (int m = 0; m <= 40; ++m) {
    PiScalar ratio = omega(m + 2).div_monomial(omega(m));
    CHECK(ratio == PiScalar::pi_power(1, Rational(2, m + 2)));
  }
}

namespace {

PiScalar random_pi_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 3), power(-2, 2), num(-9, 9), den(1, 9);
  PiScalar s;
  int t = nterms(rng);
  for (int i = 0; i < t; ++i)
    s += PiScalar::pi_power(power(rng), Rational(num(rng), den(rng)));
  return s;
}

} // namespace

TEST_CASE("PiScalar ring axioms on random triples") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 300; ++i) {
    PiScalar a = random_pi_scalar(rng), b = random_pi_scalar(rng), c = random_pi_scalar(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    // canonical form: no zero coefficients survive
    PiScalar probe = a * b + c - c;
    for (const auto& [j, coeff] : probe.terms()) {
      (void)j;
      CHECK(!coeff.is_zero());
      CHECK(coeff.den().sign() > 0);
      CHECK(BigInt::gcd(coeff.num(), coeff.den()) == BigInt(1));
    }
  }
}

TEST_CASE("PiScalar rendering") {
  CHECK(PiScalar().to_string() == "0");
  CHECK(PiScalar(Rational(4, 3)).to_string() == "4/3");
  CHECK(PiScalar::pi_power(-1, Rational(4, 3)).to_string() == "4/3 * pi^-1");
  CHECK(PiScalar::pi_power(2, Rational(-1, 2)).to_string() == "-1/2 * pi^2");
  CHECK((PiScalar(1) - PiScalar::pi()).to_string() == "1 - pi");
}
