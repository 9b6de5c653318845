#include <doctest.h>

#include <random>

#include "archfe/exact.hpp"

using namespace archfe;

namespace {

ExactScalar S(const char* text) { return ExactScalar::parse(text); }

}  // namespace

TEST_CASE("display grammar") {
  CHECK(ExactScalar::zero().to_string() == "0");
  CHECK(ExactScalar(Rational(-3, 4), 4).to_string() == "-3/4 * pi^2");
  CHECK(ExactScalar(Rational(2), 0).to_string() == "2");
  CHECK(ExactScalar::pi_power(1).to_string() == "1 * pi^(1/2)");
  CHECK(ExactScalar(Rational(5, 7), -3).to_string() == "5/7 * pi^(-3/2)");
  CHECK(ExactScalar::two_pi_power(-2).to_string() == "1/4 * pi^-2");
  CHECK(ExactScalar(Rational(6, 4)).to_string() == "3/2");
}

TEST_CASE("parse accepts the display grammar and a bare pi power") {
  CHECK(S("0").is_zero());
  CHECK(S("-3/4 * pi^2") == ExactScalar(Rational(-3, 4), 4));
  CHECK(S("pi^3") == ExactScalar::pi_power(6));
  CHECK(S("7 * pi^(-5/2)") == ExactScalar(Rational(7), -5));
  CHECK(S("  2/6 ") == ExactScalar(Rational(1, 3)));
}

TEST_CASE("parse rejects malformed text") {
  for (const char* bad : {"", "-0", "0 * pi^2", "1/0", "abc", "1 *", "1 * pi^", "1 * pi^(1/3)", "2 3", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(ExactScalar::parse(bad), ParseError);
  }
}

TEST_CASE("mul examples") {
  CHECK(mul(S("1/2 * pi^(1/2)"), S("2 * pi^(1/2)")) == S("pi^1"));
  CHECK(mul(S("-3"), S("-1/3")) == ExactScalar::one());
  CHECK(mul(S("0"), S("5 * pi^4")).is_zero());
  CHECK(mul(S("2 * pi^-1"), S("3 * pi^(3/2)")) == S("6 * pi^(1/2)"));
  CHECK(S("6 * pi^2") / S("3 * pi^2") == S("2"));
  CHECK_THROWS_AS(ExactScalar::zero().inverse(), std::domain_error);
}

TEST_CASE("pow and inverse") {
  CHECK(S("2/3 * pi^(1/2)").pow(3) == S("8/27 * pi^(3/2)"));
  CHECK(S("2/3 * pi^(1/2)").pow(-2) == S("9/4 * pi^-1"));
  CHECK(S("-5").pow(0) == ExactScalar::one());
  CHECK(S("-1/2 * pi^3").inverse() == S("-2 * pi^-3"));
}

TEST_CASE("two_pi_power") {
  CHECK(ExactScalar::two_pi_power(3) == S("8 * pi^3"));
  CHECK(ExactScalar::two_pi_power(0) == ExactScalar::one());
  CHECK(ExactScalar::two_pi_power(-1) == S("1/2 * pi^-1"));
}

TEST_CASE("eq_up_to_sign") {
  CHECK(eq_up_to_sign(S("-3/4 * pi^2"), S("3/4 * pi^2")));
  CHECK(eq_up_to_sign(S("3/4 * pi^2"), S("3/4 * pi^2")));
  CHECK_FALSE(eq_up_to_sign(S("3/4"), S("3/4 * pi^2")));
  CHECK_FALSE(eq_up_to_sign(S("3/4"), S("3/5")));
  CHECK(eq_up_to_sign(ExactScalar::zero(), ExactScalar::zero()));
  CHECK_FALSE(eq_up_to_sign(ExactScalar::zero(), S("1")));
}

TEST_CASE("pi exponent accessors") {
  CHECK(S("2 * pi^3").pi_exp() == 3);
  CHECK_FALSE(S("pi^(1/2)").pi_exp().has_value());
  CHECK_THROWS(S("pi^(1/2)").integral_pi_exp());
  CHECK(S("-5/2").as_rational() == Rational(-5, 2));
  CHECK_THROWS(S("pi^1").as_rational());
}

TEST_CASE("LeadingTerm and lt_combine") {
  const LeadingTerm f(-1, S("2"));
  const LeadingTerm g(1, S("1/2 * pi^1"));
  const auto h = lt_combine(f, g, -1);
  CHECK(h.order() == -2);
  CHECK(h.coeff() == S("4 * pi^-1"));
  CHECK(lt_combine(f, g, 2) == LeadingTerm(1, S("1/2 * pi^2")));
  CHECK(lt_combine(f, g, 0) == f);
  CHECK(f.to_string() == "order=-1 coeff=2");
  CHECK_THROWS_AS(LeadingTerm(0, ExactScalar::zero()), std::invalid_argument);
}

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK_THROWS(factorial(-1));
  CHECK(two_adic_valuation(Rational(12, 5)) == 2);
  CHECK(two_adic_valuation(Rational(3, 8)) == -3);
  CHECK(neg_one_pow(-3) == -1);
  CHECK(neg_one_pow(4) == 1);
  CHECK_THROWS_AS(checked_add(std::numeric_limits<std::int64_t>::max(), 1), ExponentOverflow);
  CHECK_THROWS_AS(checked_mul(std::int64_t{1} << 40, std::int64_t{1} << 40), ExponentOverflow);
  CHECK(S("3/8 * pi^2").to_two_adic_string() == "2^-3 * 3 * pi^2");
}

TEST_CASE("property: print then parse is the identity") {
  std::mt19937_64 rng(20240607);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 5000);
  std::uniform_int_distribution<std::int64_t> half(-40, 40);
  for (int i = 0; i < 2000; ++i) {
    const ExactScalar x(Rational(num(rng), den(rng)), half(rng));
    CAPTURE(x.to_string());
    CHECK(ExactScalar::parse(x.to_string()) == x);
  }
}

TEST_CASE("property: field axioms on random scalars") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  std::uniform_int_distribution<std::int64_t> half(-10, 10);
  auto draw = [&] {
    long n = 0;
    while (n == 0) n = num(rng);
    return ExactScalar(Rational(n, den(rng)), half(rng));
  };
  for (int i = 0; i < 1000; ++i) {
    const auto a = draw();
    const auto b = draw();
    const auto c = draw();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * a.inverse() == ExactScalar::one());
    CHECK((a * b).pow(3) == a.pow(3) * b.pow(3));
    CHECK(eq_up_to_sign(a, -a));
  }
}
