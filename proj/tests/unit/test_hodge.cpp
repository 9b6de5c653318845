#include <doctest.h>

#include <random>

#include "archfe/hodge.hpp"
#include "oracles.hpp"

using namespace archfe;

TEST_CASE("simple pieces") {
  const auto a = SimplePiece::pq(0, 2);
  CHECK(a.dim() == 2);
  CHECK(a.weight() == 2);
  CHECK(a.to_string() == "M(0,2)");
  CHECK_THROWS_AS(SimplePiece::pq(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(SimplePiece::pq(3, 1), std::invalid_argument);

  const auto b = SimplePiece::mid(1, Eps::Plus);
  CHECK(b.dim() == 1);
  CHECK(b.weight() == 2);
  CHECK(b.to_string() == "M(1,+)");
  CHECK(b.frobenius_sign() == -1);
  CHECK(SimplePiece::mid(1, Eps::Minus).frobenius_sign() == 1);
  CHECK(SimplePiece::mid(-2, Eps::Plus).frobenius_sign() == 1);
}

TEST_CASE("invariants of simple pieces") {
  const auto a = invariants(SimplePiece::pq(-1, 3));
  CHECK(a.d_plus == 1);
  CHECK(a.d_minus == 1);
  CHECK(a.t_H == 2);
  CHECK(a.h == std::map<std::int64_t, std::int64_t>{{-1, 1}, {3, 1}});

  const auto b = invariants(SimplePiece::mid(3, Eps::Plus));
  CHECK(b.d_plus == 0);
  CHECK(b.d_minus == 1);
  CHECK(b.t_H == 3);
  CHECK(b.h == std::map<std::int64_t, std::int64_t>{{3, 1}});

  const auto c = invariants(SimplePiece::mid(2, Eps::Plus));
  CHECK(c.d_plus == 1);
  CHECK(c.d_minus == 0);
}

TEST_CASE("structure bookkeeping") {
  RHodgeStructure m(2);
  m.add(SimplePiece::pq(0, 2)).add(SimplePiece::mid(1, Eps::Plus), 11).add(SimplePiece::mid(1, Eps::Minus), 9);
  CHECK(m.dim() == 22);
  CHECK(m.hodge_number(1, 1) == 20);
  CHECK(m.hodge_number(2, 0) == 1);
  CHECK(m.hodge_number(0, 2) == 1);
  CHECK(m.hodge_number(3, -1) == 0);
  CHECK(m.to_string() == "w=2 {M(0,2), 9*M(1,-), 11*M(1,+)}");
  CHECK_THROWS_AS(m.add(SimplePiece::mid(0, Eps::Plus)), HodgeError);
  CHECK_THROWS_AS(m.add(SimplePiece::pq(0, 2), -1), HodgeError);

  const auto inv = invariants(m);
  CHECK(inv.dim == 22);
  CHECK(inv.d_plus == 1 + 9);
  CHECK(inv.d_minus == 1 + 11);
  CHECK(inv.t_H == 2 + 20);
}

TEST_CASE("from_hodge_numbers") {
  SUBCASE("K3 type") {
    const auto m = from_hodge_numbers(2, {{{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 20}}, 11, 9);
    CHECK(m.multiplicity(SimplePiece::pq(0, 2)) == 1);
    CHECK(m.multiplicity(SimplePiece::mid(1, Eps::Plus)) == 11);
    CHECK(m.multiplicity(SimplePiece::mid(1, Eps::Minus)) == 9);
  }
  SUBCASE("one of a symmetric pair implies the other") {
    const auto m = from_hodge_numbers(3, {{{3, 0}, 2}});
    CHECK(m.multiplicity(SimplePiece::pq(0, 3)) == 2);
  }
  SUBCASE("errors") {
    auto code_of = [](auto f) {
      try {
        f();
      } catch (const HodgeError& e) {
        return e.code();
      }
      FAIL("no HodgeError");
      return HodgeError::Code::Asymmetric;
    };
    CHECK(code_of([] { from_hodge_numbers(2, {{{2, 0}, 1}, {{0, 2}, 2}}); }) == HodgeError::Code::Asymmetric);
    CHECK(code_of([] { from_hodge_numbers(2, {{{1, 0}, 1}}); }) == HodgeError::Code::WrongWeight);
    CHECK(code_of([] { from_hodge_numbers(1, {}, 1); }) == HodgeError::Code::MidForOddWeight);
    CHECK(code_of([] { from_hodge_numbers(2, {{{1, 1}, 3}}, 1, 1); }) == HodgeError::Code::DiagonalMismatch);
    CHECK(code_of([] { from_hodge_numbers(2, {{{2, 0}, -1}}); }) == HodgeError::Code::BadMultiplicity);
    CHECK(code_of([] { from_hodge_numbers(2, {}, -1); }) == HodgeError::Code::BadMultiplicity);
  }
}

TEST_CASE("twist and dual twist examples") {
  CHECK(twist(SimplePiece::pq(0, 2), 1) == SimplePiece::pq(-1, 1));
  CHECK(twist(SimplePiece::mid(1, Eps::Minus), 3) == SimplePiece::mid(-2, Eps::Minus));
  CHECK(dual_twist(SimplePiece::pq(0, 2)) == SimplePiece::pq(-3, -1));
  CHECK(dual_twist(SimplePiece::mid(0, Eps::Plus)) == SimplePiece::mid(-1, Eps::Plus));
  CHECK(dual_twist(SimplePiece::mid(2, Eps::Minus)) == SimplePiece::mid(-3, Eps::Minus));

  RHodgeStructure m(0);
  m.add(SimplePiece::mid(0, Eps::Plus), 2).add(SimplePiece::mid(0, Eps::Minus));
  const auto t = twist(m, 2);
  CHECK(t.weight() == -4);
  CHECK(t.multiplicity(SimplePiece::mid(-2, Eps::Plus)) == 2);
  CHECK(dual_twist(m).weight() == -2);
}

TEST_CASE("property: Frobenius on the twist is multiplied by (-1)^n") {
  for (const auto& piece : testing::simple_pieces(-6, 6)) {
    for (std::int64_t n = -5; n <= 5; ++n) {
      const auto t = twist(piece, n);
      CHECK(t.weight() == piece.weight() - 2 * n);
      if (!piece.is_pq()) CHECK(t.frobenius_sign() == piece.frobenius_sign() * neg_one_pow(n));
      const auto inv = invariants(piece);
      const auto inv_t = invariants(t);
      CHECK(inv_t.dim == inv.dim);
      // F_inf on R(n) is (-1)^n, so d_+ and d_- trade places for odd n.
      CHECK(inv_t.d_plus == (n % 2 == 0 ? inv.d_plus : inv.d_minus));
    }
  }
}

TEST_CASE("property: dual twist is an involution that sends weight w to -w-2") {
  for (const auto& piece : testing::simple_pieces(-6, 6)) {
    const auto d = dual_twist(piece);
    CHECK(dual_twist(d) == piece);
    CHECK(d.weight() == -piece.weight() - 2);
    if (!piece.is_pq()) {
      // (M^*)(1): Frobenius is unchanged by dualizing and negated by the twist.
      CHECK(d.frobenius_sign() == -piece.frobenius_sign());
    }
  }
}

TEST_CASE("property: invariants are additive over random sums") {
  std::mt19937_64 rng(4101);
  std::uniform_int_distribution<std::int64_t> weight(-8, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto w = weight(rng);
    const auto a = testing::random_structure(rng, w, -6, 6, 4);
    const auto b = testing::random_structure(rng, w, -6, 6, 4);
    auto sum_inv = invariants(a);
    sum_inv += invariants(b);
    CHECK(invariants(a + b) == sum_inv);
    CHECK((a + b).dim() == a.dim() + b.dim());
    CHECK(twist(a + b, 2) == twist(a, 2) + twist(b, 2));
  }
}
