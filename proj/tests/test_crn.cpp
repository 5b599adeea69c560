#include <doctest.h>

#include <functional>
#include <random>

#include "constructive/crn.hpp"
#include "constructive/error.hpp"
#include "test_support.hpp"

using namespace constructive;
using testing::pow2_neg;

namespace {

Rational r(long p, long q = 1) { return Rational(BigInt(p), BigInt(q)); }
Crn c(long p, long q = 1) { return Crn::from_rational(r(p, q)); }

bool within(const Rational& value, const Rational& target, int k) { return (value - target).abs() <= pow2_neg(k); }

}  // namespace

TEST_CASE("rational embedding") {
  const Crn third = c(1, 3);
  CHECK(third.approx(2) == r(1, 3));
  CHECK(third.approx(5) == r(1, 3));
  CHECK(third.exact() == r(1, 3));
  CHECK(apartness_search(c(0), c(0), 50).unknown());

  const Crn half_seq = Crn::from_sequence([](std::uint64_t) { return r(1, 2); }, [](int) { return std::uint64_t{1}; });
  CHECK(apartness_search(c(1, 2), half_seq, 200).unknown());
  CHECK(compare_with_gap(c(1, 2), half_seq, 30) == GapOrder::WithinGap);
  CHECK_FALSE(half_seq.exact().has_value());
}

TEST_CASE("approx reads the term after the regulator threshold") {
  const Crn x = testing::wobble(r(1, 3));
  for (int k : {0, 1, 5, 17}) {
    CHECK(x.approx(k) == x.term(x.regulator(k) + 1));
    CHECK(within(x.approx(k), r(1, 3), k));
  }
  CHECK((x.approx(0) - x.approx(10)).abs() <= r(1) + pow2_neg(10));
  CHECK_THROWS_AS(x.approx(-1), Error);
}

TEST_CASE("determinism: repeated evaluation gives identical terms") {
  const Crn x = testing::wobble(r(2, 7)) * testing::harmonic(r(-1, 3)) + abs(testing::from_below(r(5, 9)));
  for (std::uint64_t n : {1u, 2u, 17u, 300u}) CHECK(x.term(n) == x.term(n));
  CHECK(x.approx(12) == x.approx(12));
}

TEST_CASE("regulators are normalized to a monotone running maximum") {
  // deliberately non-monotone input regulator
  const Crn x = Crn::from_sequence([](std::uint64_t) { return r(3); },
                                   [](int k) { return static_cast<std::uint64_t>(k % 2 == 0 ? 10 - k : 0); });
  std::uint64_t previous = 0;
  for (int k = 0; k < 20; ++k) {
    CHECK(x.regulator(k) >= previous);
    CHECK(x.regulator(k) >= 1);
    previous = x.regulator(k);
  }
  CHECK(x.regulator(0) == 10);
  CHECK(x.regulator(7) == 10);
}

TEST_CASE("addition and friends") {
  const Crn sum = c(1, 3) + c(1, 6);
  for (int k : {0, 5, 30}) CHECK(within(sum.approx(k), r(1, 2), k));
  CHECK(within((c(1, 3) + c(1, 6)).approx(30), r(1, 2), 30));

  const Crn x = testing::wobble(r(-4, 9));
  for (int k : {0, 3, 20}) CHECK(within((-(-x)).approx(k), r(-4, 9), k));
  CHECK(within(max(c(2, 5), c(3, 5)).approx(10), r(3, 5), 10));
  CHECK(within(min(c(2, 5), c(3, 5)).approx(10), r(2, 5), 10));
  CHECK(within(abs(testing::wobble(r(-7, 3))).approx(15), r(7, 3), 15));
  CHECK(within((c(1) - c(3, 2)).approx(4), r(-1, 2), 4));
}

TEST_CASE("multiplication") {
  for (int k : {0, 10, 40}) {
    CHECK(within((c(2, 3) * c(3, 2)).approx(k), r(1), k));
    CHECK(within((testing::wobble(r(5)) * c(0)).approx(k), r(0), k));
    CHECK(within((c(-1, 2) * c(1, 2)).approx(k), r(-1, 4), k));
    CHECK(within((testing::wobble(r(-1, 2)) * testing::from_below(r(1, 2))).approx(k), r(-1, 4), k));
  }
}

TEST_CASE("division needs a valid apartness certificate") {
  const auto w = witness_against_zero(c(2), 0);
  CHECK(w.sign == ApartSign::FirstLarger);
  for (int k : {0, 10, 30}) CHECK(within(divide(c(1), c(2), w).approx(k), r(1, 2), k));

  const Crn three_sevenths = testing::wobble(r(3, 7));
  const auto w2 = witness_against_zero(three_sevenths, 2);
  for (int k : {0, 10, 30}) CHECK(within(divide(c(3, 7), three_sevenths, w2).approx(k), r(1), k));

  const Crn neg = testing::from_below(r(-5, 4));
  const auto w3 = witness_against_zero(neg, 0);
  CHECK(w3.sign == ApartSign::FirstSmaller);
  CHECK(within(divide(c(1), neg, w3).approx(25), r(-4, 5), 25));

  // stale witness: 2^-20 is nowhere near 1 in magnitude
  try {
    (void)divide(c(1), Crn::from_rational(pow2_neg(20)), ApartnessWitness{0, ApartSign::FirstLarger});
    FAIL("expected InvalidWitness");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidWitness);
  }
  // wrong sign
  CHECK_THROWS_AS(divide(c(1), c(2), ApartnessWitness{0, ApartSign::FirstSmaller}), Error);
  CHECK_THROWS_AS(divide(c(1), c(0), witness_against_zero(c(0), 4)), Error);
}

TEST_CASE("apartness search examples") {
  // Brute-force the first k with |0 - 2^-20| > 2^-k; constant sequences make approx exact.
  int expected_k = -1;
  for (int k = 0; k < 30; ++k) {
    if (pow2_neg(20) > pow2_neg(k)) {
      expected_k = k;
      break;
    }
  }
  REQUIRE(expected_k == 21);
  const auto found = apartness_search(c(0), Crn::from_rational(pow2_neg(20)), 30);
  REQUIRE(found.accepted());
  CHECK(found.accept().witness.k == expected_k);
  CHECK(found.accept().witness.sign == ApartSign::FirstSmaller);
  CHECK(found.accept().at_step == static_cast<std::uint64_t>(expected_k) + 1);

  // gap 1 is not > 2^0, so k = 0 fails and k = 1 succeeds
  CHECK(apartness_search(c(1), c(0), 1).unknown());
  const auto two = apartness_search(c(1), c(0), 2);
  REQUIRE(two.accepted());
  CHECK(two.accept().witness == ApartnessWitness{1, ApartSign::FirstLarger});

  // equal limits through different sequences never separate
  for (std::uint64_t fuel : {1u, 10u, 100u, 300u}) {
    CHECK(apartness_search(testing::wobble(r(1, 3)), testing::from_below(r(1, 3)), fuel) ==
          SearchOutcome<ApartnessWitness>(Unknown{fuel}));
  }
  CHECK_THROWS_AS(apartness_search(c(0), c(1), 0), Error);
}

TEST_CASE("compare_with_gap") {
  CHECK(compare_with_gap(c(0), c(1), 1) == GapOrder::Less);
  CHECK(compare_with_gap(c(1), c(0), 1) == GapOrder::Greater);
  CHECK(compare_with_gap(c(1, 3), c(1, 3), 10) == GapOrder::WithinGap);
  // 2^-5 < 2^-3
  CHECK(compare_with_gap(c(0), Crn::from_rational(pow2_neg(5)), 3) == GapOrder::WithinGap);
  CHECK(compare_with_gap(c(0), Crn::from_rational(pow2_neg(5)), 6) == GapOrder::Less);
  CHECK_THROWS_AS(compare_with_gap(c(0), c(1), -2), Error);
}

TEST_CASE("property: embedding homomorphism with perturbed sequences") {
  std::mt19937_64 rng(7);
  using Op = std::function<Crn(const Crn&, const Crn&)>;
  using Exact = std::function<Rational(const Rational&, const Rational&)>;
  const std::vector<std::pair<Op, Exact>> ops = {
      {[](const Crn& a, const Crn& b) { return a + b; }, [](const Rational& a, const Rational& b) { return a + b; }},
      {[](const Crn& a, const Crn& b) { return a * b; }, [](const Rational& a, const Rational& b) { return a * b; }},
      {[](const Crn& a, const Crn&) { return -a; }, [](const Rational& a, const Rational&) { return -a; }},
      {[](const Crn& a, const Crn&) { return abs(a); }, [](const Rational& a, const Rational&) { return a.abs(); }},
      {[](const Crn& a, const Crn& b) { return min(a, b); }, [](const Rational& a, const Rational& b) { return min(a, b); }},
      {[](const Crn& a, const Crn& b) { return max(a, b); }, [](const Rational& a, const Rational& b) { return max(a, b); }},
  };
  for (int trial = 0; trial < 60; ++trial) {
    const Rational p = testing::random_rational(rng);
    const Rational q = testing::random_rational(rng);
    const Crn x = trial % 2 ? testing::wobble(p) : testing::from_below(p);
    const Crn y = trial % 3 ? testing::wobble(q) : testing::harmonic(q);
    for (const auto& [op, exact] : ops) {
      const Crn result = op(x, y);
      for (int k : {0, 4, 12}) {
        CHECK(within(result.approx(k), exact(p, q), k));
        CHECK(testing::sampled_cauchy(result, k, 10, rng));
      }
    }
    if (!q.is_zero()) {
      const auto search = apartness_search(y, Crn::from_rational(Rational(0)), 40);
      REQUIRE(search.accepted());
      const Crn quotient = divide(x, y, search.accept().witness);
      for (int k : {0, 4, 12}) {
        CHECK(within(quotient.approx(k), p / q, k));
        CHECK(testing::sampled_cauchy(quotient, k, 10, rng));
      }
    }
  }
}

TEST_CASE("property: apartness soundness and fuel monotonicity") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational p = testing::random_rational(rng);
    const Rational q = testing::random_rational(rng);
    const Crn x = testing::wobble(p);
    const Crn y = testing::from_below(q);
    const auto small = apartness_search(x, y, 12);
    const auto large = apartness_search(x, y, 24);
    if (small.accepted()) {
      CHECK(verify_apartness(x, y, small.accept().witness));
      CHECK(large == small);
      CHECK((small.accept().witness.sign == ApartSign::FirstSmaller) == (p < q));
    }
    if (p == q) CHECK_FALSE(large.accepted());
    const GapOrder order = compare_with_gap(Crn::from_rational(p), Crn::from_rational(q), 6);
    if (order == GapOrder::Less) CHECK(p < q);
    if (order == GapOrder::Greater) CHECK(p > q);
  }
}
