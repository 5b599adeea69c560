#include <doctest.h>

#include <json.hpp>
#include <random>

#include "constructive/bisection.hpp"
#include "test_support.hpp"

using namespace constructive;
using testing::pow2_neg;

namespace {

Rational r(long p, long q = 1) { return Rational(BigInt(p), BigInt(q)); }

// 0 below 1/4, 1 on [1/4, 3/4), 2 from 3/4 on
FunctionOracle three_levels() {
  return [](const Crn& x) {
    const Rational v = *x.exact();
    return Crn::from_rational(Rational(v < r(1, 4) ? 0 : (v < r(3, 4) ? 1 : 2)));
  };
}

FunctionOracle identity() {
  return [](const Crn& x) { return x; };
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("step at 1/3, forty halvings") {
  const auto trace = bisect(step_oracle(r(1, 3)), r(0), r(1), 1000, 40);
  // 1/3 is never a dyadic midpoint, so the final interval is the dyadic cell of width 2^-40 holding it.
  const BigInt scale = BigInt(1) << 40;
  const BigInt cell = scale / 3;
  CHECK(trace.final_p == Rational(cell, scale));
  CHECK(trace.final_q == Rational(BigInt(cell + 1), scale));
  CHECK(trace.final_q - trace.final_p == pow2_neg(40));
  CHECK(trace.depth() == 40);
  CHECK(trace.final_p < r(1, 3));
  CHECK(r(1, 3) < trace.final_q);
  for (const auto& s : trace.steps) CHECK((s.chosen == Half::Left) == (r(1, 3) <= s.r));
}

TEST_CASE("bisection error paths") {
  CHECK(kind_of([] { (void)bisect(constant_oracle(r(0)), r(0), r(1), 100, 5); }) == ErrorKind::NoInitialGap);
  CHECK(kind_of([] { (void)bisect(step_oracle(r(1, 2)), r(1), r(1), 100, 5); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { (void)bisect(step_oracle(r(1, 2)), r(1), r(0), 100, 5); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { (void)step_oracle(r(1, 2))(testing::wobble(r(0))); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("one halving of a step at the midpoint keeps the left half") {
  const auto trace = bisect(step_oracle(r(1, 2)), r(0), r(1), 100, 1);
  REQUIRE(trace.depth() == 1);
  CHECK(trace.steps[0].chosen == Half::Left);
  CHECK(trace.steps[0].r == r(1, 2));
  CHECK(trace.final_p == r(0));
  CHECK(trace.final_q == r(1, 2));
}

TEST_CASE("ties go left") {
  const auto trace = bisect(three_levels(), r(0), r(1), 100, 12);
  // f(1/2) = 1 is apart from both f(0) = 0 and f(1) = 2
  CHECK(trace.steps[0].chosen == Half::Left);
  CHECK(trace.steps[1].chosen == Half::Left);  // midpoint 1/4 has image 1
  for (std::size_t i = 2; i < trace.steps.size(); ++i) CHECK(trace.steps[i].chosen == Half::Right);
  CHECK(trace.final_q == r(1, 4));
  CHECK(trace.final_p == r(1, 4) - pow2_neg(12));
}

TEST_CASE("property: nested halving around a random jump") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    const Rational lo = testing::random_rational(rng, 50, 7);
    const Rational hi = lo + testing::random_rational(rng, 50, 7).abs() + r(1, 100);
    const Rational jump = testing::random_in(rng, lo, hi, 100000);
    if (jump == lo) continue;
    const auto trace = bisect(step_oracle(jump), lo, hi, 100, 24);
    for (std::uint64_t j = 0; j < trace.depth(); ++j) {
      CHECK(trace.right(j + 1) - trace.left(j + 1) == (trace.right(j) - trace.left(j)) / r(2));
      CHECK(trace.left(j) <= trace.left(j + 1));
      CHECK(trace.right(j + 1) <= trace.right(j));
      CHECK(trace.left(j + 1) < jump);
      CHECK(jump <= trace.right(j + 1));
    }
    const Crn limit = limit_point(trace);
    // a finite trace pins the limit only up to the precision its depth covers
    for (int k = 0; limit.regulator(k) < trace.depth(); ++k) CHECK((limit.approx(k) - jump).abs() <= dyadic(k));
  }
}

TEST_CASE("steps stall when the images close up") {
  BisectionOptions options;
  options.step_fuel = 3;  // precisions 0, 2, 4
  try {
    (void)bisect(identity(), r(0), r(1), 100, 10, options);
    FAIL("expected a stall");
  } catch (const StepStalledError& e) {
    // step i compares images 2^-(i+1) apart; that exceeds 2^-4 only for i <= 2
    CHECK(e.kind() == ErrorKind::StepStalled);
    CHECK(e.step() == 3);
    CHECK(e.partial().depth() == 3);
    CHECK(e.partial().final_q - e.partial().final_p == r(1, 8));
  }
  CHECK(bisect(identity(), r(0), r(1), 100, 10).depth() == 10);
}

TEST_CASE("limit points") {
  const auto trace = bisect(step_oracle(r(1, 3)), r(0), r(1), 100, 30);
  const Crn left = limit_point(trace, Endpoint::Left);
  const Crn right = limit_point(trace, Endpoint::Right);
  for (int k : {0, 5, 20, 28}) {
    CHECK((left.approx(k) - r(1, 3)).abs() <= dyadic(k));
    CHECK((right.approx(k) - r(1, 3)).abs() <= dyadic(k));
  }
  // smallest i with 2^-i < 2^-k is k + 1 on the unit interval
  CHECK(left.regulator(0) == 1);
  CHECK(left.regulator(7) == 8);
  CHECK(left.term(1000) == trace.final_p);
  CHECK(right.term(1000) == trace.final_q);
}

TEST_CASE("ball samples") {
  const auto pts = ball_samples(r(1, 3), r(1, 16), 41);
  REQUIRE(pts.size() == 41);
  CHECK(pts[0] == r(1, 3));
  CHECK(pts[1] == r(1, 3) - r(1, 32));
  CHECK(pts[2] == r(1, 3) + r(1, 32));
  CHECK(pts[3] == r(1, 3) - r(1, 32));
  for (const auto& p : pts) CHECK((p - r(1, 3)).abs() < r(1, 16));
  CHECK(ball_samples(r(0), r(1), 0).empty());
  CHECK(ball_samples(r(0), r(1), 7) == ball_samples(r(0), r(1), 7));
}

TEST_CASE("local constancy checks") {
  const Crn third = Crn::from_rational(r(1, 3));
  const auto fine = check_local_constancy(constant_oracle(r(5)), {third, 3, Crn::from_rational(r(5))}, 50, 20);
  CHECK(fine.passed);
  CHECK(fine.samples_checked == 50);

  // the step at 1/3 is not constant on any ball around 1/3
  const auto broken = check_local_constancy(step_oracle(r(1, 3)), {third, 5, Crn::from_rational(r(0))}, 50, 10);
  CHECK_FALSE(broken.passed);
  REQUIRE(broken.counterexample);
  CHECK(*broken.counterexample >= r(1, 3));

  // but it is constant on a ball that stays clear of the jump
  const auto clear =
      check_local_constancy(step_oracle(r(1, 3)), {Crn::from_rational(r(1, 10)), 5, Crn::from_rational(r(0))}, 50, 10);
  CHECK(clear.passed);

  // a center known only by approximation uses the half-radius ball
  const auto approx_center =
      check_local_constancy(constant_oracle(r(2)), {testing::wobble(r(1, 10)), 4, Crn::from_rational(r(2))}, 20, 10);
  CHECK(approx_center.passed);
}

TEST_CASE("trace JSON") {
  const auto trace = bisect(step_oracle(r(1, 3)), r(0), r(1), 100, 3);
  const auto j = nlohmann::json::parse(trace_to_json(trace));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);
  CHECK(j[0]["i"] == 0);
  CHECK(j[0]["p"] == "0");
  CHECK(j[0]["q"] == "1");
  CHECK(j[0]["r"] == "1/2");
  CHECK(j[0]["chosen"] == "Left");
  CHECK(j[1]["chosen"] == "Right");  // 1/4 < 1/3
  CHECK(j[2]["r"] == "3/8");
  CHECK(j[2]["chosen"] == "Left");
  CHECK(j[0].contains("witness_k"));
}
