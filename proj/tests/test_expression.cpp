#include <doctest.h>

#include "constructive/error.hpp"
#include "constructive/expression.hpp"
#include "test_support.hpp"

using namespace constructive;

namespace {

Rational r(long p, long q = 1) { return Rational(BigInt(p), BigInt(q)); }

bool evaluates_to(const char* text, const Rational& expected, int k = 20) {
  return (parse_real(text).approx(k) - expected).abs() <= testing::pow2_neg(k);
}

ErrorKind kind_of(const char* text) {
  try {
    (void)parse_real(text).approx(10);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for " << text);
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("arithmetic and precedence") {
  CHECK(evaluates_to("1/3 + 1/6", r(1, 2)));
  CHECK(evaluates_to("1 + 2 * 3", r(7)));
  CHECK(evaluates_to("(1 + 2) * 3", r(9)));
  CHECK(evaluates_to("1 - 1/2 - 1/4", r(1, 4)));
  CHECK(evaluates_to("-1/2 * 4", r(-2)));
  CHECK(evaluates_to("1 - -1", r(2)));
  CHECK(evaluates_to("  7  ", r(7)));
}

TEST_CASE("functions") {
  CHECK(evaluates_to("abs(-3/4)", r(3, 4)));
  CHECK(evaluates_to("min(1, 2/3)", r(2, 3)));
  CHECK(evaluates_to("max(-1, -2) * 3", r(-3)));
  CHECK(evaluates_to("div(1, 3, 2)", r(1, 3), 30));
  CHECK(evaluates_to("div(2/7, 1/3 - 1/2, 4)", r(-12, 7), 30));
}

TEST_CASE("errors") {
  CHECK(kind_of("div(1, 0, 4)") == ErrorKind::InvalidWitness);
  CHECK(kind_of("div(1, 1/64, 3)") == ErrorKind::InvalidWitness);
  for (const char* bad : {"", "1 +", "abs(1", "foo(1)", "1 2", "min(1)", "div(1, 2)", "1/0", "()", "div(1,2,-1)"}) {
    CAPTURE(bad);
    CHECK(kind_of(bad) == ErrorKind::Parse);
  }
}
