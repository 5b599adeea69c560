#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "constructive/crn.hpp"
#include "constructive/error.hpp"
#include "constructive/rational.hpp"

namespace constructive {

/// A function on reals, evaluated one point at a time. Must be pure.
using FunctionOracle = std::function<Crn(const Crn&)>;

/// 0 below `jump`, 1 at or above it. Defined only on inputs that carry an
/// exact rational; no constructive function behaves like this, which is the
/// discontinuity the engine hunts. Throws Error(InvalidArgument) otherwise.
FunctionOracle step_oracle(const Rational& jump);
FunctionOracle constant_oracle(const Rational& value);

enum class Half { Left, Right };

const char* to_string(Half half);

struct BisectionStep {
  std::uint64_t i;
  Rational p;  // interval at step i
  Rational q;
  Rational r;  // midpoint probed
  ApartnessWitness witness;  // f(p) apart from f(q)
  Half chosen;
};

struct BisectionTrace {
  Rational p0;
  Rational q0;
  std::vector<BisectionStep> steps;
  Rational final_p;
  Rational final_q;
  ApartnessWitness final_witness;  // f(final_p) apart from f(final_q)

  std::uint64_t depth() const { return steps.size(); }
  /// Left endpoint after i halvings, 0 <= i <= depth().
  const Rational& left(std::uint64_t i) const { return i < steps.size() ? steps[i].p : final_p; }
  const Rational& right(std::uint64_t i) const { return i < steps.size() ? steps[i].q : final_q; }
};

struct BisectionOptions {
  int start_precision = 0;      // first k tried at each step
  std::uint64_t step_fuel = 32; // precisions k0, k0+2, ... tried per step
};

/// Thrown when a midpoint image is apart from neither endpoint image within
/// the per-step budget. Carries the trace up to the stalled step.
class StepStalledError : public Error {
 public:
  StepStalledError(std::uint64_t step, BisectionTrace partial)
      : Error(ErrorKind::StepStalled, "no apartness found at step " + std::to_string(step)),
        step_(step),
        partial_(std::move(partial)) {}

  std::uint64_t step() const { return step_; }
  const BisectionTrace& partial() const { return partial_; }

 private:
  std::uint64_t step_;
  BisectionTrace partial_;
};

/// Nested-interval search between two points whose images are apart.
/// At each step the midpoint image is compared with both endpoint images at
/// growing precision and the half with apart endpoint images is kept,
/// preferring the left half when both qualify at the same precision.
///
/// Throws Error(InvalidArgument) unless p < q, Error(NoInitialGap) if f(p)
/// and f(q) are not separated within gap_fuel, StepStalledError if a step
/// exhausts its budget.
BisectionTrace bisect(const FunctionOracle& f, const Rational& p, const Rational& q, std::uint64_t gap_fuel,
                      std::uint64_t depth, const BisectionOptions& options = {});

enum class Endpoint { Left, Right };

/// The real pinned down by the trace, read off the left (or right)
/// endpoints. Regulator: smallest i >= 1 with (q0 - p0) 2^-i < 2^-k.
Crn limit_point(const BisectionTrace& trace, Endpoint side = Endpoint::Left);

/// JSON array of {i, p, q, r, chosen, witness_k}.
std::string trace_to_json(const BisectionTrace& trace);

struct LocalConstancyClaim {
  Crn point;
  int radius_exp;  // G(x)
  Crn value;
};

struct LocalConstancyReport {
  bool passed;
  std::uint64_t samples_checked;
  std::optional<Rational> counterexample;
};

/// Sample points strictly inside an open ball of radius `radius` around
/// `center`: the center first, then points pairing an endpoint-biased run
/// (+-(1 - 2^-i)) with a van der Corput run, both scaled by the radius.
std::vector<Rational> ball_samples(const Rational& center, const Rational& radius, std::uint64_t count);

/// Evaluates f at `samples` points of B(point, radius_exp) and checks each
/// image is within 2 * 2^-k of the claimed value at precision k.
LocalConstancyReport check_local_constancy(const FunctionOracle& f, const LocalConstancyClaim& claim,
                                           std::uint64_t samples, int k);

}  // namespace constructive
