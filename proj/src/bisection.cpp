#include "constructive/bisection.hpp"

#include <algorithm>
#include <json.hpp>

namespace constructive {

namespace {

std::optional<ApartnessWitness> apart_at(const Crn& x, const Crn& y, int k) {
  const Rational diff = x.approx(k + 2) - y.approx(k + 2);
  if (diff.abs() <= dyadic(k)) return std::nullopt;
  return ApartnessWitness{k, diff.sign() < 0 ? ApartSign::FirstSmaller : ApartSign::FirstLarger};
}

// Base-2 radical inverse of i >= 1: 1/2, 1/4, 3/4, 1/8, ...
Rational van_der_corput(std::uint64_t i) {
  BigInt num = 0;
  BigInt den = 1;
  while (i > 0) {
    num = 2 * num + (i & 1U);
    den *= 2;
    i >>= 1;
  }
  return Rational(num, den);
}

}  // namespace

FunctionOracle step_oracle(const Rational& jump) {
  return [jump](const Crn& x) {
    const auto& exact = x.exact();
    if (!exact) throw Error(ErrorKind::InvalidArgument, "step oracle needs an exact rational input");
    return Crn::from_rational(Rational(*exact < jump ? 0 : 1));
  };
}

FunctionOracle constant_oracle(const Rational& value) {
  return [value](const Crn&) { return Crn::from_rational(value); };
}

const char* to_string(Half half) { return half == Half::Left ? "Left" : "Right"; }

BisectionTrace bisect(const FunctionOracle& f, const Rational& p, const Rational& q, std::uint64_t gap_fuel,
                      std::uint64_t depth, const BisectionOptions& options) {
  if (!(p < q)) throw Error(ErrorKind::InvalidArgument, "bisection needs p < q");
  if (options.start_precision < 0) throw Error(ErrorKind::NegativePrecision, "start precision");
  require_fuel(options.step_fuel);

  Crn image_p = f(Crn::from_rational(p));
  Crn image_q = f(Crn::from_rational(q));
  const auto initial = apartness_search(image_p, image_q, gap_fuel);
  if (!initial.accepted()) {
    throw Error(ErrorKind::NoInitialGap, "f(" + p.to_string() + ") and f(" + q.to_string() +
                                             ") not separated within fuel " + std::to_string(gap_fuel));
  }

  BisectionTrace trace{p, q, {}, p, q, initial.accept().witness};
  trace.steps.reserve(depth);
  Rational lo = p;
  Rational hi = q;
  ApartnessWitness current = initial.accept().witness;

  for (std::uint64_t i = 0; i < depth; ++i) {
    const Rational mid = (lo + hi) / Rational(2);
    const Crn image_mid = f(Crn::from_rational(mid));

    std::optional<Half> chosen;
    ApartnessWitness next{};
    for (std::uint64_t attempt = 0; attempt < options.step_fuel && !chosen; ++attempt) {
      const int k = options.start_precision + 2 * static_cast<int>(attempt);
      if (auto w = apart_at(image_p, image_mid, k)) {
        chosen = Half::Left;
        next = *w;
      } else if (auto w2 = apart_at(image_mid, image_q, k)) {
        chosen = Half::Right;
        next = *w2;
      }
    }
    if (!chosen) {
      trace.final_p = lo;
      trace.final_q = hi;
      trace.final_witness = current;
      throw StepStalledError(i, std::move(trace));
    }

    trace.steps.push_back({i, lo, hi, mid, current, *chosen});
    if (*chosen == Half::Left) {
      hi = mid;
      image_q = image_mid;
    } else {
      lo = mid;
      image_p = image_mid;
    }
    current = next;
  }

  trace.final_p = lo;
  trace.final_q = hi;
  trace.final_witness = current;
  return trace;
}

Crn limit_point(const BisectionTrace& trace, Endpoint side) {
  const Rational width = trace.q0 - trace.p0;
  const std::uint64_t depth = trace.depth();
  Sequence seq = [trace, side, depth](std::uint64_t n) {
    const std::uint64_t i = std::min(n, depth);
    return side == Endpoint::Left ? trace.left(i) : trace.right(i);
  };
  Regulator reg = [width](int k) -> std::uint64_t {
    // smallest i with 2^i > width * 2^k
    const Rational scaled = width / dyadic(k);
    int i = ceil_log2(scaled);
    if (dyadic(i) * scaled == Rational(1)) ++i;
    return static_cast<std::uint64_t>(std::max(i, 1));
  };
  return Crn::from_sequence(std::move(seq), std::move(reg));
}

std::string trace_to_json(const BisectionTrace& trace) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& s : trace.steps) {
    nlohmann::ordered_json j;
    j["i"] = s.i;
    j["p"] = s.p.to_string();
    j["q"] = s.q.to_string();
    j["r"] = s.r.to_string();
    j["chosen"] = to_string(s.chosen);
    j["witness_k"] = s.witness.k;
    steps.push_back(std::move(j));
  }
  return steps.dump(2);
}

std::vector<Rational> ball_samples(const Rational& center, const Rational& radius, std::uint64_t count) {
  std::vector<Rational> out;
  out.reserve(count);
  if (count == 0) return out;
  out.push_back(center);
  for (std::uint64_t i = 1; out.size() < count; ++i) {
    const Rational edge = Rational(1) - dyadic(static_cast<int>(std::min<std::uint64_t>(i, 4096)));
    const Rational spread = van_der_corput(i);
    for (const Rational& t : {-edge, edge, -spread, spread}) {
      if (out.size() == count) break;
      out.push_back(center + t * radius);
    }
  }
  return out;
}

LocalConstancyReport check_local_constancy(const FunctionOracle& f, const LocalConstancyClaim& claim,
                                           std::uint64_t samples, int k) {
  if (claim.radius_exp < 0) throw Error(ErrorKind::NegativePrecision, "ball radius exponent");
  Rational center;
  Rational radius;
  if (const auto& exact = claim.point.exact()) {
    center = *exact;
    radius = dyadic(claim.radius_exp);
  } else {
    // |center - x| <= 2^-(G+1), so this smaller ball stays inside B(x, G).
    center = claim.point.approx(claim.radius_exp + 1);
    radius = dyadic(claim.radius_exp + 1);
  }
  const Rational claimed = claim.value.approx(k);
  const Rational tolerance = Rational(2) * dyadic(k);
  std::uint64_t checked = 0;
  for (const Rational& x : ball_samples(center, radius, samples)) {
    ++checked;
    const Rational image = f(Crn::from_rational(x)).approx(k);
    if ((image - claimed).abs() > tolerance) return {false, checked, x};
  }
  return {true, checked, std::nullopt};
}

}  // namespace constructive
