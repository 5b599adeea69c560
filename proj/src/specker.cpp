#include "constructive/specker.hpp"

#include <algorithm>
#include <json.hpp>
#include <limits>
#include <unordered_set>

#include "constructive/error.hpp"
#include "constructive/machine.hpp"

namespace constructive {

namespace {

void require_in_interval(const SeparatedSets& sets, const Rational& x) {
  const auto& iv = sets.interval();
  if (!iv.contains(x)) {
    throw Error(ErrorKind::OutOfInterval,
                x.to_string() + " is outside [" + iv.a.to_string() + ", " + iv.b.to_string() + "]");
  }
}

// First n below min(fuel, available) with x < s_n.
SearchOutcome<TermIndex> first_term_above(const SeparatedSets& sets, const Rational& x, std::uint64_t fuel) {
  require_fuel(fuel);
  const std::uint64_t limit = std::min(fuel, sets.specker().available());
  for (std::uint64_t n = 0; n < limit; ++n) {
    if (x < sets.specker().term(n)) return Accept<TermIndex>{n, n + 1};
  }
  return Unknown{limit};
}

const char* outcome_tag(const SearchOutcome<TermIndex>& outcome) {
  if (outcome.accepted()) return "Accept";
  if (outcome.rejected()) return "Reject";
  return "Unknown";
}

}  // namespace

IntervalSpec IntervalSpec::make(const Rational& a, const Rational& b) {
  if (!(a < b)) throw Error(ErrorKind::InvalidArgument, "interval needs a < b, got [" + a.to_string() + ", " + b.to_string() + "]");
  return {a, b};
}

SpeckerSeq::SpeckerSeq(IntervalSpec interval, std::vector<std::uint64_t> enumeration)
    : interval_(std::move(interval)), enumeration_(std::move(enumeration)) {
  if (!(interval_.a < interval_.b)) throw Error(ErrorKind::InvalidArgument, "interval needs a < b");
  std::unordered_set<std::uint64_t> seen;
  const Rational width = interval_.b - interval_.a;
  Rational sum(0);
  terms_.reserve(enumeration_.size());
  for (auto h : enumeration_) {
    if (!seen.insert(h).second) {
      throw Error(ErrorKind::InvalidArgument, "enumeration repeats index " + std::to_string(h));
    }
    if (h > static_cast<std::uint64_t>(std::numeric_limits<int>::max() - 2)) {
      throw Error(ErrorKind::InvalidArgument, "enumeration index " + std::to_string(h) + " too large");
    }
    sum = sum + dyadic(static_cast<int>(h) + 2);
    terms_.push_back(interval_.a + width * sum);
  }
}

SpeckerSeq SpeckerSeq::from_machines(IntervalSpec interval, EnumerationSource source) {
  SpeckerSeq seq(std::move(interval), enumerate_halters(source.index_bound, source.budget));
  seq.source_ = source;
  return seq;
}

const Rational& SpeckerSeq::term(std::uint64_t n) const {
  if (n >= terms_.size()) {
    std::string origin;
    if (source_) {
      origin = " (index_bound " + std::to_string(source_->index_bound) + ", budget " +
               std::to_string(source_->budget) + ")";
    }
    throw Error(ErrorKind::EnumerationExhausted,
                "term " + std::to_string(n) + " requested but only " + std::to_string(terms_.size()) +
                    " halters discovered" + origin + "; short by " + std::to_string(n + 1 - terms_.size()));
  }
  return terms_[n];
}

bool SeparatedSets::in_A_level(const Rational& x, std::uint64_t n) const {
  return interval().a <= x && x < seq_.term(n);
}

bool SeparatedSets::in_B_level(const Rational& x, std::uint64_t n) const {
  return seq_.term(n) <= x && x <= interval().b;
}

SearchOutcome<TermIndex> in_A(const SeparatedSets& sets, const Rational& x, std::uint64_t fuel) {
  require_in_interval(sets, x);
  return first_term_above(sets, x, fuel);
}

SearchOutcome<TermIndex> not_in_B(const SeparatedSets& sets, const Rational& x, std::uint64_t fuel) {
  require_in_interval(sets, x);
  return first_term_above(sets, x, fuel);
}

bool in_B_at_levels(const SeparatedSets& sets, const Rational& x, std::uint64_t levels) {
  const std::uint64_t limit = std::min(levels, sets.specker().available());
  for (std::uint64_t n = 0; n < limit; ++n) {
    if (!sets.in_B_level(x, n)) return false;
  }
  return true;
}

SearchOutcome<TermIndex> in_A(const SeparatedSets& sets, const Crn& x, int k, std::uint64_t fuel) {
  require_fuel(fuel);
  const std::uint64_t limit = std::min(fuel, sets.specker().available());
  for (std::uint64_t n = 0; n < limit; ++n) {
    if (compare_with_gap(x, Crn::from_rational(sets.specker().term(n)), k) == GapOrder::Less) {
      return Accept<TermIndex>{n, n + 1};
    }
  }
  return Unknown{limit};
}

OpennessCertificate openness_certificate_A(const SeparatedSets& sets, const Rational& x, TermIndex n) {
  require_in_interval(sets, x);
  const Rational& s = sets.specker().term(n);
  if (!(x < s)) {
    throw Error(ErrorKind::InvalidWitness, x.to_string() + " is not below s_" + std::to_string(n) + " = " + s.to_string());
  }
  return {x, Ball{x, precision_for(s - x)}, n, 'A'};
}

bool verify_certificate(const SeparatedSets& sets, const OpennessCertificate& cert) {
  if (cert.set != 'A' || cert.witness_index >= sets.specker().available()) return false;
  if (!sets.interval().contains(cert.point) || cert.ball.center != cert.point || cert.ball.radius_exp < 0) return false;
  // Open ball (x - r, x + r) clipped to [a, b] sits inside [a, s_n) iff x + r <= s_n.
  return cert.point + cert.ball.radius() <= sets.specker().term(cert.witness_index);
}

SearchOutcome<TermIndex> pseudo_open_probe_B(const SeparatedSets& sets, const Rational& x, int radius_exp,
                                              std::uint64_t fuel) {
  require_in_interval(sets, x);
  require_fuel(fuel);
  const Ball ball{x, radius_exp};
  const std::uint64_t limit = std::min(fuel, sets.specker().available());
  for (std::uint64_t m = 0; m < limit; ++m) {
    if (ball.contains(sets.specker().term(m))) return Accept<TermIndex>{m, m + 1};
  }
  return Unknown{limit};
}

DisjointnessReport disjointness_check(const SeparatedSets& sets, const Rational& x, std::uint64_t fuel) {
  auto a = in_A(sets, x, fuel);
  auto b = not_in_B(sets, x, fuel);
  const std::uint64_t levels = std::min(fuel, sets.specker().available());
  return {x, fuel, std::move(a), std::move(b), levels, in_B_at_levels(sets, x, levels)};
}

ProbeReport probe_report(const SeparatedSets& sets, const Rational& x, int radius_exp, std::uint64_t fuel) {
  return {x, radius_exp, fuel, pseudo_open_probe_B(sets, x, radius_exp, fuel)};
}

std::string to_json_line(const DisjointnessReport& report) {
  nlohmann::ordered_json j;
  j["x"] = report.x.to_string();
  j["outcome_A"] = outcome_tag(report.outcome_A);
  j["outcome_B"] = report.outcome_B.accepted() ? "NotInB" : "Unknown";
  const auto w = report.outcome_A.witness() ? report.outcome_A.witness() : report.outcome_B.witness();
  j["witness"] = w ? nlohmann::ordered_json(*w) : nlohmann::ordered_json(nullptr);
  j["fuel"] = report.fuel;
  return j.dump();
}

std::string to_json_line(const ProbeReport& report) {
  nlohmann::ordered_json j;
  j["x"] = report.x.to_string();
  j["outcome_A"] = nullptr;
  j["outcome_B"] = report.outcome.accepted() ? "BallLeavesB" : "Unknown";
  const auto w = report.outcome.witness();
  j["witness"] = w ? nlohmann::ordered_json(*w) : nlohmann::ordered_json(nullptr);
  j["fuel"] = report.fuel;
  j["radius_exp"] = report.radius_exp;
  return j.dump();
}

std::string describe(const SearchOutcome<TermIndex>& outcome) {
  if (outcome.accepted()) {
    return "Accept(n=" + std::to_string(outcome.accept().witness) + ")";
  }
  if (outcome.rejected()) return "Reject(" + outcome.reject().proof_tag + ")";
  return "Unknown(fuel_spent=" + std::to_string(outcome.unknown_info().fuel_spent) + ")";
}

}  // namespace constructive
