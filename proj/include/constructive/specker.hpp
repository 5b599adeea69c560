#pragma once

// A Specker sequence over [a, b] and the two sets it splits the interval into:
//
//   A = union of A_n = [a, s_n)      (open, with explicit ball certificates)
//   B = intersection of B_n = [s_n, b]
//
// Terms are s_n = a + (b - a) * sum_{j <= n} 2^-(h(j) + 2), where h is an
// injective enumeration of halting program indices. Because h is injective
// the sum stays below 1/2, so every term lies in [a, a + (b - a)/2). The
// supremum would decide the halting set, so it is not a computable real.
//
// Membership in A is semidecidable (find n with x < s_n) and x not in B is
// the same predicate. Membership in B has no finite witness: for a point at
// or beyond every discovered term the answer stays Unknown however much fuel
// is spent.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "constructive/crn.hpp"
#include "constructive/rational.hpp"
#include "constructive/search.hpp"

namespace constructive {

struct IntervalSpec {
  Rational a;
  Rational b;

  /// Throws Error(InvalidArgument) unless a < b.
  static IntervalSpec make(const Rational& a, const Rational& b);
  bool contains(const Rational& x) const { return a <= x && x <= b; }
};

struct EnumerationSource {
  std::uint64_t index_bound;
  std::uint64_t budget;
};

class SpeckerSeq {
 public:
  /// `enumeration` must be injective; throws Error(InvalidArgument) otherwise.
  SpeckerSeq(IntervalSpec interval, std::vector<std::uint64_t> enumeration);

  /// h = enumerate_halters(index_bound, budget).
  static SpeckerSeq from_machines(IntervalSpec interval, EnumerationSource source);

  const IntervalSpec& interval() const { return interval_; }
  const std::vector<std::uint64_t>& enumeration() const { return enumeration_; }
  const std::optional<EnumerationSource>& source() const { return source_; }

  /// Number of terms the configured enumeration supports.
  std::uint64_t available() const { return terms_.size(); }

  /// s_n. Throws Error(EnumerationExhausted) if n >= available().
  const Rational& term(std::uint64_t n) const;

 private:
  IntervalSpec interval_;
  std::vector<std::uint64_t> enumeration_;
  std::optional<EnumerationSource> source_;
  std::vector<Rational> terms_;
};

using TermIndex = std::uint64_t;

class SeparatedSets {
 public:
  explicit SeparatedSets(SpeckerSeq seq) : seq_(std::move(seq)) {}

  const SpeckerSeq& specker() const { return seq_; }
  const IntervalSpec& interval() const { return seq_.interval(); }

  bool in_A_level(const Rational& x, std::uint64_t n) const;  // a <= x < s_n
  bool in_B_level(const Rational& x, std::uint64_t n) const;  // s_n <= x <= b

 private:
  SpeckerSeq seq_;
};

/// Accepts with the first n < fuel such that x < s_n. Searches stop early,
/// with Unknown, when the enumeration runs out of terms.
/// Throws Error(OutOfInterval) if x is outside [a, b].
SearchOutcome<TermIndex> in_A(const SeparatedSets& sets, const Rational& x, std::uint64_t fuel);

/// x is outside some B_n. Same predicate as in_A, so the witnesses coincide.
SearchOutcome<TermIndex> not_in_B(const SeparatedSets& sets, const Rational& x, std::uint64_t fuel);

/// x lies in B_n for every n below min(levels, available()).
bool in_B_at_levels(const SeparatedSets& sets, const Rational& x, std::uint64_t levels);

/// Membership in A for a real given only by approximations: a level n
/// accepts once compare_with_gap(x, s_n, k) reports Less. WithinGap levels
/// are skipped, so a point too close to every term stays Unknown.
SearchOutcome<TermIndex> in_A(const SeparatedSets& sets, const Crn& x, int k, std::uint64_t fuel);

/// Open ball of radius 2^-radius_exp.
struct Ball {
  Rational center;
  int radius_exp;

  Rational radius() const { return dyadic(radius_exp); }
  bool contains(const Rational& y) const { return (y - center).abs() < radius(); }
};

struct OpennessCertificate {
  Rational point;
  Ball ball;
  TermIndex witness_index;
  char set = 'A';
};

/// Ball around x inside A_n, with the smallest r such that x + 2^-r <= s_n.
/// Throws Error(InvalidWitness) unless x < s_n.
OpennessCertificate openness_certificate_A(const SeparatedSets& sets, const Rational& x, TermIndex n);

/// Exact re-check: the ball, intersected with [a, b], lies inside A_n.
bool verify_certificate(const SeparatedSets& sets, const OpennessCertificate& cert);

/// Looks for a Specker term strictly inside the ball B(x, radius_exp). An
/// Accept shows that this ball is not contained in B.
SearchOutcome<TermIndex> pseudo_open_probe_B(const SeparatedSets& sets, const Rational& x, int radius_exp,
                                              std::uint64_t fuel);

struct DisjointnessReport {
  Rational x;
  std::uint64_t fuel;
  SearchOutcome<TermIndex> outcome_A;
  SearchOutcome<TermIndex> outcome_B;  // the not-in-B search
  std::uint64_t tested_levels;
  bool in_B_at_tested_levels;

  /// A accepted while x sat in every tested B_n. Never true.
  bool double_accept() const { return outcome_A.accepted() && in_B_at_tested_levels; }
  bool witnesses_agree() const { return outcome_A.witness() == outcome_B.witness(); }
};

DisjointnessReport disjointness_check(const SeparatedSets& sets, const Rational& x, std::uint64_t fuel);

struct ProbeReport {
  Rational x;
  int radius_exp;
  std::uint64_t fuel;
  SearchOutcome<TermIndex> outcome;
};

ProbeReport probe_report(const SeparatedSets& sets, const Rational& x, int radius_exp, std::uint64_t fuel);

/// One-line JSON objects with the fields x, outcome_A, outcome_B, witness, fuel.
std::string to_json_line(const DisjointnessReport& report);
std::string to_json_line(const ProbeReport& report);

std::string describe(const SearchOutcome<TermIndex>& outcome);

}  // namespace constructive
