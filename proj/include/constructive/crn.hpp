#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include "constructive/rational.hpp"
#include "constructive/search.hpp"

namespace constructive {

/// Term n of a fundamental sequence, n >= 1. Must be pure.
using Sequence = std::function<Rational(std::uint64_t n)>;

/// Maps a precision exponent k to an index threshold M >= 1 such that
/// |x_m - x_n| < 2^(-k) for all m, n > M. Must be pure.
using Regulator = std::function<std::uint64_t(int k)>;

/// A constructive real: a rational Cauchy sequence paired with its regulator.
///
/// Copies are cheap and share the underlying procedures. A Crn built from a
/// rational remembers that rational, which is how exact-input oracles (and
/// the bisection engine) recover it; arithmetic results never claim exactness.
class Crn {
 public:
  static Crn from_rational(const Rational& q);

  /// The regulator is normalized to its running maximum (and to >= 1), so
  /// the stored regulator is monotone even if `reg` is not.
  static Crn from_sequence(Sequence seq, Regulator reg);

  Rational term(std::uint64_t n) const;
  std::uint64_t regulator(int k) const;

  /// term(regulator(k) + 1); within 2^(-k) of the limit.
  Rational approx(int k) const;

  const std::optional<Rational>& exact() const;

 private:
  struct Impl;
  explicit Crn(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  // Used by the combinators, whose regulators are monotone by construction.
  static Crn make(Sequence seq, Regulator reg);

  friend Crn operator+(const Crn&, const Crn&);
  friend Crn operator-(const Crn&);
  friend Crn operator*(const Crn&, const Crn&);
  friend Crn abs(const Crn&);
  friend Crn min(const Crn&, const Crn&);
  friend Crn max(const Crn&, const Crn&);
  friend Crn reciprocal(const Crn&, int);

  std::shared_ptr<const Impl> impl_;
};

Crn operator+(const Crn& x, const Crn& y);
Crn operator-(const Crn& x);
Crn operator-(const Crn& x, const Crn& y);
Crn operator*(const Crn& x, const Crn& y);
Crn abs(const Crn& x);
Crn min(const Crn& x, const Crn& y);
Crn max(const Crn& x, const Crn& y);

enum class ApartSign { FirstSmaller, FirstLarger };

/// Finite evidence that two reals differ: at precision k+2 the
/// approximations are more than 2^(-k) apart, in the direction of `sign`.
struct ApartnessWitness {
  int k;
  ApartSign sign;

  friend bool operator==(const ApartnessWitness&, const ApartnessWitness&) = default;
};

/// Re-evaluates the witness from scratch.
bool verify_apartness(const Crn& x, const Crn& y, const ApartnessWitness& w);

/// Tries k = 0 .. fuel-1 and accepts at the first k whose approximations at
/// k+2 are more than 2^(-k) apart. Equal reals only ever produce Unknown.
SearchOutcome<ApartnessWitness> apartness_search(const Crn& x, const Crn& y, std::uint64_t fuel);

/// Quotient x / y. The witness must certify y apart from zero:
/// |approx(y, w.k + 2)| > 2^(-w.k), with w.sign read as the order of (y, 0).
/// Throws Error(InvalidWitness) otherwise.
Crn divide(const Crn& x, const Crn& y, const ApartnessWitness& w);

/// Builds the witness for y against zero at precision k, with the sign taken
/// from the approximation. Does not validate it; divide() does.
ApartnessWitness witness_against_zero(const Crn& y, int k);

enum class GapOrder { Less, Greater, WithinGap };

/// Decidable comparison up to a 2^(-k) band. Never reports equality.
GapOrder compare_with_gap(const Crn& x, const Crn& y, int k);

}  // namespace constructive
