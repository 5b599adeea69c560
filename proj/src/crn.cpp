#include "constructive/crn.hpp"

#include <algorithm>

#include "constructive/error.hpp"

namespace constructive {

struct Crn::Impl {
  Sequence seq;
  Regulator reg;
  std::optional<Rational> exact;
};

namespace {

void require_precision(int k) {
  if (k < 0) throw Error(ErrorKind::NegativePrecision, "precision exponent " + std::to_string(k));
}

}  // namespace

Crn Crn::make(Sequence seq, Regulator reg) {
  return Crn(std::make_shared<const Impl>(Impl{std::move(seq), std::move(reg), std::nullopt}));
}

Crn Crn::from_rational(const Rational& q) {
  return Crn(std::make_shared<const Impl>(
      Impl{[q](std::uint64_t) { return q; }, [](int) -> std::uint64_t { return 1; }, q}));
}

Crn Crn::from_sequence(Sequence seq, Regulator reg) {
  Regulator monotone = [reg = std::move(reg)](int k) {
    std::uint64_t best = 1;
    for (int j = 0; j <= k; ++j) best = std::max(best, reg(j));
    return best;
  };
  return make(std::move(seq), std::move(monotone));
}

Rational Crn::term(std::uint64_t n) const { return impl_->seq(n); }

std::uint64_t Crn::regulator(int k) const {
  require_precision(k);
  return impl_->reg(k);
}

Rational Crn::approx(int k) const { return term(regulator(k) + 1); }

const std::optional<Rational>& Crn::exact() const { return impl_->exact; }

Crn operator+(const Crn& x, const Crn& y) {
  return Crn::make([x, y](std::uint64_t n) { return x.term(n) + y.term(n); },
                   [x, y](int k) { return std::max(x.regulator(k + 1), y.regulator(k + 1)); });
}

Crn operator-(const Crn& x) {
  return Crn::make([x](std::uint64_t n) { return -x.term(n); }, [x](int k) { return x.regulator(k); });
}

Crn operator-(const Crn& x, const Crn& y) { return x + (-y); }

Crn abs(const Crn& x) {
  return Crn::make([x](std::uint64_t n) { return x.term(n).abs(); }, [x](int k) { return x.regulator(k); });
}

Crn min(const Crn& x, const Crn& y) {
  return Crn::make([x, y](std::uint64_t n) { return min(x.term(n), y.term(n)); },
                   [x, y](int k) { return std::max(x.regulator(k + 1), y.regulator(k + 1)); });
}

Crn max(const Crn& x, const Crn& y) {
  return Crn::make([x, y](std::uint64_t n) { return max(x.term(n), y.term(n)); },
                   [x, y](int k) { return std::max(x.regulator(k + 1), y.regulator(k + 1)); });
}

Crn operator*(const Crn& x, const Crn& y) {
  // Past reg(0) every term stays below |approx(., 0)| + 1 in magnitude.
  const Rational bound_x = x.approx(0).abs() + Rational(1);
  const Rational bound_y = y.approx(0).abs() + Rational(1);
  const int shift = ceil_log2(bound_x + bound_y + Rational(1)) + 1;
  return Crn::make([x, y](std::uint64_t n) { return x.term(n) * y.term(n); },
                   [x, y, shift](int k) { return std::max(x.regulator(k + shift), y.regulator(k + shift)); });
}

// 1/y given |approx(y, k + 2)| > 2^-k. Past that index every term exceeds
// 2^-(k+1) in magnitude, so the reciprocal needs 2k + 2 extra bits.
Crn reciprocal(const Crn& y, int k) {
  const std::uint64_t floor_index = y.regulator(k + 2);
  const int shift = 2 * k + 2;
  return Crn::make(
      [y, floor_index](std::uint64_t n) { return Rational(1) / y.term(std::max(n, floor_index + 1)); },
      [y, floor_index, shift](int j) { return std::max(y.regulator(j + shift), floor_index); });
}

ApartnessWitness witness_against_zero(const Crn& y, int k) {
  require_precision(k);
  return {k, y.approx(k + 2).sign() < 0 ? ApartSign::FirstSmaller : ApartSign::FirstLarger};
}

Crn divide(const Crn& x, const Crn& y, const ApartnessWitness& w) {
  if (w.k < 0 || !verify_apartness(y, Crn::from_rational(Rational(0)), w)) {
    throw Error(ErrorKind::InvalidWitness,
                "divisor is not certified apart from zero at precision " + std::to_string(w.k));
  }
  return x * reciprocal(y, w.k);
}

bool verify_apartness(const Crn& x, const Crn& y, const ApartnessWitness& w) {
  if (w.k < 0) return false;
  const Rational diff = x.approx(w.k + 2) - y.approx(w.k + 2);
  if (diff.abs() <= dyadic(w.k)) return false;
  return (diff.sign() < 0) == (w.sign == ApartSign::FirstSmaller);
}

SearchOutcome<ApartnessWitness> apartness_search(const Crn& x, const Crn& y, std::uint64_t fuel) {
  const SemiDecider<ApartnessWitness> apart = [&](std::uint64_t step) -> std::optional<ApartnessWitness> {
    const int k = static_cast<int>(step - 1);
    const Rational diff = x.approx(k + 2) - y.approx(k + 2);
    if (diff.abs() <= dyadic(k)) return std::nullopt;
    return ApartnessWitness{k, diff.sign() < 0 ? ApartSign::FirstSmaller : ApartSign::FirstLarger};
  };
  return markov_search(apart, fuel);
}

GapOrder compare_with_gap(const Crn& x, const Crn& y, int k) {
  require_precision(k);
  const Rational a = x.approx(k + 2);
  const Rational b = y.approx(k + 2);
  const Rational gap = dyadic(k);
  if (a < b - gap) return GapOrder::Less;
  if (a > b + gap) return GapOrder::Greater;
  return GapOrder::WithinGap;
}

}  // namespace constructive
