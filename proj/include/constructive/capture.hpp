#pragma once

// The capture construction: a base sequence d is re-indexed through the
// step-bounded run of a machine, x_k = d_{Q(n,k)}. If program n never halts
// the derived sequence is d itself; if it halts at step m the derived
// sequence freezes at d_m from k = m on. Which case holds is the halting
// problem, so the two behaviours are only ever observed, never decided.

#include <cstdint>

#include "constructive/crn.hpp"
#include "constructive/machine.hpp"

namespace constructive {

/// k if the program has not halted within k steps, else its halting step.
/// Requires k >= 1.
std::uint64_t q_of(const Program& program, std::uint64_t k);
std::uint64_t q_of(std::uint64_t program_index, std::uint64_t k);

class CaptureSequence {
 public:
  CaptureSequence(std::uint64_t program_index, Sequence base);

  std::uint64_t program_index() const { return index_; }
  const Sequence& base() const { return base_; }

  std::uint64_t q(std::uint64_t k) const { return q_of(program_, k); }
  Rational term(std::uint64_t k) const { return base_(q(k)); }

  /// The derived sequence as a plain fundamental sequence.
  Sequence derived() const;

 private:
  std::uint64_t index_;
  Program program_;
  Sequence base_;
};

CaptureSequence capture_sequence(std::uint64_t program_index, Sequence base);

}  // namespace constructive
