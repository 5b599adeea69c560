#include "constructive/capture.hpp"

#include "constructive/error.hpp"

namespace constructive {

std::uint64_t q_of(const Program& program, std::uint64_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "Q(n, k) needs k >= 1");
  const HaltReport report = halts_within(program, k);
  return report.halted ? *report.at_step : k;
}

std::uint64_t q_of(std::uint64_t program_index, std::uint64_t k) { return q_of(decode(program_index), k); }

CaptureSequence::CaptureSequence(std::uint64_t program_index, Sequence base)
    : index_(program_index), program_(decode(program_index)), base_(std::move(base)) {}

Sequence CaptureSequence::derived() const {
  return [self = *this](std::uint64_t k) { return self.term(k); };
}

CaptureSequence capture_sequence(std::uint64_t program_index, Sequence base) {
  return CaptureSequence(program_index, std::move(base));
}

}  // namespace constructive
