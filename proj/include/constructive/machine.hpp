#pragma once

// Two-counter register machines with a total Goedel numbering. The halting
// set of this numbering stands in for an enumerable set with undecidable
// membership.
//
// Numbering: index 0 is the empty program. Programs of length L >= 1 occupy
// the next block of A^L indices, A = 2L + 5, read as L base-A digits with the
// first instruction most significant. Digit 0 is HALT, 1 and 2 are INC 0 and
// INC 1, and 3 + 2t + c is DJZ c t for targets t in [0, L]. Targets beyond L
// behave exactly like L (jump past the end) and are folded onto L, which is
// what "canonical" means here.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace constructive {

enum class Opcode { Inc, DecOrJump, Halt };

struct Instruction {
  Opcode op = Opcode::Halt;
  unsigned counter = 0;     // 0 or 1
  std::uint64_t target = 0; // DecOrJump only

  static Instruction inc(unsigned c) { return {Opcode::Inc, c, 0}; }
  static Instruction djz(unsigned c, std::uint64_t t) { return {Opcode::DecOrJump, c, t}; }
  static Instruction halt() { return {Opcode::Halt, 0, 0}; }

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

using Program = std::vector<Instruction>;

Program decode(std::uint64_t index);

/// Inverse of decode on canonical programs; other programs are canonicalized
/// first. Throws Error(InvalidArgument) if the index does not fit 64 bits or
/// a counter is not 0 or 1.
std::uint64_t encode(const Program& program);

Program canonicalize(Program program);
bool is_canonical(const Program& program);

struct RunState {
  std::uint64_t ip = 0;
  std::array<std::uint64_t, 2> counters{0, 0};
  std::uint64_t steps_executed = 0;
  bool halted = false;

  friend bool operator==(const RunState&, const RunState&) = default;
};

/// One step. HALT and a pointer past the end both consume the step that
/// halts the machine. A halted state is returned unchanged.
RunState step(const RunState& state, const Program& program);

struct HaltReport {
  bool halted = false;
  std::optional<std::uint64_t> at_step;

  friend bool operator==(const HaltReport&, const HaltReport&) = default;
};

HaltReport halts_within(const Program& program, std::uint64_t budget);
HaltReport halts_within(std::uint64_t index, std::uint64_t budget);

/// Runs every program in `pool` in lockstep for up to `budget` steps and
/// returns the ones that halt, ordered by (halting step, position in pool).
std::vector<std::uint64_t> enumerate_halters(std::span<const std::uint64_t> pool, std::uint64_t budget);

/// Pool is indices 0 .. index_bound - 1.
std::vector<std::uint64_t> enumerate_halters(std::uint64_t index_bound, std::uint64_t budget);

/// Text format: one instruction per line, `INC c`, `DJZ c t` or `HALT`.
/// Blank lines and `#` comments are ignored. Throws Error(Parse).
Program parse_program(std::string_view text);
std::string format_program(const Program& program);

}  // namespace constructive
