#include "constructive/machine.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "constructive/error.hpp"

namespace constructive {

namespace {

using Wide = unsigned __int128;

constexpr Wide kIndexLimit = static_cast<Wide>(std::numeric_limits<std::uint64_t>::max());

std::uint64_t alphabet_size(std::uint64_t length) { return 2 * length + 5; }

// A^L, saturated just above the 64-bit index range.
Wide block_size(std::uint64_t length) {
  const Wide base = alphabet_size(length);
  Wide count = 1;
  for (std::uint64_t i = 0; i < length; ++i) {
    count *= base;
    if (count > kIndexLimit) return kIndexLimit + 1;
  }
  return count;
}

Instruction decode_digit(std::uint64_t digit) {
  if (digit == 0) return Instruction::halt();
  if (digit <= 2) return Instruction::inc(static_cast<unsigned>(digit - 1));
  const std::uint64_t rest = digit - 3;
  return Instruction::djz(static_cast<unsigned>(rest % 2), rest / 2);
}

std::uint64_t encode_digit(const Instruction& ins) {
  switch (ins.op) {
    case Opcode::Halt: return 0;
    case Opcode::Inc: return 1 + ins.counter;
    case Opcode::DecOrJump: return 3 + 2 * ins.target + ins.counter;
  }
  return 0;
}

}  // namespace

Program decode(std::uint64_t index) {
  if (index == 0) return {};
  Wide remaining = index - 1;
  std::uint64_t length = 1;
  for (;;) {
    const Wide count = block_size(length);
    if (remaining < count) break;
    remaining -= count;
    ++length;
  }
  const std::uint64_t base = alphabet_size(length);
  Program program(length);
  for (std::uint64_t i = length; i-- > 0;) {
    program[i] = decode_digit(static_cast<std::uint64_t>(remaining % base));
    remaining /= base;
  }
  return program;
}

Program canonicalize(Program program) {
  const std::uint64_t length = program.size();
  for (auto& ins : program) {
    if (ins.op == Opcode::DecOrJump) {
      ins.target = std::min(ins.target, length);
    } else {
      ins.target = 0;
    }
    if (ins.op == Opcode::Halt) ins.counter = 0;
  }
  return program;
}

bool is_canonical(const Program& program) { return canonicalize(program) == program; }

std::uint64_t encode(const Program& raw) {
  for (const auto& ins : raw) {
    if (ins.op != Opcode::Halt && ins.counter > 1) {
      throw Error(ErrorKind::InvalidArgument, "counter " + std::to_string(ins.counter) + " out of range");
    }
  }
  const Program program = canonicalize(raw);
  const std::uint64_t length = program.size();
  if (length == 0) return 0;
  Wide offset = 1;
  for (std::uint64_t l = 1; l < length; ++l) {
    offset += block_size(l);
    if (offset > kIndexLimit) throw Error(ErrorKind::InvalidArgument, "program index exceeds 64 bits");
  }
  const Wide base = alphabet_size(length);
  Wide value = 0;
  for (const auto& ins : program) {
    value = value * base + encode_digit(ins);
    if (value > kIndexLimit) throw Error(ErrorKind::InvalidArgument, "program index exceeds 64 bits");
  }
  const Wide index = offset + value;
  if (index > kIndexLimit) throw Error(ErrorKind::InvalidArgument, "program index exceeds 64 bits");
  return static_cast<std::uint64_t>(index);
}

RunState step(const RunState& state, const Program& program) {
  if (state.halted) return state;
  RunState next = state;
  ++next.steps_executed;
  if (state.ip >= program.size()) {
    next.halted = true;
    return next;
  }
  const Instruction& ins = program[state.ip];
  switch (ins.op) {
    case Opcode::Halt:
      next.halted = true;
      break;
    case Opcode::Inc:
      ++next.counters[ins.counter];
      ++next.ip;
      break;
    case Opcode::DecOrJump:
      if (next.counters[ins.counter] > 0) {
        --next.counters[ins.counter];
        ++next.ip;
      } else {
        next.ip = ins.target;
      }
      break;
  }
  return next;
}

HaltReport halts_within(const Program& program, std::uint64_t budget) {
  if (budget == 0) throw Error(ErrorKind::InvalidArgument, "budget must be at least 1");
  RunState state;
  while (state.steps_executed < budget) {
    state = step(state, program);
    if (state.halted) return {true, state.steps_executed};
  }
  return {false, std::nullopt};
}

HaltReport halts_within(std::uint64_t index, std::uint64_t budget) { return halts_within(decode(index), budget); }

std::vector<std::uint64_t> enumerate_halters(std::span<const std::uint64_t> pool, std::uint64_t budget) {
  if (budget == 0) throw Error(ErrorKind::InvalidArgument, "budget must be at least 1");
  std::vector<std::uint64_t> indices(pool.begin(), pool.end());
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());

  struct Runner {
    std::uint64_t index;
    Program program;
    RunState state;
  };
  std::vector<Runner> running;
  running.reserve(indices.size());
  for (auto index : indices) running.push_back({index, decode(index), {}});

  std::vector<std::uint64_t> halters;
  for (std::uint64_t s = 1; s <= budget && !running.empty(); ++s) {
    std::erase_if(running, [&](Runner& r) {
      r.state = step(r.state, r.program);
      if (!r.state.halted) return false;
      halters.push_back(r.index);
      return true;
    });
  }
  return halters;
}

std::vector<std::uint64_t> enumerate_halters(std::uint64_t index_bound, std::uint64_t budget) {
  std::vector<std::uint64_t> pool(index_bound);
  std::iota(pool.begin(), pool.end(), std::uint64_t{0});
  return enumerate_halters(pool, budget);
}

Program parse_program(std::string_view text) {
  Program program;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string op;
    if (!(fields >> op)) continue;
    auto fail = [&](const std::string& why) {
      throw Error(ErrorKind::Parse, "program line " + std::to_string(line_no) + ": " + why);
    };
    Instruction ins;
    if (op == "HALT") {
      ins = Instruction::halt();
    } else if (op == "INC" || op == "DJZ") {
      long long c = -1;
      if (!(fields >> c) || (c != 0 && c != 1)) fail("counter must be 0 or 1");
      if (op == "INC") {
        ins = Instruction::inc(static_cast<unsigned>(c));
      } else {
        long long t = -1;
        if (!(fields >> t) || t < 0) fail("DJZ needs a non-negative target");
        ins = Instruction::djz(static_cast<unsigned>(c), static_cast<std::uint64_t>(t));
      }
    } else {
      fail("unknown instruction '" + op + "'");
    }
    std::string extra;
    if (fields >> extra) fail("trailing text '" + extra + "'");
    program.push_back(ins);
  }
  return program;
}

std::string format_program(const Program& program) {
  std::string out;
  for (const auto& ins : program) {
    switch (ins.op) {
      case Opcode::Halt: out += "HALT\n"; break;
      case Opcode::Inc: out += "INC " + std::to_string(ins.counter) + "\n"; break;
      case Opcode::DecOrJump:
        out += "DJZ " + std::to_string(ins.counter) + " " + std::to_string(ins.target) + "\n";
        break;
    }
  }
  return out;
}

}  // namespace constructive
