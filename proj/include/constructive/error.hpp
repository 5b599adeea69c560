#pragma once

#include <stdexcept>
#include <string>

namespace constructive {

enum class ErrorKind {
  DivisionByZero,
  NegativePrecision,
  Parse,
  Config,
  InvalidArgument,
  InvalidWitness,
  OutOfInterval,
  EnumerationExhausted,
  NoInitialGap,
  StepStalled,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so front ends can map
/// it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NegativePrecision: return "NegativePrecision";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Config: return "ConfigError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidWitness: return "InvalidWitness";
    case ErrorKind::OutOfInterval: return "OutOfInterval";
    case ErrorKind::EnumerationExhausted: return "EnumerationExhausted";
    case ErrorKind::NoInitialGap: return "NoInitialGap";
    case ErrorKind::StepStalled: return "StepStalled";
  }
  return "Error";
}

}  // namespace constructive
