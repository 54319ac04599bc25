#pragma once

#include <stdexcept>
#include <string>

namespace dsem {

enum class ErrorKind {
  InvalidQuantumNumbers,
  AngleOutOfDomain,
  SingularPoint,
  GammaPole,
  Divergence,
  OutOfRange,
  WrongParity,
  StepExitsDomain,
  InvalidGrid,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so front ends can map
// it onto an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidQuantumNumbers: return "invalid-quantum-numbers";
    case ErrorKind::AngleOutOfDomain: return "angle-out-of-domain";
    case ErrorKind::SingularPoint: return "singular-point";
    case ErrorKind::GammaPole: return "gamma-pole";
    case ErrorKind::Divergence: return "divergence";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::WrongParity: return "wrong-parity";
    case ErrorKind::StepExitsDomain: return "step-exits-domain";
    case ErrorKind::InvalidGrid: return "invalid-grid";
  }
  return "unknown";
}

}  // namespace dsem
