#pragma once

#include <stdexcept>
#include <string>

namespace phkit {

enum class ErrorKind {
  InvalidInput,
  DomainError,
  NotHermitian,
  NotPTSymmetric,
  CellMismatch,
  PairNotCompatible,
  ProportionalMetrics,
  ScalarGUnsupported,
  DimensionMismatch,
  EmptyLevelSet,
  NoSolution,
  GridOverflow,
  IoError,
};

const char* to_string(ErrorKind kind);

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
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotPTSymmetric: return "NotPTSymmetric";
    case ErrorKind::CellMismatch: return "CellMismatch";
    case ErrorKind::PairNotCompatible: return "PairNotCompatible";
    case ErrorKind::ProportionalMetrics: return "ProportionalMetrics";
    case ErrorKind::ScalarGUnsupported: return "ScalarGUnsupported";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyLevelSet: return "EmptyLevelSet";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::GridOverflow: return "GridOverflow";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace phkit
