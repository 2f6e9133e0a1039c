#pragma once

/**
 * @file error.hpp
 * @brief Error kinds shared by every hopfdual module.
 */

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfdual {

enum class ErrorKind {
  DimensionMismatch,
  RingMismatch,
  InvalidRing,
  InvalidElement,
  NotInvertible,
  NotConvInvertible,
  OneSidedInverse,
  NotUnital,
  AssociativityMismatch,
  CoinvariantEscape,
  NotFreeSummand,
  SideMismatch,
  NonUniqueSolution,
  CommutativityFailure,
  HypothesisFailed,
  UnknownEntry,
  ParseError,
  ValidationError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotConvInvertible: return "NotConvInvertible";
    case ErrorKind::OneSidedInverse: return "OneSidedInverse";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::AssociativityMismatch: return "AssociativityMismatch";
    case ErrorKind::CoinvariantEscape: return "CoinvariantEscape";
    case ErrorKind::NotFreeSummand: return "NotFreeSummand";
    case ErrorKind::SideMismatch: return "SideMismatch";
    case ErrorKind::NonUniqueSolution: return "NonUniqueSolution";
    case ErrorKind::CommutativityFailure: return "CommutativityFailure";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::UnknownEntry: return "UnknownEntry";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace hopfdual
