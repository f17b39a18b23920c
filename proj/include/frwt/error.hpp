#pragma once

#include <stdexcept>
#include <string>

namespace frwt {

enum class ErrorKind {
  InvalidGrid,
  GridMismatch,
  InvalidOrder,
  OrderMismatch,
  InvalidSignal,
  ZeroScale,
  NotAWavelet,
  Inadmissible,
  DegeneratePair,
  UnknownWavelet,
  InvalidMollifier,
  InvalidFamily,
  HypothesisViolation,
  Format,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so that front ends
/// (the CLI in particular) can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for failures of a mathematical hypothesis (inadmissible wavelet,
  /// vanishing cross constant, non-compact wavelet where compactness is
  /// required) as opposed to malformed input.
  bool is_hypothesis_violation() const noexcept {
    return kind_ == ErrorKind::Inadmissible || kind_ == ErrorKind::DegeneratePair ||
           kind_ == ErrorKind::HypothesisViolation || kind_ == ErrorKind::NotAWavelet;
  }

 private:
  ErrorKind kind_;
};

}  // namespace frwt
