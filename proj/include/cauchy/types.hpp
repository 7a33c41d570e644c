#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cauchy {

using complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr complex I{0.0, 1.0};

enum class ErrorCode {
  InvalidGrid,
  InvalidPoint,
  DomainError,
  OnContour,
  NonFiniteResult,
  CapabilityError,
  ContractViolation,
  EndpointSingularity,
  PrescriptionError,
  ParseError,
  UsageError,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// that callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Side { Plus, Minus };

inline bool is_finite(complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace cauchy
