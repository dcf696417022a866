#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lics {

enum class Errc {
  DivisionByZero,
  Overflow,
  Parse,
  DimensionMismatch,
  NotContained,
  NotAlmostComplex,
  DegeneratePoint,
  NotInV,
  NotConjInvariant,
  NotAFoliationPoint,
  NotAutomorphism,
  EvaluationError,
  ZeroParameter,
  InvalidAlgebra,
  UnknownFamily,
  Internal,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library. `code()` names the contract that was
/// violated; `what()` carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lics
