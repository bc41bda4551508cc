#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kdw {

enum class Errc {
  EvenDenominator,
  ConductorMismatch,
  DivisionByZero,
  NotRational,
  InvalidArgument,
  NotADivisor,
  NotCoprime,
  TooLarge,
  NotAdmissible,
  NoSolution,
  InvalidSeifert,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

  /// Conditions that only a defect in this library can produce (as opposed to
  /// bad caller input).
  bool internal() const noexcept;

 private:
  Errc code_;
};

}  // namespace kdw
