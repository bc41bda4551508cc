#include "kdw/error.hpp"

namespace kdw {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EvenDenominator: return "EvenDenominator";
    case Errc::ConductorMismatch: return "ConductorMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotRational: return "NotRational";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::NoSolution: return "NoSolution";
    case Errc::InvalidSeifert: return "InvalidSeifert";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

bool Error::internal() const noexcept {
  return code_ == Errc::NotRational || code_ == Errc::NoSolution ||
         code_ == Errc::EvenDenominator;
}

}  // namespace kdw
