#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace streak {

enum class errc {
  division_by_zero,
  mixed_streaks,
  budget_exceeded,
  precondition_failed,
  not_dense,
  not_positive,
  empty_set,
  not_apart_from_zero,
  not_certified_positive,
  invalid_certificate,
  not_eventually_positive,
  not_located_within_budget,
  syntax_error,
  unknown_constant,
  unknown_streak,
  apartness_undecided,
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::mixed_streaks: return "MixedStreaks";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::precondition_failed: return "PreconditionFailed";
    case errc::not_dense: return "NotDense";
    case errc::not_positive: return "NotPositive";
    case errc::empty_set: return "EmptySet";
    case errc::not_apart_from_zero: return "NotApartFromZero";
    case errc::not_certified_positive: return "NotCertifiedPositive";
    case errc::invalid_certificate: return "InvalidCertificate";
    case errc::not_eventually_positive: return "NotEventuallyPositive";
    case errc::not_located_within_budget: return "NotLocatedWithinBudget";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_constant: return "UnknownConstant";
    case errc::unknown_streak: return "UnknownStreak";
    case errc::apartness_undecided: return "ApartnessUndecided";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the `errc` kinds.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(errc::syntax_error, what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace streak
