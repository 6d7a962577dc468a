#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dimlab {

enum class Errc {
  CapExceeded,
  InvalidPermutation,
  InvalidTable,
  ParentMismatch,
  NotNormal,
  NotNilpotent,
  NotAbelianQuotient,
  NotDescending,
  AxiomViolation,
  RingMismatch,
  DimensionMismatch,
  CostGuard,
  DegreeOutOfRange,
  MismatchedGrading,
  UnknownName,
  InvalidArgument,
  ParseError,
  Internal,
};

std::string_view to_string(Errc code);

// All library failures are reported through this exception type; `code()`
// identifies the failure class and `what()` names the offending input.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// [N_i, N_j] not contained in N_{i+j}.
class AxiomViolationError : public Error {
 public:
  AxiomViolationError(std::size_t i, std::size_t j, const std::string& message)
      : Error(Errc::AxiomViolation, message), i_(i), j_(j) {}

  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace dimlab
