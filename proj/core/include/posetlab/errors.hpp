#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace posetlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Cover relation input contains a directed cycle, so no poset exists.
struct CycleError : Error {
  using Error::Error;
};

// Element or vertex id outside [0, n).
struct IndexError : Error {
  using Error::Error;
};

// Input file rejected; `line` is 1-based.
struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& msg)
      : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Exhaustive search requested beyond the configured instance size.
struct SizeLimitError : Error {
  using Error::Error;
};

// A pair handed to the reversibility machinery is comparable.
struct NotIncomparableError : Error {
  using Error::Error;
};

// Search budget exhausted; best bounds known at abort time are kept so
// callers can still report something useful.
struct BudgetExceededError : Error {
  std::int64_t lower = -1;
  std::int64_t upper = -1;
  BudgetExceededError(const std::string& msg, std::int64_t lo, std::int64_t hi)
      : Error(msg), lower(lo), upper(hi) {}
  explicit BudgetExceededError(const std::string& msg) : Error(msg) {}
};

// Two elements of a reach set unexpectedly share a greedy color.  The
// coloring construction rules this out, so a throw means a bug.
struct ColorCollisionError : std::logic_error {
  using std::logic_error::logic_error;
};

// A partition class that is guaranteed reversible failed its check.
// Never recoverable: it indicates an implementation defect.
struct InternalProofViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Caller violated a documented precondition of a checked operation.
struct PreconditionError : Error {
  using Error::Error;
};

// Parameters outside the domain of a formula (e.g. minor-closed bound
// needs t >= 4).
struct DomainError : Error {
  using Error::Error;
};

}  // namespace posetlab
