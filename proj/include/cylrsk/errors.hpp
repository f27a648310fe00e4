#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "cylrsk/types.hpp"

namespace cylrsk {

/// Input violates a mathematical precondition (pattern containment, chain
/// bound, non-interlacing step, ...).  May carry the offending cells.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what, Witness witness = {})
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const Witness& witness() const noexcept { return witness_; }

 private:
  Witness witness_;
};

/// Text or JSON input could not be parsed.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Floating point evaluation could not be trusted (rounding residual too big,
/// or the magnitude exceeds what a double resolves exactly).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proved property failed at runtime.  Seeing this is a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cylrsk
