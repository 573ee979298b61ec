#pragma once

#include <stdexcept>
#include <string>

namespace eulerform {

/// Base for every error raised by the engine.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs that do not fit together (variable counts, ranks, rings).
class StructuralError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// A caller broke an operation precondition (e.g. Betti numbers of a
/// non-minimal resolution).
class ContractError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// A mathematical hypothesis of an invariant failed (infinite length,
/// non-vanishing tail, ...). Carries the name of the failed hypothesis.
class HypothesisViolated : public AlgebraError {
 public:
  HypothesisViolated(std::string hypothesis, const std::string& what)
      : AlgebraError(what), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Homological degree requested past the computed truncation of an
/// infinite resolution.
class InsufficientTruncation : public AlgebraError {
 public:
  InsufficientTruncation(int requested, int bound)
      : AlgebraError("insufficient truncation: index " + std::to_string(requested) +
                     " needs a resolution past bound " + std::to_string(bound)),
        requested_(requested),
        bound_(bound) {}
  int requested() const { return requested_; }
  int bound() const { return bound_; }

 private:
  int requested_;
  int bound_;
};

}  // namespace eulerform
