#pragma once

#include <stdexcept>
#include <string>

namespace laxscatter {

// Argument outside the domain of the evaluated function (wrong half-plane,
// essential singularity, Cayley endpoint, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The zero polynomial / zero potential, which every construction here excludes.
class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Angular momentum k >= 1 needs a Hankel transform that is not implemented.
class UnsupportedAngularMomentumError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Invalid constructor data for a value type (violated type invariant).
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InterpolationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class ZeroOnBoundaryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class DivisibilityComponent { kBlaschkeZero, kExponential, kSingularAtom };

class DivisibilityError : public std::runtime_error {
 public:
  DivisibilityError(DivisibilityComponent component, const std::string& what)
      : std::runtime_error(what), component_(component) {}

  DivisibilityComponent component() const noexcept { return component_; }

 private:
  DivisibilityComponent component_;
};

// Failure inside a multi-stage computation; what() names the stage.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, const std::string& cause)
      : std::runtime_error(stage + ": " + cause), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace laxscatter
