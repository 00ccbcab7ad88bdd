#pragma once

#include <stdexcept>
#include <string>

namespace gcsh {

// Domain error taxonomy. The CLI maps these to exit code 1 and prints
// name(): what() on stderr; anything else (I/O, malformed JSON) is exit 2.
enum class Errc {
  NonPositiveWeight,
  NonPositiveMeasure,
  Disconnected,
  DuplicateEdge,
  DuplicateVertex,
  SelfLoop,
  UnknownVertex,
  DimensionMismatch,
  EigenFailure,
  SingularSystem,
  Overflow,
  SigmaNotOne,
  LambdaSandwichViolated,
  OnBoundary,
  NonConvergence,
  BarrierUnavailable,
  HypothesisViolated,
  ResidualTooLarge,
  BoundaryZero,
  SignMismatch,
  NoSolvableSeed,
  IoError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace gcsh
