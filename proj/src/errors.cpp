#include "gcsh/errors.hpp"

namespace gcsh {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NonPositiveWeight: return "NonPositiveWeight";
    case Errc::NonPositiveMeasure: return "NonPositiveMeasure";
    case Errc::Disconnected: return "Disconnected";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EigenFailure: return "EigenFailure";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::Overflow: return "Overflow";
    case Errc::SigmaNotOne: return "SigmaNotOne";
    case Errc::LambdaSandwichViolated: return "LambdaSandwichViolated";
    case Errc::OnBoundary: return "OnBoundary";
    case Errc::NonConvergence: return "NonConvergence";
    case Errc::BarrierUnavailable: return "BarrierUnavailable";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::ResidualTooLarge: return "ResidualTooLarge";
    case Errc::BoundaryZero: return "BoundaryZero";
    case Errc::SignMismatch: return "SignMismatch";
    case Errc::NoSolvableSeed: return "NoSolvableSeed";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace gcsh
