#include "wdiam/error.hpp"

namespace wdiam {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::TooFewQubits: return "TooFewQubits";
    case Errc::NotNormalizable: return "NotNormalizable";
    case Errc::NonFinite: return "NonFinite";
    case Errc::NormalizationViolated: return "NormalizationViolated";
    case Errc::ConvergenceFailure: return "ConvergenceFailure";
    case Errc::WrongRegion: return "WrongRegion";
    case Errc::DivergedToInfinity: return "DivergedToInfinity";
    case Errc::AmbiguousRoot: return "AmbiguousRoot";
    case Errc::InconsistentInput: return "InconsistentInput";
    case Errc::DegenerateTriangle: return "DegenerateTriangle";
    case Errc::OutOfDomain: return "OutOfDomain";
    case Errc::NegativeDiscriminant: return "NegativeDiscriminant";
    case Errc::NoConvergedStart: return "NoConvergedStart";
    case Errc::BoundaryOptimum: return "BoundaryOptimum";
    case Errc::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace wdiam
