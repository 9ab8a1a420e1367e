#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wdiam {

enum class Errc {
  TooFewQubits,
  NotNormalizable,
  NonFinite,
  NormalizationViolated,
  ConvergenceFailure,
  WrongRegion,
  DivergedToInfinity,
  AmbiguousRoot,
  InconsistentInput,
  DegenerateTriangle,
  OutOfDomain,
  NegativeDiscriminant,
  NoConvergedStart,
  BoundaryOptimum,
  InvalidConfig,
};

std::string_view to_string(Errc code) noexcept;

/// All library failures are reported through this type; `code()` is stable
/// and is what the CLI maps onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wdiam
