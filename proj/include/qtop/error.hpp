#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtop {

/// Machine-readable failure codes shared by every module and the CLI.
enum class Errc {
  InvalidInput,
  UnsupportedKind,
  NotDominant,
  NotInvariant,
  WindowExhausted,
  NonIsolatedFixedPoint,
  NotClosed,
  OrbifoldAveragingUnsupported,
  DegeneratePolarization,
  EnumerationUnbounded,
  DatumMismatch,
  EmptyBlock,
  FiberIndexNotUnit,
  OddFiber,
  SecondFactorInfinite,
  SingularOrbitUnsupported,
  NotOnVanishingSet,
  NotProper,
  ParseError,
  VerificationFailed,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qtop
