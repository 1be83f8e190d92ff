#include "qtop/error.hpp"

namespace qtop {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::UnsupportedKind: return "UnsupportedKind";
    case Errc::NotDominant: return "NotDominant";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::WindowExhausted: return "WindowExhausted";
    case Errc::NonIsolatedFixedPoint: return "NonIsolatedFixedPoint";
    case Errc::NotClosed: return "NotClosed";
    case Errc::OrbifoldAveragingUnsupported: return "OrbifoldAveragingUnsupported";
    case Errc::DegeneratePolarization: return "DegeneratePolarization";
    case Errc::EnumerationUnbounded: return "EnumerationUnbounded";
    case Errc::DatumMismatch: return "DatumMismatch";
    case Errc::EmptyBlock: return "EmptyBlock";
    case Errc::FiberIndexNotUnit: return "FiberIndexNotUnit";
    case Errc::OddFiber: return "OddFiber";
    case Errc::SecondFactorInfinite: return "SecondFactorInfinite";
    case Errc::SingularOrbitUnsupported: return "SingularOrbitUnsupported";
    case Errc::NotOnVanishingSet: return "NotOnVanishingSet";
    case Errc::NotProper: return "NotProper";
    case Errc::ParseError: return "ParseError";
    case Errc::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace qtop
