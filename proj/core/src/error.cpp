#include "cantor/error.hpp"

namespace cantor {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::TargetDepthTooSmall: return "TargetDepthTooSmall";
    case Errc::DepthMismatch: return "DepthMismatch";
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::PairingIncomplete: return "PairingIncomplete";
    case Errc::DepthCapExceeded: return "DepthCapExceeded";
    case Errc::GroundTooLarge: return "GroundTooLarge";
    case Errc::SubsetOutOfRange: return "SubsetOutOfRange";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NegativeWeight: return "NegativeWeight";
    case Errc::MassMismatch: return "MassMismatch";
    case Errc::DepthExceeded: return "DepthExceeded";
    case Errc::DepthTooSmall: return "DepthTooSmall";
    case Errc::NotProbability: return "NotProbability";
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::NotThick: return "NotThick";
    case Errc::LevelExceeded: return "LevelExceeded";
    case Errc::DepthLadderBroken: return "DepthLadderBroken";
    case Errc::ConsistencyViolation: return "ConsistencyViolation";
    case Errc::OddDepth: return "OddDepth";
    case Errc::LevelTooDeep: return "LevelTooDeep";
    case Errc::LevelMismatch: return "LevelMismatch";
    case Errc::RowMassInvalid: return "RowMassInvalid";
    case Errc::PartialMap: return "PartialMap";
    case Errc::MixedTotals: return "MixedTotals";
    case Errc::EmptyTree: return "EmptyTree";
    case Errc::NotPrefixClosed: return "NotPrefixClosed";
    case Errc::BoundViolated: return "BoundViolated";
    case Errc::LengthExceeded: return "LengthExceeded";
    case Errc::UnknownHeader: return "UnknownHeader";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), detail_(what) {}

ParseError::ParseError(Errc code, std::size_t line, const std::string& what)
    : Error(code, "line " + std::to_string(line) + ": " + what), line_(line), bare_(what) {}

}  // namespace cantor
