#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cantor {

enum class Errc {
  InvalidArgument,
  TargetDepthTooSmall,
  DepthMismatch,
  EmptyWord,
  PairingIncomplete,
  DepthCapExceeded,
  GroundTooLarge,
  SubsetOutOfRange,
  EmptySubset,
  DimensionMismatch,
  NegativeWeight,
  MassMismatch,
  DepthExceeded,
  DepthTooSmall,
  NotProbability,
  EmptySequence,
  NotThick,
  LevelExceeded,
  DepthLadderBroken,
  ConsistencyViolation,
  OddDepth,
  LevelTooDeep,
  LevelMismatch,
  RowMassInvalid,
  PartialMap,
  MixedTotals,
  EmptyTree,
  NotPrefixClosed,
  BoundViolated,
  LengthExceeded,
  UnknownHeader,
  Parse,
};

std::string_view errc_name(Errc code) noexcept;

/// Domain error raised by every module; `code()` identifies the contract that failed.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }
  /// The message without the code name.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

/// Parse failure carrying the 1-based line of the offending input.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  /// The message without code name or line number.
  const std::string& bare() const noexcept { return bare_; }

 private:
  std::size_t line_;
  std::string bare_;
};

}  // namespace cantor
