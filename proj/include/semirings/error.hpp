#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace semirings {

using ElementId = int;

enum class ErrorCode {
  DimensionMismatch,
  EntryOutOfRange,
  NotAssociativeAdd,
  NotCommutativeAdd,
  NotAssociativeMul,
  NotLeftDistributive,
  NotRightDistributive,
  NotABand,
  NotACongruence,
  NoAbsorbingElement,
  NoBiAbsorbing,
  NoZero,
  NoLeastElement,
  NotAnEndomorphism,
  OrderTooLarge,
  UnknownName,
  ParseError,
  InvalidArgument,
};

std::string to_string(ErrorCode code);

class SemiringError : public std::runtime_error {
 public:
  SemiringError(ErrorCode code, const std::string& what)
      : std::runtime_error(to_string(code) + ": " + what), code_(code) {}

  SemiringError(ErrorCode code, const std::string& what,
                std::array<ElementId, 3> witness)
      : std::runtime_error(to_string(code) + ": " + what),
        code_(code),
        witness_(witness) {}

  ErrorCode code() const noexcept { return code_; }

  // Witness triple for axiom violations; meaning depends on the axiom
  // (for commutativity only the first two components are relevant).
  const std::optional<std::array<ElementId, 3>>& witness() const noexcept {
    return witness_;
  }

 private:
  ErrorCode code_;
  std::optional<std::array<ElementId, 3>> witness_;
};

}  // namespace semirings
