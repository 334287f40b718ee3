#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace poset_assoc {

enum class ErrorCode {
  MalformedInput,
  DuplicateElement,
  UnknownElement,
  CyclicRelation,
  TooLarge,
  EmptyComposition,
  ElementNotFound,
  LabelClash,
  NotAutonomous,
  DisconnectedPoset,
  TooSmall,
  NotATubing,
  StructureViolation,
  MalformedDecomposition,
  FlipImageInvalid,
  QuotientNotPoset,
  SizeGuard,
};

/// Stable machine-readable name of an error code, e.g. "DisconnectedPoset".
std::string_view to_string(ErrorCode code) noexcept;

/// Domain error raised by every operation in the library.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace poset_assoc
