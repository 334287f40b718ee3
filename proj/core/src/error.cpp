#include "poset_assoc/error.hpp"

namespace poset_assoc {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::DuplicateElement: return "DuplicateElement";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::CyclicRelation: return "CyclicRelation";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::EmptyComposition: return "EmptyComposition";
    case ErrorCode::ElementNotFound: return "ElementNotFound";
    case ErrorCode::LabelClash: return "LabelClash";
    case ErrorCode::NotAutonomous: return "NotAutonomous";
    case ErrorCode::DisconnectedPoset: return "DisconnectedPoset";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NotATubing: return "NotATubing";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::MalformedDecomposition: return "MalformedDecomposition";
    case ErrorCode::FlipImageInvalid: return "FlipImageInvalid";
    case ErrorCode::QuotientNotPoset: return "QuotientNotPoset";
    case ErrorCode::SizeGuard: return "SizeGuard";
  }
  return "Unknown";
}

}  // namespace poset_assoc
