#include "pcm/error.hpp"

namespace pcm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorCode::DiagonalNotOne: return "DiagonalNotOne";
    case ErrorCode::ReciprocityViolation: return "ReciprocityViolation";
    case ErrorCode::Incomplete: return "Incomplete";
    case ErrorCode::NotConsistent: return "NotConsistent";
    case ErrorCode::NotChordal: return "NotChordal";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::EntrySpecified: return "EntrySpecified";
    case ErrorCode::NoCommonNeighbor: return "NoCommonNeighbor";
    case ErrorCode::NeighborDisagreement: return "NeighborDisagreement";
    case ErrorCode::NotPCM: return "NotPCM";
    case ErrorCode::ComponentNotChordal: return "ComponentNotChordal";
    case ErrorCode::NotPCPlus: return "NotPCPlus";
    case ErrorCode::NoConsistentCompletion: return "NoConsistentCompletion";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::vector<std::size_t> witness)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      witness_(std::move(witness)) {}

}  // namespace pcm
