#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcm {

enum class ErrorCode {
  NonSquare,
  NonPositiveEntry,
  DiagonalNotOne,
  ReciprocityViolation,
  Incomplete,
  NotConsistent,
  NotChordal,
  NotConnected,
  EntrySpecified,
  NoCommonNeighbor,
  NeighborDisagreement,
  NotPCM,
  ComponentNotChordal,
  NotPCPlus,
  NoConsistentCompletion,
  InvalidArgument,
  TooSmall,
  TooLarge,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `witness()` carries the zero-based
/// vertex indices that locate the problem: the offending entry (i, j), a
/// chordless cycle, or a violating cycle, depending on the code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<std::size_t> witness = {});

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> witness_;
};

}  // namespace pcm
