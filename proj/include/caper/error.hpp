#pragma once

#include <stdexcept>
#include <string>

namespace caper {

enum class ErrorKind {
  InvalidArgument,
  MalformedDocument,
  NotATree,
  EmptyPart,
  NonUnitAxis,
  OutOfLimits,
  LengthMismatch,
  InsufficientPoints,
  Degenerate,
  PlacementFailure,
  BehindCamera,
  InsufficientSupport,
  IllConditioned,
  EmptyGroundTruth,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace caper
