#pragma once

#include <stdexcept>
#include <string>

namespace amac {

enum class ErrorKind {
  InvalidAngle,          // non-finite angle or line coordinate
  DegenerateReference,   // reference point coincides with the tangent point
  PoleProjection,        // circle point with no finite preimage on the line
  InvalidIdentifier,     // empty or non-ASCII reference string
  InvalidKey,            // empty key string
  BlockOverflow,         // block heuristic saturated to a non-finite value
  ParseError,            // malformed tag text
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct InvalidAngle : Error {
  explicit InvalidAngle(const std::string& what)
      : Error(ErrorKind::InvalidAngle, what) {}
};

struct DegenerateReference : Error {
  explicit DegenerateReference(const std::string& what)
      : Error(ErrorKind::DegenerateReference, what) {}
};

struct PoleProjection : Error {
  explicit PoleProjection(const std::string& what)
      : Error(ErrorKind::PoleProjection, what) {}
};

struct InvalidIdentifier : Error {
  explicit InvalidIdentifier(const std::string& what)
      : Error(ErrorKind::InvalidIdentifier, what) {}
};

struct InvalidKey : Error {
  explicit InvalidKey(const std::string& what)
      : Error(ErrorKind::InvalidKey, what) {}
};

struct BlockOverflow : Error {
  explicit BlockOverflow(const std::string& what)
      : Error(ErrorKind::BlockOverflow, what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what)
      : Error(ErrorKind::ParseError, what) {}
};

}  // namespace amac
