#ifndef TREEREL_ERRORS_HPP
#define TREEREL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treerel {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnknownLabelError : Error {
  explicit UnknownLabelError(const std::string& label)
      : Error("unknown label: " + label), label(label) {}
  std::string label;
};

struct DuplicateLabelError : Error {
  explicit DuplicateLabelError(const std::string& label)
      : Error("duplicate label: " + label), label(label) {}
  std::string label;
};

struct SyntaxError : Error {
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos(pos) {}
  std::size_t pos;
};

struct NonBinaryError : Error {
  explicit NonBinaryError(const std::string& msg) : Error(msg) {}
};

struct TooSmallError : Error {
  explicit TooSmallError(const std::string& msg) : Error(msg) {}
};

struct BoundExceededError : Error {
  explicit BoundExceededError(const std::string& msg) : Error(msg) {}
};

struct NotPrefixFreeError : Error {
  explicit NotPrefixFreeError(const std::string& msg) : Error(msg) {}
};

struct NotBinaryBranchingError : Error {
  explicit NotBinaryBranchingError(const std::string& msg) : Error(msg) {}
};

struct InvalidStructureError : Error {
  explicit InvalidStructureError(const std::string& msg) : Error(msg) {}
};

struct NoSplitError : Error {
  explicit NoSplitError(const std::string& msg) : Error(msg) {}
};

struct NotAmalgamableError : Error {
  explicit NotAmalgamableError(const std::string& msg) : Error(msg) {}
};

struct InconsistentTypeError : Error {
  explicit InconsistentTypeError(const std::string& msg) : Error(msg) {}
};

struct NotInjectiveError : Error {
  explicit NotInjectiveError(const std::string& msg) : Error(msg) {}
};

struct NotQPreservingError : Error {
  explicit NotQPreservingError(const std::string& msg) : Error(msg) {}
};

struct PreconditionFailedError : Error {
  explicit PreconditionFailedError(const std::string& msg) : Error(msg) {}
};

struct ConstructionFailedError : Error {
  explicit ConstructionFailedError(const std::string& msg) : Error(msg) {}
};

struct BadParametersError : Error {
  explicit BadParametersError(const std::string& msg) : Error(msg) {}
};

struct MalformedInstanceError : Error {
  explicit MalformedInstanceError(const std::string& msg) : Error(msg) {}
};

}  // namespace treerel

#endif
