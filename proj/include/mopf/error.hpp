#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mopf {

enum class ErrorKind {
  Cycle,
  DuplicateLabel,
  UnknownLabel,
  ExtremalNotMarked,
  MarkingNotMonotone,
  InvalidChain,
  SizeLimit,
  Parse,
  Unbounded,
  NotAComplex,
  Shape,
};

const char* to_string(ErrorKind kind);

/// The single exception type thrown by the library; `kind()` tells callers
/// (and the CLI's exit-code mapping) which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::string subject = {})
      : std::runtime_error(what), kind_(kind), subject_(std::move(subject)) {}

  ErrorKind kind() const { return kind_; }
  /// Label of the offending element, when there is one.
  const std::string& subject() const { return subject_; }

 private:
  ErrorKind kind_;
  std::string subject_;
};

}  // namespace mopf
