#pragma once
#include <stdexcept>
#include <string>

namespace npb {

enum class ErrorKind {
  NotContained,
  NotAssociative,
  NotAnIdeal,
  NotSolvable,
  ShapeMismatch,
  VarietyMismatch,
  ActionAxiomsFail,
  GuardExceeded,
  NotExact,
  RangeTooSmall,
  ParseError,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

} // namespace npb
