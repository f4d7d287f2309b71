#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace idem {

enum class ErrorKind {
  NonIdempotent,
  BadTableLength,
  EntryOutOfRange,
  DuplicateOpName,
  SignatureMismatch,
  NotACongruence,
  NotClosed,
  UnknownSymbol,
  ArityMismatch,
  ElementNotGenerated,
  TooLarge,
  ProjectionNotFull,
  NotCompatible,
  PostconditionFailed,
  EmptyResult,
  VerificationFailed,
  CaseNotRecognized,
  WitnessNotFound,
  UnsupportedCombination,
  NotSmooth,
  CapExceeded,
  PreconditionViolated,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above; the
/// message holds the diagnostic (operation, offending tuple, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace idem
