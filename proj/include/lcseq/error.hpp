#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcseq {

enum class ErrorCode {
  NotPrime,
  BadModulus,
  DivisionByZero,
  FieldMismatch,
  LengthMismatch,
  DegreeExceedsOrder,
  OracleTooLarge,
  TooLarge,
  DegenerateSet,
  DecodeFailure,
  BadParams,
  InexactDivision,
  BadRegime,
  BadLength,
  DuplicateX,
  EmptySequence,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every library failure is reported through this one exception type; the
// code distinguishes the failure kinds callers are expected to branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lcseq
