#pragma once

#include <stdexcept>
#include <string>

namespace adtk {

enum class ErrorCode {
  // data / schema
  MalformedRow,
  UnknownCategory,
  NonNumericCell,
  HeaderMismatch,
  AllMissingColumn,
  MissingCell,
  AttrNotNumeric,
  LabelArity,
  UnknownAttribute,
  SchemaInvalid,
  // statistics
  Separation,
  NotConverged,
  DomainError,
  ZeroExpectedCell,
  // learners
  SingleClass,
  SchemaMismatch,
  EmptyDataset,
  DegenerateSplit,
  // evaluation
  TooFewInstances,
  LengthMismatch,
  // synthetic corpus
  InvalidSpec,
  // plumbing
  IoError,
  FormatError,
  InvalidArgument,
  Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace adtk
