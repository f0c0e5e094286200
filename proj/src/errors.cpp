#include "adtk/errors.hpp"

namespace adtk {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedRow: return "MalformedRow";
    case ErrorCode::UnknownCategory: return "UnknownCategory";
    case ErrorCode::NonNumericCell: return "NonNumericCell";
    case ErrorCode::HeaderMismatch: return "HeaderMismatch";
    case ErrorCode::AllMissingColumn: return "AllMissingColumn";
    case ErrorCode::MissingCell: return "MissingCell";
    case ErrorCode::AttrNotNumeric: return "AttrNotNumeric";
    case ErrorCode::LabelArity: return "LabelArity";
    case ErrorCode::UnknownAttribute: return "UnknownAttribute";
    case ErrorCode::SchemaInvalid: return "SchemaInvalid";
    case ErrorCode::Separation: return "Separation";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ZeroExpectedCell: return "ZeroExpectedCell";
    case ErrorCode::SingleClass: return "SingleClass";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::DegenerateSplit: return "DegenerateSplit";
    case ErrorCode::TooFewInstances: return "TooFewInstances";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "UnknownError";
}

}  // namespace adtk
