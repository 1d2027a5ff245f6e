#include "flagval/error.hpp"

namespace flagval {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::ConstantInput: return "ConstantInput";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::SizeBound: return "SizeBound";
    case ErrorCode::FactorizationOutOfRange: return "FactorizationOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
    case ErrorCode::BadPartition: return "BadPartition";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::UnsupportedValueGroup: return "UnsupportedValueGroup";
    case ErrorCode::UnsupportedPlace: return "UnsupportedPlace";
    case ErrorCode::ConstantH: return "ConstantH";
    case ErrorCode::ProportionalPair: return "ProportionalPair";
    case ErrorCode::ZeroEntry: return "ZeroEntry";
    case ErrorCode::BadInput: return "BadInput";
    case ErrorCode::BadN: return "BadN";
    case ErrorCode::BadL: return "BadL";
    case ErrorCode::BadEmbedding: return "BadEmbedding";
    case ErrorCode::NotMultiplicative: return "NotMultiplicative";
    case ErrorCode::DependenceBoundTooSmall: return "DependenceBoundTooSmall";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ClosureFailure: return "ClosureFailure";
    case ErrorCode::OrderFailure: return "OrderFailure";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace flagval
