#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagval {

enum class ErrorCode {
  ZeroPolynomial,
  ZeroFunction,
  ZeroElement,
  ConstantInput,
  NotPrime,
  SizeBound,
  FactorizationOutOfRange,
  ParseError,
  FieldMismatch,
  EqualPoints,
  DependentGenerators,
  BadPartition,
  NotAUnit,
  UnsupportedValueGroup,
  UnsupportedPlace,
  ConstantH,
  ProportionalPair,
  ZeroEntry,
  BadInput,
  BadN,
  BadL,
  BadEmbedding,
  NotMultiplicative,
  DependenceBoundTooSmall,
  PreconditionFailed,
  ClosureFailure,
  OrderFailure,
  Overflow,
  UnknownSuite,
  InvalidConfig,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace flagval
