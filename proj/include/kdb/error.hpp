#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kdb {

enum class ErrorCode {
  NonzeroRequired,
  NotSimplicial,
  DimensionMismatch,
  TooLarge,
  NotStronglyConvex,
  RedundantRay,
  InvalidModel,
  InexactHilbert,
  OutOfRange,
  CriterionRangeExceeded,
  SchemaError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonzeroRequired: return "NonzeroRequired";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotStronglyConvex: return "NotStronglyConvex";
    case ErrorCode::RedundantRay: return "RedundantRay";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::InexactHilbert: return "InexactHilbert";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::CriterionRangeExceeded: return "CriterionRangeExceeded";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

/// Module that raised an error; used for the qualified codes the CLI prints.
constexpr std::string_view module_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonzeroRequired:
    case ErrorCode::NotSimplicial:
      return "lattice";
    case ErrorCode::DimensionMismatch:
    case ErrorCode::TooLarge:
    case ErrorCode::NotStronglyConvex:
    case ErrorCode::RedundantRay:
      return "toric";
    case ErrorCode::InvalidModel:
    case ErrorCode::InexactHilbert:
      return "cohom";
    case ErrorCode::OutOfRange:
    case ErrorCode::CriterionRangeExceeded:
      return "criteria";
    case ErrorCode::SchemaError:
      return "spec";
  }
  return "kdb";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  std::string qualified_code() const {
    return std::string(module_of(code_)) + "." + std::string(to_string(code_));
  }

 private:
  ErrorCode code_;
};

/// Ray index that failed irredundancy, carried alongside the generic error.
class RedundantRayError : public Error {
 public:
  explicit RedundantRayError(std::size_t index)
      : Error(ErrorCode::RedundantRay, "RedundantRay(" + std::to_string(index) + ")"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Schema violation at a field path such as `twist` or `rays[2][1]`.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, std::string reason)
      : Error(ErrorCode::SchemaError, path + ": " + reason),
        path_(std::move(path)),
        reason_(std::move(reason)) {}

  const std::string& path() const noexcept { return path_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string path_;
  std::string reason_;
};

}  // namespace kdb
