#pragma once

#include <stdexcept>
#include <string>

namespace lific {

enum class ErrorKind {
  DivisionByZero,
  BackendMismatch,
  GradeTooSmall,
  DimensionMismatch,
  FloatBackendUnsupported,
  SingularMobiusMatrix,
  TooManyMinors,
  UnsupportedMatrix,
  ShapeMismatch,
  IncompletePlan,
  OverlapConflict,
  GradeNotOddMultiple,
  StructureCheckFailed,
  NotMinimalBasis,
  NonConinvolutory,
  WrongGrade,
  SizeCapExceeded,
  NotSingular,
  MissingProvenance,
  EmptyGrid,
  ParseError,
  SchemaError,
  PlanKindMismatch,
  DegenerateStructure,
  Cancelled,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lific
