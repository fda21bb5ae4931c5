#include "lific/error.hpp"

namespace lific {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::BackendMismatch: return "BackendMismatch";
    case ErrorKind::GradeTooSmall: return "GradeTooSmall";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FloatBackendUnsupported: return "FloatBackendUnsupported";
    case ErrorKind::SingularMobiusMatrix: return "SingularMobiusMatrix";
    case ErrorKind::TooManyMinors: return "TooManyMinors";
    case ErrorKind::UnsupportedMatrix: return "UnsupportedMatrix";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::IncompletePlan: return "IncompletePlan";
    case ErrorKind::OverlapConflict: return "OverlapConflict";
    case ErrorKind::GradeNotOddMultiple: return "GradeNotOddMultiple";
    case ErrorKind::StructureCheckFailed: return "StructureCheckFailed";
    case ErrorKind::NotMinimalBasis: return "NotMinimalBasis";
    case ErrorKind::NonConinvolutory: return "NonConinvolutory";
    case ErrorKind::WrongGrade: return "WrongGrade";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::NotSingular: return "NotSingular";
    case ErrorKind::MissingProvenance: return "MissingProvenance";
    case ErrorKind::EmptyGrid: return "EmptyGrid";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::PlanKindMismatch: return "PlanKindMismatch";
    case ErrorKind::DegenerateStructure: return "DegenerateStructure";
    case ErrorKind::Cancelled: return "Cancelled";
  }
  return "Unknown";
}

}  // namespace lific
