#include "ddist/error.hpp"

namespace ddist {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NotCoplanar: return "NotCoplanar";
    case ErrorKind::EmptyEnergy: return "EmptyEnergy";
    case ErrorKind::HorizontalLine: return "HorizontalLine";
    case ErrorKind::ParallelLines: return "ParallelLines";
    case ErrorKind::IrrationalAngle: return "IrrationalAngle";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::DegenerateFit: return "DegenerateFit";
    case ErrorKind::PointNotOnLine: return "PointNotOnLine";
    case ErrorKind::ContainmentFailure: return "ContainmentFailure";
    case ErrorKind::InconsistentPartition: return "InconsistentPartition";
    case ErrorKind::Io: return "IOError";
  }
  return "Error";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Validation:
    case ErrorKind::InvalidParams:
      return 1;
    case ErrorKind::Io:
      return 3;
    default:
      return 2;
  }
}

}  // namespace ddist
