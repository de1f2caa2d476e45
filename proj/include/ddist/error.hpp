#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ddist {

enum class ErrorKind {
  // input validation
  Validation,
  InvalidParams,
  // mathematical degeneracy
  DegenerateInput,
  NotCoplanar,
  EmptyEnergy,
  HorizontalLine,
  ParallelLines,
  IrrationalAngle,
  NotSkew,
  DegenerateFit,
  PointNotOnLine,
  ContainmentFailure,
  InconsistentPartition,
  // filesystem
  Io,
};

std::string_view error_kind_name(ErrorKind kind);

// 1 = validation, 2 = mathematical degeneracy, 3 = I/O.
int exit_code_for(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ddist
