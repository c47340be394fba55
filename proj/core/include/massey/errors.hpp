#pragma once

#include <stdexcept>
#include <string>

namespace massey {

// Base of every error the library raises on purpose.
struct MasseyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeCapExceeded : MasseyError {
  DegreeCapExceeded(int degree, int cap)
      : MasseyError("degree " + std::to_string(degree) + " exceeds the degree cap " + std::to_string(cap)),
        degree(degree), cap(cap) {}
  int degree;
  int cap;
};

struct StructureCheckFailed : MasseyError { using MasseyError::MasseyError; };
struct NotASquareZeroDifferential : StructureCheckFailed { using StructureCheckFailed::StructureCheckFailed; };
struct DegreeMismatch : MasseyError { using MasseyError::MasseyError; };
struct NotAMorphism : MasseyError { using MasseyError::MasseyError; };
struct InternalInconsistency : MasseyError { using MasseyError::MasseyError; };
struct NotClosed : InternalInconsistency { using InternalInconsistency::InternalInconsistency; };
struct NotDefined : MasseyError { using MasseyError::MasseyError; };
struct NotOrdinary : MasseyError { using MasseyError::MasseyError; };
struct NoIntertwiningChoices : MasseyError { using MasseyError::MasseyError; };
struct MissingOrientation : MasseyError { using MasseyError::MasseyError; };
struct NotSimplyConnected : MasseyError { using MasseyError::MasseyError; };
struct NotAnIsomorphism : MasseyError { using MasseyError::MasseyError; };

struct SyntaxError : MasseyError {
  SyntaxError(int line, const std::string& what)
      : MasseyError("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

}  // namespace massey
