#ifndef QGRING_ERRORS_HPP
#define QGRING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qgring {

// Every failure the library can raise, named so the CLI can map each class
// to a stable exit code and a machine-readable reason.
enum class ErrKind {
  // input / precondition
  InputError,
  NotAPermutation,
  NotASubgroup,
  NotNormal,
  NotContained,
  GroupMismatch,
  ConductorMismatch,
  DimensionMismatch,
  DivisionByZero,
  QuotientNotCyclic,
  ParameterInvalid,
  NotAnIdempotent,
  NotInImage,
  // budget
  OrderBoundExceeded,
  BudgetExceeded,
  // honest mathematical negatives
  TwistingNotTrivialized,
  SchurIndexNotOne,
  ExceptionalComponent,
  // invariant breaches (should never fire on valid inputs)
  NonRationalOutput,
  MatrixUnitRelationFailed,
  GaloisSizeMismatch,
  SingularSystem,
  NonIntegralInverse,
  MinimalExponentNotFound,
  InvariantBreach,
};

inline const char* err_kind_name(ErrKind k) {
  switch (k) {
    case ErrKind::InputError: return "InputError";
    case ErrKind::NotAPermutation: return "NotAPermutation";
    case ErrKind::NotASubgroup: return "NotASubgroup";
    case ErrKind::NotNormal: return "NotNormal";
    case ErrKind::NotContained: return "NotContained";
    case ErrKind::GroupMismatch: return "GroupMismatch";
    case ErrKind::ConductorMismatch: return "ConductorMismatch";
    case ErrKind::DimensionMismatch: return "DimensionMismatch";
    case ErrKind::DivisionByZero: return "DivisionByZero";
    case ErrKind::QuotientNotCyclic: return "QuotientNotCyclic";
    case ErrKind::ParameterInvalid: return "ParameterInvalid";
    case ErrKind::NotAnIdempotent: return "NotAnIdempotent";
    case ErrKind::NotInImage: return "NotInImage";
    case ErrKind::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrKind::BudgetExceeded: return "BudgetExceeded";
    case ErrKind::TwistingNotTrivialized: return "TwistingNotTrivialized";
    case ErrKind::SchurIndexNotOne: return "SchurIndexNotOne";
    case ErrKind::ExceptionalComponent: return "ExceptionalComponent";
    case ErrKind::NonRationalOutput: return "NonRationalOutput";
    case ErrKind::MatrixUnitRelationFailed: return "MatrixUnitRelationFailed";
    case ErrKind::GaloisSizeMismatch: return "GaloisSizeMismatch";
    case ErrKind::SingularSystem: return "SingularSystem";
    case ErrKind::NonIntegralInverse: return "NonIntegralInverse";
    case ErrKind::MinimalExponentNotFound: return "MinimalExponentNotFound";
    case ErrKind::InvariantBreach: return "InvariantBreach";
  }
  return "UnknownError";
}

// 2 = bad input, 3 = budget exhausted, 4 = invariant breach, 5 = negative result
inline int err_kind_exit_code(ErrKind k) {
  switch (k) {
    case ErrKind::OrderBoundExceeded:
    case ErrKind::BudgetExceeded:
      return 3;
    case ErrKind::NonRationalOutput:
    case ErrKind::MatrixUnitRelationFailed:
    case ErrKind::GaloisSizeMismatch:
    case ErrKind::SingularSystem:
    case ErrKind::NonIntegralInverse:
    case ErrKind::MinimalExponentNotFound:
    case ErrKind::InvariantBreach:
      return 4;
    case ErrKind::TwistingNotTrivialized:
    case ErrKind::SchurIndexNotOne:
    case ErrKind::ExceptionalComponent:
      return 5;
    default:
      return 2;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, const std::string& message)
      : std::runtime_error(std::string(err_kind_name(kind)) + ": " + message),
        kind_(kind) {}
  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void check(bool ok, ErrKind kind, const std::string& message) {
  if (!ok) fail(kind, message);
}

}  // namespace qgring

#endif
