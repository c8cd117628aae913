#pragma once

#include <stdexcept>
#include <string>

namespace qf {

/// Classification of every failure the library reports.
enum class errc {
  invalid_value = 1,        ///< non-finite component or malformed numeric input
  invalid_parameter,        ///< argument outside its documented domain
  dimension_mismatch,
  zero_division,            ///< inverse of the zero quaternion
  singular,                 ///< no usable pivot during elimination
  not_self_adjoint,
  pairing_violation,        ///< embedded spectrum did not split into matched pairs
  structure_violation,      ///< complex matrix is not in embedded block form
  not_a_frame,
  not_a_representation,     ///< coefficients do not synthesize the target vector
  invalid_subspace,
  singular_projected_frame,
  io_error,
  schema_error,
  internal_error,
};

inline const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::invalid_value: return "invalid_value";
    case errc::invalid_parameter: return "invalid_parameter";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::zero_division: return "zero_division";
    case errc::singular: return "singular";
    case errc::not_self_adjoint: return "not_self_adjoint";
    case errc::pairing_violation: return "pairing_violation";
    case errc::structure_violation: return "structure_violation";
    case errc::not_a_frame: return "not_a_frame";
    case errc::not_a_representation: return "not_a_representation";
    case errc::invalid_subspace: return "invalid_subspace";
    case errc::singular_projected_frame: return "singular_projected_frame";
    case errc::io_error: return "io_error";
    case errc::schema_error: return "schema_error";
    case errc::internal_error: return "internal_error";
  }
  return "unknown";
}

/// Base of all library exceptions; carries an errc for the C API mapping.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

namespace detail {
template <errc Code>
struct TypedError : Error {
  explicit TypedError(const std::string& message) : Error(Code, message) {}
};
}  // namespace detail

using InvalidValue = detail::TypedError<errc::invalid_value>;
using InvalidParameter = detail::TypedError<errc::invalid_parameter>;
using DimensionMismatch = detail::TypedError<errc::dimension_mismatch>;
using ZeroDivision = detail::TypedError<errc::zero_division>;
using Singular = detail::TypedError<errc::singular>;
using NotSelfAdjoint = detail::TypedError<errc::not_self_adjoint>;
using PairingViolation = detail::TypedError<errc::pairing_violation>;
using StructureViolation = detail::TypedError<errc::structure_violation>;
using NotAFrame = detail::TypedError<errc::not_a_frame>;
using NotARepresentation = detail::TypedError<errc::not_a_representation>;
using InvalidSubspace = detail::TypedError<errc::invalid_subspace>;
using SingularProjectedFrame = detail::TypedError<errc::singular_projected_frame>;
using IoError = detail::TypedError<errc::io_error>;
using SchemaError = detail::TypedError<errc::schema_error>;
using InternalError = detail::TypedError<errc::internal_error>;

}  // namespace qf
