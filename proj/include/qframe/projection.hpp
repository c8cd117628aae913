#pragma once

#include <cstdint>
#include <vector>

#include "qframe/frames.hpp"

namespace qf {

/// Closed right subspace of H^n, held as an orthonormal basis produced by a
/// Gram-Schmidt sweep (right-scalar normalization, one re-orthogonalization
/// pass) over a spanning family.  Caches the orthogonal projector
/// P = sum_t b_t adjoint-row(b_t), which is self-adjoint and idempotent.
class Subspace {
public:
  /// Throws InvalidSubspace when the family is empty, mixes dimensions, or
  /// spans only the zero subspace.
  static Subspace span(const std::vector<QVector>& spanning,
                       double tol = kDefaultTolerance);
  static Subspace full(std::size_t n);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVector>& basis() const { return basis_; }
  const QMatrix& projector() const { return projector_; }

  /// Coordinates (inner(b_1, v), ..., inner(b_k, v)); an isometry on the
  /// subspace.
  QVector coordinates(const QVector& v) const;
  QVector from_coordinates(const QVector& coords) const;

private:
  Subspace() = default;
  std::size_t ambient_dim_ = 0;
  std::vector<QVector> basis_;
  QMatrix projector_;
};

/// The pseudo-inverse of the synthesis operator as a matrix: the adjoint of
/// the canonical dual's synthesis matrix, equal to adjoint(T) S^-1.
QMatrix pseudo_inverse(const Frame& frame, double tol = kDefaultTolerance);

/// Coefficients realizing the pseudo-inverse applied to u: the canonical
/// dual analysis sequence inner(S^-1 u_i, u).
CoefficientSeq pseudo_inverse_apply(const Frame& frame, const QVector& u,
                                    double tol = kDefaultTolerance);

/// Residuals certifying that the analysis ranges of a frame and of its
/// canonical dual coincide.
struct RangeEqualityVerdict {
  /// worst |dual-analysis(u) - analysis(S^-1 u)| over probes
  double operator_identity_residual = 0.0;
  /// worst distance of a dual analysis image from the range of adjoint(T)
  double dual_in_primal_residual = 0.0;
  /// worst distance of an analysis image from the dual's analysis range
  double primal_in_dual_residual = 0.0;
  bool pass = false;
};

RangeEqualityVerdict range_equality_check(const Frame& frame,
                                          double tol = kDefaultTolerance,
                                          std::uint64_t seed = 0);

/// Projection of a frame onto a subspace: the family {P u_i} together with
/// its bounds as a frame for the subspace and the reconstruction residual
/// of the projected canonical dual {P S^-1 u_i}.
struct ProjectedFrameResult {
  Frame projected;       ///< {P u_i} in ambient coordinates
  double lower = 0.0;    ///< bounds of the family restricted to the subspace
  double upper = 0.0;
  bool frame_for_subspace = false;
  bool bounds_within = false;  ///< [lower, upper] inside the ambient bounds
  double alt_dual_residual = 0.0;
  bool alt_dual_ok = false;
  bool pass = false;
};

ProjectedFrameResult project_frame(const Frame& frame, const Subspace& sub,
                                   double tol = kDefaultTolerance,
                                   std::uint64_t seed = 0);

/// Two independently computed sides of the same characterization: the
/// projected canonical dual {P S^-1 u_i} coincides with the canonical dual
/// of the projected frame exactly when P commutes with S.  `coherent`
/// records that the two booleans agree.
struct CommutationVerdict {
  double commutator_residual = 0.0;    ///< |P S - S P|
  double dual_mismatch_residual = 0.0; ///< worst gap between the two duals
  bool commutes = false;
  bool duals_match = false;
  bool coherent = false;
};

CommutationVerdict canonical_dual_commutation_check(
    const Frame& frame, const Subspace& sub, double tol = kDefaultTolerance);

/// The coefficient-space projection Q = adjoint(T) S^-1 T together with the
/// residuals certifying it is the orthogonal projection onto the range of
/// the analysis operator: idempotent, self-adjoint, the identity on
/// analysis images, zero on the kernel of T, and in agreement with the
/// product adjoint(T) T~ formed from the canonical dual synthesis.
struct ProjectionReport {
  QMatrix gram_projection;  ///< m x m
  double idempotency_residual = 0.0;
  double self_adjointness_residual = 0.0;
  double range_residual = 0.0;
  double kernel_residual = 0.0;
  double formula_residual = 0.0;  ///< held to tol/10
  double trace_error = 0.0;       ///< |trace(Q) - n|, held to 100 tol
  bool pass = false;
};

ProjectionReport gram_projection(const Frame& frame,
                                 double tol = kDefaultTolerance,
                                 std::uint64_t seed = 0);

}  // namespace qf
