#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qframe/qlinalg.hpp"

namespace qf {

/// Finite truncation of a square-summable quaternion sequence; lives in the
/// coefficient space the synthesis operator acts on.
using CoefficientSeq = QVector;

/// Number of seeded random unit vectors added to the coordinate basis when
/// an operator identity is checked on probes.
inline constexpr std::size_t kProbeCount = 20;

/// The n coordinate basis vectors followed by kProbeCount seeded random
/// unit vectors.  An identity that holds on this set holds everywhere, up
/// to the residuals the checks report.
std::vector<QVector> probe_vectors(std::size_t n, std::uint64_t seed = 0);

struct FrameBounds {
  double lower = 0.0;  ///< smallest eigenvalue of the frame operator
  double upper = 0.0;  ///< largest eigenvalue of the frame operator
  bool is_frame = false;
  bool is_bessel = true;  ///< every finite family is Bessel
  bool is_tight = false;
  bool is_parseval = false;
};

/// Finite family {u_i} in H^n with its synthesis matrix T (columns u_i),
/// frame operator S = T adjoint(T) and extremal eigenvalues of S, all fixed
/// at construction.  The inverse frame operator and the canonical dual
/// family {S^-1 u_i} are materialized once, on first use, and shared by
/// copies.  Immutable and safe for concurrent readers.
class Frame {
public:
  explicit Frame(std::vector<QVector> vectors);

  /// Coordinate basis of H^n.
  static Frame orthonormal_basis(std::size_t n);

  /// The 2n-vector family {z_1, z_1, z_2, z_2, ..., z_n, z_n}: each basis
  /// vector listed twice.  Tight with both bounds equal to 2.
  static Frame duplicated_basis(std::size_t n);

  /// Seeded family of n + ceil(n/2) vectors with components uniform in
  /// [-1, 1), redrawn until the frame-operator spectrum satisfies
  /// lower > 0.05 * upper.  Deterministic for a fixed seed.
  static Frame random(std::size_t n, std::uint64_t seed);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<QVector>& vectors() const { return vectors_; }
  const QVector& vector(std::size_t i) const { return vectors_[i]; }

  const QMatrix& synthesis_matrix() const { return synthesis_; }
  const QMatrix& frame_operator() const { return frame_op_; }

  /// Optimal constants of the frame inequality plus classification flags
  /// evaluated at the given tolerance.
  FrameBounds bounds(double tol = kDefaultTolerance) const;
  bool is_frame(double tol = kDefaultTolerance) const {
    return bounds(tol).is_frame;
  }

  /// T c = sum_i u_i c_i.
  QVector synthesize(const CoefficientSeq& c) const;

  /// adjoint(T) u = (inner(u_1, u), ..., inner(u_m, u)).
  CoefficientSeq analyze(const QVector& u) const;

  /// Throws NotAFrame when the lower bound fails the frame threshold.
  const QMatrix& frame_operator_inverse(double tol = kDefaultTolerance) const;

  /// Synthesis matrix of the canonical dual, computed as the elimination
  /// solution of S X = T (independent of the explicit inverse above).
  const QMatrix& dual_synthesis_matrix(double tol = kDefaultTolerance) const;

  /// The family {S^-1 u_i}.  Its frame operator is S^-1 and its bounds are
  /// the reciprocals of this frame's, within tolerance.
  const Frame& canonical_dual(double tol = kDefaultTolerance) const;

  /// Coefficients inner(S^-1 u_i, u): the unique representation of u with
  /// the smallest coefficient norm among all that synthesize u.
  CoefficientSeq minimal_norm_coefficients(
      const QVector& u, double tol = kDefaultTolerance) const;

private:
  struct Cache;
  void ensure_dual(double tol) const;

  std::vector<QVector> vectors_;
  std::size_t dim_ = 0;
  QMatrix synthesis_;
  QMatrix frame_op_;
  double lower_ = 0.0;
  double upper_ = 0.0;
  std::shared_ptr<Cache> cache_;
};

/// Residuals of the four equivalent characterizations of "candidate is an
/// alternate dual of frame": with T, U the synthesis matrices of frame and
/// candidate,
///   (a) reconstruction u = sum_i v_i inner(u_i, u) on probes,
///   (b) T adjoint(U) = I,
///   (c) U adjoint(T) = I,
///   (d) (adjoint(T) U)^2 = adjoint(T) U.
/// For a pair of frames the four verdicts agree; `coherent` records that.
/// A candidate that is not itself a frame can satisfy (d) vacuously while
/// the others fail, so coherence is only promised for frame pairs.
struct DualVerdict {
  double reconstruction_residual = 0.0;
  double synthesis_identity_residual = 0.0;
  double analysis_identity_residual = 0.0;
  double idempotency_residual = 0.0;
  bool reconstruction_ok = false;
  bool synthesis_ok = false;
  bool analysis_ok = false;
  bool idempotency_ok = false;
  bool coherent = false;
  bool pass = false;
};

DualVerdict verify_alternate_dual(const Frame& frame, const Frame& candidate,
                                  double tol = kDefaultTolerance,
                                  std::uint64_t seed = 0);

/// A verified alternate dual is itself a frame, and the original frame is
/// an alternate dual for it.  Both directions are evaluated and reported;
/// nothing is assumed.
struct DualFrameCheck {
  DualVerdict forward;          ///< candidate as dual of frame
  FrameBounds candidate_bounds;
  bool candidate_is_frame = false;
  DualVerdict reverse;          ///< frame as dual of candidate
  bool pass = false;
};

DualFrameCheck dual_is_frame_check(const Frame& frame, const Frame& candidate,
                                   double tol = kDefaultTolerance,
                                   std::uint64_t seed = 0);

/// Decomposition of a representation c of u against the minimal-norm
/// coefficients c~: the three squared norms satisfy
/// |c|^2 = |c~|^2 + |c~ - c|^2, and c - c~ is orthogonal to c~.
struct NormIdentity {
  double coefficient_norm_sq = 0.0;  ///< |c|^2
  double minimal_norm_sq = 0.0;      ///< |c~|^2
  double gap_norm_sq = 0.0;          ///< |c~ - c|^2
  double identity_residual = 0.0;
  double orthogonality_residual = 0.0;
};

/// Throws NotARepresentation when c fails to synthesize u within tolerance.
NormIdentity norm_identity_check(const Frame& frame, const QVector& u,
                                 const CoefficientSeq& c,
                                 double tol = kDefaultTolerance);

/// Worst case over a seeded family of kernel-perturbed representations of
/// probe vectors.
struct NormIdentitySweep {
  NormIdentity worst;
  double worst_relative_identity = 0.0;
  /// Largest positive excess of |c~| over |c|; 0 when minimality held on
  /// every case.
  double worst_minimality_violation = 0.0;
  std::size_t cases = 0;
};

NormIdentitySweep norm_identity_sweep(const Frame& frame,
                                      double tol = kDefaultTolerance,
                                      std::uint64_t seed = 0);

}  // namespace qf
