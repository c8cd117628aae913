#include "qframe/projection.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace qf {

namespace {

/// Family of coordinate vectors of {P u_i} in the subspace basis; its frame
/// operator is the projected frame operator restricted to the subspace.
Frame coordinate_family(const Frame& frame, const Subspace& sub) {
  std::vector<QVector> coords;
  coords.reserve(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i)
    coords.push_back(sub.coordinates(frame.vector(i)));
  return Frame(std::move(coords));
}

}  // namespace

Subspace Subspace::span(const std::vector<QVector>& spanning, double tol) {
  if (spanning.empty())
    throw InvalidSubspace("spanning family is empty");
  const std::size_t n = spanning[0].size();
  for (const auto& v : spanning)
    if (v.size() != n)
      throw InvalidSubspace("spanning vectors have mixed dimensions");

  Subspace s;
  s.ambient_dim_ = n;
  for (const auto& v : spanning) {
    QVector w = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : s.basis_) w = w - b * inner(b, w);
    const double norm = w.norm();
    if (norm > tol * std::max(1.0, v.norm()))
      s.basis_.push_back(w * Quaternion(1.0 / norm));
  }
  if (s.basis_.empty())
    throw InvalidSubspace("spanning family spans only the zero subspace");

  s.projector_ = QMatrix(n, n);
  for (const auto& b : s.basis_)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        s.projector_(r, c) += b[r] * b[c].conj();
  return s;
}

Subspace Subspace::full(std::size_t n) {
  std::vector<QVector> basis;
  basis.reserve(n);
  for (std::size_t r = 0; r < n; ++r) basis.push_back(QVector::basis(n, r));
  return span(basis);
}

QVector Subspace::coordinates(const QVector& v) const {
  if (v.size() != ambient_dim_)
    throw DimensionMismatch("vector does not live in the ambient space");
  QVector c(dim());
  for (std::size_t t = 0; t < dim(); ++t) c[t] = inner(basis_[t], v);
  return c;
}

QVector Subspace::from_coordinates(const QVector& coords) const {
  if (coords.size() != dim())
    throw DimensionMismatch("coordinate vector has the wrong length");
  QVector v(ambient_dim_);
  for (std::size_t t = 0; t < dim(); ++t) v = v + basis_[t] * coords[t];
  return v;
}

QMatrix pseudo_inverse(const Frame& frame, double tol) {
  return adjoint(frame.dual_synthesis_matrix(tol));
}

CoefficientSeq pseudo_inverse_apply(const Frame& frame, const QVector& u,
                                    double tol) {
  return frame.canonical_dual(tol).analyze(u);
}

RangeEqualityVerdict range_equality_check(const Frame& frame, double tol,
                                          std::uint64_t seed) {
  const Frame& dual = frame.canonical_dual(tol);
  const QMatrix& s_inv = frame.frame_operator_inverse(tol);
  const QMatrix& t = frame.synthesis_matrix();
  const QMatrix q = adjoint(t) * (s_inv * t);

  // The dual's own coefficient projection, built from its own operators.
  const QMatrix& td = dual.synthesis_matrix();
  const QMatrix q_dual = adjoint(td) * (dual.frame_operator_inverse(tol) * td);

  RangeEqualityVerdict v;
  for (const auto& u : probe_vectors(frame.dim(), seed)) {
    const CoefficientSeq dual_image = dual.analyze(u);
    const CoefficientSeq via_inverse = frame.analyze(s_inv * u);
    v.operator_identity_residual = std::max(
        v.operator_identity_residual, (dual_image - via_inverse).norm());
    v.dual_in_primal_residual = std::max(
        v.dual_in_primal_residual, (q * dual_image - dual_image).norm());
    const CoefficientSeq primal_image = frame.analyze(u);
    v.primal_in_dual_residual = std::max(
        v.primal_in_dual_residual, (q_dual * primal_image - primal_image).norm());
  }
  v.pass = v.operator_identity_residual <= tol &&
           v.dual_in_primal_residual <= tol && v.primal_in_dual_residual <= tol;
  return v;
}

ProjectedFrameResult project_frame(const Frame& frame, const Subspace& sub,
                                   double tol, std::uint64_t seed) {
  if (frame.dim() != sub.ambient_dim())
    throw DimensionMismatch("frame and subspace have different ambient dimensions");
  const FrameBounds ambient = frame.bounds(tol);
  if (!ambient.is_frame)
    throw NotAFrame("cannot project a family that is not a frame");

  const QMatrix& p = sub.projector();
  std::vector<QVector> projected_vectors;
  projected_vectors.reserve(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i)
    projected_vectors.push_back(p * frame.vector(i));

  const Frame coords = coordinate_family(frame, sub);
  const FrameBounds restricted = coords.bounds(tol);

  const Frame& dual = frame.canonical_dual(tol);
  std::vector<QVector> projected_duals;
  projected_duals.reserve(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i)
    projected_duals.push_back(p * dual.vector(i));

  ProjectedFrameResult r{Frame(std::move(projected_vectors))};
  r.lower = restricted.lower;
  r.upper = restricted.upper;
  r.frame_for_subspace = restricted.is_frame;
  r.bounds_within =
      r.lower >= ambient.lower - tol && r.upper <= ambient.upper + tol;

  for (const auto& cp : probe_vectors(sub.dim(), seed)) {
    const QVector u = sub.from_coordinates(cp);
    QVector recon(frame.dim());
    for (std::size_t i = 0; i < frame.size(); ++i)
      recon = recon + projected_duals[i] * inner(r.projected.vector(i), u);
    r.alt_dual_residual = std::max(r.alt_dual_residual, (u - recon).norm());
  }
  r.alt_dual_ok = r.alt_dual_residual <= tol;
  r.pass = r.frame_for_subspace && r.bounds_within && r.alt_dual_ok;
  return r;
}

CommutationVerdict canonical_dual_commutation_check(const Frame& frame,
                                                    const Subspace& sub,
                                                    double tol) {
  if (frame.dim() != sub.ambient_dim())
    throw DimensionMismatch("frame and subspace have different ambient dimensions");
  const FrameBounds ambient = frame.bounds(tol);
  if (!ambient.is_frame)
    throw NotAFrame("commutation check requires a frame");

  const QMatrix& p = sub.projector();
  const QMatrix& s = frame.frame_operator();

  CommutationVerdict v;
  v.commutator_residual = operator_norm(p * s - s * p);
  v.commutes = v.commutator_residual <= tol * std::max(1.0, ambient.upper);

  const Frame coords = coordinate_family(frame, sub);
  const FrameBounds restricted = coords.bounds(tol);
  if (!restricted.is_frame)
    throw SingularProjectedFrame(
        "projected frame operator is not invertible on the subspace");

  // V^-1 (P u_i) for all i at once, in subspace coordinates.
  const QMatrix canonical_side =
      solve(coords.frame_operator(), coords.synthesis_matrix());
  const Frame& dual = frame.canonical_dual(tol);
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const QVector projected_dual = sub.coordinates(dual.vector(i));
    v.dual_mismatch_residual =
        std::max(v.dual_mismatch_residual,
                 (projected_dual - canonical_side.column(i)).norm());
  }
  v.duals_match =
      v.dual_mismatch_residual <= tol * std::max(1.0, 1.0 / ambient.lower);
  v.coherent = v.commutes == v.duals_match;
  return v;
}

ProjectionReport gram_projection(const Frame& frame, double tol,
                                 std::uint64_t seed) {
  const QMatrix& t = frame.synthesis_matrix();
  const QMatrix t_star = adjoint(t);
  const QMatrix& s_inv = frame.frame_operator_inverse(tol);

  ProjectionReport rep;
  rep.gram_projection = t_star * (s_inv * t);
  const QMatrix& q = rep.gram_projection;

  rep.idempotency_residual = operator_norm(q * q - q);
  rep.self_adjointness_residual = operator_norm(adjoint(q) - q);

  for (const auto& u : probe_vectors(frame.dim(), seed)) {
    const CoefficientSeq image = frame.analyze(u);
    rep.range_residual =
        std::max(rep.range_residual, (q * image - image).norm());
  }

  for (const auto& k : kernel_basis(t)) {
    const QVector unit = k * Quaternion(1.0 / k.norm());
    rep.kernel_residual = std::max(rep.kernel_residual, (q * unit).norm());
  }

  // Same operator through the elimination route for the dual synthesis.
  rep.formula_residual =
      operator_norm(t_star * frame.dual_synthesis_matrix(tol) - q);

  const Quaternion excess =
      q.trace() - Quaternion(static_cast<double>(frame.dim()));
  rep.trace_error = excess.modulus();

  rep.pass = rep.idempotency_residual <= tol &&
             rep.self_adjointness_residual <= tol &&
             rep.range_residual <= tol && rep.kernel_residual <= tol &&
             rep.formula_residual <= tol * 0.1 &&
             rep.trace_error <= tol * 100.0;
  return rep;
}

}  // namespace qf
