#include "qframe/frames.hpp"

#include <cmath>
#include <mutex>
#include <sstream>

#include "qframe/random.hpp"

namespace qf {

std::vector<QVector> probe_vectors(std::size_t n, std::uint64_t seed) {
  std::vector<QVector> probes;
  probes.reserve(n + kProbeCount);
  for (std::size_t r = 0; r < n; ++r) probes.push_back(QVector::basis(n, r));
  Rng rng(seed);
  for (std::size_t t = 0; t < kProbeCount; ++t)
    probes.push_back(rng.unit_vector(n));
  return probes;
}

struct Frame::Cache {
  std::once_flag once;
  QMatrix s_inv;
  QMatrix dual_synthesis;
  std::shared_ptr<const Frame> dual;
};

Frame::Frame(std::vector<QVector> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty())
    throw InvalidParameter("a frame needs at least one vector");
  dim_ = vectors_[0].size();
  for (const auto& v : vectors_)
    if (v.size() != dim_)
      throw DimensionMismatch("frame vectors have mixed dimensions");
  synthesis_ = QMatrix::from_columns(vectors_);
  frame_op_ = synthesis_ * adjoint(synthesis_);
  const auto ev = hermitian_eigenvalues(frame_op_);
  lower_ = std::max(0.0, ev.front());  // S is positive semidefinite
  upper_ = ev.back();
  cache_ = std::make_shared<Cache>();
}

Frame Frame::orthonormal_basis(std::size_t n) {
  std::vector<QVector> vs;
  vs.reserve(n);
  for (std::size_t r = 0; r < n; ++r) vs.push_back(QVector::basis(n, r));
  return Frame(std::move(vs));
}

Frame Frame::duplicated_basis(std::size_t n) {
  std::vector<QVector> vs;
  vs.reserve(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    vs.push_back(QVector::basis(n, j));
    vs.push_back(QVector::basis(n, j));
  }
  return Frame(std::move(vs));
}

Frame Frame::random(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InvalidParameter("dimension must be at least 1");
  const std::size_t m = n + (n + 1) / 2;
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<QVector> vs;
    vs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) vs.push_back(rng.vector(n));
    Frame f(std::move(vs));
    const auto b = f.bounds();
    if (b.lower > 0.05 * b.upper) return f;
  }
  throw InternalError("could not draw a well-conditioned random frame");
}

FrameBounds Frame::bounds(double tol) const {
  FrameBounds b;
  b.lower = lower_;
  b.upper = upper_;
  b.is_bessel = true;
  b.is_frame = lower_ > tol * std::max(upper_, 1.0);
  b.is_tight = std::fabs(upper_ - lower_) <= tol * upper_;
  b.is_parseval = b.is_tight && std::fabs(lower_ - 1.0) <= tol;
  return b;
}

QVector Frame::synthesize(const CoefficientSeq& c) const {
  if (c.size() != size())
    throw DimensionMismatch("coefficient sequence has length " +
                            std::to_string(c.size()) + ", frame has " +
                            std::to_string(size()) + " vectors");
  QVector out(dim_);
  for (std::size_t i = 0; i < size(); ++i) out = out + vectors_[i] * c[i];
  return out;
}

CoefficientSeq Frame::analyze(const QVector& u) const {
  if (u.size() != dim_)
    throw DimensionMismatch("vector of length " + std::to_string(u.size()) +
                            " analyzed against a frame of dimension " +
                            std::to_string(dim_));
  CoefficientSeq c(size());
  for (std::size_t i = 0; i < size(); ++i) c[i] = inner(vectors_[i], u);
  return c;
}

void Frame::ensure_dual(double tol) const {
  const auto b = bounds(tol);
  if (!b.is_frame) {
    std::ostringstream os;
    os << "family is not a frame: lower bound " << lower_
       << " fails the threshold " << tol * std::max(upper_, 1.0);
    throw NotAFrame(os.str());
  }
  std::call_once(cache_->once, [this] {
    cache_->dual_synthesis = solve(frame_op_, synthesis_);
    cache_->s_inv = inverse(frame_op_);
    std::vector<QVector> dual_vectors;
    dual_vectors.reserve(size());
    for (std::size_t i = 0; i < size(); ++i)
      dual_vectors.push_back(cache_->dual_synthesis.column(i));
    cache_->dual = std::make_shared<const Frame>(Frame(std::move(dual_vectors)));
  });
}

const QMatrix& Frame::frame_operator_inverse(double tol) const {
  ensure_dual(tol);
  return cache_->s_inv;
}

const QMatrix& Frame::dual_synthesis_matrix(double tol) const {
  ensure_dual(tol);
  return cache_->dual_synthesis;
}

const Frame& Frame::canonical_dual(double tol) const {
  ensure_dual(tol);
  return *cache_->dual;
}

CoefficientSeq Frame::minimal_norm_coefficients(const QVector& u,
                                                double tol) const {
  return canonical_dual(tol).analyze(u);
}

DualVerdict verify_alternate_dual(const Frame& frame, const Frame& candidate,
                                  double tol, std::uint64_t seed) {
  if (frame.dim() != candidate.dim() || frame.size() != candidate.size())
    throw DimensionMismatch("frame and candidate must share dimension and size");

  DualVerdict v;
  for (const auto& u : probe_vectors(frame.dim(), seed)) {
    const QVector recon = candidate.synthesize(frame.analyze(u));
    v.reconstruction_residual =
        std::max(v.reconstruction_residual, (u - recon).norm());
  }

  const QMatrix& t = frame.synthesis_matrix();
  const QMatrix& u_ = candidate.synthesis_matrix();
  const QMatrix eye = QMatrix::identity(frame.dim());
  v.synthesis_identity_residual = operator_norm(t * adjoint(u_) - eye);
  v.analysis_identity_residual = operator_norm(u_ * adjoint(t) - eye);
  const QMatrix g = adjoint(t) * u_;
  v.idempotency_residual = operator_norm(g * g - g);

  v.reconstruction_ok = v.reconstruction_residual <= tol;
  v.synthesis_ok = v.synthesis_identity_residual <= tol;
  v.analysis_ok = v.analysis_identity_residual <= tol;
  v.idempotency_ok = v.idempotency_residual <= tol;
  v.coherent = v.reconstruction_ok == v.synthesis_ok &&
               v.synthesis_ok == v.analysis_ok &&
               v.analysis_ok == v.idempotency_ok;
  v.pass = v.reconstruction_ok && v.synthesis_ok && v.analysis_ok &&
           v.idempotency_ok;
  return v;
}

DualFrameCheck dual_is_frame_check(const Frame& frame, const Frame& candidate,
                                   double tol, std::uint64_t seed) {
  DualFrameCheck r;
  r.forward = verify_alternate_dual(frame, candidate, tol, seed);
  r.candidate_bounds = candidate.bounds(tol);
  r.candidate_is_frame = r.candidate_bounds.is_frame;
  r.reverse = verify_alternate_dual(candidate, frame, tol, seed);
  r.pass = r.forward.pass && r.candidate_is_frame && r.reverse.pass;
  return r;
}

NormIdentity norm_identity_check(const Frame& frame, const QVector& u,
                                 const CoefficientSeq& c, double tol) {
  const QVector synthesized = frame.synthesize(c);
  const double gate = (synthesized - u).norm();
  if (gate > tol * std::max(1.0, u.norm())) {
    std::ostringstream os;
    os << "coefficients synthesize a vector at distance " << gate
       << " from the target";
    throw NotARepresentation(os.str());
  }
  const CoefficientSeq minimal = frame.minimal_norm_coefficients(u, tol);

  NormIdentity out;
  out.coefficient_norm_sq = c.norm_sq();
  out.minimal_norm_sq = minimal.norm_sq();
  out.gap_norm_sq = (minimal - c).norm_sq();
  out.identity_residual = std::fabs(out.coefficient_norm_sq -
                                    out.minimal_norm_sq - out.gap_norm_sq);
  out.orthogonality_residual = inner(c - minimal, minimal).modulus();
  return out;
}

NormIdentitySweep norm_identity_sweep(const Frame& frame, double tol,
                                      std::uint64_t seed) {
  const auto kernel = kernel_basis(frame.synthesis_matrix());
  Rng rng(seed ^ 0xd1b54a32d192ed03ULL);  // stream distinct from the probes
  NormIdentitySweep sweep;
  for (const auto& u : probe_vectors(frame.dim(), seed)) {
    const CoefficientSeq minimal = frame.minimal_norm_coefficients(u, tol);
    for (int rep = 0; rep < 3; ++rep) {
      CoefficientSeq c = minimal;
      if (rep > 0)
        for (const auto& k : kernel) c = c + k * rng.quaternion();
      const NormIdentity r = norm_identity_check(frame, u, c, tol);
      const double rel = r.identity_residual /
                         std::max(1.0, r.coefficient_norm_sq);
      if (rel >= sweep.worst_relative_identity) {
        sweep.worst_relative_identity = rel;
        sweep.worst = r;
      }
      sweep.worst_minimality_violation =
          std::max(sweep.worst_minimality_violation,
                   std::sqrt(r.minimal_norm_sq) - std::sqrt(r.coefficient_norm_sq));
      ++sweep.cases;
    }
  }
  return sweep;
}

}  // namespace qf
