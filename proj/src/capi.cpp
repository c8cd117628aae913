#include "qframe/qframe.h"

#include <cstring>
#include <sstream>
#include <string>

#include "qframe/frame_io.hpp"
#include "qframe/frames.hpp"
#include "qframe/projection.hpp"
#include "qframe/version.hpp"

struct qf_frame {
  qf::Frame frame;
  std::string label;
};

namespace {

thread_local std::string t_last_error;

qf_status map_code(qf::errc code) {
  switch (code) {
    case qf::errc::invalid_value: return QF_ERR_INVALID_VALUE;
    case qf::errc::invalid_parameter: return QF_ERR_INVALID_ARGUMENT;
    case qf::errc::dimension_mismatch: return QF_ERR_DIMENSION_MISMATCH;
    case qf::errc::zero_division: return QF_ERR_ZERO_DIVISION;
    case qf::errc::singular: return QF_ERR_SINGULAR;
    case qf::errc::not_self_adjoint: return QF_ERR_NOT_SELF_ADJOINT;
    case qf::errc::pairing_violation: return QF_ERR_PAIRING_VIOLATION;
    case qf::errc::structure_violation: return QF_ERR_STRUCTURE_VIOLATION;
    case qf::errc::not_a_frame: return QF_ERR_NOT_A_FRAME;
    case qf::errc::not_a_representation: return QF_ERR_NOT_A_REPRESENTATION;
    case qf::errc::invalid_subspace: return QF_ERR_INVALID_SUBSPACE;
    case qf::errc::singular_projected_frame:
      return QF_ERR_SINGULAR_PROJECTED_FRAME;
    case qf::errc::io_error: return QF_ERR_IO;
    case qf::errc::schema_error: return QF_ERR_SCHEMA;
    case qf::errc::internal_error: return QF_ERR_INTERNAL;
  }
  return QF_ERR_INTERNAL;
}

template <typename Fn>
qf_status wrap(Fn&& fn) noexcept {
  try {
    fn();
    return QF_OK;
  } catch (const qf::Error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return QF_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown failure";
    return QF_ERR_INTERNAL;
  }
}

qf_status fail_argument(const char* message) noexcept {
  t_last_error = message;
  return QF_ERR_INVALID_ARGUMENT;
}

qf_options effective(const qf_options* options) {
  if (options == nullptr) return qf_default_options();
  return *options;
}

bool options_valid(const qf_options& o) {
  return o.tolerance > 0.0;
}

void pack_quaternion(const qf::Quaternion& q, double* out) {
  out[0] = q.x0();
  out[1] = q.x1();
  out[2] = q.x2();
  out[3] = q.x3();
}

void pack_vector(const qf::QVector& v, double* out) {
  for (std::size_t i = 0; i < v.size(); ++i) pack_quaternion(v[i], out + 4 * i);
}

qf::QVector unpack_vector(const double* data, std::size_t n) {
  qf::QVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = qf::Quaternion(data[4 * i], data[4 * i + 1], data[4 * i + 2],
                          data[4 * i + 3]);
  return v;
}

void fill_dual_verdict(const qf::DualVerdict& v, qf_dual_verdict* out) {
  out->reconstruction_residual = v.reconstruction_residual;
  out->synthesis_identity_residual = v.synthesis_identity_residual;
  out->analysis_identity_residual = v.analysis_identity_residual;
  out->idempotency_residual = v.idempotency_residual;
  out->reconstruction_ok = v.reconstruction_ok;
  out->synthesis_ok = v.synthesis_ok;
  out->analysis_ok = v.analysis_ok;
  out->idempotency_ok = v.idempotency_ok;
  out->coherent = v.coherent;
  out->pass = v.pass;
}

void fill_norm_identity(const qf::NormIdentity& r, qf_norm_identity* out) {
  out->coefficient_norm_sq = r.coefficient_norm_sq;
  out->minimal_norm_sq = r.minimal_norm_sq;
  out->gap_norm_sq = r.gap_norm_sq;
  out->identity_residual = r.identity_residual;
  out->orthogonality_residual = r.orthogonality_residual;
}

}  // namespace

extern "C" {

qf_options qf_default_options(void) {
  return qf_options{qf::kDefaultTolerance, 0};
}

const char* qf_version(void) { return qf::kVersion; }

const char* qf_status_name(qf_status status) {
  switch (status) {
    case QF_OK: return "ok";
    case QF_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case QF_ERR_INVALID_VALUE: return "invalid_value";
    case QF_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case QF_ERR_ZERO_DIVISION: return "zero_division";
    case QF_ERR_SINGULAR: return "singular";
    case QF_ERR_NOT_SELF_ADJOINT: return "not_self_adjoint";
    case QF_ERR_PAIRING_VIOLATION: return "pairing_violation";
    case QF_ERR_STRUCTURE_VIOLATION: return "structure_violation";
    case QF_ERR_NOT_A_FRAME: return "not_a_frame";
    case QF_ERR_NOT_A_REPRESENTATION: return "not_a_representation";
    case QF_ERR_INVALID_SUBSPACE: return "invalid_subspace";
    case QF_ERR_SINGULAR_PROJECTED_FRAME: return "singular_projected_frame";
    case QF_ERR_IO: return "io_error";
    case QF_ERR_SCHEMA: return "schema_error";
    case QF_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* qf_last_error(void) { return t_last_error.c_str(); }

qf_status qf_frame_create(size_t dimension, size_t count,
                          const double* components, qf_frame** out) {
  if (out == nullptr || components == nullptr)
    return fail_argument("null pointer argument");
  *out = nullptr;
  return wrap([&] {
    if (dimension == 0 || count == 0)
      throw qf::InvalidParameter("dimension and count must be at least 1");
    std::vector<qf::QVector> vectors;
    vectors.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
      vectors.push_back(unpack_vector(components + i * 4 * dimension, dimension));
    *out = new qf_frame{qf::Frame(std::move(vectors)), {}};
  });
}

qf_status qf_frame_read(const char* path, qf_frame** out) {
  if (out == nullptr || path == nullptr)
    return fail_argument("null pointer argument");
  *out = nullptr;
  return wrap([&] {
    qf::FrameDocument doc = qf::read_frame_file(path);
    *out = new qf_frame{std::move(doc.frame), std::move(doc.label)};
  });
}

qf_status qf_frame_write(const qf_frame* frame, const char* path) {
  if (frame == nullptr || path == nullptr)
    return fail_argument("null pointer argument");
  return wrap([&] {
    qf::write_frame_file(qf::FrameDocument{frame->frame, frame->label}, path);
  });
}

qf_status qf_frame_generate(const char* kind, size_t dimension, uint64_t seed,
                            qf_frame** out) {
  if (out == nullptr || kind == nullptr)
    return fail_argument("null pointer argument");
  *out = nullptr;
  return wrap([&] {
    if (dimension == 0)
      throw qf::InvalidParameter("dimension must be at least 1");
    std::ostringstream label;
    if (std::strcmp(kind, "duplicated-basis") == 0) {
      label << "duplicated-basis n=" << dimension;
      *out = new qf_frame{qf::Frame::duplicated_basis(dimension), label.str()};
    } else if (std::strcmp(kind, "orthonormal") == 0) {
      label << "orthonormal n=" << dimension;
      *out = new qf_frame{qf::Frame::orthonormal_basis(dimension), label.str()};
    } else if (std::strcmp(kind, "random-frame") == 0) {
      label << "random-frame n=" << dimension << " seed=" << seed;
      *out = new qf_frame{qf::Frame::random(dimension, seed), label.str()};
    } else {
      throw qf::InvalidParameter(std::string("unknown example kind '") + kind +
                                 "'");
    }
  });
}

void qf_frame_free(qf_frame* frame) { delete frame; }

size_t qf_frame_dimension(const qf_frame* frame) {
  return frame ? frame->frame.dim() : 0;
}

size_t qf_frame_count(const qf_frame* frame) {
  return frame ? frame->frame.size() : 0;
}

qf_status qf_frame_components(const qf_frame* frame, double* out) {
  if (frame == nullptr || out == nullptr)
    return fail_argument("null pointer argument");
  return wrap([&] {
    const std::size_t stride = 4 * frame->frame.dim();
    for (std::size_t i = 0; i < frame->frame.size(); ++i)
      pack_vector(frame->frame.vector(i), out + i * stride);
  });
}

const char* qf_frame_label(const qf_frame* frame) {
  return frame ? frame->label.c_str() : "";
}

qf_status qf_frame_set_label(qf_frame* frame, const char* label) {
  if (frame == nullptr || label == nullptr)
    return fail_argument("null pointer argument");
  frame->label = label;
  return QF_OK;
}

qf_status qf_frame_bounds(const qf_frame* frame, const qf_options* options,
                          qf_bounds* out) {
  if (frame == nullptr || out == nullptr)
    return fail_argument("null pointer argument");
  const qf_options o = effective(options);
  if (!options_valid(o)) return fail_argument("tolerance must be positive");
  return wrap([&] {
    const qf::FrameBounds b = frame->frame.bounds(o.tolerance);
    out->lower = b.lower;
    out->upper = b.upper;
    out->is_frame = b.is_frame;
    out->is_bessel = b.is_bessel;
    out->is_tight = b.is_tight;
    out->is_parseval = b.is_parseval;
  });
}

qf_status qf_frame_canonical_dual(const qf_frame* frame,
                                  const qf_options* options, qf_frame** out) {
  if (frame == nullptr || out == nullptr)
    return fail_argument("null pointer argument");
  *out = nullptr;
  const qf_options o = effective(options);
  if (!options_valid(o)) return fail_argument("tolerance must be positive");
  return wrap([&] {
    std::string label = frame->label.empty()
                            ? std::string("canonical-dual")
                            : "canonical-dual of " + frame->label;
    *out = new qf_frame{frame->frame.canonical_dual(o.tolerance),
                        std::move(label)};
  });
}

qf_status qf_verify_dual(const qf_frame* frame, const qf_frame* candidate,
                         const qf_options* options, qf_dual_verdict* out) {
  if (frame == nullptr || candidate == nullptr || out == nullptr)
    return fail_argument("null pointer argument");
  const qf_options o = effective(options);
  if (!options_valid(o)) return fail_argument("tolerance must be positive");
  return wrap([&] {
    fill_dual_verdict(qf::verify_alternate_dual(frame->frame, candidate->frame,
                                                o.tolerance, o.seed),
                      out);
  });
}

qf_status qf_synthesize(const qf_frame* frame, const double* coefficients,
                        double* out_vector) {
  if (frame == nullptr || coefficients == nullptr || out_vector == nullptr)
    return fail_argument("null pointer argument");
  return wrap([&] {
    const qf::QVector c = unpack_vector(coefficients, frame->frame.size());
    pack_vector(frame->frame.synthesize(c), out_vector);
  });
}

qf_status qf_analyze(const qf_frame* frame, const double* vector,
                     double* out_coefficients) {
  if (frame == nullptr || vector == nullptr || out_coefficients == nullptr)
    return fail_argument("null pointer argument");
  return wrap([&] {
    const qf::QVector u = unpack_vector(vector, frame->frame.dim());
    pack_vector(frame->frame.analyze(u), out_coefficients);
  });
}

qf_status qf_minimal_norm_coefficients(const qf_frame* frame,
                                       const double* vector,
                                       const qf_options* options,
                                       double* out_coefficients) {
  if (frame == nullptr || vector == nullptr || out_coefficients == nullptr)
    return fail_argument("null pointer argument");
  const qf_options o = effective(options);
  if (!options_valid(o)) return fail_argument("tolerance must be positive");
  return wrap([&] {
    const qf::QVector u = unpack_vector(vector, frame->frame.dim());
    pack_vector(frame->frame.minimal_norm_coefficients(u, o.tolerance),
                out_coefficients);
  });
}

qf_status qf_norm_identity_check(const qf_frame* frame, const double* vector,
                                 const double* coefficients,
                                 const qf_options* options,
                                 qf_norm_identity* out) {
  if (frame == nullptr || vector == nullptr || coefficients == nullptr ||
      out == nullptr)
    return fail_argument("null pointer argument");
  const qf_options o = effective(options);
  if (!options_valid(o)) return fail_argument("tolerance must be positive");
  return wrap([&] {
    const qf::QVector u = unpack_vector(vector, frame->frame.dim());
    const qf::QVector c = unpack_vector(coefficients, frame->frame.size());
    fill_norm_identity(
        qf::norm_identity_check(frame->frame, u, c, o.tolerance), out);
  });
}

qf_status qf_norm_identity_sweep_run(const qf_frame* frame,
                                     const qf_options* options,
                                     qf_norm_identity_sweep* out) {
  if (frame == nullptr || out == nullptr)
    return fail_argument("null pointer argument");
  const qf_options o = effective(options);
  if (!options_valid(o)) return fail_argument("tolerance must be positive");
  return wrap([&] {
    const qf::NormIdentitySweep s =
        qf::norm_identity_sweep(frame->frame, o.tolerance, o.seed);
    fill_norm_identity(s.worst, &out->worst);
    out->worst_relative_identity = s.worst_relative_identity;
    out->worst_minimality_violation = s.worst_minimality_violation;
    out->cases = s.cases;
  });
}

qf_status qf_gram_projection(const qf_frame* frame, const qf_options* options,
                             qf_projection_report* out, double* q_components) {
  if (frame == nullptr || out == nullptr)
    return fail_argument("null pointer argument");
  const qf_options o = effective(options);
  if (!options_valid(o)) return fail_argument("tolerance must be positive");
  return wrap([&] {
    const qf::ProjectionReport rep =
        qf::gram_projection(frame->frame, o.tolerance, o.seed);
    out->idempotency_residual = rep.idempotency_residual;
    out->self_adjointness_residual = rep.self_adjointness_residual;
    out->range_residual = rep.range_residual;
    out->kernel_residual = rep.kernel_residual;
    out->formula_residual = rep.formula_residual;
    out->trace_error = rep.trace_error;
    out->pass = rep.pass;
    if (q_components != nullptr) {
      const qf::QMatrix& q = rep.gram_projection;
      for (std::size_t r = 0; r < q.rows(); ++r)
        for (std::size_t c = 0; c < q.cols(); ++c)
          pack_quaternion(q(r, c), q_components + 4 * (r * q.cols() + c));
    }
  });
}

qf_status qf_project_frame(const qf_frame* frame, const qf_frame* spanning,
                           const qf_options* options, qf_frame** projected_out,
                           qf_subspace_report* out) {
  if (frame == nullptr || spanning == nullptr || out == nullptr)
    return fail_argument("null pointer argument");
  if (projected_out != nullptr) *projected_out = nullptr;
  const qf_options o = effective(options);
  if (!options_valid(o)) return fail_argument("tolerance must be positive");
  return wrap([&] {
    const qf::Subspace sub =
        qf::Subspace::span(spanning->frame.vectors(), o.tolerance);
    qf::ProjectedFrameResult res =
        qf::project_frame(frame->frame, sub, o.tolerance, o.seed);
    const qf::CommutationVerdict comm =
        qf::canonical_dual_commutation_check(frame->frame, sub, o.tolerance);

    out->subspace_dim = sub.dim();
    out->projected_lower = res.lower;
    out->projected_upper = res.upper;
    out->projected_is_frame = res.frame_for_subspace;
    out->bounds_within = res.bounds_within;
    out->alt_dual_residual = res.alt_dual_residual;
    out->alt_dual_ok = res.alt_dual_ok;
    out->commutator_residual = comm.commutator_residual;
    out->dual_mismatch_residual = comm.dual_mismatch_residual;
    out->commutes = comm.commutes;
    out->duals_match = comm.duals_match;
    out->coherent = comm.coherent;
    out->pass = res.pass && comm.coherent;

    if (projected_out != nullptr) {
      std::string label = frame->label.empty()
                              ? std::string("projected")
                              : "projected " + frame->label;
      *projected_out = new qf_frame{std::move(res.projected), std::move(label)};
    }
  });
}

}  // extern "C"
