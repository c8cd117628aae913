// Command line front end for the qframe shared library.  All numerics go
// through the C API in qframe/qframe.h; this file only parses arguments,
// formats reports and maps statuses to exit codes (0 pass, 1 verdict
// failure, 2 input or usage error).

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qframe/qframe.h"

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitVerdictFailure = 1;
constexpr int kExitUsage = 2;

struct FrameHandle {
  qf_frame* p = nullptr;
  FrameHandle() = default;
  FrameHandle(const FrameHandle&) = delete;
  FrameHandle& operator=(const FrameHandle&) = delete;
  ~FrameHandle() { qf_frame_free(p); }
};

struct CommonOptions {
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string output;
};

void add_common_options(CLI::App* cmd, CommonOptions* opts,
                        bool with_output = true) {
  cmd->add_option("--tolerance", opts->tolerance,
                  "verdict tolerance (default 1e-9)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opts->seed,
                  "seed for probe vectors and generated data");
  cmd->add_option("--format", opts->format, "report format")
      ->check(CLI::IsMember({"text", "structured"}));
  if (with_output)
    cmd->add_option("--output", opts->output, "write the report to this file");
}

qf_options to_options(const CommonOptions& c) {
  return qf_options{c.tolerance, c.seed};
}

int exit_class(qf_status status) {
  switch (status) {
    case QF_ERR_IO:
    case QF_ERR_SCHEMA:
    case QF_ERR_DIMENSION_MISMATCH:
    case QF_ERR_INVALID_ARGUMENT:
    case QF_ERR_INVALID_VALUE:
      return kExitUsage;
    default:
      return kExitVerdictFailure;
  }
}

/// Prints the failure and exits; only returns when status is QF_OK.
void require_ok(qf_status status, const std::string& context) {
  if (status == QF_OK) return;
  std::cerr << "error: " << context << ": " << qf_status_name(status) << ": "
            << qf_last_error() << "\n";
  std::exit(exit_class(status));
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "unavailable";
  std::uint64_t h = 1469598103934665603ULL;
  char buf[4096];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ULL;
    }
  }
  char hex[32];
  std::snprintf(hex, sizeof(hex), "fnv1a:%016" PRIx64, h);
  return hex;
}

/// One verdict row of a report: a named residual against its tolerance.
struct Check {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

struct Report {
  std::string command;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  json inputs = json::array();
  json facts = json::object();  // bounds, flags, scalar observations
  std::vector<Check> checks;
  bool pass = true;
  double timing_ms = 0.0;

  void add_input(const std::string& role, const std::string& path,
                 const qf_frame* f) {
    inputs.push_back(json{{"role", role},
                          {"path", path},
                          {"digest", file_digest(path)},
                          {"dimension", qf_frame_dimension(f)},
                          {"count", qf_frame_count(f)},
                          {"label", qf_frame_label(f)}});
  }

  void add_check(const std::string& name, double residual, double tol) {
    const bool ok = residual <= tol;
    checks.push_back(Check{name, residual, tol, ok});
    pass = pass && ok;
  }

  void require_flag(const std::string& name, bool value) {
    facts[name] = value;
    pass = pass && value;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "tool.name = qframe\n";
    os << "tool.version = " << qf_version() << "\n";
    os << "command = " << command << "\n";
    for (const auto& in : inputs) {
      const std::string role = in["role"].get<std::string>();
      os << "input." << role << ".path = " << in["path"].get<std::string>()
         << "\n";
      os << "input." << role << ".digest = "
         << in["digest"].get<std::string>() << "\n";
      os << "input." << role << ".dimension = " << in["dimension"] << "\n";
      os << "input." << role << ".count = " << in["count"] << "\n";
      if (!in["label"].get<std::string>().empty())
        os << "input." << role << ".label = " << in["label"].get<std::string>()
           << "\n";
    }
    os << "options.tolerance = " << format_double(tolerance) << "\n";
    os << "options.seed = " << seed << "\n";
    for (auto it = facts.begin(); it != facts.end(); ++it) {
      os << it.key() << " = ";
      if (it.value().is_number_float())
        os << format_double(it.value().get<double>());
      else
        os << it.value().dump();
      os << "\n";
    }
    for (const auto& c : checks) {
      os << "check." << c.name << ".residual = " << format_double(c.residual)
         << "\n";
      os << "check." << c.name << ".tolerance = " << format_double(c.tolerance)
         << "\n";
      os << "check." << c.name << ".pass = " << (c.pass ? "true" : "false")
         << "\n";
    }
    os << "report.pass = " << (pass ? "true" : "false") << "\n";
    os << "report.timing_ms = " << timing_ms << "\n";
    return os.str();
  }

  json to_json() const {
    json checks_json = json::array();
    for (const auto& c : checks)
      checks_json.push_back(json{{"name", c.name},
                                 {"residual", c.residual},
                                 {"tolerance", c.tolerance},
                                 {"pass", c.pass}});
    return json{{"tool", {{"name", "qframe"}, {"version", qf_version()}}},
                {"command", command},
                {"inputs", inputs},
                {"options", {{"tolerance", tolerance}, {"seed", seed}}},
                {"facts", facts},
                {"checks", checks_json},
                {"pass", pass},
                {"timing_ms", timing_ms}};
  }
};

int emit_report(const Report& report, const CommonOptions& opts) {
  const std::string body = opts.format == "structured"
                               ? report.to_json().dump(2) + "\n"
                               : report.to_text();
  if (opts.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(opts.output, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "error: cannot open '" << opts.output << "' for writing\n";
      return kExitUsage;
    }
    out << body;
  }
  return report.pass ? kExitPass : kExitVerdictFailure;
}

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

void put_bounds(Report& report, const qf_bounds& b) {
  report.facts["bounds.lower"] = b.lower;
  report.facts["bounds.upper"] = b.upper;
  report.facts["bounds.is_frame"] = static_cast<bool>(b.is_frame);
  report.facts["bounds.is_bessel"] = static_cast<bool>(b.is_bessel);
  report.facts["bounds.is_tight"] = static_cast<bool>(b.is_tight);
  report.facts["bounds.is_parseval"] = static_cast<bool>(b.is_parseval);
}

void put_dual_verdict(Report& report, const std::string& prefix,
                      const qf_dual_verdict& v, double tol) {
  report.add_check(prefix + ".reconstruction", v.reconstruction_residual, tol);
  report.add_check(prefix + ".synthesis_identity",
                   v.synthesis_identity_residual, tol);
  report.add_check(prefix + ".analysis_identity", v.analysis_identity_residual,
                   tol);
  report.add_check(prefix + ".idempotency", v.idempotency_residual, tol);
  report.facts[prefix + ".coherent"] = static_cast<bool>(v.coherent);
  report.pass = report.pass && v.coherent;
}

int cmd_bounds(const std::string& path, const CommonOptions& opts) {
  Timer timer;
  FrameHandle f;
  require_ok(qf_frame_read(path.c_str(), &f.p), path);
  const qf_options o = to_options(opts);
  qf_bounds b{};
  require_ok(qf_frame_bounds(f.p, &o, &b), "bounds");

  Report report;
  report.command = "bounds";
  report.tolerance = opts.tolerance;
  report.seed = opts.seed;
  report.add_input("frame", path, f.p);
  put_bounds(report, b);
  report.pass = b.is_frame;
  report.timing_ms = timer.ms();
  return emit_report(report, opts);
}

int cmd_report(const std::string& path, const CommonOptions& opts) {
  Timer timer;
  FrameHandle f;
  require_ok(qf_frame_read(path.c_str(), &f.p), path);
  const qf_options o = to_options(opts);

  Report report;
  report.command = "report";
  report.tolerance = opts.tolerance;
  report.seed = opts.seed;
  report.add_input("frame", path, f.p);

  qf_bounds b{};
  require_ok(qf_frame_bounds(f.p, &o, &b), "bounds");
  put_bounds(report, b);

  if (!b.is_frame) {
    report.require_flag("bounds.is_frame", false);
    report.timing_ms = timer.ms();
    return emit_report(report, opts);
  }

  FrameHandle dual;
  require_ok(qf_frame_canonical_dual(f.p, &o, &dual.p), "canonical dual");
  qf_bounds db{};
  require_ok(qf_frame_bounds(dual.p, &o, &db), "canonical dual bounds");
  report.facts["canonical_dual.lower"] = db.lower;
  report.facts["canonical_dual.upper"] = db.upper;
  report.add_check("canonical_dual.lower_is_reciprocal_upper",
                   std::fabs(db.lower - 1.0 / b.upper),
                   opts.tolerance * std::max(1.0, 1.0 / b.upper));
  report.add_check("canonical_dual.upper_is_reciprocal_lower",
                   std::fabs(db.upper - 1.0 / b.lower),
                   opts.tolerance * std::max(1.0, 1.0 / b.lower));

  qf_dual_verdict verdict{};
  require_ok(qf_verify_dual(f.p, dual.p, &o, &verdict), "verify dual");
  put_dual_verdict(report, "canonical_dual", verdict, opts.tolerance);

  qf_norm_identity_sweep sweep{};
  require_ok(qf_norm_identity_sweep_run(f.p, &o, &sweep),
             "norm identity sweep");
  report.facts["norm_identity.cases"] = sweep.cases;
  report.add_check("norm_identity.pythagorean", sweep.worst_relative_identity,
                   10.0 * opts.tolerance);
  report.add_check("norm_identity.minimality",
                   sweep.worst_minimality_violation, opts.tolerance);

  qf_projection_report proj{};
  require_ok(qf_gram_projection(f.p, &o, &proj, nullptr), "gram projection");
  report.add_check("gram_projection.idempotency", proj.idempotency_residual,
                   opts.tolerance);
  report.add_check("gram_projection.self_adjointness",
                   proj.self_adjointness_residual, opts.tolerance);
  report.add_check("gram_projection.range_identity", proj.range_residual,
                   opts.tolerance);
  report.add_check("gram_projection.kernel_annihilation", proj.kernel_residual,
                   opts.tolerance);
  report.add_check("gram_projection.formula_agreement", proj.formula_residual,
                   0.1 * opts.tolerance);
  report.add_check("gram_projection.trace", proj.trace_error,
                   100.0 * opts.tolerance);

  report.timing_ms = timer.ms();
  return emit_report(report, opts);
}

int cmd_dual(const std::string& path, const std::string& dual_output,
             const CommonOptions& opts) {
  Timer timer;
  FrameHandle f;
  require_ok(qf_frame_read(path.c_str(), &f.p), path);
  const qf_options o = to_options(opts);

  FrameHandle dual;
  require_ok(qf_frame_canonical_dual(f.p, &o, &dual.p), "canonical dual");

  Report report;
  report.command = "dual";
  report.tolerance = opts.tolerance;
  report.seed = opts.seed;
  report.add_input("frame", path, f.p);

  qf_bounds b{}, db{};
  require_ok(qf_frame_bounds(f.p, &o, &b), "bounds");
  require_ok(qf_frame_bounds(dual.p, &o, &db), "dual bounds");
  put_bounds(report, b);
  report.facts["canonical_dual.lower"] = db.lower;
  report.facts["canonical_dual.upper"] = db.upper;
  report.add_check("canonical_dual.lower_is_reciprocal_upper",
                   std::fabs(db.lower - 1.0 / b.upper),
                   opts.tolerance * std::max(1.0, 1.0 / b.upper));
  report.add_check("canonical_dual.upper_is_reciprocal_lower",
                   std::fabs(db.upper - 1.0 / b.lower),
                   opts.tolerance * std::max(1.0, 1.0 / b.lower));

  qf_dual_verdict verdict{};
  require_ok(qf_verify_dual(f.p, dual.p, &o, &verdict), "verify dual");
  put_dual_verdict(report, "canonical_dual", verdict, opts.tolerance);

  if (!dual_output.empty()) {
    require_ok(qf_frame_write(dual.p, dual_output.c_str()), dual_output);
    report.facts["canonical_dual.written_to"] = dual_output;
  }

  report.timing_ms = timer.ms();
  return emit_report(report, opts);
}

int cmd_verify_dual(const std::string& frame_path,
                    const std::string& candidate_path,
                    const CommonOptions& opts) {
  Timer timer;
  FrameHandle f, g;
  require_ok(qf_frame_read(frame_path.c_str(), &f.p), frame_path);
  require_ok(qf_frame_read(candidate_path.c_str(), &g.p), candidate_path);
  const qf_options o = to_options(opts);

  qf_dual_verdict verdict{};
  require_ok(qf_verify_dual(f.p, g.p, &o, &verdict), "verify dual");

  Report report;
  report.command = "verify-dual";
  report.tolerance = opts.tolerance;
  report.seed = opts.seed;
  report.add_input("frame", frame_path, f.p);
  report.add_input("candidate", candidate_path, g.p);
  put_dual_verdict(report, "dual", verdict, opts.tolerance);
  report.timing_ms = timer.ms();
  return emit_report(report, opts);
}

int cmd_project(const std::string& frame_path, const std::string& span_path,
                const std::string& projected_output,
                const CommonOptions& opts) {
  Timer timer;
  FrameHandle f, span;
  require_ok(qf_frame_read(frame_path.c_str(), &f.p), frame_path);
  require_ok(qf_frame_read(span_path.c_str(), &span.p), span_path);
  const qf_options o = to_options(opts);

  FrameHandle projected;
  qf_subspace_report sub{};
  require_ok(qf_project_frame(f.p, span.p, &o, &projected.p, &sub), "project");

  Report report;
  report.command = "project";
  report.tolerance = opts.tolerance;
  report.seed = opts.seed;
  report.add_input("frame", frame_path, f.p);
  report.add_input("subspace", span_path, span.p);
  report.facts["subspace.dimension"] = sub.subspace_dim;
  report.facts["projected.lower"] = sub.projected_lower;
  report.facts["projected.upper"] = sub.projected_upper;
  report.require_flag("projected.is_frame_for_subspace",
                      sub.projected_is_frame);
  report.require_flag("projected.bounds_within_ambient", sub.bounds_within);
  report.add_check("projected.alternate_dual", sub.alt_dual_residual,
                   opts.tolerance);
  report.facts["commutation.commutator_residual"] = sub.commutator_residual;
  report.facts["commutation.dual_mismatch_residual"] =
      sub.dual_mismatch_residual;
  report.facts["commutation.commutes"] = static_cast<bool>(sub.commutes);
  report.facts["commutation.duals_match"] = static_cast<bool>(sub.duals_match);
  report.require_flag("commutation.coherent", sub.coherent);

  if (!projected_output.empty()) {
    require_ok(qf_frame_write(projected.p, projected_output.c_str()),
               projected_output);
    report.facts["projected.written_to"] = projected_output;
  }

  report.timing_ms = timer.ms();
  return emit_report(report, opts);
}

int cmd_gen_example(const std::string& kind, std::size_t dimension,
                    const std::string& output, const CommonOptions& opts) {
  FrameHandle f;
  require_ok(qf_frame_generate(kind.c_str(), dimension, opts.seed, &f.p),
             "generate");
  require_ok(qf_frame_write(f.p, output.c_str()), output);
  std::cout << "wrote " << qf_frame_label(f.p) << " (" << qf_frame_count(f.p)
            << " vectors of dimension " << qf_frame_dimension(f.p) << ") to "
            << output << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite frame analysis over right quaternionic Hilbert spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("qframe ") + qf_version());

  CommonOptions bounds_opts, report_opts, dual_opts, verify_opts, project_opts,
      gen_opts;
  std::string bounds_file, report_file, dual_file, dual_out;
  std::string verify_frame, verify_candidate;
  std::string project_frame_file, project_span_file, project_out;
  std::string gen_kind, gen_output;
  std::size_t gen_dimension = 0;

  auto* bounds_cmd =
      app.add_subcommand("bounds", "frame bounds and classification flags");
  bounds_cmd->add_option("frame", bounds_file, "frame file")->required();
  add_common_options(bounds_cmd, &bounds_opts);

  auto* report_cmd = app.add_subcommand(
      "report", "bounds, canonical dual, norm identity and projection checks");
  report_cmd->add_option("frame", report_file, "frame file")->required();
  add_common_options(report_cmd, &report_opts);

  auto* dual_cmd =
      app.add_subcommand("dual", "canonical dual frame and its verification");
  dual_cmd->add_option("frame", dual_file, "frame file")->required();
  dual_cmd->add_option("--dual-output", dual_out,
                       "write the canonical dual as a frame file");
  add_common_options(dual_cmd, &dual_opts);

  auto* verify_cmd = app.add_subcommand(
      "verify-dual", "test a candidate family as an alternate dual");
  verify_cmd->add_option("frame", verify_frame, "frame file")->required();
  verify_cmd->add_option("candidate", verify_candidate, "candidate file")
      ->required();
  add_common_options(verify_cmd, &verify_opts);

  auto* project_cmd = app.add_subcommand(
      "project", "project a frame onto the span of a second family");
  project_cmd->add_option("frame", project_frame_file, "frame file")
      ->required();
  project_cmd
      ->add_option("subspace", project_span_file,
                   "frame file whose vectors span the subspace")
      ->required();
  project_cmd->add_option("--projected-output", project_out,
                          "write the projected family as a frame file");
  add_common_options(project_cmd, &project_opts);

  auto* gen_cmd =
      app.add_subcommand("gen-example", "write one of the built-in families");
  gen_cmd
      ->add_option("--kind", gen_kind,
                   "duplicated-basis, random-frame or orthonormal")
      ->required()
      ->check(CLI::IsMember({"duplicated-basis", "random-frame", "orthonormal"}));
  gen_cmd->add_option("-n,--dimension", gen_dimension, "space dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--output", gen_output, "destination frame file")
      ->required();
  gen_cmd->add_option("--seed", gen_opts.seed, "seed for random-frame");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (bounds_cmd->parsed()) return cmd_bounds(bounds_file, bounds_opts);
  if (report_cmd->parsed()) return cmd_report(report_file, report_opts);
  if (dual_cmd->parsed()) return cmd_dual(dual_file, dual_out, dual_opts);
  if (verify_cmd->parsed())
    return cmd_verify_dual(verify_frame, verify_candidate, verify_opts);
  if (project_cmd->parsed())
    return cmd_project(project_frame_file, project_span_file, project_out,
                       project_opts);
  if (gen_cmd->parsed())
    return cmd_gen_example(gen_kind, gen_dimension, gen_output, gen_opts);
  return kExitUsage;
}
