// Acceptance suite: eight numbered criteria covering the worked duplicated-
// basis example, reconstruction, the minimal-norm decomposition, the
// four-way dual equivalence, the coefficient-space projection, the
// pseudo-inverse laws, subspace projection and the algebra substrate.
// Prints one pass/fail line per criterion; exits 0 only if all pass.

#include <chrono>
#include <cmath>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qframe/frames.hpp"
#include "qframe/projection.hpp"
#include "qframe/random.hpp"
#include "test_support.hpp"

namespace {

using qf::Frame;
using qf::QMatrix;
using qf::Quaternion;
using qf::QVector;

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  std::string detail;
  double seconds = 0.0;

  void fail(const std::string& message) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += message;
  }

  template <typename T>
  void expect(bool condition, const std::string& what, T value) {
    if (condition) return;
    std::ostringstream os;
    os << what << " (got " << value << ")";
    fail(os.str());
  }
};

Frame zero_padded_dual(std::size_t n, bool zeros_first) {
  std::vector<QVector> vs;
  for (std::size_t j = 0; j < n; ++j) {
    if (zeros_first) {
      vs.push_back(QVector(n));
      vs.push_back(QVector::basis(n, j));
    } else {
      vs.push_back(QVector::basis(n, j));
      vs.push_back(QVector(n));
    }
  }
  return Frame(std::move(vs));
}

std::vector<Frame> shared_random_frames() {
  std::vector<Frame> frames;
  frames.reserve(50);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    qf::Rng rng(1000 + seed);
    frames.push_back(qtest::random_test_frame(rng, 10, 25));
  }
  return frames;
}

// --- criterion 1: duplicated-basis example at n in {2, 4, 8} ---
void criterion_1(Criterion& c) {
  for (std::size_t n : {2u, 4u, 8u}) {
    const Frame f = Frame::duplicated_basis(n);
    const auto b = f.bounds();
    c.expect(std::fabs(b.lower - 2.0) <= 1e-9, "lower bound is 2", b.lower);
    c.expect(std::fabs(b.upper - 2.0) <= 1e-9, "upper bound is 2", b.upper);

    const Frame& dual = f.canonical_dual();
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
      worst = std::max(worst,
                       qtest::max_component_diff(
                           dual.vector(i), f.vector(i) * Quaternion(0.5)));
    c.expect(worst <= 1e-12, "canonical dual is the input halved", worst);

    for (bool zeros_first : {false, true}) {
      const auto verdict =
          qf::verify_alternate_dual(f, zero_padded_dual(n, zeros_first));
      c.expect(verdict.pass, "zero-padded family is an alternate dual",
               verdict.reconstruction_residual);
      c.expect(verdict.coherent, "verdicts agree", verdict.coherent);
    }
  }
}

// --- criterion 2: reconstruction on 50 seeded random frames ---
void criterion_2(Criterion& c, const std::vector<Frame>& frames) {
  qf::Rng rng(2024);
  double worst = 0.0;
  for (const Frame& f : frames) {
    const Frame& dual = f.canonical_dual();
    for (int probe = 0; probe < 20; ++probe) {
      const QVector u = rng.unit_vector(f.dim());
      QVector via_dual(f.dim());
      QVector via_frame(f.dim());
      for (std::size_t i = 0; i < f.size(); ++i) {
        via_dual = via_dual + dual.vector(i) * qf::inner(f.vector(i), u);
        via_frame = via_frame + f.vector(i) * qf::inner(dual.vector(i), u);
      }
      worst = std::max(worst, (u - via_dual).norm() / u.norm());
      worst = std::max(worst, (u - via_frame).norm() / u.norm());
    }
  }
  c.expect(worst <= 1e-9, "both reconstruction orders within 1e-9", worst);
}

// --- criterion 3: minimal-norm decomposition ---
void criterion_3(Criterion& c, const std::vector<Frame>& frames) {
  qf::Rng rng(3024);
  double worst_identity = 0.0;
  double worst_excess = 0.0;
  for (const Frame& f : frames) {
    const auto kernel = qf::kernel_basis(f.synthesis_matrix());
    for (int probe = 0; probe < 20; ++probe) {
      const QVector u = rng.unit_vector(f.dim());
      const QVector minimal = f.minimal_norm_coefficients(u);
      for (int rep = 0; rep < 10; ++rep) {
        QVector coeff = minimal;
        for (const auto& k : kernel) coeff = coeff + k * rng.quaternion();
        const auto r = qf::norm_identity_check(f, u, coeff);
        worst_identity = std::max(
            worst_identity,
            r.identity_residual / std::max(1.0, r.coefficient_norm_sq));
        worst_excess = std::max(worst_excess,
                                std::sqrt(r.minimal_norm_sq) -
                                    std::sqrt(r.coefficient_norm_sq));
      }
    }
  }
  c.expect(worst_identity <= 1e-8, "squared-norm identity within 1e-8",
           worst_identity);
  c.expect(worst_excess <= 0.0, "minimal coefficients never exceed",
           worst_excess);
}

// --- criterion 4: four-way equivalence coherence ---
void criterion_4(Criterion& c, const std::vector<Frame>& frames) {
  qf::Rng rng(4024);
  std::size_t pairs = 0;
  std::size_t corrupted = 0;
  std::size_t corrupted_rejected = 0;
  std::size_t incoherent = 0;

  const auto examine = [&](const Frame& f, const Frame& candidate,
                           bool expect_dual) {
    const auto verdict = qf::verify_alternate_dual(f, candidate);
    ++pairs;
    if (!verdict.coherent) ++incoherent;
    if (!expect_dual) {
      ++corrupted;
      if (!verdict.pass) ++corrupted_rejected;
    } else if (!verdict.pass) {
      c.fail("a genuine dual failed verification");
    }
  };

  // genuine duals for the first dozen random frames
  for (std::size_t t = 0; t < 12; ++t) {
    const Frame& f = frames[t];
    examine(f, f.canonical_dual(), true);
    examine(f, qtest::shifted_alternate_dual(f, rng), true);
  }
  const Frame dup = Frame::duplicated_basis(3);
  examine(dup, zero_padded_dual(3, false), true);
  examine(dup, zero_padded_dual(3, true), true);

  // corrupted candidates, kept frames so the equivalence applies; 20 total
  for (std::size_t t = 0; t < 10; ++t) {
    const Frame& f = frames[t];
    const Frame& dual = f.canonical_dual();

    std::vector<QVector> scaled;
    for (std::size_t i = 0; i < dual.size(); ++i)
      scaled.push_back(dual.vector(i) * Quaternion(2.0));
    const Frame doubled(scaled);
    examine(f, doubled, false);

    std::vector<QVector> reversed;
    for (std::size_t i = dual.size(); i-- > 0;)
      reversed.push_back(dual.vector(i));
    Frame shuffled(reversed);
    if (!shuffled.is_frame()) c.fail("corrupted candidate lost frameness");
    examine(f, shuffled, false);
  }

  c.expect(incoherent == 0, "no verdict disagreements", incoherent);
  c.expect(corrupted >= 20, "at least 20 corrupted candidates", corrupted);
  c.expect(corrupted_rejected == corrupted, "every corruption detected",
           corrupted_rejected);
}

// --- criterion 5: coefficient-space projection ---
void criterion_5(Criterion& c, const std::vector<Frame>& frames) {
  std::vector<Frame> tested = frames;
  tested.push_back(Frame::duplicated_basis(2));
  tested.push_back(Frame::duplicated_basis(4));
  tested.push_back(Frame::orthonormal_basis(3));

  double worst_idem = 0.0, worst_sa = 0.0, worst_range = 0.0;
  double worst_kernel = 0.0, worst_formula = 0.0, worst_trace = 0.0;
  for (const Frame& f : tested) {
    const auto rep = qf::gram_projection(f);
    worst_idem = std::max(worst_idem, rep.idempotency_residual);
    worst_sa = std::max(worst_sa, rep.self_adjointness_residual);
    worst_range = std::max(worst_range, rep.range_residual);
    worst_kernel = std::max(worst_kernel, rep.kernel_residual);
    worst_formula = std::max(worst_formula, rep.formula_residual);
    worst_trace = std::max(worst_trace, rep.trace_error);
  }
  c.expect(worst_idem <= 1e-9, "idempotency within 1e-9", worst_idem);
  c.expect(worst_sa <= 1e-9, "self-adjointness within 1e-9", worst_sa);
  c.expect(worst_range <= 1e-9, "identity on analysis range", worst_range);
  c.expect(worst_kernel <= 1e-9, "kernel annihilation", worst_kernel);
  c.expect(worst_formula <= 1e-10, "both product formulas agree",
           worst_formula);
  c.expect(worst_trace <= 1e-7, "trace equals the dimension", worst_trace);
}

// --- criterion 6: pseudo-inverse laws ---
void criterion_6(Criterion& c, const std::vector<Frame>& frames) {
  qf::Rng rng(6024);
  double worst_law = 0.0;
  double worst_match = 0.0;
  for (const Frame& f : frames) {
    const QMatrix& t = f.synthesis_matrix();
    const QMatrix dagger = qf::pseudo_inverse(f);
    worst_law = std::max(worst_law, qf::operator_norm(t * dagger * t - t));
    worst_law =
        std::max(worst_law, qf::operator_norm(dagger * t * dagger - dagger));
    for (int probe = 0; probe < 5; ++probe) {
      const QVector u = rng.unit_vector(f.dim());
      worst_match = std::max(
          worst_match, qtest::max_component_diff(
                           dagger * u, qf::pseudo_inverse_apply(f, u)));
    }
  }
  c.expect(worst_law <= 1e-9, "Moore-Penrose products within 1e-9", worst_law);
  c.expect(worst_match <= 1e-9,
           "pseudo-inverse equals canonical-dual analysis", worst_match);
}

// --- criterion 7: subspace projection and commutation coherence ---
void criterion_7(Criterion& c) {
  qf::Rng rng(7024);
  std::size_t commuting_seen = 0;
  std::size_t non_commuting_seen = 0;
  std::size_t incoherent = 0;
  std::size_t pairs = 0;

  const auto examine = [&](const Frame& f, const qf::Subspace& sub) {
    const auto result = qf::project_frame(f, sub);
    const auto fb = f.bounds();
    ++pairs;
    if (!(result.lower >= fb.lower - 1e-9 && result.upper <= fb.upper + 1e-9))
      c.fail("projected bounds left the ambient interval");
    if (!result.alt_dual_ok) c.fail("projected dual failed to reconstruct");
    const auto comm = qf::canonical_dual_commutation_check(f, sub);
    if (!comm.coherent) ++incoherent;
    if (comm.commutes) ++commuting_seen;
    if (!comm.commutes) ++non_commuting_seen;
  };

  // constructed commuting cases: scalar frame operators and a full space
  examine(Frame::duplicated_basis(3),
          qf::Subspace::span({rng.vector(3), rng.vector(3)}));
  examine(Frame::duplicated_basis(4), qf::Subspace::span({rng.vector(4)}));
  examine(Frame::orthonormal_basis(3), qf::Subspace::full(3));
  const std::size_t constructed_commuting = commuting_seen;

  // constructed non-commuting cases
  const Frame skew{{QVector::basis(2, 0),
                    QVector{Quaternion(1), Quaternion(1)}}};
  examine(skew, qf::Subspace::span({QVector::basis(2, 0)}));
  const Frame skew3{{QVector::basis(3, 0), QVector::basis(3, 1),
                     QVector{Quaternion(1), Quaternion(), Quaternion(1)},
                     QVector::basis(3, 2)}};
  examine(skew3, qf::Subspace::span({QVector::basis(3, 0)}));
  examine(skew, qf::Subspace::span({QVector{Quaternion(1), Quaternion(1)}}));
  const std::size_t constructed_non_commuting = non_commuting_seen;

  // seeded random pairs up to 20 total
  while (pairs < 20) {
    qf::Rng frame_rng(9000 + pairs);
    const Frame f = qtest::random_test_frame(frame_rng, 6, 14);
    if (f.dim() < 2) continue;
    std::vector<QVector> spanning;
    const std::size_t k = 1 + frame_rng.index(f.dim() - 1);
    for (std::size_t i = 0; i < k; ++i)
      spanning.push_back(frame_rng.vector(f.dim()));
    examine(f, qf::Subspace::span(spanning));
  }

  c.expect(pairs >= 20, "at least 20 pairs tested", pairs);
  c.expect(constructed_commuting >= 3, "three constructed commuting cases",
           constructed_commuting);
  c.expect(constructed_non_commuting >= 3,
           "three constructed non-commuting cases", constructed_non_commuting);
  c.expect(incoherent == 0, "commutation booleans agree on every pair",
           incoherent);
}

// --- criterion 8: algebra substrate ---
void criterion_8(Criterion& c) {
  qf::Rng rng(8024);

  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const Quaternion p = rng.quaternion();
    const Quaternion q = rng.quaternion();
    const Quaternion r = rng.quaternion();
    worst = std::max(worst, ((p * q).conj() - q.conj() * p.conj()).modulus() /
                                std::max(1.0, (p * q).modulus()));
    worst = std::max(worst,
                     std::fabs((p * q).modulus() - p.modulus() * q.modulus()) /
                         std::max(1.0, (p * q).modulus()));
    worst = std::max(worst, ((p * q) * r - p * (q * r)).modulus() /
                                std::max(1.0, ((p * q) * r).modulus()));
  }
  c.expect(worst <= 1e-12, "quaternion algebra within 1e-12", worst);

  double worst_inverse = 0.0;
  for (int t = 0; t < 1000; ++t) {
    Quaternion q = rng.quaternion();
    while (q.modulus() < 1e-3) q = rng.quaternion();
    const double scale = std::pow(10.0, -6.0 + 12.0 * rng.unit()) / q.modulus();
    q = q * Quaternion(scale);
    worst_inverse = std::max(
        worst_inverse, (q * q.inverse() - Quaternion::identity()).modulus());
  }
  c.expect(worst_inverse <= 1e-12, "inverse round trip within 1e-12",
           worst_inverse);

  double worst_inner = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng.index(6);
    const QVector u = rng.vector(n);
    const QVector v = rng.vector(n);
    const Quaternion q = rng.quaternion();
    worst_inner = std::max(
        worst_inner, (qf::inner(u, v).conj() - qf::inner(v, u)).modulus() /
                         std::max(1.0, qf::inner(u, v).modulus()));
    worst_inner = std::max(
        worst_inner,
        (qf::inner(u, v * q) - qf::inner(u, v) * q).modulus() /
            std::max(1.0, (qf::inner(u, v) * q).modulus()));
    const double cs = qf::inner(u, v).modulus_sq() -
                      qf::inner(u, u).x0() * qf::inner(v, v).x0();
    worst_inner = std::max(
        worst_inner, cs / std::max(1.0, qf::inner(u, v).modulus_sq()));
  }
  c.expect(worst_inner <= 1e-12, "inner-product axioms within 1e-12",
           worst_inner);

  double worst_adjoint = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng.index(4);
    const std::size_t m = 1 + rng.index(4);
    const QMatrix a = qtest::random_matrix(rng, n, m);
    const QMatrix b = qtest::random_matrix(rng, m, n);
    worst_adjoint =
        std::max(worst_adjoint,
                 qtest::max_component_diff(qf::adjoint(a * b),
                                           qf::adjoint(b) * qf::adjoint(a)));
    worst_adjoint = std::max(
        worst_adjoint, qtest::max_component_diff(qf::adjoint(qf::adjoint(a)), a));
    const QVector u = rng.vector(m);
    const QVector v = rng.vector(n);
    worst_adjoint = std::max(
        worst_adjoint,
        (qf::inner(v, a * u) - qf::inner(qf::adjoint(a) * v, u)).modulus() /
            std::max(1.0, qf::inner(v, a * u).modulus()));
  }
  c.expect(worst_adjoint <= 1e-12, "adjoint laws within 1e-12", worst_adjoint);

  double worst_embed = 0.0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.index(4);
    const std::size_t m = 1 + rng.index(4);
    const std::size_t k = 1 + rng.index(4);
    const QMatrix a = qtest::random_matrix(rng, n, m);
    const QMatrix b = qtest::random_matrix(rng, m, k);
    worst_embed = std::max(
        worst_embed, (qf::embed(a * b) - qf::embed(a) * qf::embed(b)).norm());
  }
  c.expect(worst_embed <= 1e-10, "embedding functoriality within 1e-10",
           worst_embed);

  double worst_solve = 0.0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.index(8);
    const QMatrix a = qtest::random_conditioned_square(rng, n);
    const QVector rhs = rng.vector(n);
    const QVector direct = qf::solve(a, rhs);
    const QVector oracle =
        qf::unembed(qf::embed(a).inverse().eval(), 1e-6) * rhs;
    worst_solve =
        std::max(worst_solve,
                 (direct - oracle).norm() / std::max(1.0, direct.norm()));
  }
  c.expect(worst_solve <= 1e-9,
           "elimination agrees with the embedded inverse", worst_solve);
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  std::vector<Criterion> criteria = {
      {1, "duplicated-basis example replication (n = 2, 4, 8)"},
      {2, "reconstruction on 50 seeded random frames"},
      {3, "minimal-norm decomposition identity"},
      {4, "four-way dual equivalence coherence"},
      {5, "coefficient-space projection"},
      {6, "pseudo-inverse laws"},
      {7, "subspace projection and commutation"},
      {8, "algebra substrate"},
  };

  const std::vector<Frame> frames = shared_random_frames();

  for (Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    switch (c.id) {
      case 1: criterion_1(c); break;
      case 2: criterion_2(c, frames); break;
      case 3: criterion_3(c, frames); break;
      case 4: criterion_4(c, frames); break;
      case 5: criterion_5(c, frames); break;
      case 6: criterion_6(c, frames); break;
      case 7: criterion_7(c); break;
      case 8: criterion_8(c); break;
    }
    c.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    if (c.id == 1 && c.seconds >= 1.0)
      c.fail("runtime exceeded 1 s");
    if (c.id == 2 && c.seconds >= 10.0)
      c.fail("runtime exceeded 10 s");
  }

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    std::ostringstream line;
    line << (c.pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
         << c.title;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << c.seconds << " s)";
    if (!c.pass) line << " -- " << c.detail;
    std::cout << line.str() << "\n";
    if (!c.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
