#pragma once

#include <cstdint>
#include <random>

#include "qframe/qlinalg.hpp"

namespace qf {

/// Seeded source of quaternionic data.  The engine-to-double mapping is
/// pinned here so that a seed produces the same stream on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * unit() - 1.0; }

  std::size_t index(std::size_t bound) {
    return static_cast<std::size_t>(engine_() % bound);
  }

  Quaternion quaternion() {
    const double a = symmetric();
    const double b = symmetric();
    const double c = symmetric();
    const double d = symmetric();
    return Quaternion(a, b, c, d);
  }

  QVector vector(std::size_t n) {
    QVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = quaternion();
    return v;
  }

  QVector unit_vector(std::size_t n) {
    for (;;) {
      QVector v = vector(n);
      const double norm = v.norm();
      if (norm > 1e-6) return v * Quaternion(1.0 / norm);
    }
  }

private:
  std::mt19937_64 engine_;
};

}  // namespace qf
