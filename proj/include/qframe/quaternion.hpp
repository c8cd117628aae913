#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

#include "qframe/errors.hpp"

namespace qf {

/// Library-wide default for absolute-or-relative comparisons and verdicts.
inline constexpr double kDefaultTolerance = 1e-9;

/// Scalar of the four-dimensional real division algebra with units i, j, k
/// satisfying i^2 = j^2 = k^2 = -1 and ij = k.  Stored as (x0, x1, x2, x3)
/// for q = x0 + x1 i + x2 j + x3 k.  Constructors reject non-finite
/// components, so every reachable value is finite.
class Quaternion {
public:
  /// Zero element.
  Quaternion() = default;

  /// Real quaternions convert implicitly; this is the canonical embedding
  /// of the reals into the algebra.
  Quaternion(double x0, double x1 = 0.0, double x2 = 0.0, double x3 = 0.0)
      : c_{x0, x1, x2, x3} {
    if (!(std::isfinite(x0) && std::isfinite(x1) && std::isfinite(x2) &&
          std::isfinite(x3)))
      throw InvalidValue("quaternion component is not finite");
  }

  static Quaternion identity() { return Quaternion(1.0); }
  static Quaternion unit_i() { return Quaternion(0.0, 1.0); }
  static Quaternion unit_j() { return Quaternion(0.0, 0.0, 1.0); }
  static Quaternion unit_k() { return Quaternion(0.0, 0.0, 0.0, 1.0); }

  double x0() const { return c_[0]; }
  double x1() const { return c_[1]; }
  double x2() const { return c_[2]; }
  double x3() const { return c_[3]; }

  Quaternion conj() const { return Quaternion(c_[0], -c_[1], -c_[2], -c_[3]); }

  double modulus_sq() const {
    return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
  }

  /// Overflow-safe modulus: nested hypot keeps intermediate squares in range.
  double modulus() const {
    return std::hypot(std::hypot(c_[0], c_[1]), std::hypot(c_[2], c_[3]));
  }

  /// Multiplicative inverse conj(q)/|q|^2, scaled to stay finite over the
  /// full double range.  Throws ZeroDivision for the zero quaternion.
  Quaternion inverse() const {
    const double s = std::max({std::fabs(c_[0]), std::fabs(c_[1]),
                               std::fabs(c_[2]), std::fabs(c_[3])});
    if (s == 0.0) throw ZeroDivision("cannot invert the zero quaternion");
    const double a = c_[0] / s, b = c_[1] / s, c = c_[2] / s, d = c_[3] / s;
    const double n2s = (a * a + b * b + c * c + d * d) * s;  // |q|^2 / s
    return Quaternion(a / n2s, -b / n2s, -c / n2s, -d / n2s);
  }

  bool operator==(const Quaternion&) const = default;  // exact, componentwise

  Quaternion operator-() const {
    return Quaternion(-c_[0], -c_[1], -c_[2], -c_[3]);
  }

  friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return Quaternion(p.c_[0] + q.c_[0], p.c_[1] + q.c_[1], p.c_[2] + q.c_[2],
                      p.c_[3] + q.c_[3]);
  }

  friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return Quaternion(p.c_[0] - q.c_[0], p.c_[1] - q.c_[1], p.c_[2] - q.c_[2],
                      p.c_[3] - q.c_[3]);
  }

  /// Hamilton product; non-commutative.
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return Quaternion(
        p.c_[0] * q.c_[0] - p.c_[1] * q.c_[1] - p.c_[2] * q.c_[2] - p.c_[3] * q.c_[3],
        p.c_[0] * q.c_[1] + p.c_[1] * q.c_[0] + p.c_[2] * q.c_[3] - p.c_[3] * q.c_[2],
        p.c_[0] * q.c_[2] - p.c_[1] * q.c_[3] + p.c_[2] * q.c_[0] + p.c_[3] * q.c_[1],
        p.c_[0] * q.c_[3] + p.c_[1] * q.c_[2] - p.c_[2] * q.c_[1] + p.c_[3] * q.c_[0]);
  }

  friend Quaternion operator/(const Quaternion& p, double s) {
    return Quaternion(p.c_[0] / s, p.c_[1] / s, p.c_[2] / s, p.c_[3] / s);
  }

  Quaternion& operator+=(const Quaternion& q) { return *this = *this + q; }
  Quaternion& operator-=(const Quaternion& q) { return *this = *this - q; }
  Quaternion& operator*=(const Quaternion& q) { return *this = *this * q; }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.c_[0] << ", " << q.c_[1] << ", " << q.c_[2] << ", "
              << q.c_[3] << ')';
  }

private:
  std::array<double, 4> c_{0.0, 0.0, 0.0, 0.0};
};

/// Componentwise absolute-or-relative comparison with one shared tolerance.
inline bool approx_equal(const Quaternion& p, const Quaternion& q,
                         double tol = kDefaultTolerance) {
  const auto close = [tol](double a, double b) {
    const double d = std::fabs(a - b);
    return d <= tol || d <= tol * std::max(std::fabs(a), std::fabs(b));
  };
  return close(p.x0(), q.x0()) && close(p.x1(), q.x1()) &&
         close(p.x2(), q.x2()) && close(p.x3(), q.x3());
}

}  // namespace qf
