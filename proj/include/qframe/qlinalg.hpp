#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

#include "qframe/quaternion.hpp"

namespace qf {

/// Relative collapse tolerance for the doubled spectrum of an embedded
/// self-adjoint matrix.
inline constexpr double kEigenvaluePairTolerance = 1e-7;

/// Pivot threshold for elimination, relative to the largest input entry.
inline constexpr double kPivotRelTolerance = 1e-12;

/// Element of H^n as a right module: scalars multiply from the right.
class QVector {
public:
  explicit QVector(std::size_t n) : e_(checked(n)) {}
  QVector(std::initializer_list<Quaternion> init) : e_(init) {
    checked(e_.size());
  }

  /// Coordinate basis vector z_index of H^n.
  static QVector basis(std::size_t n, std::size_t index);

  std::size_t size() const { return e_.size(); }
  Quaternion& operator[](std::size_t i) { return e_[i]; }
  const Quaternion& operator[](std::size_t i) const { return e_[i]; }

  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  double norm_sq() const;
  double norm() const;

  bool operator==(const QVector&) const = default;  // exact

  friend QVector operator+(const QVector& u, const QVector& v);
  friend QVector operator-(const QVector& u, const QVector& v);
  /// Right scalar action v * q, entrywise e_i * q.
  friend QVector operator*(const QVector& v, const Quaternion& q);

private:
  static std::size_t checked(std::size_t n) {
    if (n == 0) throw InvalidParameter("vector dimension must be at least 1");
    return n;
  }
  std::vector<Quaternion> e_;
};

/// Hermitian inner product sum_i conj(u_i) v_i, linear in v under right
/// scalars.  Throws DimensionMismatch on unequal lengths.
Quaternion inner(const QVector& u, const QVector& v);

/// Dense quaternion matrix, row-major.  Acting on vectors as
/// (A v)_r = sum_c A(r,c) * v_c, entry on the left, so the action is
/// right-linear: A (v q) = (A v) q.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(const std::vector<Quaternion>& d);
  static QMatrix from_columns(const std::vector<QVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Quaternion& operator()(std::size_t r, std::size_t c) {
    return e_[r * cols_ + c];
  }
  const Quaternion& operator()(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }

  QVector column(std::size_t c) const;
  Quaternion trace() const;
  double frobenius_norm() const;
  double max_entry_modulus() const;

  bool operator==(const QMatrix&) const = default;  // exact

  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QVector operator*(const QMatrix& a, const QVector& v);
  friend QMatrix operator*(const QMatrix& a, double s);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> e_;
};

/// Conjugate transpose: adjoint(A)(r,c) = conj(A(c,r)); the unique matrix
/// with inner(v, A u) = inner(adjoint(A) v, u).
QMatrix adjoint(const QMatrix& a);

/// Image of a quaternion matrix under the 2x2 complex block map
/// a + bi + cj + dk -> [[a+bi, c+di], [-c+di, a-bi]].
using ComplexMatrix = Eigen::MatrixXcd;

/// Real-algebra homomorphism: embed(A B) = embed(A) embed(B) and
/// embed(adjoint(A)) = embed(A)^H.
ComplexMatrix embed(const QMatrix& a);

/// Inverse of embed.  Throws StructureViolation when the input deviates
/// from the block form by more than tol relative to its largest entry.
QMatrix unembed(const ComplexMatrix& m, double tol = kDefaultTolerance);

/// Solves A X = B by quaternionic Gauss-Jordan elimination with partial
/// pivoting on entry modulus.  Throws Singular when every pivot candidate
/// falls below kPivotRelTolerance times the largest input entry.
QMatrix solve(const QMatrix& a, const QMatrix& b);
QVector solve(const QMatrix& a, const QVector& b);
QMatrix inverse(const QMatrix& a);

/// Columns spanning the right kernel {c : A c = 0}, from the reduced
/// echelon form of A.  Empty when A has full column rank.
std::vector<QVector> kernel_basis(const QMatrix& a);

/// Eigenvalues of a self-adjoint quaternion matrix, nondecreasing.
/// Computed from the doubled Hermitian spectrum of embed(A); the pairing
/// of that spectrum is verified and collapsed.  Throws NotSelfAdjoint when
/// ||A - adjoint(A)|| exceeds sym_tol relative to ||A||.
std::vector<double> hermitian_eigenvalues(const QMatrix& a,
                                          double sym_tol = kDefaultTolerance);

/// Collapses an ascending doubled spectrum {m1, m1, m2, m2, ...} to
/// {m1, m2, ...}, averaging each pair.  Throws PairingViolation when a
/// pair differs by more than rel_tol relative to the spectral radius.
std::vector<double> collapse_eigenvalue_pairs(
    const std::vector<double>& ascending,
    double rel_tol = kEigenvaluePairTolerance);

/// Metric used by every operator-equality check: the spectral norm
/// (largest |eigenvalue|) when the matrix is self-adjoint within a fixed
/// classification tolerance, otherwise the Frobenius norm.
double operator_norm(const QMatrix& m);

}  // namespace qf
