#include "qframe/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace qf {

namespace {

std::string dims(std::size_t r, std::size_t c) {
  std::ostringstream os;
  os << r << 'x' << c;
  return os.str();
}

}  // namespace

QVector QVector::basis(std::size_t n, std::size_t index) {
  QVector v(n);
  if (index >= n) throw InvalidParameter("basis index out of range");
  v[index] = Quaternion::identity();
  return v;
}

double QVector::norm_sq() const {
  double s = 0.0;
  for (const auto& q : e_) s += q.modulus_sq();
  return s;
}

double QVector::norm() const { return std::sqrt(norm_sq()); }

QVector operator+(const QVector& u, const QVector& v) {
  if (u.size() != v.size())
    throw DimensionMismatch("vector sizes differ in addition");
  QVector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
  return r;
}

QVector operator-(const QVector& u, const QVector& v) {
  if (u.size() != v.size())
    throw DimensionMismatch("vector sizes differ in subtraction");
  QVector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
  return r;
}

QVector operator*(const QVector& v, const Quaternion& q) {
  QVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * q;
  return r;
}

Quaternion inner(const QVector& u, const QVector& v) {
  if (u.size() != v.size())
    throw DimensionMismatch("inner product of vectors with different lengths");
  Quaternion s;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i].conj() * v[i];
  return s;
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {
  if (rows == 0 || cols == 0)
    throw InvalidParameter("matrix dimensions must be at least 1x1");
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion::identity();
  return m;
}

QMatrix QMatrix::diagonal(const std::vector<Quaternion>& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns) {
  if (columns.empty()) throw InvalidParameter("no columns given");
  const std::size_t n = columns[0].size();
  for (const auto& c : columns)
    if (c.size() != n) throw DimensionMismatch("column lengths differ");
  QMatrix m(n, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) m(r, c) = columns[c][r];
  return m;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Quaternion QMatrix::trace() const {
  if (rows_ != cols_) throw DimensionMismatch("trace of a non-square matrix");
  Quaternion t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double QMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& q : e_) s += q.modulus_sq();
  return std::sqrt(s);
}

double QMatrix::max_entry_modulus() const {
  double s = 0.0;
  for (const auto& q : e_) s = std::max(s, q.modulus());
  return s;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix shapes differ in addition: " +
                            dims(a.rows_, a.cols_) + " vs " +
                            dims(b.rows_, b.cols_));
  QMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix shapes differ in subtraction: " +
                            dims(a.rows_, a.cols_) + " vs " +
                            dims(b.rows_, b.cols_));
  QMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionMismatch("matrix shapes do not compose: " +
                            dims(a.rows_, a.cols_) + " times " +
                            dims(b.rows_, b.cols_));
  QMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t t = 0; t < a.cols_; ++t) {
      const Quaternion& left = a(i, t);
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += left * b(t, j);
    }
  return r;
}

QVector operator*(const QMatrix& a, const QVector& v) {
  if (a.cols_ != v.size())
    throw DimensionMismatch("matrix of shape " + dims(a.rows_, a.cols_) +
                            " applied to a vector of length " +
                            std::to_string(v.size()));
  QVector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Quaternion s;
    for (std::size_t j = 0; j < a.cols_; ++j) s += a(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

QMatrix operator*(const QMatrix& a, double s) {
  QMatrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] * Quaternion(s);
  return r;
}

QMatrix adjoint(const QMatrix& a) {
  QMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j).conj();
  return r;
}

ComplexMatrix embed(const QMatrix& a) {
  ComplexMatrix e(2 * a.rows(), 2 * a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Quaternion& q = a(r, c);
      e(2 * r, 2 * c) = {q.x0(), q.x1()};
      e(2 * r, 2 * c + 1) = {q.x2(), q.x3()};
      e(2 * r + 1, 2 * c) = {-q.x2(), q.x3()};
      e(2 * r + 1, 2 * c + 1) = {q.x0(), -q.x1()};
    }
  return e;
}

QMatrix unembed(const ComplexMatrix& m, double tol) {
  if (m.rows() % 2 != 0 || m.cols() % 2 != 0 || m.rows() == 0 || m.cols() == 0)
    throw StructureViolation("embedded matrix must have even, positive sides");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  QMatrix a(m.rows() / 2, m.cols() / 2);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const std::complex<double> z11 = m(2 * r, 2 * c);
      const std::complex<double> z12 = m(2 * r, 2 * c + 1);
      const std::complex<double> z21 = m(2 * r + 1, 2 * c);
      const std::complex<double> z22 = m(2 * r + 1, 2 * c + 1);
      if (std::abs(z22 - std::conj(z11)) > tol * scale ||
          std::abs(z21 + std::conj(z12)) > tol * scale) {
        std::ostringstream os;
        os << "block (" << r << ", " << c
           << ") is not in embedded form within tolerance";
        throw StructureViolation(os.str());
      }
      // Average the two copies of each component carried by the block.
      a(r, c) = Quaternion(0.5 * (z11.real() + z22.real()),
                           0.5 * (z11.imag() - z22.imag()),
                           0.5 * (z12.real() - z21.real()),
                           0.5 * (z12.imag() + z21.imag()));
    }
  return a;
}

QMatrix solve(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("solve needs a square matrix, got " +
                            dims(a.rows(), a.cols()));
  if (b.rows() != a.rows())
    throw DimensionMismatch("right-hand side has " + std::to_string(b.rows()) +
                            " rows, expected " + std::to_string(a.rows()));
  const std::size_t n = a.rows();
  const std::size_t w = n + b.cols();
  const double scale = a.max_entry_modulus();
  if (scale == 0.0) throw Singular("coefficient matrix is zero");
  const double threshold = kPivotRelTolerance * scale;

  QMatrix m(n, w);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, n + c) = b(r, c);
  }

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = m(col, col).modulus();
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = m(r, col).modulus();
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best < threshold)
      throw Singular("no pivot above threshold in column " +
                     std::to_string(col));
    if (pivot != col)
      for (std::size_t c = col; c < w; ++c)
        std::swap(m(pivot, c), m(col, c));

    // Left-multiplying a row preserves the solution set of A x = b because
    // the unknowns stay on the right of every entry.
    const Quaternion pinv = m(col, col).inverse();
    for (std::size_t c = col; c < w; ++c) m(col, c) = pinv * m(col, c);
    m(col, col) = Quaternion::identity();

    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Quaternion f = m(r, col);
      if (f == Quaternion()) continue;
      for (std::size_t c = col; c < w; ++c) m(r, c) -= f * m(col, c);
      m(r, col) = Quaternion();
    }
  }

  QMatrix x(n, b.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = m(r, n + c);
  return x;
}

QVector solve(const QMatrix& a, const QVector& b) {
  QMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  return solve(a, rhs).column(0);
}

QMatrix inverse(const QMatrix& a) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("inverse of a non-square matrix");
  return solve(a, QMatrix::identity(a.rows()));
}

std::vector<QVector> kernel_basis(const QMatrix& a) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  QMatrix r = a;
  const double scale = a.max_entry_modulus();
  const double threshold = kPivotRelTolerance * std::max(scale, 1e-300);

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t pivot = row;
    double best = r(row, col).modulus();
    for (std::size_t rr = row + 1; rr < n; ++rr) {
      const double v = r(rr, col).modulus();
      if (v > best) {
        best = v;
        pivot = rr;
      }
    }
    if (best <= threshold) continue;  // free column
    if (pivot != row)
      for (std::size_t c = 0; c < m; ++c) std::swap(r(pivot, c), r(row, c));
    const Quaternion pinv = r(row, col).inverse();
    for (std::size_t c = col; c < m; ++c) r(row, c) = pinv * r(row, c);
    r(row, col) = Quaternion::identity();
    for (std::size_t rr = 0; rr < n; ++rr) {
      if (rr == row) continue;
      const Quaternion f = r(rr, col);
      if (f == Quaternion()) continue;
      for (std::size_t c = col; c < m; ++c) r(rr, c) -= f * r(row, c);
      r(rr, col) = Quaternion();
    }
    pivot_cols.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(m, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;

  std::vector<QVector> kernel;
  for (std::size_t f = 0; f < m; ++f) {
    if (is_pivot[f]) continue;
    QVector k(m);
    k[f] = Quaternion::identity();
    for (std::size_t t = 0; t < pivot_cols.size(); ++t)
      k[pivot_cols[t]] = -r(t, f);
    kernel.push_back(std::move(k));
  }
  return kernel;
}

std::vector<double> collapse_eigenvalue_pairs(
    const std::vector<double>& ascending, double rel_tol) {
  if (ascending.size() % 2 != 0)
    throw PairingViolation("spectrum length is odd");
  double radius = 0.0;
  for (double v : ascending) radius = std::max(radius, std::fabs(v));
  for (std::size_t i = 1; i < ascending.size(); ++i)
    if (ascending[i] < ascending[i - 1])
      throw PairingViolation("spectrum is not in ascending order");
  std::vector<double> out;
  out.reserve(ascending.size() / 2);
  for (std::size_t t = 0; t + 1 < ascending.size(); t += 2) {
    const double lo = ascending[t];
    const double hi = ascending[t + 1];
    if (std::fabs(hi - lo) > rel_tol * radius) {
      std::ostringstream os;
      os << "eigenvalues " << lo << " and " << hi
         << " do not form a pair at relative tolerance " << rel_tol;
      throw PairingViolation(os.str());
    }
    out.push_back(0.5 * (lo + hi));
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const QMatrix& a, double sym_tol) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("eigenvalues of a non-square matrix");
  const QMatrix adj = adjoint(a);
  const double scale = std::max(1.0, a.frobenius_norm());
  if ((a - adj).frobenius_norm() > sym_tol * scale)
    throw NotSelfAdjoint("matrix is not self-adjoint within tolerance");
  const QMatrix sym = (a + adj) * 0.5;

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(embed(sym),
                                                  Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw InternalError("complex eigensolver failed to converge");
  const auto& ev = es.eigenvalues();
  std::vector<double> doubled(ev.data(), ev.data() + ev.size());
  std::sort(doubled.begin(), doubled.end());
  return collapse_eigenvalue_pairs(doubled, kEigenvaluePairTolerance);
}

double operator_norm(const QMatrix& m) {
  const double fro = m.frobenius_norm();
  if (m.rows() == m.cols()) {
    const double asym = (m - adjoint(m)).frobenius_norm();
    if (asym <= 1e-8 * std::max(1.0, fro)) {
      // sym_tol of 1: the classification above already decided.
      const auto ev = hermitian_eigenvalues(m, 1.0);
      double s = 0.0;
      for (double v : ev) s = std::max(s, std::fabs(v));
      return s;
    }
  }
  return fro;
}

}  // namespace qf
