#include "acm5/linalg.hpp"

#include <cmath>

#include "acm5/error.hpp"

namespace acm5 {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return {};
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols())
      throw Error(ErrorKind::Precondition, "ragged matrix rows");
    for (int c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Scalar> Matrix::row(int r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
          data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_};
}

std::vector<Scalar> Matrix::col(int c) const {
  std::vector<Scalar> v;
  for (int r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::Precondition, "matrix shape mismatch");
  Matrix m(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::Precondition, "matrix shape mismatch");
  Matrix m = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) += b(i, j);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::Precondition, "matrix shape mismatch");
  Matrix m = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m(i, j) -= b(i, j);
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).is_zero();
}

std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& x) {
  if (a.cols() != static_cast<int>(x.size())) throw Error(ErrorKind::Precondition, "matrix shape mismatch");
  std::vector<Scalar> y(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) y[i] += a(i, k) * x[k];
  return y;
}

Echelon row_reduce(Matrix m) {
  Echelon e;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    double best = 0;
    for (int i = r; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      if (!m(i, c).is_float()) { pivot = i; break; }
      double mag = std::abs(m(i, c).to_double());
      if (pivot < 0 || mag > best) { pivot = i; best = mag; }
    }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
    Scalar inv = Scalar(1) / m(r, c);
    for (int j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (int j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
      m(i, c) = Scalar();
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

int rank(const Matrix& m) { return static_cast<int>(row_reduce(m).pivots.size()); }

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b.at(i);
  }
  Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(static_cast<int>(r), m.cols());
  return x;
}

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::Precondition, "vector length mismatch");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Subspace Subspace::span(int ambient, const std::vector<std::vector<Scalar>>& vectors) {
  Subspace s(ambient);
  for (const auto& v : vectors) s.add(v);
  return s;
}

bool Subspace::add(std::vector<Scalar> v) {
  if (static_cast<int>(v.size()) != ambient_) throw Error(ErrorKind::Precondition, "vector length mismatch");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = dot(v, basis_[i]) / norms_[i];
    if (c.is_zero()) continue;
    for (int k = 0; k < ambient_; ++k) v[k] -= c * basis_[i][k];
  }
  Scalar n = dot(v, v);
  bool degenerate = n.is_zero();
  if (!degenerate && n.is_float()) {
    // Relative test against the input scale so roundoff does not count as a new direction.
    double biggest = 0;
    for (const auto& x : v) biggest = std::max(biggest, std::abs(x.to_double()));
    degenerate = biggest <= kFloatTolerance;
  }
  if (degenerate) return false;
  basis_.push_back(std::move(v));
  norms_.push_back(std::move(n));
  return true;
}

std::vector<Scalar> Subspace::project(const std::vector<Scalar>& v) const {
  std::vector<Scalar> p(ambient_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = dot(v, basis_[i]) / norms_[i];
    if (c.is_zero()) continue;
    for (int k = 0; k < ambient_; ++k) p[k] += c * basis_[i][k];
  }
  return p;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  auto p = project(v);
  for (int k = 0; k < ambient_; ++k)
    if (!(p[k] - v[k]).is_zero()) return false;
  return true;
}

}  // namespace acm5
