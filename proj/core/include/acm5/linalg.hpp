#pragma once

#include <optional>
#include <vector>

#include "acm5/scalar.hpp"

namespace acm5 {

/// Dense row-major matrix over Scalar. Elimination picks the first nonzero
/// pivot for exact values and the largest magnitude for floats.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  std::vector<Scalar> row(int r) const;
  std::vector<Scalar> col(int c) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

std::vector<Scalar> operator*(const Matrix& a, const std::vector<Scalar>& x);

struct Echelon {
  Matrix reduced;           ///< reduced row echelon form
  std::vector<int> pivots;  ///< pivot column per nonzero row
};

Echelon row_reduce(Matrix m);
int rank(const Matrix& m);
/// Basis of the kernel, one vector per free column, read off the RREF.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);
/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b);

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

/// Span of a set of vectors kept as an orthogonal (unnormalized) basis, so
/// projection needs only the diagonal Gram entries.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}
  /// Gram-Schmidt over the given spanning set; dependent vectors are dropped.
  static Subspace span(int ambient, const std::vector<std::vector<Scalar>>& vectors);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::vector<Scalar>>& basis() const { return basis_; }

  /// Adds v minus its projection; returns false if v was already in the span.
  bool add(std::vector<Scalar> v);
  std::vector<Scalar> project(const std::vector<Scalar>& v) const;
  bool contains(const std::vector<Scalar>& v) const;

 private:
  int ambient_ = 0;
  std::vector<std::vector<Scalar>> basis_;
  std::vector<Scalar> norms_;
};

}  // namespace acm5
