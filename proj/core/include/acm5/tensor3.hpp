#pragma once

#include <array>
#include <string>
#include <vector>

#include "acm5/form.hpp"

namespace acm5 {

/// Trilinear tensor A(e_i, e_j, e_k) on the metric frame, zero-based indices.
///
/// Every producer in the library yields tensors antisymmetric in the last
/// two slots (elements of Lambda^1 (x) Lambda^2); set() keeps that property
/// by writing both (i,j,k) and (i,k,j).
class Tensor3 {
 public:
  static constexpr int kComponents = kFrameDim * kFrameDim * kFrameDim;
  /// Independent coordinates: for each first slot the ten pairs j < k.
  static constexpr int kCoords = kFrameDim * 10;

  Tensor3() = default;

  const Scalar& operator()(int i, int j, int k) const { return v_[index(i, j, k)]; }
  /// Writes v at (i,j,k) and -v at (i,k,j); j == k requires v == 0.
  void set(int i, int j, int k, const Scalar& v);
  /// Raw write without the antisymmetric partner.
  void set_raw(int i, int j, int k, const Scalar& v) { v_[index(i, j, k)] = v; }

  /// Tensor with A(e_i, ., .) = slots[i].
  static Tensor3 from_slots(const std::array<Form, kFrameDim>& slots);
  /// A(X,Y,Z) = a(X,Y,Z) for a metric 3-form a.
  static Tensor3 from_three_form(const Form& a);
  static Tensor3 from_coords(const std::vector<Scalar>& coords);

  /// The 2-form A(e_i, ., .).
  Form slot(int i) const;
  std::vector<Scalar> coords() const;

  bool is_zero() const;
  bool is_antisymmetric() const;
  /// Totally skew as a 3-form (A(X,Y,Z) = -A(Y,X,Z) on top of the last pair).
  bool is_skew() const;
  /// The 3-form with the same values; meaningful only when is_skew().
  Form to_three_form() const;

  Tensor3 operator-() const;
  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  Tensor3& operator*=(const Scalar& s);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(Tensor3 a, const Scalar& s) { return a *= s; }
  friend Tensor3 operator*(const Scalar& s, Tensor3 a) { return a *= s; }
  friend bool operator==(const Tensor3& a, const Tensor3& b);

  std::string str() const;

 private:
  static int index(int i, int j, int k) { return (i * kFrameDim + j) * kFrameDim + k; }
  std::array<Scalar, kComponents> v_{};
};

/// Componentwise inner product over all 125 index triples.
Scalar inner(const Tensor3& a, const Tensor3& b);
inline Scalar norm2(const Tensor3& a) { return inner(a, a); }

}  // namespace acm5
