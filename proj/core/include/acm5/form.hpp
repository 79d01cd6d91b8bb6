#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "acm5/scalar.hpp"

namespace acm5 {

/// A wedge monomial as a bit set over symbol indices; bit i set means the
/// symbol with index i occurs. Indices are always read in increasing order,
/// so a mask is exactly a strictly increasing multi-index.
using Monomial = std::uint32_t;

inline constexpr int kFrameDim = 5;
inline constexpr int kMaxSymbols = 16;
inline constexpr Monomial kMetricMask = 0x1F;

/// Sign of e_A ^ e_B relative to e_{A u B}; zero when A and B overlap.
int wedge_sign(Monomial a, Monomial b);

int popcount(Monomial m);

/// Exterior form with exact (or float) coefficients over symbol indices.
///
/// Symbols 0..4 are the metric coframe e1..e5 in orientation order; any
/// higher index is an auxiliary 1-form. Evaluation follows the determinant
/// convention (e1 ^ e2)(e1, e2) = 1, with no 1/k! weights.
class Form {
 public:
  explicit Form(int degree = 0) : degree_(degree) {}

  static Form constant(const Scalar& c);
  static Form symbol(int index, const Scalar& c = 1);
  /// Monomial from an unordered index list; the sign of the sorting
  /// permutation is applied, repeated indices give zero.
  static Form monomial(std::initializer_list<int> indices, const Scalar& c = 1);

  int degree() const { return degree_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }
  Scalar coeff(Monomial m) const;
  bool is_zero() const { return terms_.empty(); }

  /// Union of all symbols used by nonzero terms.
  Monomial support() const;
  bool uses_only(Monomial allowed) const { return (support() & ~allowed) == 0; }
  bool has_trig() const;

  void add_term(Monomial m, const Scalar& c);

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Scalar& s);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Scalar& s) { return a *= s; }
  friend Form operator*(const Scalar& s, Form a) { return a *= s; }
  friend bool operator==(const Form& a, const Form& b);

  /// Substitutes rational values for the trig basis functions.
  Form evaluate(const PhasePoint& p) const;
  Form to_float() const;

  /// Human-readable rendering; names default to e1..e5, s6, s7, ...
  std::string str(const std::vector<std::string>* names = nullptr) const;

 private:
  int degree_;
  std::map<Monomial, Scalar> terms_;
};

Form wedge(const Form& a, const Form& b);

/// Hodge star of a metric-only form for the volume element
/// orientation_sign * e1^e2^e3^e4^e5.
Form hodge(const Form& a, int orientation_sign = 1);

/// Contraction with the frame vector dual to metric symbol `index` in the
/// first slot.
Form interior(int index, const Form& a);

/// Value a(e_{i1}, ..., e_{ik}) on metric frame vectors.
Scalar evaluate(const Form& a, std::span<const int> frame_indices);
Scalar evaluate(const Form& a, std::initializer_list<int> frame_indices);

/// Monomial inner product: sum of coefficient products over shared monomials.
Scalar inner(const Form& a, const Form& b);

/// Coefficient of e1^...^e5 in a ^ hodge(b).
Scalar hodge_pairing(const Form& a, const Form& b, int orientation_sign = 1);

/// Shorthands for metric frame forms with one-based indices, e.g. e(1, 3)
/// is e1 ^ e3.
namespace frame {
Form e(int i);
Form e(int i, int j);
Form e(int i, int j, int k);
Form e(int i, int j, int k, int l);
Form e(int i, int j, int k, int l, int m);
}  // namespace frame

}  // namespace acm5
