#pragma once

#include <array>
#include <string>
#include <variant>

#include "acm5/rational.hpp"

namespace acm5 {

/// Coordinates of the trig extension: {1, sin f, cos f, sin g, cos g}.
enum class TrigBasis { One = 0, SinF = 1, CosF = 2, SinG = 3, CosG = 4 };

/// A point on the phase torus with rational sine and cosine values.
struct PhasePoint {
  Rational sin_f{0}, cos_f{1}, sin_g{0}, cos_g{1};
};

/// Relative tolerance used whenever a float-mode value is compared.
inline constexpr double kFloatTolerance = 1e-9;

/// Coefficient field element.
///
/// Three representations exist: an exact rational, a trig-extended value
/// (rational linear combination of the TrigBasis functions) and a binary64
/// float. Rationals are mode-neutral constants and combine with either of
/// the other two; mixing a trig value with a float raises ModeMismatch.
/// Trig values form a free module over the rationals, so a product of two
/// non-constant trig values raises ExtensionOverflow instead of growing the
/// basis.
class Scalar {
 public:
  using Trig = std::array<Rational, 5>;

  Scalar() : v_(Rational(0)) {}
  Scalar(long value) : v_(Rational(value)) {}          // NOLINT
  Scalar(Rational value) : v_(std::move(value)) {}     // NOLINT
  static Scalar from_double(double value) { Scalar s; s.v_ = value; return s; }
  static Scalar trig(TrigBasis b, Rational coeff);
  static Scalar from_trig(const Trig& coords);

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_trig() const { return std::holds_alternative<Trig>(v_); }
  bool is_float() const { return std::holds_alternative<double>(v_); }

  /// Exact zero for rational/trig, |x| <= kFloatTolerance for floats.
  bool is_zero() const;

  /// Throws ModeMismatch unless the value is rational.
  const Rational& rational() const;
  /// Coordinate along a trig basis element (rationals have only One).
  Rational trig_coeff(TrigBasis b) const;
  double to_double() const;

  /// Substitutes rational sine/cosine values. Float input throws.
  Rational evaluate(const PhasePoint& p) const;

  /// Float copy of an exact rational (trig values throw ModeMismatch).
  Scalar to_float() const;

  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Equality is exact for exact values and tolerance-based for floats.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void normalize();
  std::variant<Rational, Trig, double> v_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace acm5
