#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "acm5/frames.hpp"
#include "acm5/rational.hpp"

namespace acm5 {

/// Gaussian rational re + i*im.
struct Gauss {
  Rational re, im;

  Gauss() = default;
  Gauss(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}
  Gauss(long r) : re(r) {}
  static Gauss i() { return Gauss(Rational(0), Rational(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  Gauss conj() const { return Gauss(re, -im); }
  Gauss operator-() const { return Gauss(-re, -im); }
  friend Gauss operator+(const Gauss& a, const Gauss& b) { return Gauss(a.re + b.re, a.im + b.im); }
  friend Gauss operator-(const Gauss& a, const Gauss& b) { return Gauss(a.re - b.re, a.im - b.im); }
  friend Gauss operator*(const Gauss& a, const Gauss& b) {
    return Gauss(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Gauss operator/(const Gauss& a, const Gauss& b);
  friend bool operator==(const Gauss& a, const Gauss& b) { return a.re == b.re && a.im == b.im; }
  std::string str() const;
};

inline constexpr int kSpinDim = 4;
using Spinor = std::array<Gauss, kSpinDim>;

class CMatrix {
 public:
  CMatrix() = default;
  static CMatrix identity();
  Gauss& operator()(int r, int c) { return m_[r][c]; }
  const Gauss& operator()(int r, int c) const { return m_[r][c]; }
  bool is_zero() const;
  friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator*(const Gauss& s, const CMatrix& a);
  friend Spinor operator*(const CMatrix& a, const Spinor& v);
  friend bool operator==(const CMatrix& a, const CMatrix& b) = default;

 private:
  std::array<std::array<Gauss, kSpinDim>, kSpinDim> m_{};
};

/// Kernel basis, one vector per free column of the reduced echelon form.
std::vector<Spinor> kernel(const CMatrix& m);
bool is_zero(const Spinor& v);

/// Clifford generators gamma_1..gamma_5 with gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij,
/// realised as i times tensor products of Pauli matrices.
struct SpinorSpace {
  std::array<CMatrix, kFrameDim> gamma;

  static const SpinorSpace& standard();
  /// Throws InternalConsistency when a Clifford relation fails.
  void verify() const;
  /// beta . psi = sum_{i<j} beta_ij gamma_i gamma_j for a metric 2-form.
  CMatrix clifford(const Form& beta) const;
  /// sigma(omega) = 1/2 sum_{i<j} omega_ij gamma_i gamma_j, one matrix per symbol.
  std::map<int, CMatrix> spin_lift(const ConnectionForms& w) const;
};

struct SpinorReport {
  std::vector<Spinor> kernel_basis;
  std::map<std::string, int> spectrum;  ///< eigenvalue -> geometric multiplicity for 0, 2i, -2i
  bool spectrum_ok = false;
  bool lift_annihilates_kernel = false;
  bool ok() const { return kernel_basis.size() == 2 && spectrum_ok && lift_annihilates_kernel; }
};

/// Kernel of the Clifford action of beta and whether the spin lift of w kills it.
SpinorReport spinor_kernel(const SpinorSpace& s, const Form& beta, const ConnectionForms& w);

}  // namespace acm5
