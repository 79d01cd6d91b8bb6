#include "acm5/spinor.hpp"

#include <bit>

#include "acm5/error.hpp"

namespace acm5 {

Gauss operator/(const Gauss& a, const Gauss& b) {
  Rational n = b.re * b.re + b.im * b.im;
  if (n.is_zero()) throw Error(ErrorKind::Precondition, "division by zero");
  Gauss p = a * b.conj();
  return Gauss(p.re / n, p.im / n);
}

std::string Gauss::str() const {
  if (im.is_zero()) return re.str();
  std::string i_part = (im == Rational(1) ? "" : im == Rational(-1) ? "-" : im.str()) + "i";
  if (re.is_zero()) return i_part;
  return re.str() + (im.sign() > 0 ? "+" : "") + i_part;
}

CMatrix CMatrix::identity() {
  CMatrix m;
  for (int i = 0; i < kSpinDim; ++i) m(i, i) = 1;
  return m;
}

bool CMatrix::is_zero() const {
  for (const auto& row : m_)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  CMatrix r;
  for (int i = 0; i < kSpinDim; ++i)
    for (int j = 0; j < kSpinDim; ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) { return a + Gauss(-1) * b; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  CMatrix r;
  for (int i = 0; i < kSpinDim; ++i)
    for (int j = 0; j < kSpinDim; ++j) {
      Gauss s;
      for (int k = 0; k < kSpinDim; ++k)
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) s = s + a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

CMatrix operator*(const Gauss& s, const CMatrix& a) {
  CMatrix r;
  for (int i = 0; i < kSpinDim; ++i)
    for (int j = 0; j < kSpinDim; ++j) r(i, j) = s * a(i, j);
  return r;
}

Spinor operator*(const CMatrix& a, const Spinor& v) {
  Spinor r{};
  for (int i = 0; i < kSpinDim; ++i)
    for (int k = 0; k < kSpinDim; ++k) r[i] = r[i] + a(i, k) * v[k];
  return r;
}

bool is_zero(const Spinor& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Spinor> kernel(const CMatrix& in) {
  CMatrix m = in;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < kSpinDim && row < kSpinDim; ++col) {
    int p = row;
    while (p < kSpinDim && m(p, col).is_zero()) ++p;
    if (p == kSpinDim) continue;
    for (int j = 0; j < kSpinDim; ++j) std::swap(m(row, j), m(p, j));
    Gauss inv = Gauss(1) / m(row, col);
    for (int j = 0; j < kSpinDim; ++j) m(row, j) = m(row, j) * inv;
    for (int r = 0; r < kSpinDim; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Gauss f = m(r, col);
      for (int j = 0; j < kSpinDim; ++j) m(r, j) = m(r, j) - f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<Spinor> out;
  for (int free = 0; free < kSpinDim; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Spinor v{};
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), free);
    out.push_back(v);
  }
  return out;
}

namespace {

using M2 = std::array<std::array<Gauss, 2>, 2>;

CMatrix kron(const M2& a, const M2& b) {
  CMatrix r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a[i][j] * b[k][l];
  return r;
}

Gauss rational_coeff(const Scalar& s) {
  if (!s.is_rational()) throw Error(ErrorKind::ModeMismatch, "spinor computations need rational coefficients");
  return Gauss(s.rational());
}

}  // namespace

const SpinorSpace& SpinorSpace::standard() {
  static const SpinorSpace s = [] {
    const M2 id{{{1, 0}, {0, 1}}};
    const M2 s1{{{0, 1}, {1, 0}}};
    const M2 s2{{{0, -Gauss::i()}, {Gauss::i(), 0}}};
    const M2 s3{{{1, 0}, {0, -1}}};
    SpinorSpace sp;
    const std::array<CMatrix, kFrameDim> hermitian{kron(s1, s1), kron(s1, s2), kron(s1, s3), kron(s2, id),
                                                   kron(s3, id)};
    for (int i = 0; i < kFrameDim; ++i) sp.gamma[i] = Gauss::i() * hermitian[i];
    sp.verify();
    return sp;
  }();
  return s;
}

void SpinorSpace::verify() const {
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = 0; j < kFrameDim; ++j) {
      CMatrix anti = gamma[i] * gamma[j] + gamma[j] * gamma[i];
      CMatrix expected = i == j ? Gauss(-2) * CMatrix::identity() : CMatrix();
      if (!(anti == expected))
        throw Error(ErrorKind::InternalConsistency,
                    "Clifford relation fails for gamma" + std::to_string(i + 1) + ", gamma" + std::to_string(j + 1));
    }
}

CMatrix SpinorSpace::clifford(const Form& beta) const {
  if (!beta.uses_only(kMetricMask)) throw Error(ErrorKind::UnsupportedSymbol, "Clifford action of a non-metric form");
  if (!beta.is_zero() && beta.degree() != 2) throw Error(ErrorKind::Precondition, "Clifford action expects a 2-form");
  CMatrix out;
  for (const auto& [m, s] : beta.terms()) {
    int i = std::countr_zero(m);
    int j = std::countr_zero(m & (m - 1));
    out = out + rational_coeff(s) * (gamma[i] * gamma[j]);
  }
  return out;
}

std::map<int, CMatrix> SpinorSpace::spin_lift(const ConnectionForms& w) const {
  std::map<int, CMatrix> out;
  const Gauss half(Rational(1, 2));
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = i + 1; j < kFrameDim; ++j)
      for (const auto& [m, s] : w(i, j).terms()) {
        int sym = std::countr_zero(m);
        CMatrix& acc = out[sym];
        acc = acc + (half * rational_coeff(s)) * (gamma[i] * gamma[j]);
      }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

SpinorReport spinor_kernel(const SpinorSpace& s, const Form& beta, const ConnectionForms& w) {
  s.verify();
  SpinorReport r;
  CMatrix f = s.clifford(beta);
  r.kernel_basis = kernel(f);
  const Gauss two_i(Rational(0), Rational(2));
  int total = 0;
  for (const auto& [name, lambda] : {std::pair<std::string, Gauss>{"0", Gauss(0)}, {"2i", two_i}, {"-2i", -two_i}}) {
    int dim = static_cast<int>(kernel(f - lambda * CMatrix::identity()).size());
    r.spectrum[name] = dim;
    total += dim;
  }
  r.spectrum_ok = total == kSpinDim && r.spectrum["0"] == 2 && r.spectrum["2i"] == 1 && r.spectrum["-2i"] == 1;
  r.lift_annihilates_kernel = true;
  for (const auto& [sym, m] : s.spin_lift(w))
    for (const auto& psi : r.kernel_basis)
      if (!is_zero(m * psi)) r.lift_annihilates_kernel = false;
  return r;
}

}  // namespace acm5
