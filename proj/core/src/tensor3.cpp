#include "acm5/tensor3.hpp"

#include "acm5/error.hpp"

namespace acm5 {

namespace {

constexpr std::array<std::array<int, 2>, 10> kPairs = {{
    {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

}  // namespace

void Tensor3::set(int i, int j, int k, const Scalar& v) {
  if (j == k) {
    if (!v.is_zero()) throw Error(ErrorKind::Precondition, "diagonal entry of an antisymmetric pair");
    return;
  }
  v_[index(i, j, k)] = v;
  v_[index(i, k, j)] = -v;
}

Tensor3 Tensor3::from_slots(const std::array<Form, kFrameDim>& slots) {
  Tensor3 t;
  for (int i = 0; i < kFrameDim; ++i) {
    if (slots[i].is_zero()) continue;
    if (slots[i].degree() != 2 || !slots[i].uses_only(kMetricMask))
      throw Error(ErrorKind::UnsupportedSymbol, "tensor slots must be metric 2-forms");
    for (auto [j, k] : kPairs) t.set(i, j, k, evaluate(slots[i], {j, k}));
  }
  return t;
}

Tensor3 Tensor3::from_three_form(const Form& a) {
  Tensor3 t;
  if (a.is_zero()) return t;
  if (a.degree() != 3 || !a.uses_only(kMetricMask))
    throw Error(ErrorKind::UnsupportedSymbol, "expected a metric 3-form");
  for (int i = 0; i < kFrameDim; ++i)
    for (auto [j, k] : kPairs) t.set(i, j, k, evaluate(a, {i, j, k}));
  return t;
}

Tensor3 Tensor3::from_coords(const std::vector<Scalar>& coords) {
  if (static_cast<int>(coords.size()) != kCoords) throw Error(ErrorKind::Precondition, "expected 50 coordinates");
  Tensor3 t;
  for (int i = 0; i < kFrameDim; ++i)
    for (int p = 0; p < 10; ++p) t.set(i, kPairs[p][0], kPairs[p][1], coords[i * 10 + p]);
  return t;
}

Form Tensor3::slot(int i) const {
  Form f(2);
  for (auto [j, k] : kPairs) f.add_term((Monomial{1} << j) | (Monomial{1} << k), (*this)(i, j, k));
  return f;
}

std::vector<Scalar> Tensor3::coords() const {
  std::vector<Scalar> c;
  c.reserve(kCoords);
  for (int i = 0; i < kFrameDim; ++i)
    for (auto [j, k] : kPairs) c.push_back((*this)(i, j, k));
  return c;
}

bool Tensor3::is_zero() const {
  for (const auto& x : v_)
    if (!x.is_zero()) return false;
  return true;
}

bool Tensor3::is_antisymmetric() const {
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = 0; j < kFrameDim; ++j)
      for (int k = 0; k < kFrameDim; ++k)
        if (!((*this)(i, j, k) + (*this)(i, k, j)).is_zero()) return false;
  return true;
}

bool Tensor3::is_skew() const {
  if (!is_antisymmetric()) return false;
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = 0; j < kFrameDim; ++j)
      for (int k = 0; k < kFrameDim; ++k)
        if (!((*this)(i, j, k) + (*this)(j, i, k)).is_zero()) return false;
  return true;
}

Form Tensor3::to_three_form() const {
  Form f(3);
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = i + 1; j < kFrameDim; ++j)
      for (int k = j + 1; k < kFrameDim; ++k)
        f.add_term((Monomial{1} << i) | (Monomial{1} << j) | (Monomial{1} << k), (*this)(i, j, k));
  return f;
}

Tensor3 Tensor3::operator-() const {
  Tensor3 t;
  for (int n = 0; n < kComponents; ++n) t.v_[n] = -v_[n];
  return t;
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  for (int n = 0; n < kComponents; ++n)
    if (!o.v_[n].is_zero()) v_[n] += o.v_[n];
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  for (int n = 0; n < kComponents; ++n)
    if (!o.v_[n].is_zero()) v_[n] -= o.v_[n];
  return *this;
}

Tensor3& Tensor3::operator*=(const Scalar& s) {
  for (auto& x : v_) x *= s;
  return *this;
}

bool operator==(const Tensor3& a, const Tensor3& b) {
  for (int n = 0; n < Tensor3::kComponents; ++n)
    if (!(a.v_[n] == b.v_[n])) return false;
  return true;
}

std::string Tensor3::str() const {
  std::string out;
  for (int i = 0; i < kFrameDim; ++i) {
    Form s = slot(i);
    if (s.is_zero()) continue;
    if (!out.empty()) out += "; ";
    out += "e" + std::to_string(i + 1) + ": " + s.str();
  }
  return out.empty() ? "0" : out;
}

Scalar inner(const Tensor3& a, const Tensor3& b) {
  Scalar s;
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = 0; j < kFrameDim; ++j)
      for (int k = 0; k < kFrameDim; ++k) {
        const Scalar& x = a(i, j, k);
        const Scalar& y = b(i, j, k);
        if (!x.is_zero() && !y.is_zero()) s += x * y;
      }
  return s;
}

}  // namespace acm5
