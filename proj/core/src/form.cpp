#include "acm5/form.hpp"

#include <algorithm>
#include <bit>

#include "acm5/error.hpp"

namespace acm5 {

int popcount(Monomial m) { return std::popcount(m); }

int wedge_sign(Monomial a, Monomial b) {
  if (a & b) return 0;
  // Each pair (x in a, y in b) with x > y is one transposition.
  int swaps = 0;
  for (Monomial rest = b; rest; rest &= rest - 1) {
    int y = std::countr_zero(rest);
    swaps += std::popcount(a >> (y + 1));
  }
  return (swaps % 2) ? -1 : 1;
}

Form Form::constant(const Scalar& c) {
  Form f(0);
  f.add_term(0, c);
  return f;
}

Form Form::symbol(int index, const Scalar& c) {
  if (index < 0 || index >= kMaxSymbols)
    throw Error(ErrorKind::UnsupportedSymbol, "symbol index out of range");
  Form f(1);
  f.add_term(Monomial{1} << index, c);
  return f;
}

Form Form::monomial(std::initializer_list<int> indices, const Scalar& c) {
  Form f(static_cast<int>(indices.size()));
  Form acc = constant(c);
  for (int i : indices) acc = wedge(acc, symbol(i));
  if (!acc.is_zero()) f = acc;
  return f;
}

Scalar Form::coeff(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

Monomial Form::support() const {
  Monomial s = 0;
  for (const auto& [m, c] : terms_) s |= m;
  return s;
}

bool Form::has_trig() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_trig(); });
}

void Form::add_term(Monomial m, const Scalar& c) {
  if (popcount(m) != degree_)
    throw Error(ErrorKind::Precondition, "term degree does not match form degree");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::operator-() const {
  Form r(degree_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Form& Form::operator+=(const Form& o) {
  if (o.is_zero()) return *this;
  if (is_zero() && degree_ != o.degree_) degree_ = o.degree_;
  if (degree_ != o.degree_) throw Error(ErrorKind::Precondition, "adding forms of different degree");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form& Form::operator*=(const Scalar& s) {
  std::map<Monomial, Scalar> out;
  for (const auto& [m, c] : terms_) {
    Scalar v = c * s;
    if (!v.is_zero()) out.emplace(m, std::move(v));
  }
  terms_ = std::move(out);
  return *this;
}

bool operator==(const Form& a, const Form& b) {
  Form diff = a - b;
  return diff.is_zero();
}

Form Form::evaluate(const PhasePoint& p) const {
  Form r(degree_);
  for (const auto& [m, c] : terms_) r.add_term(m, c.evaluate(p));
  return r;
}

Form Form::to_float() const {
  Form r(degree_);
  for (const auto& [m, c] : terms_) r.add_term(m, c.to_float());
  return r;
}

std::string Form::str(const std::vector<std::string>* names) const {
  if (terms_.empty()) return "0";
  auto name = [&](int i) -> std::string {
    if (names && i < static_cast<int>(names->size())) return (*names)[i];
    return i < kFrameDim ? "e" + std::to_string(i + 1) : "s" + std::to_string(i + 1);
  };
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.str();
    bool compound = c.is_trig() && (coeff.find(" + ") != std::string::npos ||
                                    coeff.find(" - ") != std::string::npos);
    bool neg = !compound && !coeff.empty() && coeff[0] == '-';
    if (neg) coeff.erase(0, 1);
    if (compound) coeff = "(" + coeff + ")";
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    for (Monomial rest = m; rest; rest &= rest - 1) {
      if (!mono.empty()) mono += "^";
      mono += name(std::countr_zero(rest));
    }
    if (mono.empty()) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += mono;
    }
  }
  return out;
}

Form wedge(const Form& a, const Form& b) {
  Form r(a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Scalar v = ca * cb;
      r.add_term(ma | mb, s > 0 ? v : -v);
    }
  }
  return r;
}

Form hodge(const Form& a, int orientation_sign) {
  if (!a.uses_only(kMetricMask))
    throw Error(ErrorKind::UnsupportedSymbol, "Hodge star is defined on metric symbols only");
  Form r(kFrameDim - a.degree());
  for (const auto& [m, c] : a.terms()) {
    Monomial comp = kMetricMask & ~m;
    int s = wedge_sign(m, comp) * orientation_sign;
    r.add_term(comp, s > 0 ? c : -c);
  }
  return r;
}

Form interior(int index, const Form& a) {
  if (a.degree() == 0) return Form(0);
  Form r(a.degree() - 1);
  Monomial bit = Monomial{1} << index;
  for (const auto& [m, c] : a.terms()) {
    if (!(m & bit)) continue;
    int position = std::popcount(m & (bit - 1));
    r.add_term(m & ~bit, (position % 2) ? -c : c);
  }
  return r;
}

Scalar evaluate(const Form& a, std::span<const int> frame_indices) {
  if (static_cast<int>(frame_indices.size()) != a.degree())
    throw Error(ErrorKind::Precondition, "argument count does not match form degree");
  Monomial m = 0;
  Form acc = Form::constant(1);
  for (int i : frame_indices) {
    if (m & (Monomial{1} << i)) return Scalar();
    m |= Monomial{1} << i;
    acc = wedge(acc, Form::symbol(i));
  }
  // acc = sign(sort) * e_m, and e_m(sorted args) = 1.
  return a.coeff(m) * acc.coeff(m);
}

Scalar evaluate(const Form& a, std::initializer_list<int> frame_indices) {
  std::vector<int> v(frame_indices);
  return evaluate(a, std::span<const int>(v));
}

Scalar inner(const Form& a, const Form& b) {
  Scalar s;
  for (const auto& [m, c] : a.terms()) {
    auto it = b.terms().find(m);
    if (it != b.terms().end()) s += c * it->second;
  }
  return s;
}

Scalar hodge_pairing(const Form& a, const Form& b, int orientation_sign) {
  return wedge(a, hodge(b, orientation_sign)).coeff(kMetricMask) * Scalar(orientation_sign);
}

namespace frame {
Form e(int i) { return Form::symbol(i - 1); }
Form e(int i, int j) { return Form::monomial({i - 1, j - 1}); }
Form e(int i, int j, int k) { return Form::monomial({i - 1, j - 1, k - 1}); }
Form e(int i, int j, int k, int l) { return Form::monomial({i - 1, j - 1, k - 1, l - 1}); }
Form e(int i, int j, int k, int l, int m) { return Form::monomial({i - 1, j - 1, k - 1, l - 1, m - 1}); }
}  // namespace frame

}  // namespace acm5
