#include "acm5/scalar.hpp"

#include <cmath>
#include <cstdio>

#include "acm5/error.hpp"

namespace acm5 {

namespace {

constexpr std::array<const char*, 5> kTrigNames = {"", "sin(f)", "cos(f)", "sin(g)", "cos(g)"};

Scalar::Trig as_trig(const Rational& r) {
  Scalar::Trig t{};
  t[0] = r;
  return t;
}

bool float_close(double a, double b) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= kFloatTolerance * scale;
}

[[noreturn]] void mismatch(const char* op) {
  throw Error(ErrorKind::ModeMismatch, std::string("cannot combine trig and float values in ") + op);
}

}  // namespace

Scalar Scalar::trig(TrigBasis b, Rational coeff) {
  Trig t{};
  t[static_cast<int>(b)] = std::move(coeff);
  return from_trig(t);
}

Scalar Scalar::from_trig(const Trig& coords) {
  Scalar s;
  s.v_ = coords;
  s.normalize();
  return s;
}

void Scalar::normalize() {
  if (auto* t = std::get_if<Trig>(&v_)) {
    for (int i = 1; i < 5; ++i)
      if (!(*t)[i].is_zero()) return;
    Rational c = (*t)[0];
    v_ = std::move(c);
  }
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Rational>(&v_)) return r->is_zero();
  if (auto* d = std::get_if<double>(&v_)) return std::abs(*d) <= kFloatTolerance;
  return false;  // normalized trig values always have a non-constant part
}

const Rational& Scalar::rational() const {
  if (auto* r = std::get_if<Rational>(&v_)) return *r;
  throw Error(ErrorKind::ModeMismatch, "expected a rational value, got " + str());
}

Rational Scalar::trig_coeff(TrigBasis b) const {
  if (auto* r = std::get_if<Rational>(&v_)) return b == TrigBasis::One ? *r : Rational(0);
  if (auto* t = std::get_if<Trig>(&v_)) return (*t)[static_cast<int>(b)];
  throw Error(ErrorKind::ModeMismatch, "float value has no trig coordinates");
}

double Scalar::to_double() const {
  if (auto* r = std::get_if<Rational>(&v_)) return r->to_double();
  if (auto* d = std::get_if<double>(&v_)) return *d;
  throw Error(ErrorKind::ModeMismatch, "trig value has no float representation");
}

Rational Scalar::evaluate(const PhasePoint& p) const {
  if (auto* r = std::get_if<Rational>(&v_)) return *r;
  if (auto* t = std::get_if<Trig>(&v_))
    return (*t)[0] + (*t)[1] * p.sin_f + (*t)[2] * p.cos_f + (*t)[3] * p.sin_g + (*t)[4] * p.cos_g;
  throw Error(ErrorKind::ModeMismatch, "cannot evaluate a float value at a phase point");
}

Scalar Scalar::to_float() const {
  if (is_float()) return *this;
  if (auto* r = std::get_if<Rational>(&v_)) return from_double(r->to_double());
  throw Error(ErrorKind::ModeMismatch, "trig value has no float representation");
}

std::string Scalar::str() const {
  if (auto* r = std::get_if<Rational>(&v_)) return r->str();
  if (auto* d = std::get_if<double>(&v_)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", *d);
    return buf;
  }
  const auto& t = std::get<Trig>(v_);
  std::string out;
  for (int i = 0; i < 5; ++i) {
    if (t[i].is_zero()) continue;
    Rational c = t[i];
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += c.str();
    } else {
      if (c != Rational(1)) out += c.str() + "*";
      out += kTrigNames[i];
    }
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  std::visit([](auto& x) {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, Trig>) {
      for (auto& c : x) c = -c;
    } else {
      x = -x;
    }
  }, s.v_);
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) += std::get<Rational>(o.v_);
  } else if (is_float() || o.is_float()) {
    if (is_trig() || o.is_trig()) mismatch("addition");
    v_ = to_double() + o.to_double();
  } else {
    Trig a = is_trig() ? std::get<Trig>(v_) : as_trig(std::get<Rational>(v_));
    Trig b = o.is_trig() ? std::get<Trig>(o.v_) : as_trig(std::get<Rational>(o.v_));
    for (int i = 0; i < 5; ++i) a[i] += b[i];
    v_ = a;
    normalize();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(v_) *= std::get<Rational>(o.v_);
  } else if (is_float() || o.is_float()) {
    if (is_trig() || o.is_trig()) mismatch("multiplication");
    v_ = to_double() * o.to_double();
  } else if (is_trig() && o.is_trig()) {
    throw Error(ErrorKind::ExtensionOverflow,
                "product of trig values (" + str() + ")*(" + o.str() + ") leaves the free trig module");
  } else {
    const Rational& r = is_rational() ? std::get<Rational>(v_) : std::get<Rational>(o.v_);
    Trig t = is_trig() ? std::get<Trig>(v_) : std::get<Trig>(o.v_);
    for (auto& c : t) c *= r;
    v_ = t;
    normalize();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_trig())
    throw Error(ErrorKind::ExtensionOverflow, "division by trig value " + o.str());
  if (o.is_zero()) throw Error(ErrorKind::Precondition, "division by zero");
  if (o.is_float()) {
    if (is_trig()) mismatch("division");
    v_ = to_double() / o.to_double();
    return *this;
  }
  Rational inv = Rational(1) / std::get<Rational>(o.v_);
  return *this *= Scalar(inv);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_float() || b.is_float()) {
    if (a.is_trig() || b.is_trig()) return false;
    return float_close(a.to_double(), b.to_double());
  }
  for (int i = 0; i < 5; ++i) {
    auto basis = static_cast<TrigBasis>(i);
    if (a.trig_coeff(basis) != b.trig_coeff(basis)) return false;
  }
  return true;
}

}  // namespace acm5
