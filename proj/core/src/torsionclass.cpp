#include "acm5/torsionclass.hpp"

namespace acm5 {

namespace {

bool scalar_zero(const Scalar& s) { return s.is_zero(); }

WSubspaces build_subspaces(bool as_float) {
  auto conv = [&](std::vector<Scalar> v) {
    if (as_float)
      for (auto& x : v) x = x.to_float();
    return v;
  };
  WSubspaces out;
  std::vector<std::vector<Scalar>> images[5];
  for (int part = 1; part <= 4; ++part)
    for (const Form& b : lambda2_basis(part)) {
      Tensor3 t = theta(b);
      out.preimages.push_back(conv(t.coords()));
      images[part - 1].push_back(conv(pr_W(t).coords()));
    }
  for (const Form& b : lambda2_basis(2)) {
    Tensor3 t = vartheta(b);
    out.preimages.push_back(conv(t.coords()));
    images[4].push_back(conv(pr_W(t).coords()));
  }
  for (int i = 0; i < 5; ++i) out.s[i] = Subspace::span(Tensor3::kCoords, images[i]);

  std::vector<std::vector<Scalar>> w_basis;
  for (int k = 0; k < kFrameDim; ++k)
    for (int part : {2, 4})
      for (const Form& b : lambda2_basis(part)) {
        std::array<Form, kFrameDim> slots{Form(2), Form(2), Form(2), Form(2), Form(2)};
        slots[k] = b;
        w_basis.push_back(conv(Tensor3::from_slots(slots).coords()));
      }
  out.w = Subspace::span(Tensor3::kCoords, w_basis);
  return out;
}

}  // namespace

IntrinsicTorsion IntrinsicTorsion::from_tensor(const Tensor3& t) {
  IntrinsicTorsion g;
  for (int k = 0; k < kFrameDim; ++k) g.components[k] = t.slot(k);
  return g;
}

bool IntrinsicTorsion::is_zero() const {
  for (const auto& c : components)
    if (!c.is_zero()) return false;
  return true;
}

IntrinsicTorsion intrinsic_torsion(const Tensor3& conn) {
  IntrinsicTorsion g;
  for (int k = 0; k < kFrameDim; ++k) g.components[k] = pr_u2_perp(conn.slot(k));
  return g;
}

IntrinsicTorsion intrinsic_torsion(const ConnectionForms& w) {
  if (!w.is_antisymmetric()) throw Error(ErrorKind::Precondition, "connection forms must be antisymmetric");
  return eliminate_aux(w, [](const Tensor3& conn) { return intrinsic_torsion(conn); }, "intrinsic torsion");
}

const WSubspaces& w_subspaces() {
  static const WSubspaces s = build_subspaces(false);
  return s;
}

const WSubspaces& w_subspaces_float() {
  static const WSubspaces s = build_subspaces(true);
  return s;
}

bool ClassReport::in_class(std::initializer_list<int> modules) const {
  if (!scalar_zero(residual)) return false;
  for (int i = 0; i < 5; ++i) {
    bool allowed = false;
    for (int m : modules) allowed |= (m == i + 3);
    if (!allowed && !scalar_zero(norms[i])) return false;
  }
  return true;
}

std::string ClassReport::class_name() const {
  if (class_tags.empty()) return "0";
  std::string out;
  for (const auto& t : class_tags) out += (out.empty() ? "" : "+") + t;
  return out;
}

ClassReport classify(const IntrinsicTorsion& gamma) {
  Tensor3 t = gamma.tensor();
  bool as_float = false;
  for (int k = 0; k < kFrameDim; ++k)
    for (const auto& [m, s] : gamma.components[k].terms()) {
      if (s.is_trig()) throw Error(ErrorKind::Precondition, "classification needs constant coefficients");
      as_float |= s.is_float();
    }
  const WSubspaces& ws = as_float ? w_subspaces_float() : w_subspaces();
  std::vector<Scalar> x = t.coords();
  if (as_float)
    for (auto& v : x) v = v.to_float();

  ClassReport r;
  r.total = norm2(t);
  Tensor3 rest = t;
  for (int i = 0; i < 5; ++i) {
    r.parts[i] = Tensor3::from_coords(ws.s[i].project(x));
    rest -= r.parts[i];
    r.norms[i] = norm2(r.parts[i]);
    if (!scalar_zero(r.norms[i])) r.class_tags.push_back("W" + std::to_string(i + 3));
  }
  r.residual_part = rest;
  r.residual = norm2(rest);
  if (!scalar_zero(r.residual)) r.class_tags.push_back("outside S3..S7");
  return r;
}

Tensor3 vectorial_tensor(const Vec& v) {
  Tensor3 t;
  for (int x = 0; x < kFrameDim; ++x)
    for (int y = 0; y < kFrameDim; ++y)
      for (int z = 0; z < kFrameDim; ++z) {
        Scalar s;
        if (x == y) s += v[z];
        if (x == z) s -= v[y];
        t.set_raw(x, y, z, s);
      }
  return t;
}

Tensor3 cyclic_sum(const Tensor3& a) {
  Tensor3 t;
  for (int x = 0; x < kFrameDim; ++x)
    for (int y = 0; y < kFrameDim; ++y)
      for (int z = 0; z < kFrameDim; ++z) t.set_raw(x, y, z, a(x, y, z) + a(y, z, x) + a(z, x, y));
  return t;
}

CartanParts cartan_decompose(const Tensor3& a) {
  CartanParts p;
  for (int z = 0; z < kFrameDim; ++z) {
    Scalar s;
    for (int i = 0; i < kFrameDim; ++i) s += a(i, i, z);
    p.v[z] = s / Scalar(4);
  }
  p.vectorial = vectorial_tensor(p.v);
  p.skew = cyclic_sum(a) * Scalar(Rational(1, 3));
  p.cyclic = a - p.vectorial - p.skew;
  return p;
}

bool is_vectorial(const Tensor3& a) { return cartan_decompose(a).vectorial == a; }

bool is_traceless_cyclic(const Tensor3& a) {
  if (!cyclic_sum(a).is_zero()) return false;
  for (int z = 0; z < kFrameDim; ++z) {
    Scalar s;
    for (int i = 0; i < kFrameDim; ++i) s += a(i, i, z);
    if (!s.is_zero()) return false;
  }
  return true;
}

}  // namespace acm5
