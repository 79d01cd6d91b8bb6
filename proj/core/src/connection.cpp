#include "acm5/connection.hpp"

#include <bit>

namespace acm5 {

namespace {

constexpr Monomial pair_mask(int i, int j) { return (Monomial{1} << i) | (Monomial{1} << j); }

Matrix as_matrix(const Form& beta) {
  Matrix m(kFrameDim, kFrameDim);
  for (const auto& [mask, s] : beta.terms()) {
    int i = std::countr_zero(mask);
    int j = std::countr_zero(mask & (mask - 1));
    m(i, j) = s;
    m(j, i) = -s;
  }
  return m;
}

Form from_matrix(const Matrix& m) {
  Form f(2);
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = i + 1; j < kFrameDim; ++j) f.add_term(pair_mask(i, j), m(i, j));
  return f;
}

std::vector<Scalar> pair_coords(const Form& beta) {
  std::vector<Scalar> v;
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = i + 1; j < kFrameDim; ++j) v.push_back(beta.coeff(pair_mask(i, j)));
  return v;
}

Form from_pair_coords(const std::vector<Scalar>& v) {
  Form f(2);
  int p = 0;
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = i + 1; j < kFrameDim; ++j) f.add_term(pair_mask(i, j), v[p++]);
  return f;
}

struct CompatValues {
  Tensor3 nabla_phi;
  std::array<Vec, kFrameDim> nabla_xi;
  std::array<Vec, kFrameDim> nabla_eta;
  friend bool operator==(const CompatValues&, const CompatValues&) = default;
};

}  // namespace

Compatibility compatibility(const ConnectionForms& w) {
  CompatValues v = eliminate_aux(w, [](const Tensor3& conn) {
    CompatValues out;
    out.nabla_phi = nabla_phi_tensor(conn);
    for (int k = 0; k < kFrameDim; ++k)
      for (int j = 0; j < kFrameDim; ++j) {
        out.nabla_xi[k][j] = conn(k, kXi, j);
        out.nabla_eta[k][j] = -conn(k, j, kXi);
      }
    return out;
  }, "compatibility check");
  auto all_zero = [](const std::array<Vec, kFrameDim>& a) {
    for (const auto& row : a)
      for (const auto& x : row)
        if (!x.is_zero()) return false;
    return true;
  };
  return {all_zero(v.nabla_xi), all_zero(v.nabla_eta), v.nabla_phi.is_zero()};
}

Tensor3 torsion_from_difference(const Tensor3& a) {
  Tensor3 t;
  for (int z = 0; z < kFrameDim; ++z)
    for (int x = 0; x < kFrameDim; ++x)
      for (int y = 0; y < kFrameDim; ++y) t.set_raw(z, x, y, a(x, y, z) - a(y, x, z));
  return t;
}

CharacteristicConnection characteristic_connection(const CoframeData& c, const ConnectionForms& w) {
  AcmTensors t = acm_tensors(w);
  (void)c;
  CharacteristicConnection cc;
  cc.gamma = gamma_form(t);
  Form three = wedge(t.deta - cc.gamma, contact_form());
  cc.a_c = (Tensor3::from_three_form(three) - t.nijenhuis) * Scalar(Rational(1, 2));
  cc.torsion = torsion_from_difference(cc.a_c);
  cc.omega_c = w;
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = i + 1; j < kFrameDim; ++j) {
      Form extra(1);
      for (int k = 0; k < kFrameDim; ++k) extra.add_term(Monomial{1} << k, cc.a_c(k, i, j));
      if (!extra.is_zero()) cc.omega_c.set(i, j, w(i, j) + extra);
    }
  cc.compat = compatibility(cc.omega_c);
  if (!cc.compat.ok())
    throw Error(ErrorKind::InternalConsistency, "characteristic connection does not preserve the structure");
  return cc;
}

std::vector<Form> torsion_forms(const CoframeData& c, const ConnectionForms& w) {
  std::vector<Form> out;
  for (int i = 0; i < kFrameDim; ++i) {
    Form t = c.d(i);
    for (int j = 0; j < kFrameDim; ++j) t -= wedge(w(i, j), Form::symbol(j));
    out.push_back(t);
  }
  return out;
}

TorsionType torsion_type(const Tensor3& torsion) {
  TorsionType tt;
  tt.parts = cartan_decompose(torsion);
  bool vec = tt.parts.vectorial.is_zero(), skew = tt.parts.skew.is_zero(), cyc = tt.parts.cyclic.is_zero();
  if (vec && skew && cyc) tt.tag = "zero";
  else if (vec && cyc) tt.tag = "skew";
  else if (vec && skew) tt.tag = "traceless-cyclic";
  else tt.tag = "mixed";
  return tt;
}

TorsionType torsion_type(const CharacteristicConnection& cc) { return torsion_type(cc.torsion); }

Form so5_bracket(const Form& a, const Form& b) {
  Matrix x = as_matrix(a), y = as_matrix(b);
  return from_matrix(x * y - y * x);
}

std::vector<Form> lie_closure(const std::vector<Form>& generators) {
  std::vector<Form> span;
  auto reduce = [](const std::vector<Form>& forms) {
    std::vector<std::vector<Scalar>> rows;
    for (const auto& f : forms) rows.push_back(pair_coords(f));
    if (rows.empty()) return std::vector<Form>{};
    Echelon e = row_reduce(Matrix::from_rows(rows));
    std::vector<Form> out;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(from_pair_coords(e.reduced.row(static_cast<int>(r))));
    return out;
  };
  span = reduce(generators);
  for (;;) {
    std::vector<Form> grown = span;
    for (std::size_t i = 0; i < span.size(); ++i)
      for (std::size_t j = i + 1; j < span.size(); ++j) grown.push_back(so5_bracket(span[i], span[j]));
    grown = reduce(grown);
    if (grown.size() == span.size()) return span;
    span = grown;
  }
}

bool CurvatureData::is_flat() const {
  for (const auto& row : R)
    for (const auto& f : row)
      if (!f.is_zero()) return false;
  return true;
}

CurvatureData curvature(const CoframeData& c, const ConnectionForms& w) {
  if (!d_squared_zero(c).ok) throw Error(ErrorKind::Precondition, "curvature needs a coframe with d^2 = 0");
  CurvatureData cd;
  for (auto& row : cd.R) row.fill(Form(2));
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = 0; j < kFrameDim; ++j) {
      Form r = ext_d(w(i, j), c);
      for (int k = 0; k < kFrameDim; ++k) r -= wedge(w(i, k), w(k, j));
      if (!r.uses_only(kMetricMask))
        throw Error(ErrorKind::SymbolicResidue,
                    "curvature R" + std::to_string(i + 1) + std::to_string(j + 1) + " keeps an auxiliary symbol");
      cd.R[i][j] = r;
    }
  for (int x = 0; x < kFrameDim; ++x)
    for (int y = 0; y < kFrameDim; ++y) {
      Scalar s;
      for (int i = 0; i < kFrameDim; ++i) s += evaluate(cd.R[i][y], {x, i});
      cd.ricci(x, y) = s;
    }
  std::vector<Form> values;
  for (int a = 0; a < kFrameDim; ++a)
    for (int b = a + 1; b < kFrameDim; ++b) {
      Form h(2);
      for (int i = 0; i < kFrameDim; ++i)
        for (int j = i + 1; j < kFrameDim; ++j) h.add_term(pair_mask(i, j), evaluate(cd.R[i][j], {a, b}));
      if (!h.is_zero()) values.push_back(h);
    }
  cd.holonomy_basis = lie_closure(values);
  return cd;
}

}  // namespace acm5
