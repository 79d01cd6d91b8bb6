#include "acm5/acms.hpp"

#include <bit>
#include <functional>

namespace acm5 {

namespace {

constexpr Monomial bit(int i) { return Monomial{1} << i; }

std::vector<Monomial> metric_masks(int degree) {
  std::vector<Monomial> out;
  for (Monomial m = 0; m <= kMetricMask; ++m)
    if (std::popcount(m) == degree) out.push_back(m);
  return out;
}

const std::vector<Monomial>& pair_masks() {
  static const std::vector<Monomial> masks = metric_masks(2);
  return masks;
}

Form form_from_pair_coords(const std::vector<Scalar>& v) {
  Form f(2);
  for (std::size_t p = 0; p < pair_masks().size(); ++p) f.add_term(pair_masks()[p], v[p]);
  return f;
}

/// Orthogonal basis of the 2-forms annihilated by every linear condition.
std::vector<Form> kernel_forms(const std::function<std::vector<Form>(const Form&)>& conditions) {
  const auto& pairs = pair_masks();
  std::vector<std::vector<Scalar>> columns;
  for (Monomial p : pairs) {
    Form e(2);
    e.add_term(p, 1);
    std::vector<Scalar> col;
    for (const Form& image : conditions(e))
      for (Monomial m : metric_masks(image.degree())) col.push_back(image.coeff(m));
    columns.push_back(std::move(col));
  }
  Matrix m(static_cast<int>(columns[0].size()), static_cast<int>(pairs.size()));
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
  Subspace s = Subspace::span(static_cast<int>(pairs.size()), nullspace(m));
  std::vector<Form> out;
  for (const auto& v : s.basis()) out.push_back(form_from_pair_coords(v));
  return out;
}

Form project_onto(const Form& beta, const std::vector<Form>& orthogonal_basis) {
  Form out(2);
  for (const Form& b : orthogonal_basis) {
    Scalar c = inner(beta, b) / inner(b, b);
    if (!c.is_zero()) out += c * b;
  }
  return out;
}

void require_metric_two_form(const Form& beta) {
  if (!beta.uses_only(kMetricMask))
    throw Error(ErrorKind::UnsupportedSymbol, "Lambda^2 projections are defined on metric forms only");
  if (!beta.is_zero() && beta.degree() != 2) throw Error(ErrorKind::Precondition, "expected a 2-form");
}

const std::array<std::array<Scalar, kFrameDim>, kFrameDim>& phi_entries() {
  static const auto m = [] {
    std::array<std::array<Scalar, kFrameDim>, kFrameDim> p{};
    p[1][0] = -1;  // phi e1 = -e2
    p[0][1] = 1;   // phi e2 = e1
    p[3][2] = -1;  // phi e3 = -e4
    p[2][3] = 1;   // phi e4 = e3
    return p;
  }();
  return m;
}

const std::array<std::array<Scalar, kFrameDim>, kFrameDim>& Phi_entries() {
  static const auto m = [] {
    std::array<std::array<Scalar, kFrameDim>, kFrameDim> p{};
    p[0][1] = 1;
    p[1][0] = -1;
    p[2][3] = 1;
    p[3][2] = -1;
    return p;
  }();
  return m;
}

Scalar eval3(const Tensor3& t, const Vec& x, const Vec& y, const Vec& z) {
  Scalar s;
  for (int a = 0; a < kFrameDim; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < kFrameDim; ++b) {
      if (y[b].is_zero()) continue;
      Scalar xy = x[a] * y[b];
      for (int c = 0; c < kFrameDim; ++c) {
        if (z[c].is_zero() || t(a, b, c).is_zero()) continue;
        s += xy * z[c] * t(a, b, c);
      }
    }
  }
  return s;
}

/// (nabla_A phi) B as a vector, from g((nabla_X phi) Y, Z).
Vec nabla_phi_apply(const Tensor3& np, const Vec& a, const Vec& b) {
  Vec out{};
  for (int c = 0; c < kFrameDim; ++c) out[c] = eval3(np, a, b, basis_vector(c));
  return out;
}

Vec bracket(const Vec& a, const Vec& b, const Tensor3& conn) {
  Vec out{};
  for (int x = 0; x < kFrameDim; ++x) {
    if (a[x].is_zero()) continue;
    for (int y = 0; y < kFrameDim; ++y) {
      if (b[y].is_zero()) continue;
      Scalar ab = a[x] * b[y];
      for (int j = 0; j < kFrameDim; ++j) {
        Scalar c = conn(x, y, j) - conn(y, x, j);
        if (!c.is_zero()) out[j] += ab * c;
      }
    }
  }
  return out;
}

Vec operator+(Vec a, const Vec& b) {
  for (int i = 0; i < kFrameDim; ++i) a[i] += b[i];
  return a;
}

Vec operator-(Vec a, const Vec& b) {
  for (int i = 0; i < kFrameDim; ++i) a[i] -= b[i];
  return a;
}

Form two_form_from(const std::function<Scalar(int, int)>& value, bool& antisymmetric) {
  Form f(2);
  antisymmetric = true;
  for (int x = 0; x < kFrameDim; ++x)
    for (int y = 0; y < kFrameDim; ++y) {
      Scalar v = value(x, y);
      if (x == y) {
        if (!v.is_zero()) antisymmetric = false;
      } else if (x < y) {
        f.add_term(bit(x) | bit(y), v);
      } else if (!(v + value(y, x)).is_zero()) {
        antisymmetric = false;
      }
    }
  return f;
}

}  // namespace

Vec basis_vector(int i) {
  Vec v{};
  v[i] = 1;
  return v;
}

Form fundamental_form() { return frame::e(1, 2) + frame::e(3, 4); }
Form contact_form() { return frame::e(5); }
Form z1_form() { return frame::e(1, 3) - frame::e(2, 4); }
Form z2_form() { return frame::e(1, 4) + frame::e(2, 3); }

const Matrix& phi_matrix() {
  static const Matrix m = [] {
    Matrix p(kFrameDim, kFrameDim);
    for (int c = 0; c < kFrameDim; ++c)
      for (int b = 0; b < kFrameDim; ++b) p(c, b) = phi_entries()[c][b];
    return p;
  }();
  return m;
}

Vec phi(const Vec& x) {
  Vec out{};
  for (int c = 0; c < kFrameDim; ++c)
    for (int b = 0; b < kFrameDim; ++b)
      if (!x[b].is_zero() && !phi_entries()[c][b].is_zero()) out[c] += phi_entries()[c][b] * x[b];
  return out;
}

Form phi_pullback(const Form& beta) {
  require_metric_two_form(beta);
  Form out(2);
  for (Monomial m : pair_masks()) {
    int a = std::countr_zero(m);
    int b = std::countr_zero(m & (m - 1));
    Vec pa = phi(basis_vector(a)), pb = phi(basis_vector(b));
    Scalar v;
    for (int c = 0; c < kFrameDim; ++c)
      for (int d = 0; d < kFrameDim; ++d)
        if (!pa[c].is_zero() && !pb[d].is_zero()) v += pa[c] * pb[d] * evaluate(beta, {c, d});
    out.add_term(m, v);
  }
  return out;
}

const std::vector<Form>& lambda2_basis(int part) {
  static const std::array<std::vector<Form>, 4> bases = [] {
    const Form Phi = fundamental_form();
    const Form eta = contact_form();
    std::array<std::vector<Form>, 4> b;
    b[0] = {Phi};
    b[1] = kernel_forms([&](const Form& x) {
      return std::vector<Form>{wedge(Phi, x), hodge(x) - wedge(eta, x)};
    });
    b[2] = kernel_forms([&](const Form& x) { return std::vector<Form>{hodge(x) + wedge(eta, x)}; });
    b[3] = kernel_forms([&](const Form& x) { return std::vector<Form>{wedge(eta, x)}; });
    return b;
  }();
  if (part < 1 || part > 4) throw Error(ErrorKind::Precondition, "Lambda^2 part must be 1..4");
  return bases[part - 1];
}

Form lambda2_project(const Form& beta, int part) {
  require_metric_two_form(beta);
  return project_onto(beta, lambda2_basis(part));
}

Form pr_u2(const Form& beta) { return lambda2_project(beta, 1) + lambda2_project(beta, 3); }
Form pr_u2_perp(const Form& beta) { return lambda2_project(beta, 2) + lambda2_project(beta, 4); }

int phi_invariance_type(const Form& beta) {
  require_metric_two_form(beta);
  if (beta.is_zero()) throw Error(ErrorKind::Ambiguity, "the zero form has every invariance type");
  Form p = phi_pullback(beta);
  if (p == beta) return 1;
  if (p == -beta) return -1;
  if (p.is_zero()) return 0;
  throw Error(ErrorKind::Ambiguity, "2-form mixes Lambda^2 parts of different phi-invariance");
}

Tensor3 theta(const Form& beta) {
  require_metric_two_form(beta);
  return Tensor3::from_three_form(hodge(beta));
}

Tensor3 vartheta(const Form& beta) {
  require_metric_two_form(beta);
  std::array<Form, kFrameDim> slots{Form(2), Form(2), Form(2), Form(2), Form(2)};
  slots[kXi] = Scalar(3) * beta;
  return Tensor3::from_slots(slots) - theta(beta);
}

Tensor3 pr_W(const Tensor3& a) {
  std::array<Form, kFrameDim> slots;
  for (int i = 0; i < kFrameDim; ++i) slots[i] = pr_u2_perp(a.slot(i));
  return Tensor3::from_slots(slots);
}

Form covariant(int k, const Form& a, const Tensor3& conn) {
  if (!a.uses_only(kMetricMask)) throw Error(ErrorKind::UnsupportedSymbol, "covariant derivative of a non-metric form");
  Form out(a.degree());
  std::array<Form, kFrameDim> nabla_e;
  for (int i = 0; i < kFrameDim; ++i) {
    nabla_e[i] = Form(1);
    for (int j = 0; j < kFrameDim; ++j) nabla_e[i].add_term(bit(j), conn(k, i, j));
  }
  for (const auto& [m, s] : a.terms()) {
    for (Monomial rest = m; rest; rest &= rest - 1) {
      int i = std::countr_zero(rest);
      if (nabla_e[i].is_zero()) continue;
      Form left(std::popcount(m & (bit(i) - 1)));
      left.add_term(m & (bit(i) - 1), 1);
      Form right(std::popcount(m & ~(bit(i) | (bit(i) - 1))));
      right.add_term(m & ~(bit(i) | (bit(i) - 1)), 1);
      out += s * wedge(wedge(left, nabla_e[i]), right);
    }
  }
  return out;
}

Form pointwise_d(const Form& a, const Tensor3& conn) {
  Form out(a.degree() + 1);
  for (int i = 0; i < kFrameDim; ++i) out += wedge(Form::symbol(i), covariant(i, a, conn));
  return out;
}

Form codifferential(const Form& a, const Tensor3& conn) {
  Form out(a.degree() > 0 ? a.degree() - 1 : 0);
  for (int i = 0; i < kFrameDim; ++i) out -= interior(i, covariant(i, a, conn));
  return out;
}

Form codifferential(const Form& a, const ConnectionForms& w) {
  return eliminate_aux(w, [&](const Tensor3& conn) { return codifferential(a, conn); }, "codifferential");
}

Tensor3 nabla_Phi_direct(const Tensor3& conn) {
  const auto& P = Phi_entries();
  Tensor3 t;
  for (int k = 0; k < kFrameDim; ++k)
    for (int i = 0; i < kFrameDim; ++i)
      for (int j = i + 1; j < kFrameDim; ++j) {
        Scalar v;
        for (int m = 0; m < kFrameDim; ++m) {
          if (!P[m][j].is_zero()) v -= conn(k, i, m) * P[m][j];
          if (!P[i][m].is_zero()) v -= conn(k, j, m) * P[i][m];
        }
        t.set(k, i, j, v);
      }
  return t;
}

Tensor3 nabla_Phi_from_gamma(const Tensor3& gamma) {
  const auto& P = Phi_entries();
  Tensor3 t;
  for (int k = 0; k < kFrameDim; ++k)
    for (int y = 0; y < kFrameDim; ++y)
      for (int z = y + 1; z < kFrameDim; ++z) {
        Scalar v;
        for (int i = 0; i < kFrameDim; ++i) {
          if (!P[i][z].is_zero()) v += gamma(k, i, y) * P[i][z];
          if (!P[i][y].is_zero()) v -= gamma(k, i, z) * P[i][y];
        }
        t.set(k, y, z, v);
      }
  return t;
}

Tensor3 nabla_phi_tensor(const Tensor3& conn) {
  const auto& ph = phi_entries();
  Tensor3 t;
  for (int k = 0; k < kFrameDim; ++k)
    for (int b = 0; b < kFrameDim; ++b)
      for (int c = b + 1; c < kFrameDim; ++c) {
        Scalar v;
        for (int m = 0; m < kFrameDim; ++m) {
          if (!ph[m][b].is_zero()) v += ph[m][b] * conn(k, m, c);
          if (!ph[c][m].is_zero()) v -= conn(k, b, m) * ph[c][m];
        }
        t.set(k, b, c, v);
      }
  return t;
}

AcmTensors acm_tensors(const Tensor3& conn) {
  AcmTensors t;
  t.nabla_Phi = nabla_Phi_direct(conn);

  t.nabla_phi = nabla_phi_tensor(conn);

  {
    std::array<Form, kFrameDim> slots;
    for (int k = 0; k < kFrameDim; ++k) slots[k] = pr_u2_perp(conn.slot(k));
    t.intrinsic = Tensor3::from_slots(slots);
  }

  for (int k = 0; k < kFrameDim; ++k)
    for (int j = 0; j < kFrameDim; ++j) t.nabla_xi[k][j] = conn(k, kXi, j);

  const Form Phi = fundamental_form();
  const Form eta = contact_form();
  t.dPhi = pointwise_d(Phi, conn);
  t.deta = pointwise_d(eta, conn);
  t.delta_Phi = codifferential(Phi, conn);
  t.delta_eta = codifferential(eta, conn);

  // N three ways.
  const Vec xi = basis_vector(kXi);
  Tensor3 via_Phi, via_phi, via_bracket;
  for (int x = 0; x < kFrameDim; ++x) {
    const Vec X = basis_vector(x);
    const Vec pX = phi(X);
    for (int y = 0; y < kFrameDim; ++y) {
      const Vec Y = basis_vector(y);
      const Vec pY = phi(Y);
      for (int z = y + 1; z < kFrameDim; ++z) {
        const Vec Z = basis_vector(z);
        const Vec pZ = phi(Z);
        const Scalar eta_x = x == kXi ? Scalar(1) : Scalar(0);
        const Scalar deta_yz = evaluate(t.deta, {y, z});

        Scalar a = eval3(t.nabla_Phi, pY, X, Z) - eval3(t.nabla_Phi, pZ, X, Y) +
                   eval3(t.nabla_Phi, Y, pX, Z) - eval3(t.nabla_Phi, Z, pX, Y);
        if (x == kXi) a += eval3(t.nabla_Phi, Y, xi, pZ) - eval3(t.nabla_Phi, Z, xi, pY);
        via_Phi.set(x, y, z, a);

        Vec W = nabla_phi_apply(t.nabla_phi, pY, Z) - nabla_phi_apply(t.nabla_phi, pZ, Y);
        Vec V = nabla_phi_apply(t.nabla_phi, Z, Y) - nabla_phi_apply(t.nabla_phi, Y, Z);
        Vec tot = W + phi(V);
        via_phi.set(x, y, z, tot[x] + eta_x * deta_yz);

        Vec br = bracket(pY, pZ, conn) + phi(phi(bracket(Y, Z, conn))) - phi(bracket(pY, Z, conn)) -
                 phi(bracket(Y, pZ, conn));
        via_bracket.set(x, y, z, br[x] + eta_x * deta_yz);
      }
    }
  }
  if (!(via_Phi == via_phi) || !(via_phi == via_bracket))
    throw Error(ErrorKind::InternalConsistency, "Nijenhuis tensor expressions disagree");
  t.nijenhuis = via_Phi;
  return t;
}

AcmTensors acm_tensors(const ConnectionForms& w) {
  return eliminate_aux(w, [](const Tensor3& conn) { return acm_tensors(conn); }, "structure tensors");
}

Tensor3 nabla_phi(const ConnectionForms& w) { return acm_tensors(w).nabla_phi; }

Tensor3 nijenhuis(const CoframeData& c, const ConnectionForms& w) {
  AcmTensors t = acm_tensors(w);
  const Form& d5 = c.d(kXi);
  if (d5.uses_only(kMetricMask) && !d5.has_trig() && !(d5 == t.deta))
    throw Error(ErrorKind::InternalConsistency, "d eta from the d-table disagrees with the connection");
  return t.nijenhuis;
}

Form gamma_form(const AcmTensors& t) {
  if (!predicates(t).generalized_quasi_sasaki)
    throw Error(ErrorKind::NotGeneralizedQuasiSasaki, "gamma is defined for generalized quasi-Sasaki structures");
  const auto& ph = phi_entries();
  bool anti1 = false, anti2 = false;
  Form g1 = two_form_from([&](int x, int y) {
    Scalar v;
    for (int m = 0; m < kFrameDim; ++m)
      if (!ph[m][x].is_zero()) v += ph[m][x] * evaluate(t.dPhi, {kXi, m, y});
    return v;
  }, anti1);
  Form g2 = two_form_from([&](int x, int y) {
    Scalar v;
    for (int m = 0; m < kFrameDim; ++m)
      for (int n = 0; n < kFrameDim; ++n)
        if (!ph[m][x].is_zero() && !ph[n][y].is_zero()) v += ph[m][x] * ph[n][y] * t.nijenhuis(m, n, kXi);
    return v;
  }, anti2);
  if (!anti1 || !anti2 || !(g1 == g2))
    throw Error(ErrorKind::Precondition, "dPhi(xi, phi X, Y) and N(phi X, phi Y, xi) disagree");
  return g1;
}

Form gamma_form(const CoframeData& c, const ConnectionForms& w) {
  (void)c;
  return gamma_form(acm_tensors(w));
}

Predicates predicates(const AcmTensors& t) {
  const auto& ph = phi_entries();
  Predicates p;
  p.normal = t.nijenhuis.is_zero();
  p.semi_cosymplectic = t.delta_Phi.is_zero() && t.delta_eta.is_zero();
  p.almost_cosymplectic = t.dPhi.is_zero() && t.deta.is_zero();
  p.cosymplectic = p.normal && p.almost_cosymplectic;
  p.quasi_sasaki = p.normal && t.dPhi.is_zero();

  p.nearly_cosymplectic = true;
  for (int a = 0; a < kFrameDim && p.nearly_cosymplectic; ++a)
    for (int b = a; b < kFrameDim && p.nearly_cosymplectic; ++b)
      for (int c = 0; c < kFrameDim; ++c)
        if (!(t.nabla_phi(a, b, c) + t.nabla_phi(b, a, c)).is_zero()) {
          p.nearly_cosymplectic = false;
          break;
        }

  p.quasi_cosymplectic = true;
  for (int a = 0; a < kFrameDim && p.quasi_cosymplectic; ++a) {
    Vec pa = phi(basis_vector(a));
    for (int b = 0; b < kFrameDim && p.quasi_cosymplectic; ++b) {
      Vec pb = phi(basis_vector(b));
      for (int c = 0; c < kFrameDim; ++c) {
        Scalar lhs = t.nabla_phi(a, b, c) + eval3(t.nabla_phi, pa, pb, basis_vector(c));
        Scalar rhs;
        if (b == kXi)
          for (int m = 0; m < kFrameDim; ++m)
            if (!ph[m][a].is_zero()) rhs += ph[m][a] * t.nabla_xi[m][c];
        if (!(lhs - rhs).is_zero()) {
          p.quasi_cosymplectic = false;
          break;
        }
      }
    }
  }

  p.xi_killing = true;
  for (int a = 0; a < kFrameDim; ++a)
    for (int b = a; b < kFrameDim; ++b)
      if (!(t.nabla_xi[a][b] + t.nabla_xi[b][a]).is_zero()) p.xi_killing = false;

  bool horizontal_zero = true;
  for (int x = 0; x < kXi; ++x)
    for (int y = 0; y < kXi; ++y)
      for (int z = 0; z < kXi; ++z)
        if (!t.nijenhuis(x, y, z).is_zero() || !evaluate(t.dPhi, {x, y, z}).is_zero()) horizontal_zero = false;
  p.generalized_quasi_sasaki = horizontal_zero && p.xi_killing;

  if (!t.deta.is_zero()) {
    const Form Phi = fundamental_form();
    Scalar c = t.deta.coeff(bit(0) | bit(1));
    if (!c.is_zero() && t.deta == c * Phi) p.deta_phi_ratio = c;
  }
  return p;
}

Predicates predicates(const CoframeData& c, const ConnectionForms& w) {
  (void)c;
  return predicates(acm_tensors(w));
}

std::vector<std::pair<std::string, bool>> predicate_list(const Predicates& p) {
  return {{"normal", p.normal},
          {"semi_cosymplectic", p.semi_cosymplectic},
          {"almost_cosymplectic", p.almost_cosymplectic},
          {"cosymplectic", p.cosymplectic},
          {"quasi_sasaki", p.quasi_sasaki},
          {"nearly_cosymplectic", p.nearly_cosymplectic},
          {"quasi_cosymplectic", p.quasi_cosymplectic},
          {"generalized_quasi_sasaki", p.generalized_quasi_sasaki},
          {"xi_killing", p.xi_killing}};
}

}  // namespace acm5
