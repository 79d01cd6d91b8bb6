#include <doctest/doctest.h>

#include "acm5/family.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace acm5;
using frame::e;

namespace {

Scalar g_(const Vec& a, const Vec& b) {
  Scalar s;
  for (int i = 0; i < 5; ++i) s += a[i] * b[i];
  return s;
}

std::vector<Form> so5_basis() {
  std::vector<Form> out;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) out.push_back(e(i, j));
  return out;
}

Form random_two_form(testing::Gen& g) { return g.metric_form(2, 6); }

AcmTensors tensors_of(const FamilyParams& p) { return acm_tensors(build(p).omega_g); }

}  // namespace

TEST_SUITE("acms") {

TEST_CASE("phi conventions") {
  for (int x = 0; x < 5; ++x) {
    Vec ex = basis_vector(x);
    Vec pp = phi(phi(ex));
    for (int c = 0; c < 5; ++c) {
      Scalar expected = (c == x ? Scalar(-1) : Scalar(0)) + (x == kXi && c == kXi ? Scalar(1) : Scalar(0));
      CHECK(pp[c] == expected);
    }
    for (int y = 0; y < 5; ++y) {
      Vec ey = basis_vector(y);
      CHECK(evaluate(fundamental_form(), {x, y}) == g_(ex, phi(ey)));
      Scalar eta_term = (x == kXi && y == kXi) ? Scalar(1) : Scalar(0);
      CHECK(g_(phi(ex), phi(ey)) == g_(ex, ey) - eta_term);
    }
  }
  for (const auto& c : phi(basis_vector(kXi))) CHECK(c.is_zero());
  CHECK(phi(basis_vector(0))[1] == Scalar(-1));
}

TEST_CASE("lambda2 projection examples") {
  Form Phi = fundamental_form();
  CHECK(lambda2_project(Phi, 1) == Phi);
  for (int p : {2, 3, 4}) CHECK(lambda2_project(Phi, p).is_zero());
  Form z1 = z1_form();
  CHECK(lambda2_project(z1, 2) == z1);
  for (int p : {1, 3, 4}) CHECK(lambda2_project(z1, p).is_zero());
  Form b = e(1, 2) - e(3, 4);
  CHECK(lambda2_project(b, 3) == b);
  for (int p : {1, 2, 4}) CHECK(lambda2_project(b, p).is_zero());
  // the defining conditions of the first three parts, via hodge
  CHECK(wedge(Phi, z1).is_zero());
  CHECK(hodge(z1) == wedge(contact_form(), z1));
  CHECK(hodge(b) == -wedge(contact_form(), b));
}

TEST_CASE("lambda2 dimensions and defining conditions") {
  for (int p = 1; p <= 4; ++p) {
    const auto& basis = lambda2_basis(p);
    CHECK(static_cast<int>(basis.size()) == p);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) CHECK(inner(basis[i], basis[j]).is_zero());
    for (const auto& beta : basis) {
      Form eb = wedge(contact_form(), beta);
      if (p == 2) CHECK(hodge(beta) == eb);
      if (p == 3) CHECK(hodge(beta) == -eb);
      if (p == 4) CHECK(eb.is_zero());
    }
  }
}

TEST_CASE("lambda2 projectors: complete, idempotent, orthogonal") {
  testing::Gen g(31);
  for (int n = 0; n < 50; ++n) {
    Form beta = random_two_form(g);
    Form sum(2);
    std::array<Form, 4> parts;
    for (int p = 1; p <= 4; ++p) {
      parts[p - 1] = lambda2_project(beta, p);
      sum += parts[p - 1];
      CHECK(lambda2_project(parts[p - 1], p) == parts[p - 1]);
    }
    CHECK(sum == beta);
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) CHECK(inner(parts[p], parts[q]).is_zero());
  }
}

TEST_CASE("u(2) splitting of so(5)") {
  for (const auto& b : so5_basis()) {
    Form in = pr_u2(b), out = pr_u2_perp(b);
    CHECK(in + out == b);
    CHECK(in == lambda2_project(b, 1) + lambda2_project(b, 3));
    CHECK(out == lambda2_project(b, 2) + lambda2_project(b, 4));
    CHECK(phi_pullback(in) == in);
  }
  CHECK(pr_u2(e(1, 5)).is_zero());
  CHECK(pr_u2_perp(e(1, 2) + e(3, 4)).is_zero());
}

TEST_CASE("phi invariance type") {
  CHECK(phi_invariance_type(fundamental_form()) == 1);
  CHECK(phi_invariance_type(z2_form()) == -1);
  CHECK(phi_invariance_type(e(1, 5)) == 0);
  CHECK(phi_invariance_type(e(1, 2) - e(3, 4)) == 1);
  try {
    phi_invariance_type(fundamental_form() + e(1, 5));
    FAIL("expected ambiguity");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::Ambiguity);
  }
}

TEST_CASE("theta, vartheta, pr_W") {
  Form z1 = z1_form();
  CHECK(theta(z1).slot(kXi) == z1);
  CHECK(interior(kXi, wedge(contact_form(), z1)) == z1);
  CHECK(vartheta(z1).slot(kXi) == Scalar(2) * z1);
  CHECK(pr_W(theta(z1)) == theta(z1));
  CHECK_FALSE(pr_W(theta(fundamental_form())) == theta(fundamental_form()));
  CHECK(pr_W(vartheta(z1)) == vartheta(z1));
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      for (int z = 0; z < 5; ++z) {
        Scalar eta_x = x == kXi ? Scalar(3) : Scalar(0);
        CHECK(vartheta(z1)(x, y, z) == eta_x * evaluate(z1, {y, z}) - evaluate(hodge(z1), {x, y, z}));
      }
}

TEST_CASE("nabla Phi examples") {
  CHECK(nabla_phi(koszul_connection(CoframeData::flat())).is_zero());
  auto inst = build({1, 0, 0, 0});
  auto t = acm_tensors(inst.omega_g);
  auto w_conn = connection_values(inst.omega_g);
  CHECK(t.nabla_Phi == oracle::nabla_Phi(w_conn));
  // gamma(e1, e3) = dPhi(xi, phi e1, e3) = -dPhi(xi, e2, e3), with dPhi the
  // alternation of nabla Phi
  const Tensor3& np = t.nabla_Phi;
  Scalar dphi_523 = np(kXi, 1, 2) + np(1, 2, kXi) + np(2, kXi, 1);
  CHECK(-dphi_523 == Scalar(4));
  CHECK(evaluate(gamma_form(t), {0, 2}) == Scalar(4));
  CHECK(gamma_form(t) - t.deta == Scalar(6) * z1_form());
}

TEST_CASE("nabla Phi through gamma agrees with the direct path") {
  testing::Gen g(32);
  for (int n = 0; n < 30; ++n) {
    auto pf = g.frame_data();
    auto gamma = intrinsic_torsion(pf.conn);
    CHECK(nabla_Phi_from_gamma(gamma.tensor()) == nabla_Phi_direct(pf.conn));
    CHECK(nabla_Phi_direct(pf.conn) == oracle::nabla_Phi(pf.conn));
  }
}

TEST_CASE("system identities on random pointwise data") {
  testing::Gen g(33);
  for (int n = 0; n < 100; ++n) {
    auto pf = g.frame_data();
    Tensor3 np = oracle::nabla_Phi(pf.conn);
    Tensor3 nphi = oracle::nabla_phi(pf.conn);
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) {
        Vec py = phi(basis_vector(y));
        Scalar rhs;
        for (int c = 0; c < 5; ++c) rhs += py[c] * np(x, kXi, c);
        CHECK(oracle::nabla_xi(pf.conn, x, y) == rhs);
        for (int z = 0; z < 5; ++z) CHECK(nphi(x, y, z) == np(x, z, y));
      }
    CHECK(oracle::nijenhuis(pf.conn) == oracle::nijenhuis_from_nabla_Phi(np));
    auto t = acm_tensors(pf.conn);
    CHECK(t.nijenhuis == oracle::nijenhuis(pf.conn));
    CHECK(t.nabla_phi == nphi);
    CHECK(t.nijenhuis.is_antisymmetric());
  }
}

TEST_CASE("Nijenhuis examples") {
  auto w1 = build({1, 0, 0, 0});
  Tensor3 n1 = nijenhuis(w1.coframe, w1.omega_g);
  CHECK(n1.is_skew());
  CHECK(n1.to_three_form() == Scalar(-4) * (e(1, 3, 5) - e(2, 4, 5)));
  Form deta = ext_d(contact_form(), w1.coframe);
  CHECK(n1 == Scalar(2) * Tensor3::from_three_form(wedge(deta, contact_form())));

  auto w7 = build({0, 0, 1, 0});
  Tensor3 n7 = nijenhuis(w7.coframe, w7.omega_g);
  CHECK(n7(kXi, 0, 2) == Scalar(4));
  CHECK(is_traceless_cyclic(n7));
  CHECK_FALSE(n7.is_skew());

  auto flat = CoframeData::flat();
  CHECK(nijenhuis(flat, koszul_connection(flat)).is_zero());
}

TEST_CASE("N(xi, X, Y) = 2 d eta(X, Y) and the phi-pullback of d eta on the family") {
  testing::Gen g(34);
  for (int n = 0; n < 10; ++n) {
    auto inst = build(g.family_params());
    auto t = acm_tensors(inst.omega_g);
    CHECK(t.deta == ext_d(contact_form(), inst.coframe));
    CHECK(t.nijenhuis.slot(kXi) == Scalar(2) * t.deta);
    CHECK(phi_pullback(t.deta) == -t.deta);
  }
}

TEST_CASE("gamma examples") {
  CHECK(gamma_form(tensors_of({1, 0, 0, 0})) == Scalar(4) * z1_form());
  auto t7 = tensors_of({0, 0, 1, 0});
  CHECK(gamma_form(t7) == Scalar(2) * z1_form());
  CHECK(gamma_form(t7) == t7.deta);
  CHECK(gamma_form(acm_tensors(koszul_connection(CoframeData::flat()))).is_zero());

  testing::Gen g(35);
  for (int n = 0; n < 10; ++n) {
    FamilyParams p = g.family_params();
    auto t = tensors_of(p);
    Form gamma = gamma_form(t);
    CHECK(gamma + Scalar(2) * t.deta == Scalar(6) * (p[3] * z1_form() + p[4] * z2_form()));
    CHECK(gamma - t.deta == Scalar(6) * (p[1] * z1_form() + p[2] * z2_form()));
    CHECK(lambda2_project(gamma, 2) == gamma);
  }
}

TEST_CASE("gamma rejects a structure that is not generalized quasi-Sasaki") {
  auto flat = CoframeData::flat();
  std::vector<Form> d(5, Form(2));
  d[0] = e(1, 5);
  CoframeData c(flat.symbols(), d);
  try {
    gamma_form(c, koszul_connection(c));
    FAIL("expected rejection");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotGeneralizedQuasiSasaki);
  }
}

TEST_CASE("codifferential") {
  auto inst = build({1, 0, 0, 0});
  CHECK(codifferential(contact_form(), inst.omega_g).is_zero());
  CHECK(codifferential(fundamental_form(), inst.omega_g).is_zero());
  auto flat = koszul_connection(CoframeData::flat());
  CHECK(codifferential(e(1, 2, 3), flat).is_zero());

  testing::Gen g(36);
  for (int n = 0; n < 20; ++n) {
    auto pf = g.frame_data();
    Form a = random_two_form(g), b = random_two_form(g);
    Scalar s = g.rational();
    CHECK(codifferential(a + s * b, pf.conn) == codifferential(a, pf.conn) + s * codifferential(b, pf.conn));
    CHECK(codifferential(a, pf.conn).degree() == 1);
  }
}

TEST_CASE("pointwise d reproduces the induced d-table") {
  testing::Gen g(37);
  for (int n = 0; n < 10; ++n) {
    auto pf = g.frame_data();
    auto c = pf.induced_coframe();
    for (int i = 0; i < 5; ++i) CHECK(pointwise_d(e(i + 1), pf.conn) == c.d(i));
  }
}

TEST_CASE("predicate examples") {
  CHECK(predicates(acm_tensors(build({-5, 0, 1, 0}).omega_g)).nearly_cosymplectic);
  CHECK_FALSE(predicates(acm_tensors(build({-2, 0, 1, 0}).omega_g)).nearly_cosymplectic);
  CHECK(predicates(acm_tensors(build({-2, 0, 1, 0}).omega_g)).quasi_cosymplectic);
  auto p1 = predicates(acm_tensors(build({1, 0, 0, 0}).omega_g));
  CHECK_FALSE(p1.nearly_cosymplectic);
  CHECK(p1.semi_cosymplectic);
  CHECK(p1.generalized_quasi_sasaki);
  CHECK(p1.xi_killing);
  CHECK_FALSE(p1.normal);

  auto flat = CoframeData::flat();
  auto p0 = predicates(flat, koszul_connection(flat));
  for (const auto& [name, v] : predicate_list(p0)) CHECK_MESSAGE(v, name);
}

TEST_CASE("Sasaki-type ratio is surfaced") {
  // d e5 = 2 Phi on an otherwise trivial table is not closed, but the
  // pointwise predicates only need the connection values.
  auto flat = CoframeData::flat();
  std::vector<Form> d(5, Form(2));
  d[4] = Scalar(2) * fundamental_form();
  CoframeData c(flat.symbols(), d);
  auto p = predicates(c, koszul_connection(c));
  REQUIRE(p.deta_phi_ratio.has_value());
  CHECK(*p.deta_phi_ratio == Scalar(2));
}

}  // TEST_SUITE
