#include <doctest/doctest.h>

#include "acm5/family.hpp"
#include "gen.hpp"

using namespace acm5;
using frame::e;

namespace {

IntrinsicTorsion random_in(testing::Gen& g, std::initializer_list<int> modules) {
  const auto& ws = w_subspaces();
  std::vector<Scalar> v(Tensor3::kCoords);
  for (int m : modules)
    for (const auto& b : ws.s[m - 3].basis()) {
      Scalar c = g.rational();
      for (int i = 0; i < Tensor3::kCoords; ++i) v[i] += c * b[i];
    }
  return IntrinsicTorsion::from_tensor(Tensor3::from_coords(v));
}

IntrinsicTorsion random_gamma(testing::Gen& g) {
  return intrinsic_torsion(g.tensor());
}

bool in_span(const Subspace& s, const Tensor3& t) { return s.contains(t.coords()); }

// The part of W outside S3 + S4 + S5 + S7: S6 and the residual.
Tensor3 outside_gqs(testing::Gen& g) {
  for (;;) {
    auto gamma = random_gamma(g);
    auto rep = classify(gamma);
    Tensor3 out = rep.parts[3] + rep.residual_part;
    if (!out.is_zero()) return out;
  }
}

}  // namespace

TEST_SUITE("torsionclass") {

TEST_CASE("intrinsic torsion of the family") {
  testing::Gen g(41);
  for (int n = 0; n < 15; ++n) {
    FamilyParams p = g.family_params();
    auto gamma = intrinsic_torsion(build(p).omega_g);
    CHECK(gamma.components[4] == (p[1] + Scalar(2) * p[3]) * z1_form() + (p[2] + Scalar(2) * p[4]) * z2_form());
    CHECK(gamma.components[0] == (p[1] - p[3]) * e(3, 5) + (p[2] - p[4]) * e(4, 5));
    for (const auto& c : gamma.components) CHECK(pr_u2_perp(c) == c);
  }
  CHECK(intrinsic_torsion(koszul_connection(CoframeData::flat())).is_zero());
}

TEST_CASE("aux residue outside u(2) is rejected") {
  ConnectionForms w;
  w.set(0, 4, Form::symbol(kA2));
  try {
    intrinsic_torsion(w);
    FAIL("expected residue");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::SymbolicResidue);
  }
}

TEST_CASE("subspace dimensions") {
  const auto& ws = w_subspaces();
  std::array<int, 5> dims{1, 2, 3, 4, 2};
  int total = 0;
  for (int i = 0; i < 5; ++i) {
    CHECK(ws.s[i].dim() == dims[i]);
    total += ws.s[i].dim();
  }
  CHECK(total == 12);
  CHECK(ws.w.dim() == 30);
  Matrix pre(static_cast<int>(ws.preimages.size()), Tensor3::kCoords);
  for (std::size_t r = 0; r < ws.preimages.size(); ++r)
    for (int c = 0; c < Tensor3::kCoords; ++c) pre(static_cast<int>(r), c) = ws.preimages[r][c];
  CHECK(rank(pre) == 12);
}

TEST_CASE("S4 is orthogonal to S7 and all S are mutually orthogonal") {
  const auto& ws = w_subspaces();
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      for (const auto& u : ws.s[a].basis())
        for (const auto& v : ws.s[b].basis()) CHECK(dot(u, v).is_zero());
  // Gram block of the raw spanning sets theta(L2), vartheta(L2)
  for (const auto& b1 : lambda2_basis(2))
    for (const auto& b2 : lambda2_basis(2)) CHECK(inner(pr_W(theta(b1)), vartheta(b2)).is_zero());
}

TEST_CASE("pr_W is injective on theta(L2) + vartheta(L2_2)") {
  std::vector<std::vector<Scalar>> rows;
  for (int p = 1; p <= 4; ++p)
    for (const auto& b : lambda2_basis(p)) rows.push_back(pr_W(theta(b)).coords());
  for (const auto& b : lambda2_basis(2)) rows.push_back(pr_W(vartheta(b)).coords());
  CHECK(rank(Matrix::from_rows(rows)) == 12);
}

TEST_CASE("classify examples") {
  auto c1 = classify(intrinsic_torsion(build({1, 0, 0, 0}).omega_g));
  CHECK(c1.class_name() == "W4");
  CHECK(c1.in_class({4}));
  auto c7 = classify(intrinsic_torsion(build({0, 0, 1, 0}).omega_g));
  CHECK(c7.class_name() == "W7");
  auto mixed = classify(intrinsic_torsion(build({1, 0, 2, 0}).omega_g));
  CHECK(mixed.class_name() == "W4+W7");
  CHECK(mixed.residual.is_zero());
  CHECK_FALSE(mixed.norms[1].is_zero());
  CHECK_FALSE(mixed.norms[4].is_zero());
  CHECK(classify(IntrinsicTorsion{}).class_name() == "0");
}

TEST_CASE("classification norms obey Pythagoras") {
  testing::Gen g(42);
  for (int n = 0; n < 30; ++n) {
    auto gamma = random_gamma(g);
    auto rep = classify(gamma);
    Scalar sum = rep.residual;
    Tensor3 recon = rep.residual_part;
    for (int i = 0; i < 5; ++i) {
      sum += rep.norms[i];
      recon += rep.parts[i];
      CHECK(rep.norms[i].rational().sign() >= 0);
    }
    CHECK(sum == norm2(gamma.tensor()));
    CHECK(rep.total == sum);
    CHECK(recon == gamma.tensor());
  }
}

TEST_CASE("float mode classification matches exact") {
  auto gamma = intrinsic_torsion(build({1, 0, 2, 0}).omega_g);
  IntrinsicTorsion f;
  for (int k = 0; k < 5; ++k) f.components[k] = gamma.components[k].to_float();
  auto exact = classify(gamma), approx = classify(f);
  for (int i = 0; i < 5; ++i) CHECK(approx.norms[i] == Scalar::from_double(exact.norms[i].to_double()));
  CHECK(approx.class_name() == exact.class_name());
}

TEST_CASE("generalized quasi-Sasaki iff inside S3+S4+S5+S7") {
  testing::Gen g(43);
  for (int n = 0; n < 10; ++n) {
    auto inside = random_in(g, {3, 4, 5, 7});
    CHECK(predicates(acm_tensors(inside.tensor())).generalized_quasi_sasaki);
    auto outside = IntrinsicTorsion::from_tensor(inside.tensor() + outside_gqs(g));
    CHECK_FALSE(predicates(acm_tensors(outside.tensor())).generalized_quasi_sasaki);
  }
}

TEST_CASE("N skew and xi Killing iff inside S3+S4+S5+S6") {
  testing::Gen g(44);
  auto holds = [](const IntrinsicTorsion& gamma) {
    auto t = acm_tensors(gamma.tensor());
    return t.nijenhuis.is_skew() && predicates(t).xi_killing;
  };
  for (int n = 0; n < 10; ++n) {
    auto inside = random_in(g, {3, 4, 5, 6});
    CHECK(holds(inside));
    auto rep = classify(random_gamma(g));
    Tensor3 extra = rep.parts[4] + rep.residual_part;
    if (extra.is_zero()) continue;
    CHECK_FALSE(holds(IntrinsicTorsion::from_tensor(inside.tensor() + extra)));
  }
}

TEST_CASE("N skew and xi _| dPhi = 0 iff inside S3+S5+S6") {
  testing::Gen g(45);
  auto holds = [](const IntrinsicTorsion& gamma) {
    auto t = acm_tensors(gamma.tensor());
    return t.nijenhuis.is_skew() && interior(kXi, t.dPhi).is_zero();
  };
  for (int n = 0; n < 10; ++n) {
    auto inside = random_in(g, {3, 5, 6});
    CHECK(holds(inside));
    auto rep = classify(random_gamma(g));
    Tensor3 extra = rep.parts[1] + rep.parts[4] + rep.residual_part;
    if (extra.is_zero()) continue;
    CHECK_FALSE(holds(IntrinsicTorsion::from_tensor(inside.tensor() + extra)));
  }
}

TEST_CASE("Cartan examples") {
  Vec v{};
  v[0] = 1;
  Tensor3 a = vectorial_tensor(v);
  auto parts = cartan_decompose(a);
  CHECK(parts.vectorial == a);
  CHECK(parts.skew.is_zero());
  CHECK(parts.cyclic.is_zero());
  CHECK(parts.v[0] == Scalar(1));

  Tensor3 s = Tensor3::from_three_form(e(1, 2, 3));
  auto sp = cartan_decompose(s);
  CHECK(sp.skew == s);
  CHECK(sp.vectorial.is_zero());
  CHECK(sp.cyclic.is_zero());
}

TEST_CASE("Cartan projectors: complete, idempotent, orthogonal") {
  testing::Gen g(46);
  for (int n = 0; n < 200; ++n) {
    Tensor3 a = g.tensor();
    auto p = cartan_decompose(a);
    CHECK(p.vectorial + p.skew + p.cyclic == a);
    CHECK(cartan_decompose(p.vectorial).vectorial == p.vectorial);
    CHECK(cartan_decompose(p.skew).skew == p.skew);
    CHECK(cartan_decompose(p.cyclic).cyclic == p.cyclic);
    CHECK(cartan_decompose(p.vectorial).skew.is_zero());
    CHECK(cartan_decompose(p.skew).cyclic.is_zero());
    CHECK(cartan_decompose(p.cyclic).vectorial.is_zero());
    CHECK(inner(p.vectorial, p.skew).is_zero());
    CHECK(inner(p.skew, p.cyclic).is_zero());
    CHECK(inner(p.vectorial, p.cyclic).is_zero());
    CHECK(is_vectorial(p.vectorial));
    CHECK(p.skew.is_skew());
    CHECK(is_traceless_cyclic(p.cyclic));
  }
}

TEST_CASE("Cartan projector ranks") {
  std::array<std::vector<std::vector<Scalar>>, 3> rows;
  for (int i = 0; i < Tensor3::kCoords; ++i) {
    std::vector<Scalar> unit(Tensor3::kCoords);
    unit[i] = 1;
    auto p = cartan_decompose(Tensor3::from_coords(unit));
    rows[0].push_back(p.vectorial.coords());
    rows[1].push_back(p.skew.coords());
    rows[2].push_back(p.cyclic.coords());
  }
  CHECK(rank(Matrix::from_rows(rows[0])) == 5);
  CHECK(rank(Matrix::from_rows(rows[1])) == 10);
  CHECK(rank(Matrix::from_rows(rows[2])) == 35);
}

}  // TEST_SUITE
