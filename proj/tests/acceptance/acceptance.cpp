// One line per acceptance criterion; exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "acm5/family.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace acm5;
using frame::e;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

int failures = 0;

void criterion(int n, const char* title, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& ex) {
    c.require(false, std::string("exception: ") + ex.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] %2d. %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", n, title, secs, c.ok ? "" : " -- ",
              c.ok ? "" : c.why.str().c_str());
  if (!c.ok) ++failures;
}

const std::vector<FamilyParams>& replay_set() {
  static const std::vector<FamilyParams> ps = {
      {1, 0, 0, 0}, {0, 0, 1, 0}, {-5, 0, 1, 0}, {-2, 0, 1, 0}, {1, 0, 2, 0},
      {3, 4, 0, 0}, {0, 0, 3, 4}, {1, 0, 1, 0}, {-1, 0, 2, 0}, {0, 0, 0, 0}};
  return ps;
}

IntrinsicTorsion combination(testing::Gen& g, std::initializer_list<int> modules) {
  const auto& ws = w_subspaces();
  std::vector<Scalar> v(Tensor3::kCoords);
  for (int m : modules)
    for (const auto& b : ws.s[m - 3].basis()) {
      Scalar c = g.nonzero_rational();
      for (int i = 0; i < Tensor3::kCoords; ++i) v[i] += c * b[i];
    }
  return IntrinsicTorsion::from_tensor(Tensor3::from_coords(v));
}

// Component of a random Gamma orthogonal to the given modules.
Tensor3 outside(testing::Gen& g, std::initializer_list<int> modules) {
  for (;;) {
    auto rep = classify(intrinsic_torsion(g.tensor()));
    Tensor3 out = rep.residual_part;
    for (int m = 3; m <= 7; ++m)
      if (std::find(modules.begin(), modules.end(), m) == modules.end()) out += rep.parts[m - 3];
    if (!out.is_zero()) return out;
  }
}

void equivalence(Check& c, testing::Gen& g, const char* name, std::initializer_list<int> modules,
                 const std::function<bool(const AcmTensors&)>& condition) {
  for (int n = 0; n < 10; ++n) {
    auto in = combination(g, modules);
    c.require(condition(acm_tensors(in.tensor())), std::string(name) + ": condition fails inside");
    auto out = in.tensor() + outside(g, modules);
    c.require(!condition(acm_tensors(out)), std::string(name) + ": condition holds with an outside component");
  }
}

}  // namespace

int main() {
  criterion(1, "family curvature at (1,0,0,0): alpha, R, Ric, holonomy", [](Check& c) {
    auto inst = build({1, 0, 0, 0});
    c.require(inst.alpha == Scalar(-4), "alpha != -4; ");
    auto cc = characteristic_connection(inst.coframe, inst.omega_g);
    auto cd = curvature(inst.coframe, cc.omega_c);
    Form F = e(1, 2) - e(3, 4);
    int nonzero = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        if (!cd.R[i][j].is_zero()) ++nonzero;
    c.require(nonzero == 2, "R has " + std::to_string(nonzero) + " nonzero entries; ");
    c.require(cd.R[0][1] == Scalar(-4) * F, "R12 = " + cd.R[0][1].str() + "; ");
    c.require(cd.R[2][3] == Scalar(4) * F, "R34 = " + cd.R[2][3].str() + "; ");
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j)
        c.require(cd.ricci(i, j) == Scalar(i == j && i < 4 ? 4 : 0), "Ric differs from diag(4,4,4,4,0); ");
    c.require(cd.holonomy_basis.size() == 1 && cd.holonomy_basis[0] == F, "holonomy basis is not {F}; ");
  });

  criterion(2, "spinor kernel of F has dim 2 and the spin lift kills it (10 random points)", [](Check& c) {
    testing::Gen g(1002);
    const auto& s = SpinorSpace::standard();
    for (int n = 0; n < 10; ++n) {
      FamilyParams p = g.family_params();
      auto inst = build(p);
      auto cc = characteristic_connection(inst.coframe, inst.omega_g);
      auto rep = spinor_kernel(s, inst.F, cc.omega_c);
      c.require(rep.kernel_basis.size() == 2, "kernel dim at " + p.str() + "; ");
      c.require(rep.spectrum_ok, "spectrum at " + p.str() + "; ");
      c.require(rep.lift_annihilates_kernel, "lift at " + p.str() + "; ");
    }
  });

  criterion(3, "classification over 50 random valid parameters", [](Check& c) {
    testing::Gen g(1003);
    for (int n = 0; n < 50; ++n) {
      FamilyParams p = g.family_params();
      auto rep = classify(intrinsic_torsion(build(p).omega_g));
      c.require(rep.residual.is_zero(), "residual at " + p.str() + "; ");
      c.require(rep.norms[0].is_zero() && rep.norms[2].is_zero() && rep.norms[3].is_zero(),
                "S3/S5/S6 at " + p.str() + "; ");
      c.require(rep.norms[4].is_zero() == (p[3].is_zero() && p[4].is_zero()), "S7 at " + p.str() + "; ");
      c.require(rep.norms[1].is_zero() == (p[1].is_zero() && p[2].is_zero()), "S4 at " + p.str() + "; ");
    }
  });

  criterion(4, "identity replay on the ten reference points", [](Check& c) {
    for (const auto& p : replay_set()) {
      auto rep = verify_identities(build(p));
      for (const auto& f : rep.failures()) c.require(false, p.str() + " " + f + "; ");
    }
  });

  criterion(5, "integrability gate on a 9^4 rational grid", [](Check& c) {
    const std::vector<Rational> values = {-2, -1, Rational(-1, 2), 0, Rational(1, 3), Rational(1, 2), 1, Rational(3, 2), 2};
    int passing = 0, total = 0;
    for (const auto& a1 : values)
      for (const auto& a2 : values)
        for (const auto& a3 : values)
          for (const auto& a4 : values) {
            FamilyParams p(a1, a2, a3, a4);
            bool constraint = a1 * a4 == a2 * a3;
            bool built = true;
            try {
              auto inst = build(p);
              c.require(d_squared_zero(inst.coframe).ok, "d^2 != 0 at " + p.str() + "; ");
            } catch (const Error& err) {
              built = false;
              c.require(err.kind() == ErrorKind::IntegrabilityConstraint, "wrong error at " + p.str() + "; ");
            }
            c.require(built == constraint, "gate disagrees at " + p.str() + "; ");
            c.require(d_squared_zero(build_unchecked(p).coframe).ok == constraint,
                      "d^2 does not detect the constraint at " + p.str() + "; ");
            passing += built;
            ++total;
          }
    c.require(total == 6561 && passing > 0, "grid size; ");
  });

  criterion(6, "system identities on 100 random pointwise frames", [](Check& c) {
    testing::Gen g(1006);
    for (int n = 0; n < 100; ++n) {
      auto pf = g.frame_data();
      Tensor3 np = oracle::nabla_Phi(pf.conn);
      Tensor3 nphi = oracle::nabla_phi(pf.conn);
      for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y) {
          Vec py = phi(basis_vector(y));
          Scalar rhs;
          for (int k = 0; k < 5; ++k) rhs += py[k] * np(x, kXi, k);
          c.require(oracle::nabla_xi(pf.conn, x, y) == rhs, "nabla xi identity; ");
          for (int z = 0; z < 5; ++z) c.require(nphi(x, y, z) == np(x, z, y), "nabla phi identity; ");
        }
      c.require(oracle::nijenhuis(pf.conn) == oracle::nijenhuis_from_nabla_Phi(np), "N identity; ");
      auto t = acm_tensors(pf.conn);
      c.require(t.nabla_Phi == np && t.nabla_phi == nphi && t.nijenhuis == oracle::nijenhuis(pf.conn),
                "library tensors differ from the textbook formulas; ");
    }
  });

  criterion(7, "subspace membership vs tensor conditions, both directions", [](Check& c) {
    testing::Gen g(1007);
    equivalence(c, g, "W3+W4+W5+W6", {3, 4, 5, 6}, [](const AcmTensors& t) {
      return t.nijenhuis.is_skew() && predicates(t).xi_killing;
    });
    equivalence(c, g, "W3+W5+W6", {3, 5, 6}, [](const AcmTensors& t) {
      return t.nijenhuis.is_skew() && interior(kXi, t.dPhi).is_zero();
    });
    equivalence(c, g, "W3+W4+W5+W7", {3, 4, 5, 7}, [](const AcmTensors& t) {
      return predicates(t).generalized_quasi_sasaki;
    });
  });

  criterion(8, "characteristic connection: compatibility and torsion type", [](Check& c) {
    for (const auto& p : replay_set()) {
      auto inst = build(p);
      auto cc = characteristic_connection(inst.coframe, inst.omega_g);
      auto comp = compatibility(cc.omega_c);
      c.require(comp.xi && comp.eta && comp.phi, "compatibility at " + p.str() + "; ");
      auto tt = torsion_type(cc);
      bool skew = tt.tag == "skew" || tt.tag == "zero";
      bool cyclic = tt.tag == "traceless-cyclic" || tt.tag == "zero";
      c.require(skew == (p[3].is_zero() && p[4].is_zero()), "skew iff a3=a4=0 at " + p.str() + "; ");
      c.require(cyclic == (p[1].is_zero() && p[2].is_zero()), "cyclic iff a1=a2=0 at " + p.str() + "; ");
    }
  });

  criterion(9, "group certificates", [](Check& c) {
    struct Item {
      FamilyParams p;
      AlgebraTag tag;
    };
    for (const auto& [p, tag] : {Item{{3, 4, 0, 0}, AlgebraTag::Su2Su2}, Item{{0, 0, 3, 4}, AlgebraTag::Sl2Sl2},
                                 Item{{1, 0, 1, 0}, AlgebraTag::Abelian6}, Item{{-1, 0, 2, 0}, AlgebraTag::Heis5R}}) {
      auto id = identify_group(p);
      c.require(id.tag == tag, "tag at " + p.str() + "; ");
      c.require(id.certificate.has_value(), "no certificate at " + p.str() + "; ");
      if (!id.certificate) continue;
      c.require(frame_change_verify(build(p).coframe, *id.certificate, CanonicalAlgebra::make(tag)),
                "certificate rejected at " + p.str() + "; ");
    }
  });

  criterion(10, "projector algebra, S4 orthogonal to S7, pr_W rank 12", [](Check& c) {
    testing::Gen g(1010);
    for (int n = 0; n < 200; ++n) {
      Form beta = g.metric_form(2, 6);
      Form sum(2);
      std::array<Form, 4> parts;
      for (int p = 1; p <= 4; ++p) {
        parts[p - 1] = lambda2_project(beta, p);
        sum += parts[p - 1];
        c.require(lambda2_project(parts[p - 1], p) == parts[p - 1], "Lambda2 idempotence; ");
        for (int q = 1; q <= 4; ++q)
          if (q != p) c.require(lambda2_project(parts[p - 1], q).is_zero(), "Lambda2 orthogonality; ");
      }
      c.require(sum == beta, "Lambda2 completeness; ");

      Tensor3 a = g.tensor();
      auto cp = cartan_decompose(a);
      c.require(cp.vectorial + cp.skew + cp.cyclic == a, "Cartan completeness; ");
      std::array<Tensor3, 3> pieces{cp.vectorial, cp.skew, cp.cyclic};
      for (int i = 0; i < 3; ++i) {
        auto again = cartan_decompose(pieces[i]);
        std::array<Tensor3, 3> sub{again.vectorial, again.skew, again.cyclic};
        for (int j = 0; j < 3; ++j)
          c.require(i == j ? sub[j] == pieces[i] : sub[j].is_zero(), "Cartan idempotence/orthogonality; ");
      }
    }
    for (int p = 1; p <= 4; ++p) c.require(static_cast<int>(lambda2_basis(p).size()) == p, "Lambda2 dims; ");
    std::array<std::vector<std::vector<Scalar>>, 3> rows;
    for (int i = 0; i < Tensor3::kCoords; ++i) {
      std::vector<Scalar> unit(Tensor3::kCoords);
      unit[i] = 1;
      auto cp = cartan_decompose(Tensor3::from_coords(unit));
      rows[0].push_back(cp.vectorial.coords());
      rows[1].push_back(cp.skew.coords());
      rows[2].push_back(cp.cyclic.coords());
    }
    c.require(rank(Matrix::from_rows(rows[0])) == 5 && rank(Matrix::from_rows(rows[1])) == 10 &&
                  rank(Matrix::from_rows(rows[2])) == 35,
              "Cartan dims; ");
    for (const auto& u : lambda2_basis(2))
      for (const auto& v : lambda2_basis(2))
        c.require(inner(pr_W(theta(u)), vartheta(v)).is_zero(), "S4/S7 Gram entry nonzero; ");
    std::vector<std::vector<Scalar>> images;
    for (int p = 1; p <= 4; ++p)
      for (const auto& b : lambda2_basis(p)) images.push_back(pr_W(theta(b)).coords());
    for (const auto& b : lambda2_basis(2)) images.push_back(pr_W(vartheta(b)).coords());
    c.require(rank(Matrix::from_rows(images)) == 12, "pr_W rank; ");
  });

  return failures;
}
