#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "acm5/frames.hpp"
#include "acm5/linalg.hpp"
#include "acm5/tensor3.hpp"

namespace acm5 {

inline constexpr int kXi = 4;  ///< frame index of xi = e5

using Vec = std::array<Scalar, kFrameDim>;

Vec basis_vector(int i);

/// Phi = e12 + e34.
Form fundamental_form();
/// eta = e5.
Form contact_form();
/// Z1 = e13 - e24, Z2 = e14 + e23.
Form z1_form();
Form z2_form();

/// phi_matrix()(c, b) = g(phi e_b, e_c); phi e1 = -e2, phi e2 = e1,
/// phi e3 = -e4, phi e4 = e3, phi xi = 0.
const Matrix& phi_matrix();
Vec phi(const Vec& x);

/// The 2-form (X, Y) -> beta(phi X, phi Y).
Form phi_pullback(const Form& beta);

/// Orthogonal basis of Lambda^2_part, part in 1..4, obtained from the
/// defining conditions of each module.
const std::vector<Form>& lambda2_basis(int part);
Form lambda2_project(const Form& beta, int part);
/// Projections onto u(2) = L1 + L3 and u(2)^perp = L2 + L4.
Form pr_u2(const Form& beta);
Form pr_u2_perp(const Form& beta);

/// +1 on Lambda^2_1 + Lambda^2_3, -1 on Lambda^2_2, 0 on Lambda^2_4, found by
/// evaluating beta(phi., phi.). Throws Ambiguity for mixed or zero input.
int phi_invariance_type(const Form& beta);

/// theta(beta)(X,Y,Z) = (*beta)(X,Y,Z).
Tensor3 theta(const Form& beta);
/// vartheta(beta)(X,Y,Z) = 3 eta(X) beta(Y,Z) - (*beta)(X,Y,Z).
Tensor3 vartheta(const Form& beta);
/// Projects every slot A(e_i, ., .) onto u(2)^perp.
Tensor3 pr_W(const Tensor3& a);

/// nabla_{e_k} of a metric form, for pointwise connection values
/// conn(k, i, j) = omega_ij(e_k).
Form covariant(int k, const Form& a, const Tensor3& conn);
/// d a = sum_i e_i ^ nabla_{e_i} a (torsion-free).
Form pointwise_d(const Form& a, const Tensor3& conn);
/// delta a = -sum_i e_i _| nabla_{e_i} a.
Form codifferential(const Form& a, const Tensor3& conn);
Form codifferential(const Form& a, const ConnectionForms& w);

/// Everything the structure predicates read, evaluated at one point.
struct AcmTensors {
  Tensor3 nabla_Phi;      ///< (nabla_X Phi)(Y, Z)
  Tensor3 nabla_phi;      ///< g((nabla_X phi) Y, Z)
  Tensor3 nijenhuis;      ///< N(X, Y, Z)
  Tensor3 intrinsic;      ///< Gamma(X)(Y, Z)
  std::array<Vec, kFrameDim> nabla_xi;  ///< nabla_xi[k][j] = g(nabla_{e_k} xi, e_j)
  Form dPhi{3}, deta{2}, delta_Phi{1}, delta_eta{0};

  friend bool operator==(const AcmTensors&, const AcmTensors&) = default;
};

/// Pointwise computation. N is evaluated three ways (through nabla Phi,
/// through nabla phi, through Lie brackets) and a disagreement raises
/// InternalConsistency.
AcmTensors acm_tensors(const Tensor3& conn);
/// Same, with auxiliary symbols eliminated (they must drop out).
AcmTensors acm_tensors(const ConnectionForms& w);

/// (nabla_X Phi)(Y,Z) straight from the connection values.
Tensor3 nabla_Phi_direct(const Tensor3& conn);
/// g((nabla_{e_k} phi) e_b, e_c) for any metric connection given pointwise.
Tensor3 nabla_phi_tensor(const Tensor3& conn);
/// (nabla_X Phi)(Y,Z) = sum_i Gamma(X)(e_i,Y) Phi(e_i,Z) - Gamma(X)(e_i,Z) Phi(e_i,Y).
Tensor3 nabla_Phi_from_gamma(const Tensor3& gamma);
Tensor3 nabla_phi(const ConnectionForms& w);
Tensor3 nijenhuis(const CoframeData& c, const ConnectionForms& w);

/// gamma(X,Y) = dPhi(xi, phi X, Y); also computed as N(phi X, phi Y, xi).
/// Throws NotGeneralizedQuasiSasaki unless the structure is, and
/// Precondition if the two expressions disagree.
Form gamma_form(const AcmTensors& t);
Form gamma_form(const CoframeData& c, const ConnectionForms& w);

struct Predicates {
  bool normal = false;
  bool semi_cosymplectic = false;
  bool almost_cosymplectic = false;
  bool cosymplectic = false;
  bool quasi_sasaki = false;
  bool nearly_cosymplectic = false;
  bool quasi_cosymplectic = false;
  bool generalized_quasi_sasaki = false;
  bool xi_killing = false;
  /// c with d eta = c Phi, when d eta is a nonzero multiple of Phi.
  std::optional<Scalar> deta_phi_ratio;
};

Predicates predicates(const AcmTensors& t);
Predicates predicates(const CoframeData& c, const ConnectionForms& w);

/// Named list of the predicate values in a fixed order.
std::vector<std::pair<std::string, bool>> predicate_list(const Predicates& p);

}  // namespace acm5
