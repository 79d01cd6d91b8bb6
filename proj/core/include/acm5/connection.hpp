#pragma once

#include <string>
#include <vector>

#include "acm5/acms.hpp"
#include "acm5/linalg.hpp"
#include "acm5/spinor.hpp"
#include "acm5/torsionclass.hpp"

namespace acm5 {

struct Compatibility {
  bool xi = false;   ///< nabla xi = 0
  bool eta = false;  ///< nabla eta = 0
  bool phi = false;  ///< nabla phi = 0
  bool ok() const { return xi && eta && phi; }
};

/// Checks a metric connection against the structure, pointwise with
/// auxiliary values eliminated.
Compatibility compatibility(const ConnectionForms& w);

struct CharacteristicConnection {
  ConnectionForms omega_c;
  Tensor3 a_c;      ///< g(nabla^c_X Y, Z) - g(nabla^g_X Y, Z)
  Tensor3 torsion;  ///< stored as torsion(z, x, y) = T(x, y, z)
  Form gamma{2};
  Compatibility compat;
};

/// The unique metric connection with totally determined torsion that
/// preserves (g, xi, eta, phi) on a generalized quasi-Sasaki structure.
CharacteristicConnection characteristic_connection(const CoframeData& c, const ConnectionForms& w);

/// T(x, y, z) = A(x, y, z) - A(y, x, z), re-indexed with z first.
Tensor3 torsion_from_difference(const Tensor3& a);
/// T^i = de_i - sum_j omega_ij ^ e_j for each metric leg.
std::vector<Form> torsion_forms(const CoframeData& c, const ConnectionForms& w);

struct TorsionType {
  CartanParts parts;
  std::string tag;  ///< "zero", "skew", "traceless-cyclic" or "mixed"
};
TorsionType torsion_type(const CharacteristicConnection& cc);
TorsionType torsion_type(const Tensor3& torsion);

struct CurvatureData {
  std::array<std::array<Form, kFrameDim>, kFrameDim> R;
  Matrix ricci{kFrameDim, kFrameDim};
  /// Echelon basis of the bracket closure of the curvature values, as 2-forms.
  std::vector<Form> holonomy_basis;
  bool is_flat() const;
};

/// R_ij = d omega_ij - sum_k omega_ik ^ omega_kj, Ric(X,Y) = sum_i R_{e_i Y}(X, e_i).
CurvatureData curvature(const CoframeData& c, const ConnectionForms& w);

/// Bracket closure inside so(5) of the given 2-forms.
std::vector<Form> lie_closure(const std::vector<Form>& generators);
/// [a, b] of 2-forms viewed as skew 5x5 matrices.
Form so5_bracket(const Form& a, const Form& b);

}  // namespace acm5
