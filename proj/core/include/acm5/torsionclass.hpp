#pragma once

#include <array>
#include <string>
#include <vector>

#include "acm5/acms.hpp"
#include "acm5/linalg.hpp"

namespace acm5 {

/// Gamma(e_k) for k = 1..5, each in Lambda^2_2 + Lambda^2_4.
struct IntrinsicTorsion {
  std::array<Form, kFrameDim> components{Form(2), Form(2), Form(2), Form(2), Form(2)};

  Tensor3 tensor() const { return Tensor3::from_slots(components); }
  static IntrinsicTorsion from_tensor(const Tensor3& t);
  bool is_zero() const;
  friend bool operator==(const IntrinsicTorsion&, const IntrinsicTorsion&) = default;
};

IntrinsicTorsion intrinsic_torsion(const Tensor3& conn);
IntrinsicTorsion intrinsic_torsion(const ConnectionForms& w);

/// S3..S7 (index 0..4) inside the 50 coordinates of Tensor3, plus W itself.
struct WSubspaces {
  std::array<Subspace, 5> s;
  Subspace w;
  /// Raw images theta(Lambda^2) + vartheta(Lambda^2_2) before pr_W, as coordinates.
  std::vector<std::vector<Scalar>> preimages;
};
const WSubspaces& w_subspaces();
/// Float copy of the same subspaces, for float-mode classification.
const WSubspaces& w_subspaces_float();

struct ClassReport {
  std::array<Scalar, 5> norms;  ///< squared norms of the S3..S7 projections
  Scalar residual;              ///< squared norm of the part outside S3..S7
  Scalar total;
  std::vector<std::string> class_tags;  ///< "W3".."W7", "outside S3..S7"
  std::array<Tensor3, 5> parts;
  Tensor3 residual_part;

  bool in_class(std::initializer_list<int> modules) const;
  std::string class_name() const;
};

ClassReport classify(const IntrinsicTorsion& gamma);

struct CartanParts {
  Tensor3 vectorial;
  Vec v{};
  Tensor3 skew;
  Tensor3 cyclic;
};

CartanParts cartan_decompose(const Tensor3& a);
/// A(X,Y,Z) = g(X,Y)g(Z,V) - g(X,Z)g(Y,V).
Tensor3 vectorial_tensor(const Vec& v);
/// Sum over the three cyclic permutations of (X,Y,Z).
Tensor3 cyclic_sum(const Tensor3& a);
bool is_vectorial(const Tensor3& a);
bool is_traceless_cyclic(const Tensor3& a);

}  // namespace acm5
