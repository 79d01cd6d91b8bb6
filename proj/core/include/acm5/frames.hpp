#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "acm5/coframe.hpp"
#include "acm5/error.hpp"
#include "acm5/tensor3.hpp"

namespace acm5 {

/// Antisymmetric 5x5 matrix of 1-forms omega_ij with
/// nabla_X e_i = sum_j omega_ij(X) e_j. Entries may involve auxiliary symbols.
class ConnectionForms {
 public:
  ConnectionForms();

  const Form& operator()(int i, int j) const { return w_[i][j]; }
  /// Sets omega_ij = f and omega_ji = -f.
  void set(int i, int j, const Form& f);

  bool is_antisymmetric() const;
  /// Union of the auxiliary symbols (bits above the metric range) used.
  Monomial aux_support() const;
  friend bool operator==(const ConnectionForms& a, const ConnectionForms& b);

  std::string str(const std::vector<std::string>* names = nullptr) const;

 private:
  std::array<std::array<Form, kFrameDim>, kFrameDim> w_;
};

/// Levi-Civita connection of a left-invariant orthonormal coframe.
///
/// Metric structure constants go through the Koszul formula. Auxiliary
/// symbols are accepted when they enter the d-table only as
/// aux ^ (sum_j D_ij e_j) with D antisymmetric; D_ij aux then joins omega_ij.
ConnectionForms koszul_connection(const CoframeData& c);

struct StructureReport {
  std::vector<Form> residual;  ///< de_i - sum_j omega_ij ^ e_j per metric leg
  bool ok = true;
};

StructureReport verify_first_structure(const CoframeData& c, const ConnectionForms& w);

/// Pointwise connection values conn(k,i,j) = omega_ij(e_k). Auxiliary symbols
/// have no fixed value on the frame; `aux` assigns A(e_k) for selected
/// (symbol, direction) pairs and everything else is zero.
Tensor3 connection_values(const ConnectionForms& w,
                          const std::map<std::pair<int, int>, Scalar>& aux = {});

/// All (auxiliary symbol, frame direction) pairs on which connection_values
/// can depend.
std::vector<std::pair<int, int>> aux_slots(const ConnectionForms& w);

/// Evaluates an affine function of the pointwise connection and checks that
/// the auxiliary values drop out: f is run with every A(e_k) at zero and once
/// per unit (symbol, direction), and any difference raises SymbolicResidue.
template <class F>
auto eliminate_aux(const ConnectionForms& w, F&& f, std::string_view what) {
  auto base = f(connection_values(w));
  for (auto slot : aux_slots(w)) {
    auto shifted = f(connection_values(w, {{slot, Scalar(1)}}));
    if (!(shifted == base))
      throw Error(ErrorKind::SymbolicResidue,
                  std::string(what) + " depends on auxiliary symbol #" + std::to_string(slot.first + 1) +
                      " along e" + std::to_string(slot.second + 1));
  }
  return base;
}

/// Free pointwise frame data: the 50 values omega_ij(e_k), i < j.
struct PointwiseFrameData {
  Tensor3 conn;

  ConnectionForms forms() const;
  /// d-table induced through de_i = sum_j omega_ij ^ e_j (d^2 = 0 is not implied).
  CoframeData induced_coframe() const;
};

enum class AlgebraTag { Su2Su2, Sl2Sl2, Abelian6, Heis5R };

std::string_view to_string(AlgebraTag tag);
std::optional<AlgebraTag> parse_algebra_tag(std::string_view text);

/// Six-generator Lie algebra given by its Maurer-Cartan equations.
struct CanonicalAlgebra {
  AlgebraTag tag;
  std::vector<Form> d;  ///< du_a over generator indices 0..5

  static CanonicalAlgebra make(AlgebraTag tag);
  /// The same algebra with generators (u1,u2,u3) and (u4,u5,u6) exchanged.
  CanonicalAlgebra block_swapped() const;
  /// Generators as a coframe (u1..u5 in the metric slots, u6 auxiliary).
  CoframeData as_coframe() const;
};

/// New 1-forms u_a written in the old symbols, possibly with trig
/// coefficients; `phases` supplies df, dg when they occur.
struct FrameChange {
  std::vector<Form> forms;
  std::optional<PhaseRules> phases;

  FrameChange block_swapped() const;
};

struct FrameCheck {
  bool ok = false;
  int points = 0;            ///< phase points compared
  std::string mismatch;      ///< first failing generator, if any
};

/// Checks du_a = target.d[a](u) exactly.
///
/// Trig coefficients are compared on a 5x5 grid of rational points of the
/// phase torus; both sides are trig polynomials of degree <= 2 in f and in g,
/// which such a grid determines.
FrameCheck frame_change_check(const CoframeData& c, const FrameChange& f, const CanonicalAlgebra& target);
bool frame_change_verify(const CoframeData& c, const FrameChange& f, const CanonicalAlgebra& target);

/// Rational points on the unit circle used by frame_change_check.
const std::vector<std::pair<Rational, Rational>>& circle_points();

}  // namespace acm5
