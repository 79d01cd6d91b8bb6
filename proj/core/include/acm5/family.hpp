#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "acm5/connection.hpp"
#include "acm5/frames.hpp"

namespace acm5 {

struct FamilyParams {
  std::array<Rational, 4> a;

  FamilyParams() = default;
  FamilyParams(Rational a1, Rational a2, Rational a3, Rational a4) : a{a1, a2, a3, a4} {}
  const Rational& operator[](int i) const { return a[i - 1]; }
  bool satisfies_constraint() const { return a[0] * a[3] == a[1] * a[2]; }
  bool is_zero() const;
  std::string str() const;
  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

inline constexpr int kA2 = 5;  ///< symbol index of the auxiliary 1-form A2

struct FamilyInstance {
  FamilyParams params;
  CoframeData coframe;
  Scalar alpha;
  Form F{2}, Z1{2}, Z2{2};
  ConnectionForms omega_g;  ///< the published connection-form table
};

/// alpha = -2((a1 - a3)(2a1 + a3) + (a2 - a4)(2a2 + a4)).
Rational family_alpha(const FamilyParams& p);
/// Throws IntegrabilityConstraint unless a1 a4 = a2 a3; checks d^2 = 0 and
/// the first structure equation against the table.
FamilyInstance build(const FamilyParams& p);
/// Same coframe and table without any check.
FamilyInstance build_unchecked(const FamilyParams& p);
/// e1..e5, A2 with the family d-table.
CoframeData family_coframe(const FamilyParams& p);
ConnectionForms family_connection_table(const FamilyParams& p);

struct LineItem {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct IdentityReport {
  std::vector<LineItem> items;
  ClassReport classes;
  Predicates predicates;
  std::string torsion_tag;
  bool ok() const;
  std::vector<std::string> failures() const;
};

/// Recomputes every identity of the family from the coframe alone.
IdentityReport verify_identities(const FamilyInstance& inst);

struct GroupIdentification {
  std::string label;            ///< catalog tag or "unclassified-here"
  std::optional<AlgebraTag> tag;
  std::string case_name;        ///< "i", "ii", "iii-a", ...
  std::optional<FrameChange> certificate;
  std::string note;             ///< set when no certificate is emitted
};

/// Lie algebra of G(a1..a4) when some parameter vanishes, with a frame
/// change certificate whenever it exists over the rationals.
GroupIdentification identify_group(const FamilyParams& p);

}  // namespace acm5
