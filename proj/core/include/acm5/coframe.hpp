#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "acm5/form.hpp"

namespace acm5 {

enum class SymbolKind { Metric, Auxiliary };

struct Symbol {
  std::string name;
  SymbolKind kind = SymbolKind::Metric;
  int index = 0;  ///< 1..5 for metric legs, 0 for auxiliary symbols
};

/// Differentials of the two phase functions f and g used by trig
/// coefficients: d(sin f) = cos f df, d(cos f) = -sin f df, likewise for g.
struct PhaseRules {
  Form df{1};
  Form dg{1};
};

/// The geometric input: symbols, their exterior derivatives and the
/// orientation.
///
/// Internal layout: symbols 0..4 are the metric legs e1..e5 sorted by their
/// frame index, auxiliary symbols follow in declaration order.
class CoframeData {
 public:
  /// Throws Schema when the layout or the d-table is inconsistent.
  CoframeData(std::vector<Symbol> symbols, std::vector<Form> d_table,
              std::array<int, kFrameDim> orientation = {0, 1, 2, 3, 4},
              std::optional<PhaseRules> phases = std::nullopt);

  /// e1..e5 plus the named auxiliary symbols, all with zero differential.
  static CoframeData flat(const std::vector<std::string>& aux_names = {});

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  const Symbol& symbol(int i) const { return symbols_.at(i); }
  std::optional<int> find(const std::string& name) const;
  std::vector<std::string> names() const;

  const Form& d(int i) const { return d_table_.at(i); }
  const std::vector<Form>& d_table() const { return d_table_; }
  const std::array<int, kFrameDim>& orientation() const { return orientation_; }
  int orientation_sign() const { return orientation_sign_; }
  const std::optional<PhaseRules>& phases() const { return phases_; }

  Monomial all_mask() const { return (Monomial{1} << size()) - 1; }
  Monomial aux_mask() const { return all_mask() & ~kMetricMask; }

  CoframeData with_phases(PhaseRules rules) const;
  CoframeData with_d(int i, Form form) const;
  /// Copy whose d-table coefficients are binary64 floats.
  CoframeData to_float() const;

 private:
  std::vector<Symbol> symbols_;
  std::vector<Form> d_table_;
  std::array<int, kFrameDim> orientation_;
  int orientation_sign_ = 1;
  std::optional<PhaseRules> phases_;
};

/// Exterior derivative extended from the d-table by linearity and the graded
/// Leibniz rule, differentiating trig coefficients through the phase rules.
Form ext_d(const Form& a, const CoframeData& c);

struct DSquaredReport {
  std::vector<Form> per_symbol;   ///< ext_d(ext_d(symbol)), 3-forms
  std::vector<Form> phase_closure;  ///< ext_d(df), ext_d(dg) when phases exist
  bool ok = true;
};

DSquaredReport d_squared_zero(const CoframeData& c);

}  // namespace acm5
