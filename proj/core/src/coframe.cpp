#include "acm5/coframe.hpp"

#include <bit>
#include <set>

#include "acm5/error.hpp"

namespace acm5 {

namespace {

Form monomial_form(Monomial m) {
  Form f(popcount(m));
  f.add_term(m, 1);
  return f;
}

int permutation_sign(const std::array<int, kFrameDim>& p) {
  int inversions = 0;
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = i + 1; j < kFrameDim; ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw Error(ErrorKind::Schema, msg);
}

}  // namespace

CoframeData::CoframeData(std::vector<Symbol> symbols, std::vector<Form> d_table,
                         std::array<int, kFrameDim> orientation,
                         std::optional<PhaseRules> phases)
    : symbols_(std::move(symbols)),
      d_table_(std::move(d_table)),
      orientation_(orientation),
      phases_(std::move(phases)) {
  require(static_cast<int>(symbols_.size()) >= kFrameDim, "a coframe needs five metric symbols");
  require(static_cast<int>(symbols_.size()) <= kMaxSymbols, "too many symbols");
  std::set<std::string> names;
  for (int i = 0; i < size(); ++i) {
    const Symbol& s = symbols_[i];
    require(!s.name.empty(), "empty symbol name");
    require(names.insert(s.name).second, "duplicate symbol name '" + s.name + "'");
    if (i < kFrameDim) {
      require(s.kind == SymbolKind::Metric && s.index == i + 1,
              "metric symbols must come first, ordered by frame index");
    } else {
      require(s.kind == SymbolKind::Auxiliary, "exactly five metric symbols are allowed");
    }
  }
  require(d_table_.size() == symbols_.size(), "d-table must cover every symbol");
  for (int i = 0; i < size(); ++i) {
    const Form& f = d_table_[i];
    if (f.is_zero()) {
      d_table_[i] = Form(2);
      continue;
    }
    require(f.degree() == 2, "d(" + symbols_[i].name + ") must be a 2-form");
    require(f.uses_only(all_mask()), "d(" + symbols_[i].name + ") uses an undeclared symbol");
  }
  std::array<int, kFrameDim> sorted = orientation_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < kFrameDim; ++i)
    require(sorted[i] == i, "orientation must be a permutation of the metric symbols");
  orientation_sign_ = permutation_sign(orientation_);
  if (phases_) {
    for (const Form* f : {&phases_->df, &phases_->dg}) {
      if (f->is_zero()) continue;
      require(f->degree() == 1, "phase differentials must be 1-forms");
      require(f->uses_only(all_mask()), "phase differential uses an undeclared symbol");
    }
  }
}

CoframeData CoframeData::flat(const std::vector<std::string>& aux_names) {
  std::vector<Symbol> symbols;
  for (int i = 1; i <= kFrameDim; ++i) symbols.push_back({"e" + std::to_string(i), SymbolKind::Metric, i});
  for (const auto& n : aux_names) symbols.push_back({n, SymbolKind::Auxiliary, 0});
  std::vector<Form> d(symbols.size(), Form(2));
  return CoframeData(std::move(symbols), std::move(d));
}

std::optional<int> CoframeData::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

std::vector<std::string> CoframeData::names() const {
  std::vector<std::string> out;
  for (const auto& s : symbols_) out.push_back(s.name);
  return out;
}

CoframeData CoframeData::with_phases(PhaseRules rules) const {
  return CoframeData(symbols_, d_table_, orientation_, std::move(rules));
}

CoframeData CoframeData::with_d(int i, Form form) const {
  auto table = d_table_;
  table.at(i) = std::move(form);
  return CoframeData(symbols_, std::move(table), orientation_, phases_);
}

CoframeData CoframeData::to_float() const {
  std::vector<Form> table;
  for (const auto& f : d_table_) table.push_back(f.to_float());
  std::optional<PhaseRules> phases;
  if (phases_) phases = PhaseRules{phases_->df.to_float(), phases_->dg.to_float()};
  return CoframeData(symbols_, std::move(table), orientation_, std::move(phases));
}

namespace {

Form d_of_coefficient(const Scalar& c, const CoframeData& cf) {
  if (!c.is_trig()) return Form(1);
  if (!cf.phases())
    throw Error(ErrorKind::MissingDerivation, "trig coefficient " + c.str() + " without phase rules");
  const PhaseRules& ph = *cf.phases();
  Scalar df_coeff = Scalar::trig(TrigBasis::CosF, c.trig_coeff(TrigBasis::SinF)) +
                    Scalar::trig(TrigBasis::SinF, -c.trig_coeff(TrigBasis::CosF));
  Scalar dg_coeff = Scalar::trig(TrigBasis::CosG, c.trig_coeff(TrigBasis::SinG)) +
                    Scalar::trig(TrigBasis::SinG, -c.trig_coeff(TrigBasis::CosG));
  Form out(1);
  if (!df_coeff.is_zero()) out += df_coeff * ph.df;
  if (!dg_coeff.is_zero()) out += dg_coeff * ph.dg;
  return out;
}

// d(e_I) by the graded Leibniz rule over the factors of the monomial.
Form d_of_monomial(Monomial m, const CoframeData& cf) {
  Form out(popcount(m) + 1);
  int position = 0;
  for (Monomial rest = m; rest; rest &= rest - 1, ++position) {
    int idx = std::countr_zero(rest);
    Monomial bit = Monomial{1} << idx;
    Monomial left = m & (bit - 1);
    Monomial right = m & ~(bit | (bit - 1));
    Form term = wedge(wedge(monomial_form(left), cf.d(idx)), monomial_form(right));
    out += (position % 2) ? -term : term;
  }
  return out;
}

}  // namespace

Form ext_d(const Form& a, const CoframeData& c) {
  if (!a.uses_only(c.all_mask()))
    throw Error(ErrorKind::UnsupportedSymbol, "form uses a symbol not declared in the coframe");
  Form out(a.degree() + 1);
  for (const auto& [m, coeff] : a.terms()) {
    Form dc = d_of_coefficient(coeff, c);
    if (!dc.is_zero()) out += wedge(dc, monomial_form(m));
    if (m != 0) out += coeff * d_of_monomial(m, c);
  }
  return out;
}

DSquaredReport d_squared_zero(const CoframeData& c) {
  DSquaredReport report;
  for (int i = 0; i < c.size(); ++i) {
    Form dd = ext_d(c.d(i), c);
    if (!dd.is_zero()) report.ok = false;
    report.per_symbol.push_back(std::move(dd));
  }
  if (c.phases()) {
    for (const Form* f : {&c.phases()->df, &c.phases()->dg}) {
      Form dd = ext_d(*f, c);
      if (!dd.is_zero()) report.ok = false;
      report.phase_closure.push_back(std::move(dd));
    }
  }
  return report;
}

}  // namespace acm5
