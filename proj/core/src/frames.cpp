#include "acm5/frames.hpp"

#include <bit>

#include "acm5/linalg.hpp"

namespace acm5 {

ConnectionForms::ConnectionForms() {
  for (auto& row : w_) row.fill(Form(1));
}

void ConnectionForms::set(int i, int j, const Form& f) {
  if (i == j) {
    if (!f.is_zero()) throw Error(ErrorKind::Precondition, "diagonal connection form must vanish");
    return;
  }
  if (!f.is_zero() && f.degree() != 1) throw Error(ErrorKind::Precondition, "connection entries are 1-forms");
  w_[i][j] = f.is_zero() ? Form(1) : f;
  w_[j][i] = f.is_zero() ? Form(1) : -f;
}

bool ConnectionForms::is_antisymmetric() const {
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = 0; j < kFrameDim; ++j)
      if (!(w_[i][j] + w_[j][i]).is_zero()) return false;
  return true;
}

Monomial ConnectionForms::aux_support() const {
  Monomial s = 0;
  for (const auto& row : w_)
    for (const auto& f : row) s |= f.support();
  return s & ~kMetricMask;
}

bool operator==(const ConnectionForms& a, const ConnectionForms& b) {
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = 0; j < kFrameDim; ++j)
      if (!(a.w_[i][j] == b.w_[i][j])) return false;
  return true;
}

std::string ConnectionForms::str(const std::vector<std::string>* names) const {
  std::string out;
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = i + 1; j < kFrameDim; ++j) {
      if (w_[i][j].is_zero()) continue;
      if (!out.empty()) out += "\n";
      out += "w" + std::to_string(i + 1) + std::to_string(j + 1) + " = " + w_[i][j].str(names);
    }
  return out.empty() ? "0" : out;
}

ConnectionForms koszul_connection(const CoframeData& c) {
  // c_[i][a][b] = de_i(e_a, e_b) for metric a, b.
  Scalar cst[kFrameDim][kFrameDim][kFrameDim];
  std::map<int, std::array<std::array<Scalar, kFrameDim>, kFrameDim>> aux_d;
  for (int i = 0; i < kFrameDim; ++i) {
    for (const auto& [m, s] : c.d(i).terms()) {
      if (s.is_trig())
        throw Error(ErrorKind::Precondition, "Koszul solve needs constant structure coefficients");
      Monomial aux = m & ~kMetricMask;
      if (aux == 0) {
        int a = std::countr_zero(m);
        int b = std::countr_zero(m & (m - 1));
        cst[i][a][b] += s;
        cst[i][b][a] -= s;
      } else if (std::popcount(aux) == 1) {
        // m = e_j ^ aux (metric index below every aux index), so aux ^ e_j carries -s.
        int j = std::countr_zero(m & kMetricMask);
        aux_d[std::countr_zero(aux)][i][j] += -s;
      } else {
        throw Error(ErrorKind::UnsupportedSymbol,
                    "d(" + c.symbol(i).name + ") has a product of two auxiliary symbols");
      }
    }
  }
  for (const auto& [a, D] : aux_d)
    for (int i = 0; i < kFrameDim; ++i)
      for (int j = 0; j < kFrameDim; ++j)
        if (!(D[i][j] + D[j][i]).is_zero())
          throw Error(ErrorKind::UnsupportedSymbol,
                      "auxiliary symbol " + c.symbol(a).name + " does not enter as a connection form");

  ConnectionForms w;
  auto C = [&](int a, int b, int k) { return -cst[k][a][b]; };
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = i + 1; j < kFrameDim; ++j) {
      Form f(1);
      for (int a = 0; a < kFrameDim; ++a) {
        Scalar v = (C(a, i, j) - C(i, j, a) + C(j, a, i)) / Scalar(2);
        f.add_term(Monomial{1} << a, v);
      }
      for (const auto& [a, D] : aux_d) f.add_term(Monomial{1} << a, D[i][j]);
      w.set(i, j, f);
    }
  return w;
}

StructureReport verify_first_structure(const CoframeData& c, const ConnectionForms& w) {
  StructureReport r;
  for (int i = 0; i < kFrameDim; ++i) {
    Form res = c.d(i);
    for (int j = 0; j < kFrameDim; ++j) res -= wedge(w(i, j), Form::symbol(j));
    if (!res.is_zero()) r.ok = false;
    r.residual.push_back(std::move(res));
  }
  return r;
}

Tensor3 connection_values(const ConnectionForms& w, const std::map<std::pair<int, int>, Scalar>& aux) {
  Tensor3 t;
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = i + 1; j < kFrameDim; ++j) {
      const Form& f = w(i, j);
      std::array<Scalar, kFrameDim> vals{};
      for (const auto& [m, s] : f.terms()) {
        if (s.is_trig()) throw Error(ErrorKind::Precondition, "connection forms must have constant coefficients");
        int sym = std::countr_zero(m);
        if (sym < kFrameDim) {
          vals[sym] += s;
          continue;
        }
        for (int k = 0; k < kFrameDim; ++k) {
          auto it = aux.find({sym, k});
          if (it != aux.end()) vals[k] += s * it->second;
        }
      }
      for (int k = 0; k < kFrameDim; ++k) t.set(k, i, j, vals[k]);
    }
  return t;
}

std::vector<std::pair<int, int>> aux_slots(const ConnectionForms& w) {
  std::vector<std::pair<int, int>> out;
  for (Monomial rest = w.aux_support(); rest; rest &= rest - 1)
    for (int k = 0; k < kFrameDim; ++k) out.emplace_back(std::countr_zero(rest), k);
  return out;
}

ConnectionForms PointwiseFrameData::forms() const {
  ConnectionForms w;
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = i + 1; j < kFrameDim; ++j) {
      Form f(1);
      for (int k = 0; k < kFrameDim; ++k) f.add_term(Monomial{1} << k, conn(k, i, j));
      w.set(i, j, f);
    }
  return w;
}

CoframeData PointwiseFrameData::induced_coframe() const {
  ConnectionForms w = forms();
  CoframeData flat = CoframeData::flat();
  std::vector<Form> d;
  for (int i = 0; i < kFrameDim; ++i) {
    Form f(2);
    for (int j = 0; j < kFrameDim; ++j) f += wedge(w(i, j), Form::symbol(j));
    d.push_back(std::move(f));
  }
  return CoframeData(flat.symbols(), std::move(d));
}

std::string_view to_string(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::Su2Su2: return "su2+su2";
    case AlgebraTag::Sl2Sl2: return "sl2+sl2";
    case AlgebraTag::Abelian6: return "abelian6";
    case AlgebraTag::Heis5R: return "heis5+R";
  }
  return "?";
}

std::optional<AlgebraTag> parse_algebra_tag(std::string_view text) {
  for (auto t : {AlgebraTag::Su2Su2, AlgebraTag::Sl2Sl2, AlgebraTag::Abelian6, AlgebraTag::Heis5R})
    if (to_string(t) == text) return t;
  return std::nullopt;
}

namespace {

Form u(int a, int b) { return Form::monomial({a, b}); }

}  // namespace

CanonicalAlgebra CanonicalAlgebra::make(AlgebraTag tag) {
  CanonicalAlgebra alg{tag, std::vector<Form>(6, Form(2))};
  switch (tag) {
    case AlgebraTag::Su2Su2:
    case AlgebraTag::Sl2Sl2: {
      Scalar third = tag == AlgebraTag::Su2Su2 ? Scalar(-1) : Scalar(1);
      for (int base : {0, 3}) {
        alg.d[base] = -u(base + 1, base + 2);
        alg.d[base + 1] = -u(base + 2, base);
        alg.d[base + 2] = third * u(base, base + 1);
      }
      break;
    }
    case AlgebraTag::Abelian6:
      break;
    case AlgebraTag::Heis5R:
      alg.d[4] = Scalar(2) * (u(0, 1) + u(2, 3));
      break;
  }
  return alg;
}

namespace {

int swap_index(int i) { return i < 3 ? i + 3 : i - 3; }

Form swap_blocks(const Form& f) {
  Form out(f.degree());
  for (const auto& [m, s] : f.terms()) {
    Form acc = Form::constant(s);
    for (Monomial rest = m; rest; rest &= rest - 1) acc = wedge(acc, Form::symbol(swap_index(std::countr_zero(rest))));
    out += acc;
  }
  return out;
}

}  // namespace

CanonicalAlgebra CanonicalAlgebra::block_swapped() const {
  CanonicalAlgebra out{tag, std::vector<Form>(6, Form(2))};
  for (int a = 0; a < 6; ++a) out.d[swap_index(a)] = swap_blocks(d[a]);
  return out;
}

CoframeData CanonicalAlgebra::as_coframe() const {
  std::vector<Symbol> symbols;
  for (int a = 0; a < 5; ++a) symbols.push_back({"u" + std::to_string(a + 1), SymbolKind::Metric, a + 1});
  symbols.push_back({"u6", SymbolKind::Auxiliary, 0});
  return CoframeData(std::move(symbols), d);
}

FrameChange FrameChange::block_swapped() const {
  FrameChange out = *this;
  for (int a = 0; a < 6 && a < static_cast<int>(forms.size()); ++a) out.forms[swap_index(a)] = forms[a];
  return out;
}

const std::vector<std::pair<Rational, Rational>>& circle_points() {
  // (sin, cos) pairs, five distinct angles.
  static const std::vector<std::pair<Rational, Rational>> pts = {
      {Rational(0), Rational(1)},
      {Rational(1), Rational(0)},
      {Rational(3, 5), Rational(4, 5)},
      {Rational(-4, 5), Rational(3, 5)},
      {Rational(5, 13), Rational(-12, 13)},
  };
  return pts;
}

FrameCheck frame_change_check(const CoframeData& c, const FrameChange& f, const CanonicalAlgebra& target) {
  const int n = static_cast<int>(f.forms.size());
  if (n != c.size() || n != static_cast<int>(target.d.size()))
    throw Error(ErrorKind::Precondition, "frame change must supply one new form per old symbol and target generator");
  for (const auto& u_a : f.forms)
    if (!u_a.is_zero() && u_a.degree() != 1) throw Error(ErrorKind::Precondition, "new forms must be 1-forms");

  CoframeData cf = f.phases ? c.with_phases(*f.phases) : c;
  if (f.phases) {
    auto dd = d_squared_zero(cf);
    for (const auto& pc : dd.phase_closure)
      if (!pc.is_zero()) throw Error(ErrorKind::Precondition, "phase differentials are not closed");
  }

  std::vector<Form> du;
  bool trig = false;
  for (const auto& u_a : f.forms) {
    du.push_back(ext_d(u_a, cf));
    trig = trig || u_a.has_trig() || du.back().has_trig();
  }

  std::vector<PhasePoint> points;
  if (!trig) {
    points.push_back(PhasePoint{});
  } else {
    for (const auto& [sf, cfv] : circle_points())
      for (const auto& [sg, cg] : circle_points()) points.push_back(PhasePoint{sf, cfv, sg, cg});
  }

  bool independent = false;
  FrameCheck check;
  check.ok = true;
  for (const auto& p : points) {
    std::vector<Form> up;
    for (const auto& u_a : f.forms) up.push_back(u_a.evaluate(p));
    if (!independent) {
      Matrix m(n, n);
      for (int a = 0; a < n; ++a)
        for (int s = 0; s < n; ++s) m(a, s) = up[a].coeff(Monomial{1} << s);
      independent = rank(m) == n;
    }
    for (int a = 0; a < n && check.ok; ++a) {
      Form rhs(2);
      for (const auto& [m, s] : target.d[a].terms()) {
        int x = std::countr_zero(m);
        int y = std::countr_zero(m & (m - 1));
        rhs += s * wedge(up[x], up[y]);
      }
      if (!(du[a].evaluate(p) == rhs)) {
        check.ok = false;
        check.mismatch = "du" + std::to_string(a + 1) + " = " + du[a].str(nullptr) + " differs from the target";
      }
    }
    ++check.points;
  }
  if (!independent) throw Error(ErrorKind::Rank, "new forms are linearly dependent");
  return check;
}

bool frame_change_verify(const CoframeData& c, const FrameChange& f, const CanonicalAlgebra& target) {
  return frame_change_check(c, f, target).ok;
}

}  // namespace acm5
