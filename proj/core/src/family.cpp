#include "acm5/family.hpp"

#include <bit>

namespace acm5 {

namespace {

using frame::e;

Form A2() { return Form::symbol(kA2); }

Scalar sc(const Rational& r) { return Scalar(r); }

bool tensor_eq_form(const Tensor3& t, const Tensor3& expected) { return t == expected; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

Scalar phi_eval3(const Tensor3& t, int x, int y, int z) {
  // t(phi e_x, phi e_y, phi e_z) with phi e_1 = -e_2, phi e_2 = e_1, phi e_3 = -e_4, phi e_4 = e_3.
  auto image = [](int i) -> std::pair<int, int> {
    switch (i) {
      case 0: return {1, -1};
      case 1: return {0, 1};
      case 2: return {3, -1};
      case 3: return {2, 1};
      default: return {-1, 0};
    }
  };
  auto [a, sa] = image(x);
  auto [b, sb] = image(y);
  auto [c, sc_] = image(z);
  if (a < 0 || b < 0 || c < 0) return Scalar();
  return Scalar(sa * sb * sc_) * t(a, b, c);
}

}  // namespace

bool FamilyParams::is_zero() const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

std::string FamilyParams::str() const {
  return "(" + a[0].str() + ", " + a[1].str() + ", " + a[2].str() + ", " + a[3].str() + ")";
}

Rational family_alpha(const FamilyParams& p) {
  return Rational(-2) * ((p[1] - p[3]) * (Rational(2) * p[1] + p[3]) + (p[2] - p[4]) * (Rational(2) * p[2] + p[4]));
}

CoframeData family_coframe(const FamilyParams& p) {
  const Scalar b1 = sc(Rational(2) * p[1] + p[3]);
  const Scalar b2 = sc(Rational(2) * p[2] + p[4]);
  const Scalar c1 = sc(Rational(-2) * (p[1] - p[3]));
  const Scalar c2 = sc(Rational(-2) * (p[2] - p[4]));
  std::vector<Form> d(6, Form(2));
  d[0] = wedge(A2(), e(2)) - b1 * e(3, 5) - b2 * e(4, 5);
  d[1] = -wedge(A2(), e(1)) + b1 * e(4, 5) - b2 * e(3, 5);
  d[2] = -wedge(A2(), e(4)) + b1 * e(1, 5) + b2 * e(2, 5);
  d[3] = wedge(A2(), e(3)) - b1 * e(2, 5) + b2 * e(1, 5);
  d[4] = c1 * (e(1, 3) - e(2, 4)) + c2 * (e(1, 4) + e(2, 3));
  d[5] = sc(family_alpha(p)) * (e(1, 2) - e(3, 4));
  std::vector<Symbol> symbols;
  for (int i = 1; i <= kFrameDim; ++i) symbols.push_back({"e" + std::to_string(i), SymbolKind::Metric, i});
  symbols.push_back({"A2", SymbolKind::Auxiliary, 0});
  return CoframeData(std::move(symbols), std::move(d));
}

ConnectionForms family_connection_table(const FamilyParams& p) {
  const Scalar s13 = sc(p[1] + Rational(2) * p[3]);
  const Scalar s14 = sc(p[2] + Rational(2) * p[4]);
  const Scalar d1 = sc(p[1] - p[3]);
  const Scalar d2 = sc(p[2] - p[4]);
  ConnectionForms w;
  w.set(0, 1, A2());
  w.set(0, 2, s13 * e(5));
  w.set(0, 3, s14 * e(5));
  w.set(1, 2, s14 * e(5));
  w.set(1, 3, -s13 * e(5));
  w.set(2, 3, -A2());
  w.set(0, 4, -d1 * e(3) - d2 * e(4));
  w.set(1, 4, -d2 * e(3) + d1 * e(4));
  w.set(2, 4, d1 * e(1) + d2 * e(2));
  w.set(3, 4, d2 * e(1) - d1 * e(2));
  return w;
}

FamilyInstance build_unchecked(const FamilyParams& p) {
  FamilyInstance inst{p, family_coframe(p), sc(family_alpha(p)), e(1, 2) - e(3, 4), z1_form(), z2_form(),
                      family_connection_table(p)};
  return inst;
}

FamilyInstance build(const FamilyParams& p) {
  if (!p.satisfies_constraint())
    throw Error(ErrorKind::IntegrabilityConstraint,
                "the structure equations are integrable only when a1*a4 = a2*a3; got " + p.str());
  FamilyInstance inst = build_unchecked(p);
  if (!d_squared_zero(inst.coframe).ok)
    throw Error(ErrorKind::InternalConsistency, "family coframe fails d^2 = 0 at " + p.str());
  if (!verify_first_structure(inst.coframe, inst.omega_g).ok)
    throw Error(ErrorKind::InternalConsistency, "connection table fails the first structure equation at " + p.str());
  return inst;
}

bool IdentityReport::ok() const {
  for (const auto& i : items)
    if (!i.ok) return false;
  return true;
}

std::vector<std::string> IdentityReport::failures() const {
  std::vector<std::string> out;
  for (const auto& i : items)
    if (!i.ok) out.push_back(i.name + (i.detail.empty() ? "" : ": " + i.detail));
  return out;
}

IdentityReport verify_identities(const FamilyInstance& inst) {
  IdentityReport rep;
  auto item = [&](std::string name, bool ok, std::string detail = {}) {
    rep.items.push_back({std::move(name), ok, std::move(detail)});
  };
  const FamilyParams& p = inst.params;
  const Scalar a1 = sc(p[1]), a2 = sc(p[2]), a3 = sc(p[3]), a4 = sc(p[4]);
  const bool skew_params = p[3].is_zero() && p[4].is_zero();
  const bool cyclic_params = p[1].is_zero() && p[2].is_zero();
  const CoframeData& c = inst.coframe;
  const Form eta = contact_form();

  ConnectionForms w = koszul_connection(c);
  item("first structure equation", verify_first_structure(c, w).ok);
  item("connection table matches the Koszul solve", w == inst.omega_g, w == inst.omega_g ? "" : w.str());
  item("d^2 = 0", d_squared_zero(c).ok);

  AcmTensors t = acm_tensors(w);
  rep.predicates = predicates(t);
  const Predicates& pr = rep.predicates;
  item("generalized quasi-Sasaki", pr.generalized_quasi_sasaki);

  IntrinsicTorsion gamma_t = intrinsic_torsion(w);
  rep.classes = classify(gamma_t);
  const ClassReport& cr = rep.classes;
  const bool integrable = gamma_t.is_zero();
  item("class W4+W7", cr.in_class({4, 7}), cr.class_name());
  item("class W3+W4+W5+W7 iff generalized quasi-Sasaki", cr.in_class({3, 4, 5, 7}) == pr.generalized_quasi_sasaki);
  item("strict class W4 iff a3 = a4 = 0", (cr.in_class({4}) && !integrable) == (skew_params && !integrable));
  item("strict class W7 iff a1 = a2 = 0", (cr.in_class({7}) && !integrable) == (cyclic_params && !integrable));

  bool n_xi = true;
  for (int y = 0; y < kFrameDim; ++y)
    for (int z = 0; z < kFrameDim; ++z)
      if (!(t.nijenhuis(kXi, y, z) == Scalar(2) * evaluate(t.deta, {y, z}))) n_xi = false;
  item("N(xi, X, Y) = 2 deta(X, Y)", n_xi);

  Form gamma = gamma_form(t);
  Form plus = Scalar(6) * (a3 * inst.Z1 + a4 * inst.Z2);
  Form minus = Scalar(6) * (a1 * inst.Z1 + a2 * inst.Z2);
  item("gamma + 2 deta = 6a3 Z1 + 6a4 Z2", gamma + Scalar(2) * t.deta == plus, (gamma + Scalar(2) * t.deta).str());
  item("gamma - deta = 6a1 Z1 + 6a2 Z2", gamma - t.deta == minus, (gamma - t.deta).str());
  item("the two gamma identities differ by 3 de5", plus - minus == Scalar(3) * c.d(kXi));

  item("N totally skew iff a3 = a4 = 0", t.nijenhuis.is_skew() == skew_params);
  item("N traceless cyclic iff a1 = a2 = 0", is_traceless_cyclic(t.nijenhuis) == cyclic_params);
  if (skew_params) {
    item("N + gamma ^ eta = 0", (t.nijenhuis + Tensor3::from_three_form(wedge(gamma, eta))).is_zero());
    item("N = 2 deta ^ eta", t.nijenhuis == Tensor3::from_three_form(Scalar(2) * wedge(t.deta, eta)));
  }
  if (cyclic_params) {
    Tensor3 expected;
    for (int x = 0; x < kFrameDim; ++x)
      for (int y = 0; y < kFrameDim; ++y)
        for (int z = 0; z < kFrameDim; ++z) {
          Scalar v;
          if (x == kXi) v += Scalar(2) * evaluate(t.deta, {y, z});
          if (y == kXi) v += evaluate(t.deta, {x, z});
          if (z == kXi) v -= evaluate(t.deta, {x, y});
          expected.set_raw(x, y, z, v);
        }
    item("N = 2 eta(X) deta(Y,Z) + eta(Y) deta(X,Z) - eta(Z) deta(X,Y)", tensor_eq_form(t.nijenhuis, expected));
  }
  item("deta(phi X, phi Y) = -deta(X, Y)", phi_pullback(t.deta) == -t.deta);

  item("semi-cosymplectic", pr.semi_cosymplectic);
  item("normal iff integrable", pr.normal == integrable);
  item("almost cosymplectic iff integrable", pr.almost_cosymplectic == integrable);
  if ((pr.nearly_cosymplectic || pr.quasi_cosymplectic) && !integrable)
    item("nearly or quasi-cosymplectic forces strict class W4+W7",
         !cr.norms[1].is_zero() && !cr.norms[4].is_zero());
  const bool nearly_params = p[1] == Rational(-5) * p[3] && p[2] == Rational(-5) * p[4];
  const bool quasi_params = p[1] == Rational(-2) * p[3] && p[2] == Rational(-2) * p[4];
  item("nearly cosymplectic iff a1 = -5a3 and a2 = -5a4", pr.nearly_cosymplectic == nearly_params,
       yes_no(pr.nearly_cosymplectic));
  item("quasi-cosymplectic iff a1 = -2a3 and a2 = -2a4", pr.quasi_cosymplectic == quasi_params,
       yes_no(pr.quasi_cosymplectic));

  bool disp1 = true, disp2 = true, disp3 = true;
  Form d1 = (Scalar(-2) * a2 - Scalar(4) * a4) * inst.Z1 + (Scalar(2) * a1 + Scalar(4) * a3) * inst.Z2;
  Form d2 = (a2 - a4) * inst.Z1 - (a1 - a3) * inst.Z2;
  for (int x = 0; x < kFrameDim; ++x)
    for (int y = 0; y < kFrameDim; ++y) {
      if (!(t.nabla_phi(kXi, x, y) == evaluate(d1, {x, y}))) disp1 = false;
      if (!(t.nabla_phi(x, kXi, y) == evaluate(d2, {x, y}))) disp2 = false;
      for (int z = 0; z < kFrameDim; ++z)
        if (!phi_eval3(t.nabla_phi, x, y, z).is_zero()) disp3 = false;
    }
  item("g((nabla_xi phi) X, Y) = (-2a2 - 4a4) Z1 + (2a1 + 4a3) Z2", disp1);
  item("g((nabla_X phi) xi, Y) = (a2 - a4) Z1 - (a1 - a3) Z2", disp2);
  item("g((nabla_{phi X} phi) phi Y, phi Z) = 0", disp3);

  CharacteristicConnection cc = characteristic_connection(c, w);
  ConnectionForms expected_c;
  expected_c.set(0, 1, A2());
  expected_c.set(2, 3, -A2());
  item("characteristic connection is determined by A2", cc.omega_c == expected_c, cc.omega_c.str());
  item("characteristic connection preserves xi, eta, phi", compatibility(cc.omega_c).ok());
  TorsionType tt = torsion_type(cc);
  rep.torsion_tag = tt.tag;
  const bool skew_t = tt.tag == "skew" || tt.tag == "zero";
  const bool cyc_t = tt.tag == "traceless-cyclic" || tt.tag == "zero";
  item("torsion skew iff a3 = a4 = 0", skew_t == skew_params, tt.tag);
  item("torsion traceless cyclic iff a1 = a2 = 0", cyc_t == cyclic_params, tt.tag);
  bool torsion_two_ways = true;
  auto tf = torsion_forms(c, cc.omega_c);
  for (int i = 0; i < kFrameDim; ++i)
    if (!(tf[i] == cc.torsion.slot(i))) torsion_two_ways = false;
  item("torsion from the structure equation matches the tensor", torsion_two_ways);

  item("dF = 0", ext_d(inst.F, c).is_zero());
  CurvatureData cd = curvature(c, cc.omega_c);
  bool r_ok = true;
  for (int i = 0; i < kFrameDim; ++i)
    for (int j = 0; j < kFrameDim; ++j) {
      Scalar fij = evaluate(inst.F, {i, j});
      if (!(cd.R[i][j] == (inst.alpha * fij) * inst.F)) r_ok = false;
    }
  item("R = alpha F (x) F", r_ok);
  bool ric_ok = true;
  for (int x = 0; x < kFrameDim; ++x)
    for (int y = 0; y < kFrameDim; ++y) {
      Scalar expect = (x == y && x < kXi) ? -inst.alpha : Scalar();
      if (!(cd.ricci(x, y) == expect)) ric_ok = false;
    }
  item("Ric = -alpha diag(1,1,1,1,0)", ric_ok);
  const bool flat = inst.alpha.is_zero();
  bool hol_ok = flat ? cd.holonomy_basis.empty()
                     : cd.holonomy_basis.size() == 1 && cd.holonomy_basis[0] == inst.F;
  item("holonomy spanned by F", hol_ok, std::to_string(cd.holonomy_basis.size()));

  SpinorReport sr = spinor_kernel(SpinorSpace::standard(), inst.F, cc.omega_c);
  item("F . psi = 0 has a 2-dimensional solution space", sr.kernel_basis.size() == 2 && sr.spectrum_ok);
  item("spin lift of the characteristic connection kills the kernel", sr.lift_annihilates_kernel);
  return rep;
}

namespace {

std::optional<std::pair<Rational, Rational>> two_squares(const Rational& n) {
  if (n.sign() <= 0) return std::nullopt;
  for (long q = 1; q <= 60; ++q)
    for (long px = 0;; ++px) {
      Rational x(px, q);
      Rational rem = n - x * x;
      if (rem.sign() < 0) break;
      if (auto y = rem.sqrt()) return std::make_pair(x, *y);
    }
  return std::nullopt;
}

Form trig_times(TrigBasis b, const Rational& k, const Form& f) { return Scalar::trig(b, k) * f; }

/// Certificates for a2 = a4 = 0.
GroupIdentification identify_real_axis(const Rational& a1, const Rational& a3) {
  GroupIdentification g;
  const Rational two(2);
  const Form p = e(1) + e(4), q = e(2) + e(3), r = e(1) - e(4), s = e(2) - e(3);
  using TB = TrigBasis;
  if (a1 == a3) {
    g.case_name = "iii-a";
    g.tag = AlgebraTag::Abelian6;
    FrameChange fc;
    fc.forms = {trig_times(TB::CosF, 1, p) - trig_times(TB::SinF, 1, q), trig_times(TB::SinF, 1, p) + trig_times(TB::CosF, 1, q),
                trig_times(TB::CosG, 1, r) - trig_times(TB::SinG, 1, s), trig_times(TB::SinG, 1, r) + trig_times(TB::CosG, 1, s),
                A2() + sc(3 * a1) * e(5), A2() - sc(3 * a1) * e(5)};
    fc.phases = PhaseRules{A2() + sc(3 * a1) * e(5), A2() - sc(3 * a1) * e(5)};
    g.certificate = fc;
  } else if (a3 == Rational(-2) * a1) {
    g.case_name = "iii-b";
    g.tag = AlgebraTag::Heis5R;
    FrameChange fc;
    fc.forms = {trig_times(TB::CosF, 1, p) - trig_times(TB::SinF, 1, q), trig_times(TB::SinF, 1, p) + trig_times(TB::CosF, 1, q),
                trig_times(TB::SinF, 1, r) + trig_times(TB::CosF, 1, s), trig_times(TB::CosF, 1, r) - trig_times(TB::SinF, 1, s),
                sc(Rational(-2) / (Rational(3) * a1)) * e(5), A2()};
    fc.phases = PhaseRules{A2(), Form(1)};
    g.certificate = fc;
  } else {
    Rational k = two * (a1 - a3) * (two * a1 + a3);
    g.case_name = k.sign() > 0 ? "iii-c" : "iii-d";
    g.tag = k.sign() > 0 ? AlgebraTag::Su2Su2 : AlgebraTag::Sl2Sl2;
    Rational absk = k.sign() > 0 ? k : -k;
    if (auto xy = two_squares(absk)) {
      const Scalar x = sc(xy->first), y = sc(xy->second);
      const Scalar b = sc(two * a1 + a3);
      FrameChange fc;
      fc.forms = {x * p + y * q, -y * p + x * q, A2() + b * e(5), x * r + y * s, -y * r + x * s, A2() - b * e(5)};
      g.certificate = fc;
    } else {
      g.note = "requires quadratic extension — not emitted";
    }
  }
  return g;
}

GroupIdentification identify_axis_pair(const Rational& a1, const Rational& a2) {
  GroupIdentification g;
  g.case_name = "i";
  g.tag = AlgebraTag::Su2Su2;
  if (auto r = (a1 * a1 + a2 * a2).sqrt()) {
    const Scalar two(2), x = sc(a1), y = sc(a2), rr = sc(*r);
    FrameChange fc;
    fc.forms = {two * (x * e(1) + y * e(2) + rr * e(4)), two * (-y * e(1) + x * e(2) + rr * e(3)),
                A2() + two * rr * e(5),
                two * (x * e(1) + y * e(2) - rr * e(4)), two * (-y * e(1) + x * e(2) - rr * e(3)),
                A2() - two * rr * e(5)};
    g.certificate = fc;
  } else {
    g.note = "requires quadratic extension — not emitted";
  }
  return g;
}

GroupIdentification identify_cyclic_pair(const Rational& a3, const Rational& a4) {
  GroupIdentification g;
  g.case_name = "ii";
  g.tag = AlgebraTag::Sl2Sl2;
  if (auto r = (a3 * a3 + a4 * a4).sqrt()) {
    const Scalar x = sc(a3), y = sc(a4), rr = sc(*r);
    auto block = [&](const Scalar& sign) {
      Form p1 = x * e(1) + y * e(2) + sign * rr * e(4);
      Form p2 = -y * e(1) + x * e(2) + sign * rr * e(3);
      return std::vector<Form>{p1 + p2, p2 - p1, A2() + sign * rr * e(5)};
    };
    FrameChange fc;
    for (const auto& sign : {Scalar(1), Scalar(-1)})
      for (auto& f : block(sign)) fc.forms.push_back(f);
    g.certificate = fc;
  } else {
    g.note = "requires quadratic extension — not emitted";
  }
  return g;
}

/// e3 -> e4, e4 -> -e3 turns the (a,0,b,0) structure equations into the (0,a,0,b) ones.
Form swap_substitute(const Form& f) {
  Form out(f.degree());
  for (const auto& [m, s] : f.terms()) {
    Form term = Form::constant(s);
    for (Monomial rest = m; rest; rest &= rest - 1) {
      int i = std::countr_zero(rest);
      Form factor = i == 2 ? Form::symbol(3) : i == 3 ? -Form::symbol(2) : Form::symbol(i);
      term = wedge(term, factor);
    }
    out += term;
  }
  return out;
}

}  // namespace

GroupIdentification identify_group(const FamilyParams& p) {
  if (p.is_zero()) throw Error(ErrorKind::DegenerateInput, "all parameters vanish");
  if (!p.satisfies_constraint())
    throw Error(ErrorKind::IntegrabilityConstraint,
                "the structure equations are integrable only when a1*a4 = a2*a3; got " + p.str());
  GroupIdentification g;
  if (p[3].is_zero() && p[4].is_zero()) {
    g = identify_axis_pair(p[1], p[2]);
  } else if (p[1].is_zero() && p[2].is_zero()) {
    g = identify_cyclic_pair(p[3], p[4]);
  } else if (p[2].is_zero() && p[4].is_zero()) {
    g = identify_real_axis(p[1], p[3]);
  } else if (p[1].is_zero() && p[3].is_zero()) {
    g = identify_real_axis(p[2], p[4]);
    g.case_name = "iv (" + g.case_name + " swapped)";
    if (g.certificate) {
      for (auto& f : g.certificate->forms) f = swap_substitute(f);
      if (g.certificate->phases) {
        g.certificate->phases->df = swap_substitute(g.certificate->phases->df);
        g.certificate->phases->dg = swap_substitute(g.certificate->phases->dg);
      }
    }
  } else {
    g.label = "unclassified-here";
    g.note = "no parameter vanishes";
    return g;
  }
  g.label = std::string(to_string(*g.tag));
  return g;
}

}  // namespace acm5
