#include "acm5cli/report.hpp"

#include <cstdlib>

namespace acm5::cli {

namespace {

Json forms_json(const ConnectionForms& w, const std::vector<std::string>& names) {
  Json j = Json::object();
  for (int i = 0; i < kFrameDim; ++i)
    for (int k = i + 1; k < kFrameDim; ++k)
      if (!w(i, k).is_zero()) j["w" + std::to_string(i + 1) + std::to_string(k + 1)] = w(i, k).str(&names);
  return j;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

std::string summary(const ClassReport& cr, const Predicates& p, bool integrable) {
  if (integrable) return "cosymplectic (integrable)";
  std::string s = "strict class " + cr.class_name();
  if (p.generalized_quasi_sasaki) s += ", generalized quasi-Sasaki";
  return s;
}

}  // namespace

Json classify_report(const CoframeData& input, bool float_mode) {
  const CoframeData c = float_mode ? input.to_float() : input;
  const auto names = c.names();
  Json j;
  j["mode"] = float_mode ? "float" : "exact";

  ConnectionForms w = koszul_connection(c);
  j["levi_civita"] = forms_json(w, names);

  AcmTensors t = acm_tensors(w);
  IntrinsicTorsion gamma = intrinsic_torsion(w);
  Json g = Json::object();
  for (int k = 0; k < kFrameDim; ++k) g["e" + std::to_string(k + 1)] = gamma.components[k].str(&names);
  j["intrinsic_torsion"] = g;

  ClassReport cr = classify(gamma);
  Predicates p = predicates(t);
  const bool integrable = gamma.is_zero();
  Json cls;
  Json norms = Json::object();
  for (int i = 0; i < 5; ++i) norms["W" + std::to_string(i + 3)] = cr.norms[i].str();
  cls["norms"] = norms;
  cls["residual"] = cr.residual.str();
  cls["total"] = cr.total.str();
  cls["tags"] = cr.class_tags;
  cls["summary"] = summary(cr, p, integrable);
  j["class"] = cls;

  Json pj = Json::object();
  for (const auto& [name, value] : predicate_list(p)) pj[name] = value;
  if (p.deta_phi_ratio) pj["deta_phi_ratio"] = p.deta_phi_ratio->str();
  j["predicates"] = pj;

  Json tensors;
  tensors["d_Phi"] = t.dPhi.str(&names);
  tensors["d_eta"] = t.deta.str(&names);
  tensors["delta_Phi"] = t.delta_Phi.str(&names);
  tensors["delta_eta"] = t.delta_eta.str(&names);
  tensors["nijenhuis_skew"] = t.nijenhuis.is_skew();
  tensors["nijenhuis_traceless_cyclic"] = is_traceless_cyclic(t.nijenhuis);
  j["tensors"] = tensors;

  if (!p.generalized_quasi_sasaki) {
    j["characteristic_connection"] =
        Json{{"note", "not generalized quasi-Sasaki; no compatible connection with this torsion form"}};
    return j;
  }
  CharacteristicConnection cc = characteristic_connection(c, w);
  Json cj;
  cj["gamma"] = cc.gamma.str(&names);
  cj["forms"] = forms_json(cc.omega_c, names);
  cj["preserves_structure"] = cc.compat.ok();
  TorsionType tt = torsion_type(cc);
  cj["torsion_type"] = tt.tag;

  CurvatureData cd = curvature(c, cc.omega_c);
  Json r = Json::object();
  for (int i = 0; i < kFrameDim; ++i)
    for (int k = i + 1; k < kFrameDim; ++k)
      if (!cd.R[i][k].is_zero()) r["R" + std::to_string(i + 1) + std::to_string(k + 1)] = cd.R[i][k].str(&names);
  cj["curvature"] = r;
  cj["ricci"] = matrix_json(cd.ricci);
  Json hol = Json::array();
  for (const auto& h : cd.holonomy_basis) hol.push_back(h.str(&names));
  cj["holonomy"] = hol;
  cj["holonomy_dim"] = static_cast<int>(cd.holonomy_basis.size());

  if (float_mode) {
    cj["spinors"] = Json{{"note", "spinor kernel is computed in exact mode only"}};
  } else if (cd.holonomy_basis.size() == 1) {
    SpinorReport sr = spinor_kernel(SpinorSpace::standard(), cd.holonomy_basis[0], cc.omega_c);
    cj["spinors"] = Json{{"kernel_dim", static_cast<int>(sr.kernel_basis.size())},
                         {"parallel", sr.lift_annihilates_kernel}};
  } else {
    cj["spinors"] = Json{{"note", "holonomy is not one-dimensional; no distinguished 2-form"}};
  }
  j["characteristic_connection"] = cj;
  return j;
}

Json identity_report_json(const FamilyParams& p, const IdentityReport& r) {
  Json j;
  j["params"] = Json::array({p[1].str(), p[2].str(), p[3].str(), p[4].str()});
  Json items = Json::array();
  for (const auto& i : r.items) {
    Json o{{"name", i.name}, {"ok", i.ok}};
    if (!i.detail.empty()) o["detail"] = i.detail;
    items.push_back(o);
  }
  j["items"] = items;
  j["class"] = r.classes.class_name();
  j["torsion_type"] = r.torsion_tag;
  j["ok"] = r.ok();
  return j;
}

namespace {

void render(const Json& j, int indent, bool color, std::string& out) {
  const std::string pad(indent * 2, ' ');
  const char* bold = color ? "\x1b[1m" : "";
  const char* reset = color ? "\x1b[0m" : "";
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const Json& v) {
    for (const auto& x : v)
      if (x.is_structured()) return false;
    return true;
  };
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out += pad + bold + key + reset + ":\n";
      render(value, indent + 1, color, out);
    } else if (value.is_array() && flat(value)) {
      std::string line;
      for (const auto& x : value) line += (line.empty() ? "" : ", ") + scalar(x);
      out += pad + key + ": [" + line + "]\n";
    } else if (value.is_array()) {
      out += pad + bold + key + reset + ":\n";
      for (const auto& x : value) {
        if (x.is_array()) {
          std::string line;
          for (const auto& y : x) line += (line.empty() ? "" : "  ") + scalar(y);
          out += pad + "  " + line + "\n";
        } else if (x.is_object()) {
          render(x, indent + 1, color, out);
        } else {
          out += pad + "  " + scalar(x) + "\n";
        }
      }
    } else {
      out += pad + key + ": " + scalar(value) + "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& j, bool color) {
  std::string out;
  render(j, 0, color, out);
  return out;
}

bool color_from_env() {
  const char* v = std::getenv("ACM5_COLOR");
  if (!v) return false;
  std::string s(v);
  return !(s.empty() || s == "0" || s == "never");
}

}  // namespace acm5::cli
