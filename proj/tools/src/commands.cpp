#include "acm5cli/commands.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "acm5cli/coframe_file.hpp"
#include "acm5cli/report.hpp"

namespace acm5::cli {

namespace {

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::IntegrabilityConstraint:
    case ErrorKind::DegenerateInput:
    case ErrorKind::Precondition:
      return kUsage;
    default:
      return kFailure;
  }
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "acm5: " << e.what() << "\n";
    return exit_code(e);
  }
}

/// d^2 diagnostics; empty when the coframe is closed.
std::vector<std::string> d_squared_problems(const CoframeData& c) {
  std::vector<std::string> out;
  auto rep = d_squared_zero(c);
  const auto names = c.names();
  for (int i = 0; i < c.size(); ++i)
    if (!rep.per_symbol[i].is_zero())
      out.push_back("d^2(" + names[i] + ") = " + rep.per_symbol[i].str(&names) + " is not zero");
  for (std::size_t k = 0; k < rep.phase_closure.size(); ++k)
    if (!rep.phase_closure[k].is_zero())
      out.push_back(std::string(k == 0 ? "d(df)" : "d(dg)") + " = " + rep.phase_closure[k].str(&names) +
                    " is not zero");
  return out;
}

FamilyParams parse_params(const std::array<std::string, 4>& text) {
  FamilyParams p;
  for (int i = 0; i < 4; ++i) p.a[i] = Rational::parse(text[i]);
  return p;
}

}  // namespace

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    CoframeData c = load_coframe(path);
    auto problems = d_squared_problems(c);
    for (const auto& p : problems) err << "acm5: " << p << "\n";
    if (!problems.empty()) return int(kFailure);
    out << "valid: " << c.size() << " symbols, d^2 = 0\n";
    return int(kOk);
  });
}

int cmd_classify(const std::string& path, Format format, bool float_mode, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    CoframeData c = load_coframe(path);
    auto problems = d_squared_problems(c);
    for (const auto& p : problems) err << "acm5: " << p << "\n";
    if (!problems.empty()) return int(kFailure);
    Json report = classify_report(c, float_mode);
    out << (format == Format::Json ? dump(report) : render_text(report, color_from_env()));
    return int(kOk);
  });
}

int cmd_family(const FamilyOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    FamilyParams p = parse_params(opt.params);
    if (opt.identify) {
      GroupIdentification g = identify_group(p);
      std::string label = g.label;
      if (g.case_name == "i") label += " (Stiefel-type W4 structure)";
      out << label << "\n";
      if (!g.tag) {
        out << "note: " << g.note << "\n";
        return int(kOk);
      }
      out << "case: " << g.case_name << "\n";
      if (!g.certificate) {
        out << "certificate: " << g.note << "\n";
        return int(kOk);
      }
      FamilyInstance inst = build(p);
      FrameCheck fc = frame_change_check(inst.coframe, *g.certificate, CanonicalAlgebra::make(*g.tag));
      const auto names = inst.coframe.names();
      for (std::size_t a = 0; a < g.certificate->forms.size(); ++a)
        out << "  u" << a + 1 << " = " << g.certificate->forms[a].str(&names) << "\n";
      if (g.certificate->phases)
        out << "  df = " << g.certificate->phases->df.str(&names) << "\n  dg = " << g.certificate->phases->dg.str(&names)
            << "\n";
      out << "certificate: " << (fc.ok ? "verified" : "FAILED " + fc.mismatch) << " (" << fc.points
          << (fc.points == 1 ? " point" : " phase points") << ")\n";
      return int(fc.ok ? kOk : kFailure);
    }
    FamilyInstance inst = build(p);
    if (opt.emit) {
      std::ofstream f(*opt.emit, std::ios::binary);
      if (!f) throw Error(ErrorKind::Precondition, "cannot write '" + *opt.emit + "'");
      f << dump(coframe_to_json(inst.coframe));
      out << "wrote " << *opt.emit << "\n";
      return int(kOk);
    }
    IdentityReport rep = verify_identities(inst);
    if (opt.format == Format::Json) {
      out << dump(identity_report_json(p, rep));
    } else {
      for (const auto& i : rep.items)
        out << (i.ok ? "PASS  " : "FAIL  ") << i.name << (i.ok || i.detail.empty() ? "" : "  [" + i.detail + "]")
            << "\n";
      out << "class: " << rep.classes.class_name() << ", torsion: " << rep.torsion_tag << "\n";
    }
    return int(rep.ok() ? kOk : kFailure);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Almost contact metric structures on 5-dimensional coframes"};
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "check a coframe file (schema and d^2 = 0)");
  validate->add_option("file", path, "coframe JSON file")->required();

  bool json = false, text = false, float_mode = false;
  auto* classify = app.add_subcommand("classify", "classify the structure defined by a coframe file");
  classify->add_option("file", path, "coframe JSON file")->required();
  auto* json_flag = classify->add_flag("--json", json, "JSON report");
  classify->add_flag("--text", text, "text report (default)")->excludes(json_flag);
  classify->add_flag("--float", float_mode, "binary64 arithmetic instead of exact rationals");

  FamilyOptions fam;
  std::vector<std::string> params;
  std::string emit;
  bool fam_json = false;
  auto* family = app.add_subcommand("family", "the four-parameter family M(a1, a2, a3, a4)");
  family->add_option("--params", params, "a1 a2 a3 a4 as integers or p/q")->expected(4)->required();
  auto* emit_opt = family->add_option("--emit", emit, "write the coframe file");
  auto* verify_flag = family->add_flag("--verify", fam.verify, "replay every family identity");
  auto* identify_flag = family->add_flag("--identify", fam.identify, "identify the Lie group");
  family->add_flag("--json", fam_json, "JSON output for --verify");
  emit_opt->excludes(verify_flag)->excludes(identify_flag);
  verify_flag->excludes(identify_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "acm5: " << e.what() << "\n";
    return kUsage;
  }

  if (validate->parsed()) return cmd_validate(path, out, err);
  if (classify->parsed()) return cmd_classify(path, json ? Format::Json : Format::Text, float_mode, out, err);
  if (!*emit_opt && !fam.verify && !fam.identify) {
    err << "acm5: family needs one of --emit, --verify, --identify\n";
    return kUsage;
  }
  std::copy(params.begin(), params.end(), fam.params.begin());
  if (*emit_opt) fam.emit = emit;
  fam.format = fam_json ? Format::Json : Format::Text;
  return cmd_family(fam, out, err);
}

}  // namespace acm5::cli
