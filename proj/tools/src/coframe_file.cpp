#include "acm5cli/coframe_file.hpp"

#include <bit>
#include <fstream>
#include <map>
#include <sstream>

#include "acm5/error.hpp"

namespace acm5::cli {

namespace {

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorKind::Schema, msg); }

std::string position(std::string_view text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Rational parse_coeff(const Json& c, const std::string& where) {
  if (c.is_number_integer()) return Rational(c.get<long>());
  if (!c.is_string()) schema(where + ": coefficient must be a rational string or an integer");
  const auto& s = c.get_ref<const std::string&>();
  Rational r = Rational::parse(s);
  if (r.str() != s) schema(where + ": coefficient '" + s + "' is not in lowest terms (expected '" + r.str() + "')");
  return r;
}

struct Layout {
  std::map<std::string, int> internal;  ///< name -> internal symbol index
  std::map<std::string, int> declared;  ///< name -> position in the file
};

Form parse_terms(const Json& terms, const Layout& layout, int degree, const std::string& where) {
  if (!terms.is_array()) schema(where + " must be a list of terms");
  Form f(degree);
  for (const auto& t : terms) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("wedge"))
      schema(where + ": each term needs 'coeff' and 'wedge'");
    for (const auto& [key, value] : t.items())
      if (key != "coeff" && key != "wedge") schema(where + ": unknown term field '" + key + "'");
    const Json& w = t["wedge"];
    if (!w.is_array() || static_cast<int>(w.size()) != degree)
      schema(where + ": wedge lists must have " + std::to_string(degree) + " entries");
    std::vector<int> idx;
    int last = -1;
    for (const auto& n : w) {
      if (!n.is_string()) schema(where + ": wedge entries are symbol names");
      auto name = n.get<std::string>();
      auto it = layout.internal.find(name);
      if (it == layout.internal.end()) schema(where + ": unknown symbol '" + name + "'");
      int pos = layout.declared.at(name);
      if (pos <= last) schema(where + ": wedge lists must be strictly increasing in declared symbol order");
      last = pos;
      idx.push_back(it->second);
    }
    Rational r = parse_coeff(t["coeff"], where);
    Form term(degree);
    if (degree == 1) {
      term = Form::symbol(idx[0], Scalar(r));
    } else {
      term = Form::monomial({idx[0], idx[1]}, Scalar(r));
    }
    f += term;
  }
  return f;
}

}  // namespace

CoframeData parse_coframe(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::string what = e.what();
    auto colon = what.rfind(": ");
    throw Error(ErrorKind::Parse, "malformed JSON at " + position(text, e.byte > 0 ? e.byte - 1 : 0) +
                                      (colon == std::string::npos ? "" : what.substr(colon)));
  }
  if (!doc.is_object()) schema("top level must be an object");
  for (const auto& [key, value] : doc.items())
    if (key != "symbols" && key != "d" && key != "orientation" && key != "trig")
      schema("unknown top-level field '" + key + "'");
  if (!doc.contains("symbols") || !doc["symbols"].is_array()) schema("'symbols' must be a list");
  if (!doc.contains("d") || !doc["d"].is_object()) schema("'d' must be an object keyed by symbol name");

  std::vector<Symbol> metric(kFrameDim), aux;
  std::vector<bool> seen(kFrameDim, false);
  std::vector<std::string> declared_names;
  for (const auto& s : doc["symbols"]) {
    if (!s.is_object() || !s.contains("name") || !s["name"].is_string() || !s.contains("kind"))
      schema("each symbol needs a string 'name' and a 'kind'");
    auto name = s["name"].get<std::string>();
    auto kind = s["kind"].get<std::string>();
    declared_names.push_back(name);
    if (kind == "metric") {
      if (!s.contains("index") || !s["index"].is_number_integer()) schema("metric symbol '" + name + "' needs an index");
      int i = s["index"].get<int>();
      if (i < 1 || i > kFrameDim) schema("metric index of '" + name + "' must be 1..5");
      if (seen[i - 1]) schema("metric index " + std::to_string(i) + " used twice");
      seen[i - 1] = true;
      metric[i - 1] = {name, SymbolKind::Metric, i};
    } else if (kind == "auxiliary") {
      if (s.contains("index")) schema("auxiliary symbol '" + name + "' must not carry an index");
      aux.push_back({name, SymbolKind::Auxiliary, 0});
    } else {
      schema("symbol kind must be 'metric' or 'auxiliary', got '" + kind + "'");
    }
  }
  for (int i = 0; i < kFrameDim; ++i)
    if (!seen[i]) schema("missing metric symbol with index " + std::to_string(i + 1));

  std::vector<Symbol> symbols = metric;
  symbols.insert(symbols.end(), aux.begin(), aux.end());
  if (static_cast<int>(symbols.size()) > kMaxSymbols) schema("too many symbols");
  Layout layout;
  for (int i = 0; i < static_cast<int>(symbols.size()); ++i) layout.internal[symbols[i].name] = i;
  for (int i = 0; i < static_cast<int>(declared_names.size()); ++i) {
    if (layout.declared.count(declared_names[i])) schema("duplicate symbol name '" + declared_names[i] + "'");
    layout.declared[declared_names[i]] = i;
  }

  std::vector<Form> table(symbols.size(), Form(2));
  for (const auto& [name, terms] : doc["d"].items()) {
    auto it = layout.internal.find(name);
    if (it == layout.internal.end()) schema("d-table entry for unknown symbol '" + name + "'");
    table[it->second] = parse_terms(terms, layout, 2, "d(" + name + ")");
  }
  for (const auto& s : symbols)
    if (!doc["d"].contains(s.name)) schema("d-table has no entry for '" + s.name + "'");

  std::array<int, kFrameDim> orientation{0, 1, 2, 3, 4};
  if (doc.contains("orientation")) {
    const Json& o = doc["orientation"];
    if (!o.is_array() || o.size() != kFrameDim) schema("'orientation' must list the five metric symbols");
    for (int k = 0; k < kFrameDim; ++k) {
      if (!o[k].is_string()) schema("orientation entries are symbol names");
      auto it = layout.internal.find(o[k].get<std::string>());
      if (it == layout.internal.end() || it->second >= kFrameDim)
        schema("orientation entry '" + o[k].get<std::string>() + "' is not a metric symbol");
      orientation[k] = it->second;
    }
  }

  std::optional<PhaseRules> phases;
  if (doc.contains("trig")) {
    const Json& t = doc["trig"];
    if (!t.is_object()) schema("'trig' must be an object with 'df' and 'dg'");
    PhaseRules rules;
    for (const auto& [key, value] : t.items()) {
      if (key == "df") rules.df = parse_terms(value, layout, 1, "trig.df");
      else if (key == "dg") rules.dg = parse_terms(value, layout, 1, "trig.dg");
      else schema("unknown trig field '" + key + "'");
    }
    phases = rules;
  }
  return CoframeData(std::move(symbols), std::move(table), orientation, std::move(phases));
}

CoframeData load_coframe(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Precondition, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_coframe(ss.str());
}

namespace {

Json terms_to_json(const Form& f, const CoframeData& c) {
  Json arr = Json::array();
  for (const auto& [m, s] : f.terms()) {
    Json wedge = Json::array();
    for (Monomial rest = m; rest; rest &= rest - 1) wedge.push_back(c.symbol(std::countr_zero(rest)).name);
    arr.push_back(Json{{"coeff", s.str()}, {"wedge", wedge}});
  }
  return arr;
}

}  // namespace

Json coframe_to_json(const CoframeData& c) {
  Json j;
  Json symbols = Json::array();
  for (const auto& s : c.symbols()) {
    Json o{{"name", s.name}, {"kind", s.kind == SymbolKind::Metric ? "metric" : "auxiliary"}};
    if (s.kind == SymbolKind::Metric) o["index"] = s.index;
    symbols.push_back(o);
  }
  j["symbols"] = symbols;
  Json d = Json::object();
  for (int i = 0; i < c.size(); ++i) d[c.symbol(i).name] = terms_to_json(c.d(i), c);
  j["d"] = d;
  Json orient = Json::array();
  for (int k : c.orientation()) orient.push_back(c.symbol(k).name);
  j["orientation"] = orient;
  if (c.phases()) j["trig"] = Json{{"df", terms_to_json(c.phases()->df, c)}, {"dg", terms_to_json(c.phases()->dg, c)}};
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace acm5::cli
