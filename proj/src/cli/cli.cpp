#include "webcalc/cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <map>
#include <ostream>
#include <regex>
#include <sstream>

#include "webcalc/errors.hpp"
#include "webcalc/mfcore/ext.hpp"
#include "webcalc/mfcore/factorizations.hpp"
#include "webcalc/relations/relations.hpp"
#include "webcalc/repfun/functor.hpp"

namespace webcalc::cli {

namespace {

using json = nlohmann::ordered_json;
using qpoly::LaurentPoly;
using webs::GlWeight;
using webs::Ladder;

struct Params {
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) != 0; }
  const std::string& get(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) throw std::invalid_argument("missing parameter " + key);
    return it->second;
  }
  int integer(const std::string& key) const {
    const std::string& v = get(key);
    try {
      size_t used = 0;
      int x = std::stoi(v, &used);
      if (used == v.size()) return x;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("parameter " + key + " is not an integer: " + v);
  }
  void allow(std::initializer_list<const char*> keys) const {
    for (const auto& [k, v] : values) {
      bool ok = false;
      for (const char* a : keys) ok = ok || k == a;
      if (!ok) throw std::invalid_argument("unknown parameter " + k);
    }
  }
};

Params parse_params(const std::vector<std::string>& items) {
  Params p;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("expected key=value, got " + item);
    p.values[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return p;
}

std::vector<int> parse_int_list(const std::string& text) {
  static const std::regex whole(R"(\s*\[\s*(-?\d+(\s*,\s*-?\d+)*)?\s*\]\s*)");
  if (!std::regex_match(text, whole)) throw std::invalid_argument("expected a list like [2,0], got " + text);
  std::vector<int> out;
  static const std::regex num(R"(-?\d+)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), num); it != std::sregex_iterator(); ++it) out.push_back(std::stoi(it->str()));
  return out;
}

// A ladder given either as ladder text or as seq + base + N.
Ladder ladder_param(const Params& p, const std::string& key) {
  if (p.has(key)) return Ladder::parse(p.get(key));
  const std::string seq_key = key == "ladder" ? "seq" : key + "-seq";
  auto seq = webs::parse_sequence(p.get(seq_key));
  auto l = webs::ladder_from_sequence(seq, GlWeight(p.integer("N"), parse_int_list(p.get("base"))));
  if (!l) throw ZeroWeight("the sequence " + p.get(seq_key) + " gives the zero web");
  return *l;
}

json poly_json(const LaurentPoly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({e, c});
  return {{"text", f.to_string()}, {"terms", terms}};
}

json mf_json(const mf::KoszulMF& m) {
  json vars = json::array();
  for (const auto& v : m.ring->vars()) vars.push_back({{"name", v.name}, {"degree", v.degree}, {"alphabet", v.alphabet}, {"index", v.index}});
  json boundary = json::array();
  for (const auto& b : m.boundary) boundary.push_back({{"name", b.name}, {"size", b.size}, {"role", b.role == mf::Role::Top ? "top" : "bottom"}});
  json rows = json::array();
  for (const auto& r : m.rows) rows.push_back({{"p", r.p.to_string()}, {"q", r.q.to_string()}, {"dp", r.dp}, {"dq", r.dq}});
  return {{"ring", vars}, {"boundary", boundary}, {"rows", rows}, {"qshift", m.qshift}, {"hshift", m.hshift}, {"contractible", m.zero}};
}

int cmd_eval(const Params& p, bool as_json, std::ostream& out) {
  p.allow({"ladder", "seq", "base", "N"});
  Ladder u = ladder_param(p, "ladder");
  LaurentPoly v = repfun::ev_closed(u);
  if (as_json)
    out << json{{"ladder", u.to_string()}, {"value", poly_json(v)}}.dump(2) << "\n";
  else
    out << v.to_string() << "\n";
  return Ok;
}

int cmd_form(const Params& p, bool as_json, std::ostream& out) {
  p.allow({"u", "v", "u-seq", "v-seq", "base", "N"});
  Ladder u = ladder_param(p, "u");
  Ladder v = ladder_param(p, "v");
  LaurentPoly f = repfun::web_form(u, v);
  if (as_json)
    out << json{{"u", u.to_string()}, {"v", v.to_string()}, {"form", poly_json(f)}}.dump(2) << "\n";
  else
    out << f.to_string() << "\n";
  return Ok;
}

int cmd_gram(const Params& p, bool as_json, std::ostream& out) {
  p.allow({"N", "m", "l", "weight", "seqs"});
  const int N = p.integer("N");
  GlWeight base = webs::highest_weight(N, p.integer("m"), p.integer("l"));
  std::optional<GlWeight> weight;
  if (p.has("weight")) weight = GlWeight(N, parse_int_list(p.get("weight")));
  std::vector<Ladder> ladders;
  std::stringstream ss(p.get("seqs"));
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto l = webs::ladder_from_sequence(webs::parse_sequence(item), base);
    if (!l || (weight && l->top() != *weight)) continue;
    if (!weight) weight = l->top();
    if (l->top() != *weight) throw WeightMismatch("sequence " + item + " ends at " + l->top().to_string() + ", not " + weight->to_string());
    ladders.push_back(*l);
  }
  auto g = repfun::gram_matrix(ladders);
  if (as_json) {
    json ls = json::array(), rows = json::array();
    for (const auto& l : ladders) ls.push_back(l.to_string());
    for (const auto& row : g) {
      json r = json::array();
      for (const auto& x : row) r.push_back(x.to_string());
      rows.push_back(r);
    }
    out << json{{"weight", weight ? weight->to_string() : ""}, {"ladders", ls}, {"gram", rows}}.dump(2) << "\n";
    return Ok;
  }
  out << "# weight " << (weight ? weight->to_string() : "none") << "\n";
  for (size_t i = 0; i < ladders.size(); ++i) out << "# " << i << " " << ladders[i].to_string() << "\n";
  for (const auto& row : g) {
    for (size_t j = 0; j < row.size(); ++j) out << (j ? "\t" : "") << row[j].to_string();
    out << "\n";
  }
  return Ok;
}

int cmd_verify(const Params& p, bool as_json, std::ostream& out) {
  p.allow({"N", "rules"});
  const int N = p.integer("N");
  std::vector<relations::Rule> rules;
  if (p.has("rules")) {
    std::stringstream ss(p.get("rules"));
    std::string r;
    while (std::getline(ss, r, ',')) rules.push_back(relations::rule_from_name(r));
  } else {
    rules = relations::all_rules();
  }
  auto results = relations::sweep(N, rules);
  size_t passed = 0;
  json lines = json::array();
  for (const auto& r : results) {
    passed += r.pass;
    if (as_json)
      lines.push_back({{"rule", relations::rule_name(r.instance.rule)}, {"labels", r.instance.labels()}, {"N", r.N}, {"pass", r.pass}});
    else
      out << r.line() << "\n";
  }
  if (as_json)
    out << json{{"instances", lines}, {"passed", passed}, {"total", results.size()}}.dump(2) << "\n";
  else
    out << "summary " << passed << "/" << results.size() << " PASS\n";
  return passed == results.size() ? Ok : FailLines;
}

int cmd_ladder(const Params& p, bool as_json, std::ostream& out) {
  p.allow({"seq", "base", "N"});
  GlWeight base(p.integer("N"), parse_int_list(p.get("base")));
  auto seq = webs::parse_sequence(p.get("seq"));
  auto l = webs::ladder_from_sequence(seq, base);
  if (as_json) {
    json j{{"sequence", webs::sequence_to_string(seq)}, {"base", base.to_string()}};
    if (l) {
      j["ladder"] = l->to_string();
      j["top"] = l->top().to_string();
    } else {
      j["ladder"] = nullptr;
    }
    out << j.dump(2) << "\n";
  } else {
    out << (l ? l->to_string() : "ZERO") << "\n";
  }
  return Ok;
}

int cmd_compile(const Params& p, bool as_json, std::ostream& out) {
  p.allow({"ladder", "seq", "base", "N"});
  auto m = mf::compile_web(ladder_param(p, "ladder"));
  if (as_json)
    out << mf_json(m).dump(2) << "\n";
  else
    out << mf::dump(m);
  return Ok;
}

int cmd_ext(const Params& p, bool as_json, std::ostream& out) {
  p.allow({"u", "v", "u-seq", "v-seq", "base", "N", "edge"});
  mf::KoszulMF a(qpoly::make_ring({})), b(qpoly::make_ring({}));
  if (p.has("edge")) {
    a = mf::mf_edge(p.integer("edge"), p.integer("N"), "top", "bot");
    b = mf::mf_edge(p.integer("edge"), p.integer("N"), "top", "bot");
  } else {
    Ladder u = ladder_param(p, "u");
    Ladder v = p.has("v") || p.has("v-seq") ? ladder_param(p, "v") : u;
    if (u.base() != v.base() || u.top() != v.top()) throw WeightMismatch("u and v have different boundaries");
    a = mf::compile_web(u);
    b = mf::compile_web(v);
  }
  auto [h0, h1] = mf::ext_qdim(a, b);
  if (as_json)
    out << json{{"dim0", poly_json(h0)}, {"dim1", poly_json(h1)}, {"total", poly_json(h0 + h1)}}.dump(2) << "\n";
  else
    out << "dim0 " << h0.to_string() << "\n"
        << "dim1 " << h1.to_string() << "\n";
  return Ok;
}

int cmd_enumerate(const Params& p, bool as_json, std::ostream& out) {
  p.allow({"m", "d", "N"});
  auto ws = webs::enumerate_weights(p.integer("m"), p.integer("d"), p.integer("N"));
  if (as_json) {
    json arr = json::array();
    for (const auto& w : ws) arr.push_back(w.k());
    out << json{{"weights", arr}}.dump(2) << "\n";
  } else {
    for (const auto& w : ws) out << w.to_string() << "\n";
  }
  return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"web and matrix factorization calculator", "webcalc"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "structured output");
  struct Entry {
    const char* name;
    const char* help;
    int (*fn)(const Params&, bool, std::ostream&);
  };
  const Entry entries[] = {
      {"eval", "evaluate a closed ladder", cmd_eval},
      {"form", "web form of two ladders", cmd_form},
      {"gram", "Gram matrix over sequences separated by ;", cmd_gram},
      {"verify-relations", "sweep the relations at a given N", cmd_verify},
      {"ladder", "ladder of a signed sequence", cmd_ladder},
      {"compile-mf", "dump the matrix factorization of a ladder", cmd_compile},
      {"ext-dim", "graded dimensions of EXT", cmd_ext},
      {"enumerate", "list the N-bounded weights", cmd_enumerate},
  };
  std::map<std::string, std::vector<std::string>> items;
  std::map<CLI::App*, const Entry*> dispatch;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("params", items[e.name], "key=value parameters");
    sub->add_flag("--json", as_json, "structured output");
    dispatch[sub] = &e;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return ValidationError;
  }
  for (const auto& [sub, entry] : dispatch) {
    if (!sub->parsed()) continue;
    try {
      return entry->fn(parse_params(items[entry->name]), as_json, out);
    } catch (const IrreducibleToFinite& e) {
      err << "irreducible: " << e.what() << "\n";
      return Irreducible;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return ValidationError;
    }
  }
  return ValidationError;
}

}  // namespace webcalc::cli
