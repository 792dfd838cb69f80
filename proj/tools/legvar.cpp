// legvar: command-line front end. Every command emits a report
// {command, inputs, result, timings, status}; --text prints a flat rendering.
// Exit codes: 0 ok, 2 negative verdict, 3 undecided, 1 usage or parse error.
#include "legvar/catalog.hpp"
#include "legvar/classify.hpp"
#include "legvar/io.hpp"
#include "legvar/legendrian.hpp"
#include "legvar/liealg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace legvar;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kNegative = 2, kUndecided = 3 };

struct Globals {
  std::uint64_t seed = 1;
  std::size_t budget = GroebnerOptions{}.pair_budget;
  bool text = false;
  std::string form;
};

class Timer {
 public:
  void phase(const std::string& name) {
    stop();
    name_ = name;
    start_ = std::chrono::steady_clock::now();
  }
  void stop() {
    if (name_.empty()) return;
    out_[name_] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    name_.clear();
  }
  json result() {
    stop();
    return out_;
  }

 private:
  json out_ = json::object();
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

struct Report {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  Timer timer;
  std::string status = "ok";
  std::string budget;  // set when undecided
  int code = kOk;

  void undecided(const std::string& which) {
    status = "undecided";
    budget = which;
    code = kUndecided;
  }
};

void render_text(std::ostream& os, const json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      render_text(os, it.value(), prefix.empty() ? it.key() : prefix + "." + it.key());
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t k = 0; k < j.size(); ++k) render_text(os, j[k], prefix + "[" + std::to_string(k) + "]");
  } else if (j.is_array()) {
    os << prefix << ":";
    for (const auto& x : j) os << " " << (x.is_string() ? x.get<std::string>() : x.dump());
    os << "\n";
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(Report& r, const Globals& g) {
  json out{{"command", r.command}, {"inputs", r.inputs}, {"result", r.result}, {"timings", r.timer.result()},
           {"status", r.status}};
  out["inputs"]["seed"] = g.seed;
  if (!r.budget.empty()) out["budget"] = r.budget;
  if (g.text) render_text(std::cout, out, "");
  else std::cout << out.dump(2) << "\n";
}

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

// Input file plus optional --form override ("standard", a JSON matrix, or a file holding one).
struct Loaded {
  ParsedInput parsed;
  VarietyPresentation v;
};

Loaded load(const std::string& path, const Globals& g) {
  Loaded l;
  std::filesystem::path base = path == "-" ? std::filesystem::current_path()
                                           : std::filesystem::path(path).parent_path();
  l.parsed = parse_input(slurp(path), base);
  if (!g.form.empty()) {
    if (g.form == "standard") {
      l.parsed.form.reset();
    } else {
      std::string text = g.form;
      if (!text.empty() && text.front() != '[') text = slurp(text);
      l.parsed.form = form_from_json(json::parse(text));
    }
    l.parsed.form_source = g.form;
  }
  l.v = to_presentation(l.parsed, path == "-" ? "stdin" : path);
  return l;
}

json witness_json(const Witness& w) {
  return {{"kind", w.kind}, {"i", w.i}, {"j", w.j}, {"detail", w.detail}};
}

int cmd_check(Report& r, const Globals& g, const std::string& file) {
  r.inputs["file"] = file;
  r.timer.phase("parse");
  auto l = load(file, g);
  r.inputs["nvars"] = l.v.nvars;
  r.inputs["generators"] = l.v.generators.size();
  r.inputs["form"] = l.parsed.form_source;
  r.timer.phase("verdict");
  auto lv = legendrian_verdict(l.v, GroebnerOptions{g.budget});
  r.timer.stop();
  r.result["bracket_closed"] = lv.bracket_closed ? json(*lv.bracket_closed) : json(nullptr);
  r.result["dimension"] = lv.cone_dimension ? json(*lv.cone_dimension) : json(nullptr);
  r.result["expected_dimension"] = l.v.n();
  r.result["degenerate"] = lv.degenerate;
  if (lv.linear_form) r.result["linear_form"] = to_string(*lv.linear_form, l.parsed.names);
  r.result["verdict"] = to_string(lv.verdict);
  r.result["equidimensionality_checked"] = lv.equidimensionality_checked;
  r.result["pairs_processed"] = lv.pairs_processed;
  json ws = json::array();
  for (const auto& w : lv.witnesses) ws.push_back(witness_json(w));
  r.result["witnesses"] = ws;
  if (lv.verdict == Verdict::undecided) r.undecided("groebner_pairs");
  else if (lv.verdict == Verdict::not_legendrian) r.code = kNegative;
  return r.code;
}

int cmd_bracket(Report& r, const Globals& g, const std::string& file, const std::string& fs,
                const std::string& gs) {
  r.inputs["file"] = file;
  r.inputs["f"] = fs;
  r.inputs["g"] = gs;
  r.timer.phase("parse");
  auto l = load(file, g);
  Polynomial f = parse_poly(fs, l.v.nvars, l.parsed.names), h = parse_poly(gs, l.v.nvars, l.parsed.names);
  r.timer.phase("bracket");
  Polynomial b = poisson_bracket(f, h, l.v.form);
  r.timer.stop();
  r.result["bracket"] = to_string(b, l.parsed.names);
  return kOk;
}

int cmd_gb(Report& r, const Globals& g, const std::string& file) {
  r.inputs["file"] = file;
  r.timer.phase("parse");
  auto l = load(file, g);
  r.timer.phase("groebner");
  auto gb = buchberger(l.v.generators, l.v.nvars, GroebnerOptions{g.budget});
  r.timer.stop();
  json els = json::array();
  for (const auto& p : gb.elements) els.push_back(to_string(p, l.parsed.names));
  r.result["order"] = gb.order;
  r.result["basis"] = els;
  r.result["complete"] = gb.complete;
  r.result["pairs_processed"] = gb.pairs_processed;
  if (!gb.complete) r.undecided("groebner_pairs");
  return r.code;
}

int cmd_nf(Report& r, const Globals& g, const std::string& file, const std::string& ps) {
  r.inputs["file"] = file;
  r.inputs["poly"] = ps;
  r.timer.phase("parse");
  auto l = load(file, g);
  Polynomial p = parse_poly(ps, l.v.nvars, l.parsed.names);
  r.timer.phase("groebner");
  auto gb = buchberger(l.v.generators, l.v.nvars, GroebnerOptions{g.budget});
  r.timer.phase("reduce");
  Polynomial nf = normal_form(p, gb);
  r.timer.stop();
  r.result["normal_form"] = to_string(nf, l.parsed.names);
  r.result["complete"] = gb.complete;
  if (gb.complete) r.result["member"] = nf.is_zero();
  else r.undecided("groebner_pairs");
  return r.code;
}

int cmd_algebra(Report& r, const Globals& g, const std::string& file) {
  r.inputs["file"] = file;
  r.timer.phase("parse");
  auto l = load(file, g);
  r.timer.phase("closure");
  LieAlgebraPresentation L;
  try {
    L = close_and_present(quadratic_part(l.v), l.v.form);
  } catch (const NotClosed& e) {
    r.result["closed"] = false;
    r.result["witness"] = {{"i", e.i}, {"j", e.j}};
    r.code = kNegative;
    return r.code;
  }
  r.result["closed"] = true;
  r.result["dim"] = L.dim();
  r.timer.phase("killing");
  QMatrix k = killing_form(L);
  bool ss = is_semisimple(k);
  r.result["semisimple"] = ss;
  if (!ss) return kOk;
  r.timer.phase("cartan");
  try {
    auto cd = cartan_data(L, g.seed);
    r.timer.phase("identify");
    auto tr = identify(cd);
    r.timer.stop();
    r.result["cartan_rank"] = cd.rank();
    r.result["root_count"] = cd.roots.size();
    r.result["positive_roots"] = tr.positive_roots;
    r.result["split"] = cd.split;
    r.result["cartan_method"] = cd.method;
    r.result["type"] = tr.labels;
    std::string joined;
    for (const auto& s : tr.labels) joined += (joined.empty() ? "" : "+") + s;
    r.result["label"] = joined;
  } catch (const NotAdapted& e) {
    r.result["detail"] = e.what();
    r.undecided("cartan_search");
  }
  return r.code;
}

int cmd_classify(Report& r, const Globals&, int max_rank, long max_dim, std::size_t cap, bool pairs) {
  r.inputs["max_rank"] = max_rank;
  r.inputs["max_dim"] = max_dim;
  r.inputs["cap"] = cap;
  r.inputs["pairs"] = pairs;
  ClassifyOptions opt{max_rank, max_dim, cap};
  r.timer.phase("simple");
  auto rows = enumerate_simple(opt);
  if (pairs) {
    r.timer.phase("pairs");
    auto more = enumerate_semisimple_pairs(opt);
    rows.insert(rows.end(), more.begin(), more.end());
  }
  r.timer.stop();
  json acc = json::array(), rej = json::array();
  for (const auto& c : rows) {
    json row{{"label", c.label()}, {"dim_v", c.dim_v.get_str()}, {"dim_cone", c.dim_cone},
             {"self_dual", c.self_dual}, {"accepted", c.accepted}};
    row["multiplicity_free"] = c.multiplicity_free ? json(*c.multiplicity_free) : json(nullptr);
    row["angle_ok"] = c.angle_ok ? json(*c.angle_ok) : json(nullptr);
    row["reasons"] = c.reasons;
    (c.accepted ? acc : rej).push_back(row);
  }
  r.result["accepted"] = acc;
  r.result["rejected_count"] = rej.size();
  r.result["rejected"] = rej;
  return kOk;
}

// Catalog entries print in the input format so they can be piped into the other commands.
int cmd_catalog(Report& r, const Globals& g, const std::string& name) {
  if (name.empty()) {
    r.result["entries"] = catalog_names();
    if (g.text) {
      for (const auto& n : catalog_names()) std::cout << n << "\n";
      return -1;
    }
    return kOk;
  }
  auto e = catalog_entry(name);
  std::cout << dump_input(e.presentation, e.names);
  return -1;
}

// "p" or "(p)/(q)" in the variable t.
RationalFunction parse_rf(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (c == '/' && depth == 0) {
      std::size_t k = s.find_first_not_of(' ', i + 1);
      if (k != std::string::npos && s[k] == '(')
        return {parse_poly(s.substr(0, i), 1, {"t"}), parse_poly(s.substr(i + 1), 1, {"t"})};
    }
  }
  return RationalFunction(parse_poly(s, 1, {"t"}));
}

int cmd_curve(Report& r, const Globals& g, const std::string& a, const std::string& b, const std::string& c) {
  r.inputs["f1"] = a;
  r.inputs["f2"] = b;
  r.inputs["f3"] = c;
  r.timer.phase("parse");
  auto f1 = parse_rf(a), f2 = parse_rf(b), f3 = parse_rf(c);
  r.timer.phase("ode");
  bool ode = rational_curve_check(f1, f2, f3);
  r.timer.phase("points");
  auto v = curve_presentation(f1, f2, f3);
  json pts = json::array();
  for (const auto& p : sample_points(1, 5, g.seed)) {
    PointStatus s;
    try {
      s = tangent_point_status(v, p);
    } catch (const std::domain_error&) {
      continue;  // pole of the parametrization
    }
    pts.push_back({{"t", p[0].get_str()}, {"status", to_string(s)}});
  }
  r.timer.stop();
  r.result["ode_holds"] = ode;
  r.result["verdict"] = ode ? "legendrian" : "not-legendrian";
  r.result["sample_points"] = pts;
  if (!ode) r.code = kNegative;
  return r.code;
}

int cmd_xf(Report& r, const Globals& g, const std::string& poly, std::size_t m) {
  r.inputs["f"] = poly;
  if (m) r.inputs["vars"] = m;
  r.timer.phase("build");
  std::string name = (m ? "xf" + std::to_string(m) : std::string("xf")) + "-" + poly;
  auto e = catalog_entry(name);
  const auto& v = e.presentation;
  r.timer.phase("tangent");
  json pts = json::array();
  bool all = true;
  for (const auto& p : sample_points(v.nparams(), 5, g.seed)) {
    auto s = tangent_point_status(v, p);
    if (s != PointStatus::rank_deficient) all = all && s == PointStatus::lagrangian;
    json pj = json::array();
    for (const auto& x : p) pj.push_back(x.get_str());
    pts.push_back({{"y", pj}, {"status", to_string(s)}});
  }
  r.timer.phase("verdict");
  auto lv = legendrian_verdict(v, GroebnerOptions{g.budget});
  r.timer.stop();
  json eqs = json::array();
  for (const auto& q : v.generators) eqs.push_back(to_string(q, e.names));
  r.result["name"] = name;
  r.result["nvars"] = v.nvars;
  r.result["equations"] = eqs;
  r.result["tangent_points"] = pts;
  r.result["tangent_isotropic"] = all;
  r.result["degenerate"] = lv.degenerate;
  if (lv.linear_form) r.result["linear_form"] = to_string(*lv.linear_form, e.names);
  r.result["verdict"] = to_string(lv.verdict);
  if (!all || lv.verdict == Verdict::not_legendrian) r.code = kNegative;
  else if (lv.verdict == Verdict::undecided) r.undecided("groebner_pairs");
  return r.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Legendrian varieties: verdicts, Groebner bases, subadjoint algebras, classification"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "seed for randomized steps (echoed in the report)");
  app.add_option("--budget", g.budget, "Groebner pair budget");
  auto* json_flag = app.add_flag("--json", "JSON report (default)");
  auto* text_flag = app.add_flag("--text", g.text, "flat text report");
  json_flag->excludes(text_flag);
  app.add_option("--form", g.form, "override the form: standard, an inline JSON matrix, or a JSON file");

  std::string file, f, h, poly, name, c1, c2, c3;
  int max_rank = 8;
  long max_dim = 100;
  std::size_t cap = ClassifyOptions{}.cap, xf_vars = 0;
  bool pairs = true;

  auto* check = app.add_subcommand("check", "legendrian verdict for an input file ('-' reads stdin)");
  check->add_option("file", file)->required();
  auto* bracket = app.add_subcommand("bracket", "Poisson bracket of two polynomials");
  bracket->add_option("file", file)->required();
  bracket->add_option("f", f)->required();
  bracket->add_option("g", h)->required();
  auto* gb = app.add_subcommand("gb", "reduced grevlex Groebner basis");
  gb->add_option("file", file)->required();
  auto* nf = app.add_subcommand("nf", "normal form modulo the ideal");
  nf->add_option("file", file)->required();
  nf->add_option("poly", poly)->required();
  auto* algebra = app.add_subcommand("algebra", "subadjoint Lie algebra of the quadrics");
  algebra->add_option("file", file)->required();
  auto* classify = app.add_subcommand("classify", "enumerate subadjoint candidates");
  classify->add_option("--max-rank", max_rank)->check(CLI::Range(1, 8));
  classify->add_option("--max-dim", max_dim)->check(CLI::PositiveNumber);
  classify->add_option("--cap", cap, "weight-multiplicity work cap");
  classify->add_flag("!--no-pairs", pairs, "skip the two-factor family");
  auto* catalog = app.add_subcommand("catalog", "list entries, or print one in input format");
  catalog->add_option("name", name);
  auto* curve = app.add_subcommand("curve", "rational curve (1 : f1 : f2 : f3) in t; '(p)/(q)' for quotients");
  curve->add_option("f1", c1)->required();
  curve->add_option("f2", c2)->required();
  curve->add_option("f3", c3)->required();
  auto* xf = app.add_subcommand("xf", "the variety X_f for f homogeneous in y1, y2, ...");
  xf->add_option("poly", poly)->required();
  xf->add_option("--vars", xf_vars, "number of y variables (default: highest index used)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Report r;
  r.command = app.get_subcommands().front()->get_name();
  int code = kOk;
  try {
    if (*check) code = cmd_check(r, g, file);
    else if (*bracket) code = cmd_bracket(r, g, file, f, h);
    else if (*gb) code = cmd_gb(r, g, file);
    else if (*nf) code = cmd_nf(r, g, file, poly);
    else if (*algebra) code = cmd_algebra(r, g, file);
    else if (*classify) code = cmd_classify(r, g, max_rank, max_dim, cap, pairs);
    else if (*catalog) code = cmd_catalog(r, g, name);
    else if (*curve) code = cmd_curve(r, g, c1, c2, c3);
    else if (*xf) code = cmd_xf(r, g, poly, xf_vars);
  } catch (const BudgetExceeded& e) {
    r.result["detail"] = e.what();
    r.undecided("groebner_pairs");
    code = r.code;
  } catch (const CapExceeded& e) {
    r.result["detail"] = e.what();
    r.undecided("multiplicity_cap");
    code = r.code;
  } catch (const InputError& e) {
    std::cerr << "legvar: " << e.what() << "\n";
    r.status = "error";
    r.result = {{"error", e.what()}, {"line", e.line}, {"column", e.column}};
    emit(r, g);
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "legvar: " << e.what() << "\n";
    r.status = "error";
    r.result = {{"error", e.what()}};
    emit(r, g);
    return kUsage;
  }
  if (code < 0) return kOk;  // raw output already written
  emit(r, g);
  return code;
}
