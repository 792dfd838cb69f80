// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include "legvar/catalog.hpp"
#include "legvar/classify.hpp"
#include "legvar/groebner.hpp"
#include "legvar/legendrian.hpp"
#include "legvar/liealg.hpp"

#include "support.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace legvar;
using namespace legvar::testkit;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

std::multiset<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

bool on_variety(const VarietyPresentation& v, const std::vector<Gaussian>& x) {
  for (const auto& g : v.generators)
    if (!is_zero(evaluate(g, x))) return false;
  return true;
}

// ---- 1: bracket tables ----

Outcome bracket_tables() {
  Outcome o;
  auto t0 = Clock::now();
  {
    auto e = twisted_cubic();
    const auto& g = e.presentation.generators;
    const auto& w = e.presentation.form;
    const Polynomial &fp = g[0], &fm = g[1], &h = g[2];
    o.require(poisson_bracket(fp, fm, w) == h, "twisted cubic [f+,f-] != h'");
    o.require(poisson_bracket(h, fp, w) == fp * Rational(2), "twisted cubic [h',f+] != 2f+");
    o.require(poisson_bracket(h, fm, w) == fm * Rational(-2), "twisted cubic [h',f-] != -2f-");
  }
  for (std::size_t n = 3; n <= 6; ++n) {
    auto e = segre_line_quadric(n);
    const auto& g = e.presentation.generators;
    const auto& w = e.presentation.form;
    auto F = [&](std::size_t i, std::size_t j) {
      return i < j ? g[segre_f_index(n, i, j)] : -g[segre_f_index(n, j, i)];
    };
    const std::size_t m = n * (n - 1) / 2;
    const Polynomial &gp = g[m], &gm = g[m + 1], &h = g[m + 2];
    std::array<std::size_t, 8> bad{};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i || k == j) continue;
          if (poisson_bracket(F(i, j), F(j, k), w) != F(i, k)) ++bad[0];
          for (std::size_t l = 0; l < n; ++l)
            if (l != i && l != j && l != k && !poisson_bracket(F(i, j), F(k, l), w).is_zero()) ++bad[1];
        }
        if (!poisson_bracket(F(i, j), gp, w).is_zero()) ++bad[2];
        if (!poisson_bracket(F(i, j), gm, w).is_zero()) ++bad[3];
        if (!poisson_bracket(F(i, j), h, w).is_zero()) ++bad[4];
      }
    if (poisson_bracket(gp, gm, w) != h) ++bad[5];
    if (poisson_bracket(h, gm, w) != gm * Rational(-2)) ++bad[6];
    if (poisson_bracket(h, gp, w) != gp * Rational(2)) ++bad[7];
    static const char* roman[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};
    for (std::size_t r = 0; r < 8; ++r) {
      if (!bad[r]) continue;
      std::string what = "segre n=" + std::to_string(n) + " (" + roman[r] + ") fails in " +
                         std::to_string(bad[r]) + " cases";
      // Report the sign the computation does produce for (i).
      if (r == 0 && poisson_bracket(F(0, 1), F(1, 2), w) == -F(0, 2)) what += "; computed value is -f_ik";
      o.require(false, what);
    }
  }
  double secs = since(t0);
  o.require(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  return o;
}

// ---- 2: algebra identification ----

Outcome algebra_identification() {
  Outcome o;
  struct Case {
    std::string name;
    std::size_t dim;
    std::vector<std::string> type;
  };
  std::vector<Case> cases{{"twisted-cubic", 3, {"A1"}},
                          {"segre-3", 6, {"A1", "A1"}},
                          {"segre-4", 9, {"A1", "A1", "A1"}},
                          {"segre-5", 13, {"A1", "B2"}},
                          {"segre-6", 18, {"A1", "A3"}},
                          {"grl36", 21, {"C3"}},
                          {"gr36", 35, {"A5"}},
                          {"spinor-s6", 66, {"D6"}},
                          {"e7", 133, {"E7"}}};
  for (const auto& c : cases) {
    auto t0 = Clock::now();
    auto e = catalog_entry(c.name);
    auto L = close_and_present(quadratic_part(e.presentation), e.presentation.form);
    auto cd = cartan_data(L);
    auto type = identify_type(cd);
    double secs = since(t0);
    o.require(L.dim() == c.dim, c.name + ": dim " + std::to_string(L.dim()));
    o.require(as_set(type) == as_set(c.type), c.name + ": type " + join(type, "+"));
    if (c.name == "e7") o.require(secs < 600.0, "e7 took " + std::to_string(secs) + " s");
  }
  return o;
}

// ---- 3: classification via the CLI ----

Outcome classification() {
  Outcome o;
  auto t0 = Clock::now();
  std::string cmd = std::string(LEGVAR_CLI_PATH) + " classify --max-rank 8 --max-dim 100";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    o.require(false, "cannot start cli");
    return o;
  }
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) out.append(buf.data(), n);
  int st = pclose(p);
  double secs = since(t0);
  o.require(st == 0, "cli exit status " + std::to_string(st));
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(out);
  } catch (const std::exception& e) {
    o.require(false, std::string("unparsable report: ") + e.what());
    return o;
  }
  std::map<std::string, long> simple{{"A1:3w1", 4}, {"C3:w3", 14}, {"A5:w3", 20}, {"D6:w6", 32}, {"E7:w7", 56}};
  // sl2 (x) so_m on C^2 (x) C^m for 3 <= m with total rank <= 8 and 2m <= 100; so_4 is not simple.
  std::map<std::string, long> pairs{{"A1:w1 x A1:2w1", 6}, {"A1:w1 x B2:w1", 10}, {"A1:w1 x A3:w2", 12}};
  for (int r = 3; r <= 7; ++r) pairs["A1:w1 x B" + std::to_string(r) + ":w1"] = 2 * (2 * r + 1);
  for (int r = 4; r <= 7; ++r) pairs["A1:w1 x D" + std::to_string(r) + ":w1"] = 2 * (2 * r);
  std::map<std::string, long> got_simple, got_pairs;
  for (const auto& row : j["result"]["accepted"]) {
    std::string label = row["label"];
    long dim = std::stol(row["dim_v"].get<std::string>());
    (label.find(" x ") == std::string::npos ? got_simple : got_pairs)[label] = dim;
  }
  auto show = [](const std::map<std::string, long>& m) {
    std::vector<std::string> v;
    for (const auto& [k, d] : m) v.push_back(k + "(" + std::to_string(d) + ")");
    return join(v);
  };
  o.require(got_simple == simple, "simple accepted: " + show(got_simple));
  o.require(got_pairs == pairs, "pairs accepted: " + show(got_pairs));
  std::size_t g2 = 0;
  for (const auto& list : {j["result"]["accepted"], j["result"]["rejected"]})
    for (const auto& row : list)
      if (row["label"].get<std::string>().find("G2") != std::string::npos) {
        ++g2;
        o.require(!row["accepted"].get<bool>(), "accepted " + row["label"].get<std::string>());
      }
  o.require(g2 > 0, "no G2 candidates enumerated");
  o.require(secs < 300.0, "runtime " + std::to_string(secs) + " s");
  return o;
}

// ---- 4: legendrian verdicts ----

Outcome verdicts() {
  Outcome o;
  for (const char* name : {"twisted-cubic", "four-lines", "segre-3", "segre-4", "grl36", "xf-y1^2y2", "ci-complex"}) {
    auto r = legendrian_verdict(catalog_entry(name).presentation);
    o.require(r.verdict == Verdict::legendrian, std::string(name) + ": " + to_string(r.verdict));
  }
  {
    auto r = legendrian_verdict(catalog_entry("xf2-y1^3").presentation);
    o.require(r.degenerate && r.linear_form.has_value(), "X_{y1^3} not flagged degenerate");
  }
  {
    auto v = twisted_cubic().presentation;
    v.generators[0] = parse_poly("x2^2 - 2*x1*x3", 4);
    auto r = legendrian_verdict(v);
    bool pair = !r.witnesses.empty() && r.witnesses[0].kind == "bracket" && r.witnesses[0].i != r.witnesses[0].j;
    o.require(r.verdict == Verdict::not_legendrian && pair, "perturbed cubic: " + std::string(to_string(r.verdict)));
  }
  return o;
}

// ---- 5: property suites ----

Outcome properties() {
  Outcome o;
  Gen g(501);
  std::size_t fails[5] = {};
  for (int c = 0; c < kCases; ++c) {
    std::size_t n = 1 + c % 3;
    auto w = g.form(n);
    Polynomial a = g.poly(2 * n, 3, 3), b = g.poly(2 * n, 3, 3), d = g.poly(2 * n, 3, 3);
    if (poisson_bracket(a, b, w) != -poisson_bracket(b, a, w)) ++fails[0];
    if (poisson_bracket(a, b * d, w) != poisson_bracket(a, b, w) * d + b * poisson_bracket(a, d, w)) ++fails[1];
    Polynomial jac = poisson_bracket(a, poisson_bracket(b, d, w), w) + poisson_bracket(b, poisson_bracket(d, a, w), w) +
                     poisson_bracket(d, poisson_bracket(a, b, w), w);
    if (!jac.is_zero()) ++fails[2];
    QuadraticForm qa = g.symmetric(2 * n), qb = g.symmetric(2 * n);
    QMatrix ra = quadric_to_sp(qa, w), rb = quadric_to_sp(qb, w);
    QMatrix lhs = quadric_to_sp(quadric_bracket_matrix(qa, qb, w), w);
    if (!sp_membership(ra, w) || !(lhs - (ra * rb - rb * ra)).is_zero()) ++fails[3];
    unsigned k = static_cast<unsigned>(c % 5);
    Polynomial p = g.homogeneous(1 + c % 5, k);
    if (euler_weighted_sum(p) != p * Rational(static_cast<long>(k))) ++fails[4];
  }
  const char* names[] = {"antisymmetry", "leibniz", "jacobi", "rho", "euler"};
  for (int s = 0; s < 5; ++s) o.require(fails[s] == 0, std::string(names[s]) + " failed " + std::to_string(fails[s]));
  std::mt19937_64 rng(502);
  auto types = simple_types(4);
  std::uniform_int_distribution<std::size_t> pick(0, types.size() - 1);
  std::uniform_int_distribution<int> label(0, 2);
  for (int c = 0; c < 20; ++c) {
    auto t = types[pick(rng)];
    auto rs = build_root_system(t);
    std::vector<int> wt(t.rank);
    do {
      for (auto& x : wt) x = label(rng);
    } while (weyl_dimension(rs, wt) > 20000);
    Integer total = 0;
    for (const auto& [mu, m] : weight_multiplicities(rs, wt, 20000)) total += m;
    o.require(total == weyl_dimension(rs, wt), "freudenthal total on " + t.label());
  }
  return o;
}

// ---- 6: oracle equivalence ----

Outcome oracles() {
  Outcome o;
  Gen g(601);
  for (int c = 0; c < 50; ++c) {
    std::size_t n = 1 + c % 4;
    auto w = g.form(n);
    QuadraticForm a = g.symmetric(2 * n), b = g.symmetric(2 * n);
    o.require(quadric_polynomial(quadric_bracket_matrix(a, b, w)) ==
                  poisson_bracket(quadric_polynomial(a), quadric_polynomial(b), w),
              "matrix bracket case " + std::to_string(c));
  }
  std::mt19937_64 rng(602);
  for (int c = 0; c < 20; ++c) {
    std::size_t n = 3 + static_cast<std::size_t>(c) % 8;
    std::uniform_int_distribution<std::size_t> var(0, n - 1);
    std::uniform_int_distribution<int> len(1, 3), count(1, 6), ex(1, 2);
    std::vector<Polynomial> gens;
    std::vector<std::uint32_t> supports;
    for (int k = count(rng); k > 0; --k) {
      std::vector<uint16_t> e(n, 0);
      std::uint32_t s = 0;
      for (int l = len(rng); l > 0; --l) {
        auto v = var(rng);
        e[v] = static_cast<uint16_t>(ex(rng));
        s |= 1u << v;
      }
      gens.push_back(Polynomial::term(Monomial(e), Rational(1)));
      supports.push_back(s);
    }
    o.require(krull_dimension(buchberger(gens, n)) == brute_force_dimension(supports, n),
              "krull case " + std::to_string(c));
  }
  return o;
}

// ---- 7: orbit consistency ----

Outcome orbits() {
  Outcome o;
  for (const char* name : {"twisted-cubic", "segre-3", "gr36"}) {
    auto e = catalog_entry(name);
    auto L = close_and_present(quadratic_part(e.presentation), e.presentation.form);
    auto cd = cartan_data(L);
    auto pts = orbit_points(L, cd, e.base_point, 10, 7);
    std::size_t off = 0, moved = 0;
    for (const auto& p : pts) {
      if (!on_variety(e.presentation, p)) ++off;
      if (p != e.base_point) ++moved;
    }
    o.require(pts.size() == 10 && off == 0, std::string(name) + ": " + std::to_string(off) + " points off the variety");
    o.require(moved > 0, std::string(name) + ": orbit points never leave the base point");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"bracket tables", bracket_tables},   {"algebra identification", algebra_identification},
      {"classification", classification},   {"legendrian verdicts", verdicts},
      {"property suites", properties},      {"oracle equivalence", oracles},
      {"orbit consistency", orbits}};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::ostringstream line;
    line << "criterion " << k + 1 << " (" << criteria[k].first << "): " << (o.pass ? "PASS" : "FAIL");
    line.precision(3);
    line << std::fixed << " [" << since(t0) << " s]";
    if (!o.pass) line << " -- " << join(o.notes, "; ");
    std::cout << line.str() << std::endl;
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
