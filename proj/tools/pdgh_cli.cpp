// pdgh: partial-dual genus polynomials and their bigraded cohomology.

#include "CLI11.hpp"
#include "json.hpp"

#include "pdgh/homology/frobenius.hpp"
#include "pdgh/homology/homology.hpp"
#include "pdgh/polynomial/polynomial.hpp"
#include "pdgh/ribbon/constructions.hpp"
#include "pdgh/ribbon/flags.hpp"
#include "pdgh/ribbon/io.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace pdgh;
using nlohmann::json;

namespace {

// Coefficients fit in 64 bits for anything under the caps; fall back to a
// string if they do not.
json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

json poly_json(const BiLaurent& p) {
  // same order as BiLaurent::to_string
  std::vector<std::pair<BiLaurent::Exponents, Integer>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    const int dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
    return dx != dy ? dx > dy : x.first > y.first;
  });
  json rows = json::array();
  for (const auto& [e, c] : terms) rows.push_back({integer_json(c), {e.first, e.second}});
  return {{"variables", {p.names().first, p.names().second}}, {"polynomial", rows}};
}

json groups_json(const BigradedGroups& h) {
  json groups = json::array();
  for (const auto& [d, g] : h) {
    json torsion = json::array();
    for (const auto& t : g.torsion) {
      const auto& n = t.hnf();
      torsion.push_back({{"size", integer_json(t.quotient_size())},
                         {"hnf", {{integer_json(n[0][0]), integer_json(n[0][1])}, {integer_json(n[1][0]), integer_json(n[1][1])}}}});
    }
    groups.push_back({{"i", d.i}, {"j", d.j}, {"k", d.k}, {"free", g.free_rank}, {"torsion", torsion}});
  }
  return {{"groups", groups}};
}

std::string group_row(const Tridegree& d, const HomologyGroup& g) {
  std::ostringstream os;
  os << "(" << d.i << ", " << d.j << ", " << d.k << ") free=" << g.free_rank << " torsion=[";
  for (std::size_t t = 0; t < g.torsion.size(); ++t) os << (t ? ", " : "") << g.torsion[t].name();
  os << "]";
  return os.str();
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

struct Placement {
  std::string vertex;
  std::size_t gap = 0;
};

Attachment resolve(const RibbonGraph& g, const Placement& p) {
  return {p.vertex.empty() ? 0 : g.vertex_index(p.vertex), p.gap};
}

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<Check> run_verify(const RibbonGraph& g, const HomologyOptions& opts) {
  std::vector<Check> checks;
  const FrobeniusReport fr = verify_frobenius_relations();
  std::string failed;
  for (const auto& c : fr.checks)
    if (!c.passed) failed += c.name + " at " + c.witness + "; ";
  checks.push_back({"frobenius relations", fr.ok(), failed});

  const CochainComplex cx = build_complex(g, opts.max_edges);
  const auto w = find_d2_violation(cx);
  checks.push_back({"d^2 = 0", !w, w ? "C^" + std::to_string(w->level) + " " + w->element : ""});

  const TheoremReport tr = verify_main_theorem(g, opts);
  checks.push_back({"euler characteristic = substituted e_tilde", tr.euler_matches, ""});
  checks.push_back({"cochain and homology euler characteristics agree", tr.levels_agree, ""});
  checks.push_back({"e_tilde, graded and plain polynomials recovered",
                    tr.e_tilde_recovered && tr.graded_recovered && tr.polynomial_recovered, ""});

  // every permutation for small graphs, a few otherwise
  std::vector<std::size_t> perm(g.edge_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> perms;
  if (g.edge_count() <= 4) {
    while (std::next_permutation(perm.begin(), perm.end())) perms.push_back(perm);
  } else {
    std::vector<std::size_t> p = perm;
    std::reverse(p.begin(), p.end());
    perms.push_back(p);
    std::rotate(perm.begin(), perm.begin() + 1, perm.end());
    perms.push_back(perm);
  }
  const BigradedGroups h = homology_of(cx, opts.threads ? opts.threads : configured_threads());
  bool reorder_ok = true;
  std::string bad_perm;
  for (const auto& p : perms)
    if (bigraded_homology(g.with_edge_order(p), opts) != h) {
      reorder_ok = false;
      for (auto e : p) bad_perm += g.edges()[e].name + " ";
      break;
    }
  checks.push_back({"edge reordering invariance", reorder_ok, bad_perm});

  const LaurentPoly pd = pd_genus_polynomial(g);
  bool pd_ok = true;
  for (EdgeSet a = 0; a <= full_set(g.edge_count()) && pd_ok; ++a) {
    pd_ok = pd_genus_polynomial(partial_dual(g, a)) == pd;
    if (a == full_set(g.edge_count())) break;
  }
  checks.push_back({"polynomial invariant under partial duals", pd_ok, ""});
  return checks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial-dual genus polynomials and their categorification"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string file, file2, mode = "faces", level = "homology", edges, which;
  bool graded = false;
  std::size_t max_edges = 0;
  Placement at1, at2;
  std::string twist = "+";

  auto* poly = app.add_subcommand("poly", "Partial-dual genus polynomial");
  poly->add_option("file", file, "Ribbon graph file")->required();
  poly->add_flag("--graded", graded, "Graded polynomial in (w, z)");
  poly->add_option("--mode", mode, "faces or duals")->check(CLI::IsMember({"faces", "duals"}));
  poly->add_option("--max-edges", max_edges, "Override the edge cap");

  auto* homology = app.add_subcommand("homology", "Bigraded cohomology table");
  homology->add_option("file", file, "Ribbon graph file")->required();
  homology->add_option("--max-edges", max_edges, "Override the edge cap (default 6)");

  auto* euler = app.add_subcommand("euler", "Graded Euler characteristic in (p, q)");
  euler->add_option("file", file, "Ribbon graph file")->required();
  euler->add_option("--level", level, "cochain or homology")->check(CLI::IsMember({"cochain", "homology"}));
  euler->add_option("--max-edges", max_edges, "Override the edge cap");

  auto* dual_cmd = app.add_subcommand("dual", "Partial dual");
  dual_cmd->add_option("file", file, "Ribbon graph file")->required();
  dual_cmd->add_option("--edges", edges, "Comma-separated edge names (default: all)");

  auto* info = app.add_subcommand("info", "Counts, genus and orientability");
  info->add_option("file", file, "Ribbon graph file")->required();

  auto* op = app.add_subcommand("op", "Disjoint union, ribbon join or bar-amalgamation");
  op->add_option("operation", which, "union, join or bar")->required()->check(CLI::IsMember({"union", "join", "bar"}));
  op->add_option("file1", file, "First graph")->required();
  op->add_option("file2", file2, "Second graph")->required();
  op->add_option("--v1", at1.vertex, "Vertex of the first graph (default: first)");
  op->add_option("--gap1", at1.gap, "Rotation gap at --v1");
  op->add_option("--v2", at2.vertex, "Vertex of the second graph (default: first)");
  op->add_option("--gap2", at2.gap, "Rotation gap at --v2");
  op->add_option("--twist", twist, "Bar edge twist, + or -")->check(CLI::IsMember({"+", "-"}));

  auto* verify = app.add_subcommand("verify", "Run the invariant checks on a graph");
  verify->add_option("file", file, "Ribbon graph file")->required();
  verify->add_option("--max-edges", max_edges, "Override the homology edge cap");

  CLI11_PARSE(app, argc, argv);

  std::string current = file;
  try {
    const RibbonGraph g = read_ribbon_file(file);
    const HomologyOptions hopts{max_edges, 0};

    if (poly->parsed()) {
      const PolyOptions popts{mode == "duals" ? PolyMode::duals : PolyMode::faces, max_edges};
      const BiLaurent p = graded ? graded_pd_genus_polynomial(g, popts)
                                 : BiLaurent::from_univariate({"w", "z"}, pd_genus_polynomial(g, popts), 1);
      if (as_json) std::cout << poly_json(p).dump() << "\n";
      else std::cout << (graded ? p.to_string() : pd_genus_polynomial(g, popts).to_string()) << "\n";
    } else if (homology->parsed()) {
      const BigradedGroups h = bigraded_homology(g, hopts);
      if (as_json) std::cout << groups_json(h).dump() << "\n";
      else
        for (const auto& [d, grp] : h) std::cout << group_row(d, grp) << "\n";
    } else if (euler->parsed()) {
      const BiLaurent chi =
          graded_euler_characteristic(g, level == "cochain" ? EulerLevel::cochain : EulerLevel::homology, hopts);
      if (as_json) std::cout << poly_json(chi).dump() << "\n";
      else std::cout << chi.to_string() << "\n";
    } else if (dual_cmd->parsed()) {
      const EdgeSet a = edges.empty() ? full_set(g.edge_count()) : g.edge_set(split_names(edges));
      std::cout << serialize_ribbon(partial_dual(g, a));
    } else if (info->parsed()) {
      const GraphCounts c = counts(g);
      const bool orientable = is_orientable(g);
      if (as_json) {
        std::cout << json{{"V", c.vertices}, {"E", c.edges}, {"F", c.faces}, {"c", c.components},
                          {"genus", euler_genus(g)}, {"orientable", orientable}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "V=" << c.vertices << " E=" << c.edges << " F=" << c.faces << " c=" << c.components
                  << " genus=" << euler_genus(g) << " orientable=" << (orientable ? "yes" : "no") << "\n";
      }
    } else if (op->parsed()) {
      current = file2;
      const RibbonGraph g2 = read_ribbon_file(file2);
      RibbonGraph out;
      if (which == "union") out = disjoint_union(g, g2);
      else if (which == "join") out = ribbon_join(g, resolve(g, at1), g2, resolve(g2, at2));
      else out = bar_amalgamation(g, resolve(g, at1), g2, resolve(g2, at2), twist == "-" ? Twist::twisted : Twist::untwisted);
      std::cout << serialize_ribbon(out);
    } else if (verify->parsed()) {
      const std::vector<Check> checks = run_verify(g, hopts);
      bool all = true;
      json rows = json::array();
      for (const auto& c : checks) {
        all = all && c.passed;
        if (as_json) rows.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        else std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
      }
      if (as_json) std::cout << json{{"checks", rows}, {"passed", all}}.dump() << "\n";
      return all ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << current << ": line " << e.line() << ": " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
