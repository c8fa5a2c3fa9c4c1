// Acceptance gate: one PASS/FAIL line per criterion, each under its time
// limit. Exit status is nonzero if any criterion fails.

#include "../unit/oracles.hpp"

#include "pdgh/homology/frobenius.hpp"
#include "pdgh/homology/homology.hpp"
#include "pdgh/polynomial/polynomial.hpp"
#include "pdgh/ribbon/circles.hpp"
#include "pdgh/ribbon/constructions.hpp"
#include "pdgh/ribbon/flags.hpp"
#include "pdgh/ribbon/io.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

using namespace pdgh;

namespace {

RibbonGraph fixture(const std::string& name) { return read_ribbon_file(std::string(PDGH_FIXTURES) + "/" + name + ".rg"); }

const std::vector<std::string> kFixtures = {"fig1_11", "fig11_path", "isolated", "twisted_loop", "untwisted_loop",
                                            "theta"};
const BiLaurent::Names kWZ{"w", "z"};
const BiLaurent::Names kPQ{"p", "q"};

// Collects the first few mismatches of a criterion.
struct Outcome {
  bool ok = true;
  std::string note;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) note = what;
    ok = false;
  }
};

BiLaurent wz(int w, int z, long long c = 1) { return BiLaurent::monomial(kWZ, w, z, c); }

BiLaurent q_row(int p, std::initializer_list<std::pair<int, long long>> terms) {
  BiLaurent r(kPQ);
  for (const auto& [k, c] : terms) r.add_term(p, k, c);
  return r;
}

HomologyGroup group(std::size_t free, std::size_t z3 = 0) {
  HomologyGroup h;
  h.free_rank = free;
  h.torsion.assign(z3, TorsionIdeal(QuadInt::sqrt3()));
  return h;
}

Outcome criterion_1() {
  Outcome o;
  const RibbonGraph g = fixture("fig1_11");
  const LaurentPoly pd = pd_genus_polynomial(g);
  o.expect(pd.to_string() == "2*z^2 + 2*z", "poly = " + pd.to_string());
  o.expect(pd_genus_polynomial(g, {PolyMode::duals}) == pd, "duals route differs");
  // bit t of the subset is edge e(t+1); the bitstring 10 is {e1}
  const std::size_t f00 = face_count(g, 0), f10 = face_count(g, 0b01), f01 = face_count(g, 0b10), f11 = face_count(g, 0b11);
  o.expect(f00 == 1 && f01 == 1 && f11 == 1 && f10 == 2,
           "face counts " + std::to_string(f00) + "," + std::to_string(f10) + "," + std::to_string(f01) + "," + std::to_string(f11));
  return o;
}

Outcome criterion_2() {
  Outcome o;
  const RibbonGraph g = fixture("fig1_11");
  const BiLaurent graded = graded_pd_genus_polynomial(g);
  o.expect(graded == wz(0, 2) + wz(1, 1, 2) + wz(2, 2), "graded = " + graded.to_string());
  const BiLaurent et = e_tilde(g);
  o.expect(et == wz(0, -2) + wz(1, -3, 2) + wz(2, -2), "e_tilde = " + et.to_string());
  return o;
}

Outcome criterion_3() {
  Outcome o;
  const BigradedGroups expected = {
      {{0, 0, -2}, group(1)},    {{1, 0, -1}, group(0, 2)}, {{1, 0, 0}, group(3, 3)},  {{1, 0, 1}, group(10, 2)},
      {{1, 0, 2}, group(12, 1)}, {{2, 0, 2}, group(0, 1)},  {{1, 0, 3}, group(10)},    {{2, 0, 3}, group(0, 2)},
      {{1, 0, 4}, group(3)},     {{2, 0, 4}, group(0, 3)},  {{2, 0, 5}, group(0, 2)},  {{2, 0, 6}, group(1)},
      {{1, 1, -1}, group(2)},    {{1, 1, 0}, group(6)},     {{1, 1, 1}, group(12)},    {{1, 1, 2}, group(13)},
      {{2, 1, 2}, group(1, 1)},  {{1, 1, 3}, group(10)},    {{2, 1, 3}, group(2, 2)},  {{1, 1, 4}, group(3)},
      {{2, 1, 4}, group(3, 3)},  {{2, 1, 5}, group(2, 2)},  {{2, 1, 6}, group(2)},     {{2, 2, 2}, group(1)},
      {{2, 2, 6}, group(1)},     {{2, 2, 3}, group(2)},     {{2, 2, 5}, group(2)},     {{2, 2, 4}, group(3)},
  };
  const BigradedGroups h = bigraded_homology(fixture("fig1_11"));
  for (const auto& [d, g] : expected) {
    auto it = h.find(d);
    const std::string got = it == h.end() ? "0" : to_string(it->second);
    o.expect(it != h.end() && it->second == g, "H^" + std::to_string(d.i) + "_(" + std::to_string(d.j) + "," +
                                                   std::to_string(d.k) + ") = " + got + ", expected " + to_string(g));
  }
  for (const auto& [d, g] : h)
    o.expect(expected.count(d) != 0, "unexpected nonzero group at (" + std::to_string(d.i) + "," + std::to_string(d.j) +
                                         "," + std::to_string(d.k) + ")");
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const RibbonGraph g = fixture("fig1_11");
  const BiLaurent published =
      q_row(0, {{-2, 1}, {0, -3}, {1, -10}, {2, -12}, {3, -10}, {4, -3}, {6, 1}}) +
      q_row(1, {{-1, -2}, {0, -6}, {1, -12}, {2, -12}, {3, -8}, {5, 2}, {6, 2}}) +
      q_row(2, {{2, 1}, {3, 2}, {4, 3}, {5, 2}, {6, 1}});
  const BiLaurent chi = graded_euler_characteristic(g, EulerLevel::homology);
  o.expect(chi == published, "chi = " + chi.to_string());
  const BiLaurent et = e_tilde_from_euler_characteristic(chi);
  o.expect(et == wz(0, -2) + wz(1, -3, 2) + wz(2, -2), "recovered e_tilde = " + et.to_string());
  const BiLaurent graded = et * wz(0, z_shift(g));
  o.expect(graded == wz(0, 2) + wz(1, 1, 2) + wz(2, 2), "recovered graded = " + graded.to_string());
  o.expect(graded.at_first_equal_one().to_string() == "2*z^2 + 2*z", "recovered poly = " + graded.at_first_equal_one().to_string());
  o.expect(verify_main_theorem(g).ok(), "theorem check failed");
  return o;
}

Outcome criterion_5() {
  Outcome o;
  std::mt19937 rng(2024);
  for (int t = 0; t < 50; ++t) {
    const RibbonGraph g = oracle::random_graph(rng, {4, 4, 0, true});
    const CochainComplex c = build_complex(g);
    const auto w = find_d2_violation(c);
    o.expect(!w, "d^2 != 0 on graph " + std::to_string(t) + (w ? " at " + w->element : ""));
    const BiLaurent chi_h = euler_characteristic(homology_of(c, configured_threads()));
    const BiLaurent chi_c = graded_euler_characteristic(g, EulerLevel::cochain);
    o.expect(chi_h == chi_c, "cochain and homology chi differ on graph " + std::to_string(t));
    o.expect(chi_c == oracle::expanded_cochain_chi(g), "cochain chi differs from expansion on graph " + std::to_string(t));
    o.expect(e_tilde_in_pq(g) == chi_h, "substitution identity fails on graph " + std::to_string(t));
  }
  return o;
}

Outcome criterion_6() {
  Outcome o;
  std::mt19937 rng(606);
  const BiLaurent one_plus_w = wz(0, 0) + wz(1, 0);
  for (int t = 0; t < 20; ++t) {
    const RibbonGraph g1 = oracle::random_graph(rng, {4, 4, 0, true});
    const RibbonGraph g2 = oracle::random_graph(rng, {4, 4, 0, true});
    const BiLaurent p1 = graded_pd_genus_polynomial(g1), p2 = graded_pd_genus_polynomial(g2);
    const std::string tag = " on pair " + std::to_string(t);
    o.expect(graded_pd_genus_polynomial(disjoint_union(g1, g2)) == p1 * p2, "disjoint union" + tag);
    const Attachment at1 = oracle::random_attachment(rng, g1), at2 = oracle::random_attachment(rng, g2);
    o.expect(graded_pd_genus_polynomial(ribbon_join(g1, at1, g2, at2)) == p1 * p2, "ribbon join" + tag);
    const RibbonGraph bar = bar_amalgamation(g1, at1, g2, at2, rng() % 2 ? Twist::twisted : Twist::untwisted);
    o.expect(graded_pd_genus_polynomial(bar) == one_plus_w * p1 * p2, "bar-amalgamation" + tag);
    o.expect(pd_genus_polynomial(bar) == LaurentPoly(2) * p1.at_first_equal_one() * p2.at_first_equal_one(),
             "w = 1 specialization" + tag);
  }
  return o;
}

Outcome criterion_7() {
  Outcome o;
  std::mt19937 rng(707);
  for (int t = 0; t < 20; ++t) {
    const RibbonGraph g = oracle::random_graph(rng, {4, 5});
    const std::string tag = " on graph " + std::to_string(t);
    const GraphCounts base = counts(g);
    const LaurentPoly pd = pd_genus_polynomial(g);
    const EdgeSet full = full_set(g.edge_count());
    for (EdgeSet a = 0;; ++a) {
      const RibbonGraph d = partial_dual(g, a);
      const GraphCounts dc = counts(d);
      o.expect(pd_genus_polynomial(d) == pd, "polynomial changes" + tag);
      o.expect(dc.components == base.components && dc.edges == base.edges, "c or |E| changes" + tag);
      o.expect(dc.vertices == face_count(g, a), "|V(G^A)| != |F(A)|" + tag);
      o.expect(are_isomorphic(partial_dual(d, a), g), "(G^A)^A not isomorphic to G" + tag);
      o.expect(is_orientable(d) == is_orientable(g), "orientability changes" + tag);
      if (a == full) break;
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const RibbonGraph d = partial_dual(g, with_edge(0, e));
      for (EdgeSet b = 0;; ++b) {
        if (!contains(b, e))
          o.expect(face_count(d, b) == face_count(g, with_edge(b, e)) && face_count(d, with_edge(b, e)) == face_count(g, b),
                   "single-edge face identity" + tag);
        if (b == full) break;
      }
    }
  }
  return o;
}

Outcome criterion_8() {
  Outcome o;
  const RibbonGraph g = fixture("fig1_11");
  const BiLaurent got = graded_pd_genus_polynomial(partial_dual(g, g.edge_set({"e1"})));
  o.expect(got == wz(0, 1) + wz(1, 2, 2) + wz(2, 1), "graded of partial dual = " + got.to_string());
  for (const auto& name : kFixtures) {
    const RibbonGraph f = fixture(name);
    for (std::size_t e = 0; e < f.edge_count(); ++e)
      o.expect(single_edge_dual_transform(graded_split_by_edge(f, e)) ==
                   graded_pd_genus_polynomial(partial_dual(f, with_edge(0, e))),
               "transform law on " + name + " edge " + f.edges()[e].name);
  }
  return o;
}

Outcome criterion_9() {
  Outcome o;
  const RibbonGraph path = fixture("fig11_path");
  const RibbonGraph dual_e1 = partial_dual(path, path.edge_set({"e1"}));
  const BiLaurent gp = graded_pd_genus_polynomial(path), gd = graded_pd_genus_polynomial(dual_e1);
  o.expect(gp == gd, "graded polynomials differ");
  o.expect(e_tilde(path) == (wz(0, 0) + wz(1, 0, 2) + wz(2, 0)) * wz(0, -z_shift(path)), "path e_tilde = " + e_tilde(path).to_string());
  auto h0 = [](const BigradedGroups& h) {
    auto it = h.find({0, 0, 2});
    return it == h.end() ? HomologyGroup{} : it->second;
  };
  const HomologyGroup a = h0(bigraded_homology(path)), b = h0(bigraded_homology(dual_e1));
  o.expect(a.is_zero() && b == group(1), "H^0_(0,2): path " + to_string(a) + ", partial dual " + to_string(b) +
                                             "; expected 0 and Z[sqrt3]");
  return o;
}

Outcome criterion_10() {
  Outcome o;
  for (const auto& name : kFixtures) {
    const RibbonGraph g = fixture(name);
    const BigradedGroups h = bigraded_homology(g);
    std::vector<std::size_t> perm(g.edge_count());
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::string p;
      for (auto e : perm) p += g.edges()[e].name + " ";
      o.expect(bigraded_homology(g.with_edge_order(perm)) == h, name + " under order " + p);
    }
  }
  return o;
}

Outcome criterion_11() {
  Outcome o;
  const FrobeniusReport r = verify_frobenius_relations();
  for (const auto& c : r.checks) o.expect(c.passed, c.name + " fails at " + c.witness);
  return o;
}

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "two-loop polynomial and face counts", 1, criterion_1},
      {2, "two-loop graded polynomial and e_tilde", 1, criterion_2},
      {3, "two-loop bigraded cohomology table", 10, criterion_3},
      {4, "two-loop Euler characteristic and recovery", 10, criterion_4},
      {5, "theorem suite on 50 random graphs", 120, criterion_5},
      {6, "products under union, join and bar-amalgamation", 60, criterion_6},
      {7, "partial-dual suite on 20 random graphs", 120, criterion_7},
      {8, "worked partial dual and transform law", 1, criterion_8},
      {9, "distinguishing pair", 10, criterion_9},
      {10, "edge-reorder invariance on fixtures", 30, criterion_10},
      {11, "Frobenius relations", 1, criterion_11},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit_seconds) {
      o.ok = false;
      o.note = "over the time limit";
    }
    failures += !o.ok;
    std::printf("%s criterion %d: %s (%.3fs, limit %gs)%s%s\n", o.ok ? "PASS" : "FAIL", c.number, c.title, secs,
                c.limit_seconds, o.ok ? "" : ": ", o.note.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures ? 1 : 0;
}
