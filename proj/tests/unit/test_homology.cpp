#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"

#include "pdgh/homology/frobenius.hpp"
#include "pdgh/homology/homology.hpp"
#include "pdgh/polynomial/polynomial.hpp"
#include "pdgh/ribbon/flags.hpp"
#include "pdgh/ribbon/io.hpp"

#include <random>

using namespace pdgh;

namespace {

RibbonGraph fixture(const std::string& name) { return read_ribbon_file(std::string(PDGH_FIXTURES) + "/" + name + ".rg"); }

const std::vector<std::string> kFixtures = {"fig1_11", "fig11_path", "isolated", "twisted_loop", "untwisted_loop",
                                            "theta"};

HomologyGroup group(std::size_t free, std::size_t z3 = 0) {
  HomologyGroup h;
  h.free_rank = free;
  h.torsion.assign(z3, TorsionIdeal(QuadInt::sqrt3()));
  return h;
}

}  // namespace

TEST_CASE("structure constants") {
  const FrobeniusReport r = verify_frobenius_relations();
  for (const auto& c : r.checks) {
    INFO(c.name << " " << c.witness);
    CHECK(c.passed);
  }
  CHECK(r.ok());
  CHECK(r.checks.size() >= 15);

  const QuadMatrix d = FrobeniusM::comultiplication();
  // Delta(1) = 1(x)x^2 + x(x)x + x^2(x)1
  CHECK(d(2, 0) == QuadInt(1));
  CHECK(d(4, 0) == QuadInt(1));
  CHECK(d(6, 0) == QuadInt(1));
  CHECK(d(8, 2) == QuadInt(1));
  const QuadMatrix h = FrobeniusM::half_genus();
  CHECK(h * h * QuadMatrix{{1}, {0}, {0}} == QuadMatrix{{0}, {0}, {3}});
  CHECK((FrobeniusM::multiplication() * d)(2, 0) == QuadInt(3));
  CHECK(FrobeniusM::multiplication()(0, 5).is_zero());  // m(x (x) x^2) = 0
}

TEST_CASE("sign exponents") {
  CHECK(sign_exponent("00", "10") == 0);
  CHECK(sign_exponent("10", "11") == 1);
  CHECK(sign_exponent("1010", "1110") == 1);
  CHECK(sign_exponent("0111", "1111") == 0);
  CHECK(sign_exponent(0b0101, 1) == 1);
  CHECK(sign_exponent(0b0101, 3) == 2);
  CHECK_THROWS_AS(sign_exponent("10", "10"), GraphError);
  CHECK_THROWS_AS(sign_exponent("10", "01"), GraphError);
  CHECK_THROWS_AS(sign_exponent("00", "11"), GraphError);
  CHECK_THROWS_AS(sign_exponent("0", "10"), GraphError);
  CHECK_THROWS_AS(sign_exponent(0b1, 0), GraphError);
}

TEST_CASE("two-loop cube") {
  const RibbonGraph g = fixture("fig1_11");
  const auto edges = cube_edges(g);
  REQUIRE(edges.size() == 4);
  auto find = [&](EdgeSet from, std::size_t e) {
    for (const auto& s : edges)
      if (s.from == from && s.edge == e) return s;
    FAIL("missing cube edge");
    return edges[0];
  };
  CHECK(find(0, 0).v.kind == FaceMapKind::split);
  CHECK(find(0, 1).v.kind == FaceMapKind::translate);
  CHECK(find(1, 1).v.kind == FaceMapKind::merge);
  CHECK(find(2, 0).v.kind == FaceMapKind::translate);
  CHECK(find(0, 0).w.kind == FaceMapKind::translate);
  CHECK(find(0, 1).w.kind == FaceMapKind::split);
  CHECK(find(1, 1).w.kind == FaceMapKind::translate);
  CHECK(find(2, 0).w.kind == FaceMapKind::merge);
  CHECK(find(1, 1).sign_exponent == 1);
  CHECK(find(2, 0).sign_exponent == 0);
}

TEST_CASE("cube edge kinds follow face counts") {
  std::mt19937 rng(61);
  for (int t = 0; t < 60; ++t) {
    const RibbonGraph g = oracle::random_graph(rng, {4, 5});
    const EdgeSet full = full_set(g.edge_count());
    for (const auto& s : cube_edges(g)) {
      const int dv = static_cast<int>(oracle::walk_face_count(g, s.to())) - static_cast<int>(oracle::walk_face_count(g, s.from));
      const int dw = static_cast<int>(oracle::walk_face_count(g, full ^ s.to())) -
                     static_cast<int>(oracle::walk_face_count(g, full ^ s.from));
      auto expected = [](int delta) {
        return delta < 0 ? FaceMapKind::merge : delta > 0 ? FaceMapKind::split : FaceMapKind::translate;
      };
      CHECK(s.v.kind == expected(dv));
      CHECK(s.w.kind == expected(dw));
    }
  }
}

TEST_CASE("basis dimensions") {
  std::mt19937 rng(67);
  for (int t = 0; t < 30; ++t) {
    const RibbonGraph g = oracle::random_graph(rng, {3, 4, 0, true});
    const CochainComplex c = build_complex(g);
    const EdgeSet full = full_set(g.edge_count());
    std::vector<std::size_t> expected(g.edge_count() + 1, 0);
    for (EdgeSet a = 0;; ++a) {
      std::size_t d = std::size_t{1} << subset_size(a);
      for (std::size_t k = 0; k < oracle::walk_face_count(g, a) + oracle::walk_face_count(g, full ^ a); ++k) d *= 3;
      expected[subset_size(a)] += d;
      if (a == full) break;
    }
    for (std::size_t i = 0; i <= g.edge_count(); ++i) CHECK(c.dimension(i) == expected[i]);
    for (const auto& [key, block] : c.blocks)
      for (std::size_t i = 0; i < block.coboundary.size(); ++i) {
        CHECK(block.coboundary[i].rows() == block.dimension(i));
        CHECK(block.coboundary[i].cols() == block.dimension(i + 1));
      }
  }
}

TEST_CASE("coboundary squares to zero") {
  for (const auto& name : kFixtures) {
    INFO(name);
    CHECK(verify_d2_zero(build_complex(fixture(name))));
  }
  std::mt19937 rng(71);
  for (int t = 0; t < 25; ++t) {
    const RibbonGraph g = oracle::random_graph(rng, {3, 5, 0, true});
    const auto w = find_d2_violation(build_complex(g));
    INFO(serialize_ribbon(g));
    CHECK_FALSE(w.has_value());
  }
}

TEST_CASE("two-loop homology table") {
  const BigradedGroups h = bigraded_homology(fixture("fig1_11"));
  const BigradedGroups expected = {
      {{0, 0, -2}, group(1)},     {{1, 0, -1}, group(0, 2)},  {{1, 0, 0}, group(3, 3)},   {{1, 0, 1}, group(10, 2)},
      {{1, 0, 2}, group(12, 1)},  {{2, 0, 2}, group(0, 1)},   {{1, 0, 3}, group(10)},     {{2, 0, 3}, group(0, 2)},
      {{1, 0, 4}, group(3)},      {{2, 0, 4}, group(0, 3)},   {{2, 0, 5}, group(0, 2)},   {{2, 0, 6}, group(1)},
      {{1, 1, -1}, group(2)},     {{1, 1, 0}, group(6)},      {{1, 1, 1}, group(12)},     {{1, 1, 2}, group(13)},
      {{2, 1, 2}, group(1, 1)},   {{1, 1, 3}, group(10)},     {{2, 1, 3}, group(2, 2)},   {{1, 1, 4}, group(3)},
      {{2, 1, 4}, group(3, 3)},   {{2, 1, 5}, group(2, 2)},   {{2, 1, 6}, group(2)},      {{2, 2, 2}, group(1)},
      {{2, 2, 6}, group(1)},      {{2, 2, 3}, group(2)},      {{2, 2, 5}, group(2)},      {{2, 2, 4}, group(3)},
  };
  CHECK(h == expected);
  CHECK(to_string(h.at({1, 0, 0})) == "Z[sqrt3]^3 + Z3^3");
  CHECK(to_string(HomologyGroup{}) == "0");
}

TEST_CASE("sparse and dense homology agree") {
  std::mt19937 rng(73);
  for (int t = 0; t < 20; ++t) {
    const RibbonGraph g = oracle::random_graph(rng, {3, 3, 0, true});
    const CochainComplex c = build_complex(g);
    CHECK(homology_of(c) == oracle::dense_homology(c));
  }
  const CochainComplex c = build_complex(fixture("fig1_11"));
  CHECK(homology_of(c) == oracle::dense_homology(c));
}

TEST_CASE("euler characteristic") {
  const BiLaurent::Names pq{"p", "q"};
  const BiLaurent s = BiLaurent::monomial(pq, 0, -1) + BiLaurent::constant(pq, 1) + BiLaurent::monomial(pq, 0, 1);
  CHECK(graded_euler_characteristic(fixture("isolated"), EulerLevel::homology) == s * s);
  CHECK(graded_euler_characteristic(fixture("isolated"), EulerLevel::cochain) == s * s);
  std::mt19937 rng(79);
  for (int t = 0; t < 25; ++t) {
    const RibbonGraph g = oracle::random_graph(rng, {3, 4, 0, true});
    const BiLaurent expanded = oracle::expanded_cochain_chi(g);
    CHECK(graded_euler_characteristic(g, EulerLevel::cochain) == expanded);
    CHECK(graded_euler_characteristic(g, EulerLevel::homology) == expanded);
    CHECK(verify_main_theorem(g).ok());
  }
}

TEST_CASE("dual graphs have equal homology") {
  std::mt19937 rng(83);
  for (int t = 0; t < 15; ++t) {
    const RibbonGraph g = oracle::random_graph(rng, {3, 4, 0, true});
    CHECK(bigraded_homology(g) == bigraded_homology(dual(g)));
  }
}

TEST_CASE("path H0 in degree 2 against explicit tensor maps") {
  const RibbonGraph path = fixture("fig11_path");
  const BigradedGroups h = bigraded_homology(path);
  const BigradedGroups hd = bigraded_homology(partial_dual(path, path.edge_set({"e1"})));
  for (int k = -4; k <= 4; ++k) {
    const std::size_t rank = oracle::path_h0_rank_by_tensors(k);
    auto it = h.find({0, 0, k});
    CHECK((it == h.end() ? 0 : it->second.free_rank) == rank);
  }
  // the kernel of both merges on M(x)M(x)M contains
  // -1(x)x(x)x + x(x)1(x)x - x(x)x(x)1 + 1(x)x^2(x)1 in degree 1
  CHECK(oracle::path_h0_rank_by_tensors(2) == 1);
  CHECK(h.at({0, 0, 2}) == group(1));
  CHECK(hd.at({0, 0, 2}) == group(1));
}

TEST_CASE("torsion on the two-loop graph and the path is sqrt3 torsion") {
  const TorsionIdeal z3(QuadInt::sqrt3());
  for (const auto& name : {"fig1_11", "fig11_path"})
    for (const auto& [d, grp] : bigraded_homology(fixture(name)))
      for (const auto& t : grp.torsion) CHECK(t == z3);
}

TEST_CASE("twisted loop has torsion of order 9") {
  // both faces are single circles, so d = h(x)h and d(1(x)1) = 3 x(x)x
  const TorsionIdeal three(QuadInt(3));
  const BigradedGroups h = bigraded_homology(fixture("twisted_loop"));
  CHECK(three.quotient_size() == 9);
  CHECK(h.at({1, 0, 0}).torsion == std::vector<TorsionIdeal>{three});
  CHECK(h.at({1, 0, 0}).free_rank == 0);
}

TEST_CASE("edge order and worker count do not matter") {
  const RibbonGraph theta = fixture("theta");
  for (const auto& perm : std::vector<std::vector<std::size_t>>{{1, 0, 2}, {2, 1, 0}, {1, 2, 0}})
    CHECK(reorder_invariance(theta, perm));
  CHECK(reorder_invariance(fixture("fig1_11"), {1, 0}));
  const RibbonGraph g = fixture("fig1_11");
  CHECK(bigraded_homology(g, {0, 1}) == bigraded_homology(g, {0, 3}));
}

TEST_CASE("homology cap") {
  std::string text = "ribbon v1\nvertex v";
  for (int k = 0; k < 7; ++k) text += " a" + std::to_string(k) + " b" + std::to_string(k);
  text += "\n";
  for (int k = 0; k < 7; ++k) text += "edge e" + std::to_string(k) + " a" + std::to_string(k) + " b" + std::to_string(k) + " -\n";
  const RibbonGraph big = parse_ribbon(text);
  CHECK_THROWS_AS(bigraded_homology(big), CapError);
  CHECK_THROWS_AS(build_complex(big, 6), CapError);
}
