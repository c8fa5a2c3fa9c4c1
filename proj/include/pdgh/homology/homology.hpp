#pragma once

#include "pdgh/algebra/laurent.hpp"
#include "pdgh/algebra/torsion.hpp"
#include "pdgh/homology/complex.hpp"
#include "pdgh/ribbon/ribbon_graph.hpp"

#include <compare>
#include <map>
#include <vector>

namespace pdgh {

struct Tridegree {
  int i = 0;
  int j = 0;
  int k = 0;
  friend auto operator<=>(const Tridegree&, const Tridegree&) = default;
};

struct HomologyGroup {
  std::size_t free_rank = 0;
  /// Sorted by HNF.
  std::vector<TorsionIdeal> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// H^i_{(j,k)}; only nonzero groups are stored.
using BigradedGroups = std::map<Tridegree, HomologyGroup>;

struct HomologyOptions {
  /// Edge cap, 0 = kDefaultHomologyCap.
  std::size_t max_edges = 0;
  /// Worker threads, 0 = PDGH_THREADS from the environment, else hardware.
  unsigned threads = 0;
};

/// Worker count from PDGH_THREADS (0 or unset = hardware concurrency).
unsigned configured_threads();

BigradedGroups homology_of(const CochainComplex& c, unsigned threads = 1);

BigradedGroups bigraded_homology(const RibbonGraph& g, const HomologyOptions& opts = {});

/// "Z[sqrt3]^2 + Z3^2" style summary; "0" for the zero group.
std::string to_string(const HomologyGroup& h);

enum class EulerLevel { cochain, homology };

/// sum (-1)^i p^j q^k rank H^i_{(j,k)}, in variables (p, q).
BiLaurent euler_characteristic(const BigradedGroups& h);

/// The cochain level needs only face counts and is capped like the faces
/// polynomial; the homology level computes H first.
BiLaurent graded_euler_characteristic(const RibbonGraph& g, EulerLevel level, const HomologyOptions& opts = {});

/// e_tilde(g) evaluated at w = -q^2 - p q^2, z^-1 = q^-1 + 1 + q.
BiLaurent e_tilde_in_pq(const RibbonGraph& g);

struct TheoremReport {
  bool euler_matches = false;       // substituted e_tilde == homology-level chi
  bool levels_agree = false;        // cochain-level chi == homology-level chi
  bool e_tilde_recovered = false;   // chi -> e_tilde
  bool graded_recovered = false;    // -> graded polynomial
  bool polynomial_recovered = false;// -> pd genus polynomial
  bool ok() const {
    return euler_matches && levels_agree && e_tilde_recovered && graded_recovered && polynomial_recovered;
  }
};

TheoremReport verify_main_theorem(const RibbonGraph& g, const HomologyOptions& opts = {});

/// True iff g and g with its edges reordered by `perm` (new position t holds
/// old edge perm[t]) have equal homology.
bool reorder_invariance(const RibbonGraph& g, const std::vector<std::size_t>& perm, const HomologyOptions& opts = {});

}  // namespace pdgh
