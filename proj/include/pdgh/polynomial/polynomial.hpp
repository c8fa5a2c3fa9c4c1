#pragma once

// The partial-dual genus polynomial
//
//   pd(z)      = sum_{A subset E} z^{eps(G^A)}
//              = z^{2c+|E|} sum_A z^{-|F(A)|-|F(A^c)|}
//
// and its graded refinement pd~(w, z) = sum_A w^{|A|} z^{eps(G^A)}.
// Two routes compute them: `faces` counts boundary circles of spanning
// subgraphs, `duals` builds every partial dual explicitly. The second exists
// to check the first.

#include "pdgh/algebra/laurent.hpp"
#include "pdgh/ribbon/ribbon_graph.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace pdgh {

enum class PolyMode { faces, duals };

struct PolyOptions {
  PolyMode mode = PolyMode::faces;
  /// Edge cap; 0 picks the mode default (20 for faces, 12 for duals).
  std::size_t max_edges = 0;
};

class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultFacesCap = 20;
inline constexpr std::size_t kDefaultDualsCap = 12;

/// Throws CapError if g has more edges than the options allow.
void check_poly_cap(const RibbonGraph& g, const PolyOptions& opts);

LaurentPoly pd_genus_polynomial(const RibbonGraph& g, const PolyOptions& opts = {});

/// In variables (w, z).
BiLaurent graded_pd_genus_polynomial(const RibbonGraph& g, const PolyOptions& opts = {});

/// sum_A w^|A| z^{-|F(A)|-|F(A^c)|}, in variables (w, z).
BiLaurent e_tilde(const RibbonGraph& g, const PolyOptions& opts = {});

/// 2c(G) + |E(G)|, the z-shift between e_tilde and the graded polynomial.
int z_shift(const RibbonGraph& g);

/// The graded polynomial split by one edge: first the terms with e in A,
/// then those without.
std::pair<BiLaurent, BiLaurent> graded_split_by_edge(const RibbonGraph& g, std::size_t edge);

/// w^-1 u + w v for the split (u, v): the graded polynomial of G^{e}
/// predicted from that of G.
BiLaurent single_edge_dual_transform(const std::pair<BiLaurent, BiLaurent>& split);

/// Writes a Laurent polynomial in q as a polynomial in s = q^-1 + 1 + q and
/// returns it with s^k replaced by z^-k. Throws std::domain_error if no such
/// expression exists.
LaurentPoly in_powers_of_inverse_z(const LaurentPoly& in_q);

/// Inverts the substitution w = -q^2 - p q^2, z^-1 = q^-1 + 1 + q: takes a
/// polynomial in (p, q) and returns the polynomial in (w, z) it came from.
/// Throws std::domain_error when the input is not in the image.
BiLaurent e_tilde_from_euler_characteristic(const BiLaurent& chi_pq);

}  // namespace pdgh
