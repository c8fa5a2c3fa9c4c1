#include "pdgh/polynomial/polynomial.hpp"

#include "pdgh/ribbon/circles.hpp"
#include "pdgh/ribbon/flags.hpp"

#include <string>
#include <vector>

namespace pdgh {

namespace {

const BiLaurent::Names kWZ{"w", "z"};

std::size_t effective_cap(const PolyOptions& opts) {
  if (opts.max_edges) return opts.max_edges;
  return opts.mode == PolyMode::faces ? kDefaultFacesCap : kDefaultDualsCap;
}

// |F(A)| for every subset A.
std::vector<int> all_face_counts(const RibbonGraph& g) {
  const EdgeSet subsets = EdgeSet{1} << g.edge_count();
  std::vector<int> faces(subsets);
  for (EdgeSet a = 0; a < subsets; ++a) faces[a] = static_cast<int>(face_count(g, a));
  return faces;
}

// Exponent of z for subset A, in the graded polynomial.
std::vector<int> genus_per_subset(const RibbonGraph& g, const PolyOptions& opts) {
  check_poly_cap(g, opts);
  const EdgeSet subsets = EdgeSet{1} << g.edge_count();
  std::vector<int> genus(subsets);
  if (opts.mode == PolyMode::faces) {
    const std::vector<int> faces = all_face_counts(g);
    const EdgeSet full = full_set(g.edge_count());
    const int shift = z_shift(g);
    for (EdgeSet a = 0; a < subsets; ++a) genus[a] = shift - faces[a] - faces[full ^ a];
  } else {
    for (EdgeSet a = 0; a < subsets; ++a) genus[a] = euler_genus(partial_dual(g, a));
  }
  return genus;
}

}  // namespace

void check_poly_cap(const RibbonGraph& g, const PolyOptions& opts) {
  const std::size_t cap = effective_cap(opts);
  if (g.edge_count() > cap)
    throw CapError("graph has " + std::to_string(g.edge_count()) + " edges; the " +
                   (opts.mode == PolyMode::faces ? "faces" : "duals") + " route is capped at " +
                   std::to_string(cap) + " (raise the cap to override)");
  if (g.edge_count() >= kMaxSubsetEdges) throw CapError("subset enumeration needs fewer than 64 edges");
}

int z_shift(const RibbonGraph& g) {
  return 2 * static_cast<int>(counts(g).components) + static_cast<int>(g.edge_count());
}

LaurentPoly pd_genus_polynomial(const RibbonGraph& g, const PolyOptions& opts) {
  LaurentPoly p;
  for (int genus : genus_per_subset(g, opts)) p.add_term(genus, 1);
  return p;
}

BiLaurent graded_pd_genus_polynomial(const RibbonGraph& g, const PolyOptions& opts) {
  const std::vector<int> genus = genus_per_subset(g, opts);
  BiLaurent p(kWZ);
  for (EdgeSet a = 0; a < genus.size(); ++a) p.add_term(subset_size(a), genus[a], 1);
  return p;
}

BiLaurent e_tilde(const RibbonGraph& g, const PolyOptions& opts) {
  const std::vector<int> genus = genus_per_subset(g, opts);
  const int shift = z_shift(g);
  BiLaurent p(kWZ);
  for (EdgeSet a = 0; a < genus.size(); ++a) p.add_term(subset_size(a), genus[a] - shift, 1);
  return p;
}

std::pair<BiLaurent, BiLaurent> graded_split_by_edge(const RibbonGraph& g, std::size_t edge) {
  if (edge >= g.edge_count()) throw GraphError("edge index out of range");
  const std::vector<int> genus = genus_per_subset(g, {});
  BiLaurent with(kWZ), without(kWZ);
  for (EdgeSet a = 0; a < genus.size(); ++a)
    (contains(a, edge) ? with : without).add_term(subset_size(a), genus[a], 1);
  return {std::move(with), std::move(without)};
}

BiLaurent single_edge_dual_transform(const std::pair<BiLaurent, BiLaurent>& split) {
  return BiLaurent::monomial(kWZ, -1, 0) * split.first + BiLaurent::monomial(kWZ, 1, 0) * split.second;
}

LaurentPoly in_powers_of_inverse_z(const LaurentPoly& in_q) {
  const LaurentPoly s = LaurentPoly::monomial(-1) + LaurentPoly(1) + LaurentPoly::monomial(1);
  LaurentPoly rest = in_q;
  LaurentPoly out;
  while (!rest.is_zero()) {
    const int d = rest.max_exponent();
    if (d < 0) throw std::domain_error("not a polynomial in q^-1 + 1 + q: " + in_q.to_string("q"));
    const Integer c = rest.coefficient(d);
    rest -= LaurentPoly::monomial(0, c) * s.pow(d);
    out.add_term(-d, c);
  }
  return out;
}

BiLaurent e_tilde_from_euler_characteristic(const BiLaurent& chi_pq) {
  const BiLaurent::Names wq{"w", "q"};
  // p = -w q^-2 - 1
  const BiLaurent p_image = BiLaurent::monomial(wq, 1, -2, -1) + BiLaurent::constant(wq, -1);
  const BiLaurent in_wq = substitute(chi_pq, {{"p", Binding{p_image, false}}});
  BiLaurent out(kWZ);
  std::vector<int> w_powers;
  for (const auto& [e, c] : in_wq.terms())
    if (w_powers.empty() || w_powers.back() != e.first) w_powers.push_back(e.first);
  for (int a : w_powers)
    for (const auto& [ez, c] : in_powers_of_inverse_z(in_wq.slice_first(a)).terms()) out.add_term(a, ez, c);
  return out;
}

}  // namespace pdgh
