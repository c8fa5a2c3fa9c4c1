#include "pdgh/homology/complex.hpp"

#include "pdgh/polynomial/polynomial.hpp"

#include <array>

namespace pdgh {

namespace {

// Per cube vertex: how x-power codes split into degrees.
struct VertexData {
  int circles = 0;                    // F(A) + F(A^c)
  int v_circles = 0;                  // F(A)
  std::vector<std::int8_t> degree;    // sum of M-degrees per code
  std::vector<std::uint32_t> rank;    // rank among codes of equal degree
  std::vector<std::uint32_t> count;   // codes per degree, index degree + circles
  // first index in block (j, degree + 2|A|) at level |A|, per [j][degree + circles]
  std::vector<std::vector<std::uint32_t>> base;
};

std::vector<std::uint32_t> pow3_table(int n) {
  std::vector<std::uint32_t> p(n + 1, 1);
  for (int t = 1; t <= n; ++t) p[t] = p[t - 1] * 3;
  return p;
}

VertexData vertex_data(int v_circles, int w_circles) {
  VertexData d;
  d.v_circles = v_circles;
  d.circles = v_circles + w_circles;
  const std::uint32_t codes = pow3_table(d.circles)[d.circles];
  d.degree.resize(codes);
  d.rank.resize(codes);
  d.count.assign(2 * d.circles + 1, 0);
  for (std::uint32_t code = 0; code < codes; ++code) {
    int deg = 0;
    for (std::uint32_t c = code, t = 0; t < static_cast<std::uint32_t>(d.circles); ++t, c /= 3) deg += 1 - static_cast<int>(c % 3);
    d.degree[code] = static_cast<std::int8_t>(deg);
    d.rank[code] = d.count[deg + d.circles]++;
  }
  return d;
}

// rank of each word among words of the same length and popcount
std::vector<std::uint32_t> word_ranks(std::size_t length) {
  std::vector<std::uint32_t> ranks(std::size_t{1} << length);
  std::vector<std::uint32_t> seen(length + 1, 0);
  for (std::uint32_t w = 0; w < ranks.size(); ++w) ranks[w] = seen[__builtin_popcount(w)]++;
  return ranks;
}

struct Term {
  std::uint32_t code;
  int sqrt3_power;  // 0 or 1
};

// Images of one circle family under a face map: code contributions in the
// target numbering, with `offset` added to target circle indices.
void apply_face_map(const FaceMap& f, const std::array<int, 64>& src, int src_offset, int dst_offset,
                    const std::vector<std::uint32_t>& pow3, std::vector<Term>& out) {
  out.clear();
  std::uint32_t base = 0;
  for (const auto& [s, t] : f.identity) base += src[src_offset + s] * pow3[dst_offset + t];
  switch (f.kind) {
    case FaceMapKind::merge: {
      const int sum = src[src_offset + f.source[0]] + src[src_offset + f.source[1]];
      if (sum <= 2) out.push_back({base + sum * pow3[dst_offset + f.target[0]], 0});
      break;
    }
    case FaceMapKind::split: {
      const int a = src[src_offset + f.source[0]];
      for (int b = 0; b <= 2; ++b) {
        const int c = a + 2 - b;
        if (c < 0 || c > 2) continue;
        out.push_back({base + b * pow3[dst_offset + f.target[0]] + c * pow3[dst_offset + f.target[1]], 0});
      }
      break;
    }
    case FaceMapKind::translate: {
      const int a = src[src_offset + f.source[0]];
      if (a < 2) out.push_back({base + (a + 1) * pow3[dst_offset + f.target[0]], 1});
      break;
    }
  }
}

std::string subset_bits(EdgeSet a, std::size_t n) {
  std::string s;
  for (std::size_t e = 0; e < n; ++e) s += contains(a, e) ? '1' : '0';
  return s;
}

}  // namespace

std::size_t CochainComplex::dimension(std::size_t i) const {
  std::size_t total = 0;
  for (const auto& [key, block] : blocks) total += block.dimension(i);
  return total;
}

CochainComplex build_complex(const RibbonGraph& g, std::size_t max_edges) {
  const std::size_t cap = max_edges ? max_edges : kDefaultHomologyCap;
  const std::size_t n = g.edge_count();
  if (n > cap)
    throw CapError("graph has " + std::to_string(n) + " edges; homology is capped at " + std::to_string(cap) +
                   " (raise the cap to override)");
  if (n > 30) throw CapError("homology needs at most 30 edges");

  const std::vector<CirclePartition> partitions = all_circle_partitions(g);
  const std::vector<EdgeMapSpec> edges = cube_edges(g, partitions);
  const EdgeSet subsets = EdgeSet{1} << n;
  const EdgeSet full = full_set(n);

  CochainComplex cx;
  cx.edges = n;
  cx.faces.resize(subsets);
  cx.dual_faces.resize(subsets);
  std::vector<VertexData> data(subsets);
  int max_circles = 0;
  for (EdgeSet a = 0; a < subsets; ++a) {
    cx.faces[a] = static_cast<int>(partitions[a].size());
    cx.dual_faces[a] = static_cast<int>(partitions[full ^ a].size());
    data[a] = vertex_data(cx.faces[a], cx.dual_faces[a]);
    max_circles = std::max(max_circles, data[a].circles);
  }
  if (max_circles > 20) throw CapError("cube vertex with more than 20 circles");
  std::vector<std::vector<std::uint32_t>> ranks;
  for (std::size_t i = 0; i <= n; ++i) ranks.push_back(word_ranks(i));

  auto block_at = [&](int j, int k) -> BidegreeComplex& {
    auto [it, fresh] = cx.blocks.try_emplace({j, k});
    if (fresh) {
      it->second.j = j;
      it->second.k = k;
      it->second.basis.resize(n + 1);
    }
    return it->second;
  };

  // bases, level by level, subsets ascending
  for (std::size_t i = 0; i <= n; ++i)
    for (EdgeSet a = 0; a < subsets; ++a) {
      if (static_cast<std::size_t>(subset_size(a)) != i) continue;
      VertexData& d = data[a];
      d.base.assign(i + 1, std::vector<std::uint32_t>(2 * d.circles + 1, 0));
      for (std::size_t j = 0; j <= i; ++j)
        for (int deg = -d.circles; deg <= d.circles; ++deg)
          if (d.count[deg + d.circles])
            d.base[j][deg + d.circles] = static_cast<std::uint32_t>(
                block_at(static_cast<int>(j), deg + 2 * static_cast<int>(i)).basis[i].size());
      for (std::uint32_t word = 0; word < (std::uint32_t{1} << i); ++word) {
        const int j = __builtin_popcount(word);
        for (std::uint32_t code = 0; code < d.degree.size(); ++code)
          block_at(j, d.degree[code] + 2 * static_cast<int>(i)).basis[i].push_back({a, word, code});
      }
    }

  for (auto& [key, block] : cx.blocks) {
    for (std::size_t i = 0; i < n; ++i) block.coboundary.emplace_back(block.dimension(i), block.dimension(i + 1));
  }

  auto index_of = [&](EdgeSet a, std::uint32_t word, std::uint32_t code) {
    const VertexData& d = data[a];
    const int deg = d.degree[code] + d.circles;
    return d.base[__builtin_popcount(word)][deg] + ranks[subset_size(a)][word] * d.count[deg] + d.rank[code];
  };

  const std::vector<std::uint32_t> pow3 = pow3_table(std::max(max_circles, 1));
  const QuadInt scalars[3] = {QuadInt(1), QuadInt::sqrt3(), QuadInt(3)};
  std::array<int, 64> digits{};
  std::vector<Term> v_terms, w_terms;
  for (const EdgeMapSpec& s : edges) {
    const EdgeSet a = s.from;
    const EdgeSet b = s.to();
    const VertexData& src = data[a];
    const VertexData& dst = data[b];
    const std::size_t i = subset_size(a);
    const bool negative = s.sign_exponent % 2 != 0;
    for (std::uint32_t word = 0; word < (std::uint32_t{1} << i); ++word) {
      const int j = __builtin_popcount(word);
      const std::uint32_t target_word = word << 1;
      for (std::uint32_t code = 0; code < src.degree.size(); ++code) {
        for (std::uint32_t c = code, t = 0; t < static_cast<std::uint32_t>(src.circles); ++t, c /= 3) digits[t] = c % 3;
        apply_face_map(s.v, digits, 0, 0, pow3, v_terms);
        if (v_terms.empty()) continue;
        apply_face_map(s.w, digits, src.v_circles, dst.v_circles, pow3, w_terms);
        if (w_terms.empty()) continue;
        const int k = src.degree[code] + 2 * static_cast<int>(i);
        BidegreeComplex& block = cx.blocks.at({j, k});
        const std::uint32_t row = index_of(a, word, code);
        for (const Term& v : v_terms)
          for (const Term& w : w_terms) {
            const std::uint32_t target = v.code + w.code;
            if (dst.degree[target] + 2 * static_cast<int>(i + 1) != k)
              throw CubeError("coboundary does not preserve the bidegree");
            QuadInt coef = scalars[v.sqrt3_power + w.sqrt3_power];
            if (negative) coef = -coef;
            block.coboundary[i].add(row, index_of(b, target_word, target), coef);
          }
      }
    }
  }
  return cx;
}

std::string describe(const CochainComplex& c, const BasisElement& b) {
  static const char* powers[] = {"1", "x", "x^2"};
  const int nv = c.faces[b.subset];
  const int nw = c.dual_faces[b.subset];
  std::string s = "A=" + subset_bits(b.subset, c.edges) + " N=";
  const int len = subset_size(b.subset);
  if (len == 0) s += "-";
  for (int t = 0; t < len; ++t) s += (b.nword >> t) & 1u ? 'y' : '1';
  s += " M=(";
  std::uint32_t code = b.mcode;
  for (int t = 0; t < nv + nw; ++t, code /= 3) {
    if (t == nv) s += t ? " | " : "| ";
    else if (t) s += ",";
    s += powers[code % 3];
  }
  if (nv == nv + nw) s += " |";
  return s + ")";
}

std::optional<D2Witness> find_d2_violation(const CochainComplex& c) {
  for (const auto& [key, block] : c.blocks)
    for (std::size_t i = 0; i + 1 < block.coboundary.size(); ++i) {
      const SparseQuadMatrix& first = block.coboundary[i];
      const SparseQuadMatrix& second = block.coboundary[i + 1];
      for (std::size_t r = 0; r < first.rows(); ++r) {
        std::map<std::uint32_t, QuadInt> sum;
        for (const auto& [mid, x] : first.row(r))
          for (const auto& [col, y] : second.row(mid)) sum[col] += x * y;
        for (const auto& [col, v] : sum)
          if (!v.is_zero()) return D2Witness{i, key.first, key.second, describe(c, block.basis[i][r])};
      }
    }
  return std::nullopt;
}

}  // namespace pdgh
