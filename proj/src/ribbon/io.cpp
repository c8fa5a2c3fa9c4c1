#include "pdgh/ribbon/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace pdgh {

RibbonGraph parse_ribbon(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool header = false;

  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  std::unordered_map<std::string, std::size_t> vertex_line, edge_line, half_line;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(std::move(w));
    if (tok.empty()) continue;

    if (!header) {
      if (tok.size() != 2 || tok[0] != "ribbon" || tok[1] != "v1")
        throw ParseError(line_no, "expected header 'ribbon v1'");
      header = true;
      continue;
    }
    if (tok[0] == "vertex") {
      if (tok.size() < 2) throw ParseError(line_no, "vertex line needs an identifier");
      if (!vertex_line.emplace(tok[1], line_no).second) throw ParseError(line_no, "duplicate vertex '" + tok[1] + "'");
      VertexSpec v{tok[1], {tok.begin() + 2, tok.end()}};
      for (const auto& h : v.rotation)
        if (!half_line.emplace(h, line_no).second)
          throw ParseError(line_no, "half-edge '" + h + "' already appears in a rotation");
      vertices.push_back(std::move(v));
    } else if (tok[0] == "edge") {
      if (tok.size() != 5) throw ParseError(line_no, "edge line must be 'edge <eid> <hA> <hB> <+|->'");
      if (!edge_line.emplace(tok[1], line_no).second) throw ParseError(line_no, "duplicate edge '" + tok[1] + "'");
      Twist twist;
      if (tok[4] == "+") twist = Twist::untwisted;
      else if (tok[4] == "-") twist = Twist::twisted;
      else throw ParseError(line_no, "bad twist token '" + tok[4] + "' (expected + or -)");
      if (tok[2] == tok[3]) throw ParseError(line_no, "edge '" + tok[1] + "' uses half-edge '" + tok[2] + "' twice");
      edges.push_back({tok[1], tok[2], tok[3], twist});
    } else {
      throw ParseError(line_no, "unknown record '" + tok[0] + "'");
    }
  }
  if (!header) throw ParseError(line_no, "missing header 'ribbon v1'");

  // cross-reference edges against rotations
  std::unordered_map<std::string, std::size_t> used;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::size_t at = edge_line[edges[k].name];
    for (const auto* h : {&edges[k].end_a, &edges[k].end_b}) {
      if (!half_line.count(*h)) throw ParseError(at, "half-edge '" + *h + "' is not in any vertex rotation");
      if (!used.emplace(*h, at).second) throw ParseError(at, "half-edge '" + *h + "' is used by two edges");
    }
  }
  for (const auto& [h, at] : half_line)
    if (!used.count(h)) throw ParseError(at, "half-edge '" + h + "' belongs to no edge");

  try {
    return RibbonGraph(std::move(vertices), std::move(edges));
  } catch (const GraphError& e) {
    throw ParseError(line_no, e.what());
  }
}

RibbonGraph read_ribbon_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ribbon(buf.str());
}

std::string serialize_ribbon(const RibbonGraph& g) {
  std::ostringstream os;
  os << "ribbon v1\n";
  for (const auto& v : g.vertices()) {
    os << "vertex " << v.name;
    for (const auto& h : v.rotation) os << ' ' << h;
    os << '\n';
  }
  for (const auto& e : g.edges())
    os << "edge " << e.name << ' ' << e.end_a << ' ' << e.end_b << ' ' << (e.twist == Twist::untwisted ? '+' : '-')
       << '\n';
  return os.str();
}

}  // namespace pdgh
