#pragma once

// Line-oriented graph files:
//
//   ribbon v1
//   vertex <vid> <h1> <h2> ...      rotation in cyclic order, possibly empty
//   edge <eid> <hA> <hB> <+|->      + untwisted, - twisted
//
// '#' starts a comment. Edge lines fix the edge order.

#include "pdgh/ribbon/ribbon_graph.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pdgh {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

RibbonGraph parse_ribbon(std::string_view text);
RibbonGraph read_ribbon_file(const std::filesystem::path& path);
std::string serialize_ribbon(const RibbonGraph& g);

}  // namespace pdgh
