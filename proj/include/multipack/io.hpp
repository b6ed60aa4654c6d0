#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "multipack/graph.hpp"
#include "multipack/oracle.hpp"
#include "multipack/reductions.hpp"

namespace multipack {

/// Malformed input text. `line` is 1-based; 0 when the problem is not tied
/// to a line (for example a missing header).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Edge-list format: header "n m", then m lines "u v". Lines starting with '#'
// and blank lines are skipped.
Graph parse_graph(std::string_view text);
/// Canonical form: header, then edges (u < v) ascending, newline-terminated.
std::string serialize_graph(const Graph& g);

// Hitting-set format: header "n m k", then m lines "s a1 ... as".
HittingSetInstance parse_hitting_set(std::string_view text);
std::string serialize_hitting_set(const HittingSetInstance& inst);

// Set file: first line is the size, then that many ids (any whitespace).
VertexSet parse_vertex_set(std::string_view text);
std::string serialize_vertex_set(const VertexSet& s);

/// One "id<TAB>label" line per vertex.
std::string serialize_labels(const std::vector<std::string>& labels);
/// One tag per line.
std::string serialize_claims(const std::vector<Claim>& claims);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace multipack
