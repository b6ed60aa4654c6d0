#include "multipack/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace multipack {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::uint64_t> fields;
};

// Splits into non-comment lines of unsigned integers.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;

    Line parsed{number, {}};
    std::size_t pos = first;
    while (pos < line.size()) {
      const auto end = std::min(line.find_first_of(" \t", pos), line.size());
      const auto token = line.substr(pos, end - pos);
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(number, "expected a non-negative integer, got '" + std::string(token) + "'");
      }
      parsed.fields.push_back(value);
      pos = line.find_first_not_of(" \t", end);
      if (pos == std::string_view::npos) break;
    }
    out.push_back(std::move(parsed));
  }
  return out;
}

void expect_fields(const Line& line, std::size_t count, const char* what) {
  if (line.fields.size() != count) {
    throw ParseError(line.number, std::string("expected ") + what);
  }
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing header \"n m\"");
  expect_fields(lines[0], 2, "header \"n m\"");
  const auto n = lines[0].fields[0];
  const auto m = lines[0].fields[1];
  if (n > 1'000'000) throw ParseError(lines[0].number, "vertex count too large");
  if (lines.size() - 1 != m) {
    throw ParseError(lines[0].number,
                     "header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    expect_fields(lines[i], 2, "edge \"u v\"");
    const auto u = lines[i].fields[0], v = lines[i].fields[1];
    if (u >= n || v >= n) {
      throw ParseError(lines[i].number, "endpoint out of range in edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    if (u == v) throw ParseError(lines[i].number, "self-loop at vertex " + std::to_string(u));
    const Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) {
      throw ParseError(lines[i].number, "duplicate edge " + std::to_string(e.first) + "-" + std::to_string(e.second));
    }
    edges.push_back(e);
  }
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

HittingSetInstance parse_hitting_set(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing header \"n m k\"");
  expect_fields(lines[0], 3, "header \"n m k\"");
  HittingSetInstance inst;
  inst.n = static_cast<std::uint32_t>(lines[0].fields[0]);
  const auto m = lines[0].fields[1];
  inst.k = static_cast<std::uint32_t>(lines[0].fields[2]);
  if (inst.k < 2) throw ParseError(lines[0].number, "k < 2");
  if (lines.size() - 1 != m) {
    throw ParseError(lines[0].number,
                     "header announces " + std::to_string(m) + " sets, found " + std::to_string(lines.size() - 1));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& f = lines[i].fields;
    if (f.empty() || f[0] == 0) throw ParseError(lines[i].number, "empty set");
    if (f.size() != f[0] + 1) throw ParseError(lines[i].number, "set size does not match its element count");
    std::vector<std::uint32_t> set;
    for (std::size_t j = 1; j < f.size(); ++j) {
      if (f[j] >= inst.n) throw ParseError(lines[i].number, "element " + std::to_string(f[j]) + " out of range");
      set.push_back(static_cast<std::uint32_t>(f[j]));
    }
    inst.family.push_back(std::move(set));
  }
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return inst;
}

std::string serialize_hitting_set(const HittingSetInstance& inst) {
  std::ostringstream os;
  os << inst.n << ' ' << inst.family.size() << ' ' << inst.k << '\n';
  for (const auto& set : inst.family) {
    os << set.size();
    for (auto e : set) os << ' ' << e;
    os << '\n';
  }
  return os.str();
}

VertexSet parse_vertex_set(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing size line");
  expect_fields(lines[0], 1, "size line");
  std::vector<Vertex> members;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    for (auto v : lines[i].fields) members.push_back(static_cast<Vertex>(v));
  }
  if (members.size() != lines[0].fields[0]) {
    throw ParseError(lines[0].number, "size line says " + std::to_string(lines[0].fields[0]) + ", found " +
                                          std::to_string(members.size()) + " members");
  }
  try {
    return VertexSet(std::move(members));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string serialize_vertex_set(const VertexSet& s) {
  std::ostringstream os;
  os << s.size() << '\n';
  for (Vertex v : s) os << v << '\n';
  return os.str();
}

std::string serialize_labels(const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) out += std::to_string(i) + '\t' + labels[i] + '\n';
  return out;
}

std::string serialize_claims(const std::vector<Claim>& claims) {
  std::string out;
  for (const auto& c : claims) out += c.tag() + '\n';
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace multipack
