#include "m2tc/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "m2tc/errors.hpp"

namespace m2tc {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t to_number(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

class VertexReader {
 public:
  VertexReader(std::uint64_t n, bool one_based) : n_(n), one_based_(one_based) {}

  Vertex operator()(std::string_view token, std::size_t line) const {
    std::uint64_t id = to_number(token, line);
    if (one_based_) {
      if (id == 0) throw ParseError(line, "vertex id 0 is invalid with one-based ids");
      --id;
    }
    if (id >= n_) {
      throw ParseError(line, "vertex id " + std::string(token) + " out of range for n = " +
                                 std::to_string(n_));
    }
    return static_cast<Vertex>(id);
  }

 private:
  std::uint64_t n_;
  bool one_based_;
};

}  // namespace

ParsedGraph parse_digraph(std::string_view text, const ParseOptions& options) {
  std::optional<std::uint64_t> n, m;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::optional<VertexSet> terminals;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!n) {
      if (tokens.size() != 2) throw ParseError(line_no, "expected header \"n m\"");
      n = to_number(tokens[0], line_no);
      m = to_number(tokens[1], line_no);
      if (*n >= kNoVertex) throw ParseError(line_no, "vertex count too large");
      edges.reserve(static_cast<std::size_t>(*m));
      continue;
    }
    VertexReader read_vertex(*n, options.one_based);

    if (tokens.front().starts_with("T:")) {
      if (terminals) throw ParseError(line_no, "duplicate T line");
      if (edges.size() != *m) {
        throw ParseError(line_no, "T line before all " + std::to_string(*m) + " edges were read");
      }
      std::vector<std::string_view> rest;
      if (tokens.front().size() > 2) rest.push_back(tokens.front().substr(2));
      rest.insert(rest.end(), tokens.begin() + 1, tokens.end());
      if (rest.empty()) throw ParseError(line_no, "T line is missing its count");
      std::uint64_t k = to_number(rest.front(), line_no);
      if (rest.size() - 1 != k) {
        throw ParseError(line_no, "T line declares " + std::to_string(k) + " vertices but lists " +
                                      std::to_string(rest.size() - 1));
      }
      VertexSet t(static_cast<std::size_t>(*n));
      for (std::size_t i = 1; i < rest.size(); ++i) {
        Vertex v = read_vertex(rest[i], line_no);
        if (t.contains(v)) throw ParseError(line_no, "vertex listed twice in T");
        t.insert(v);
      }
      terminals = std::move(t);
      continue;
    }

    if (terminals) throw ParseError(line_no, "unexpected content after the T line");
    if (edges.size() == *m) {
      throw ParseError(line_no, "more edge lines than the declared " + std::to_string(*m));
    }
    if (tokens.size() != 2) throw ParseError(line_no, "malformed edge line, expected \"u v\"");
    Vertex u = read_vertex(tokens[0], line_no);
    Vertex v = read_vertex(tokens[1], line_no);
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::string(tokens[0]));
    if (!seen.insert({u, v}).second) {
      throw ParseError(line_no, "duplicate edge " + std::string(tokens[0]) + " " +
                                    std::string(tokens[1]));
    }
    edges.push_back({u, v});
  }

  if (!n) throw ParseError(0, "missing header \"n m\"");
  if (edges.size() != *m) {
    throw ParseError(0, "expected " + std::to_string(*m) + " edges, found " +
                            std::to_string(edges.size()));
  }
  return {Digraph(static_cast<std::size_t>(*n), std::move(edges)), std::move(terminals)};
}

ParsedGraph read_digraph_file(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_digraph(buffer.str(), options);
}

std::string format_digraph(const Digraph& g, const std::optional<VertexSet>& terminals,
                           bool one_based) {
  const Vertex shift = one_based ? 1 : 0;
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.from + shift << ' ' << e.to + shift << '\n';
  if (terminals) {
    auto members = terminals->members();
    out << "T: " << members.size();
    for (Vertex v : members) out << ' ' << v + shift;
    out << '\n';
  }
  return out.str();
}

}  // namespace m2tc
