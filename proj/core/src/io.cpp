#include "hbip/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace hbip {

namespace {

// Feeds non-blank, non-comment lines one at a time with their line numbers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::istringstream& tokens, int& line_no) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_;
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (line[start] == 'c') continue;
      tokens.clear();
      tokens.str(line);
      line_no = line_;
      return true;
    }
    return false;
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

long long parse_number(std::istringstream& tokens, int line, const char* what) {
  long long value = 0;
  if (!(tokens >> value)) throw ParseError(std::string("expected ") + what, line);
  return value;
}

void expect_end(std::istringstream& tokens, int line) {
  std::string rest;
  if (tokens >> rest) throw ParseError("unexpected trailing token '" + rest + "'", line);
}

Vertex to_vertex(long long id, long long n, int line, const char* what) {
  if (id < 1 || id > n) {
    throw ParseError(std::string(what) + " " + std::to_string(id) + " out of range 1.." +
                         std::to_string(n),
                     line);
  }
  return static_cast<Vertex>(id - 1);
}

std::vector<std::pair<Vertex, Vertex>> parse_edge_lines(LineReader& reader, long long n,
                                                        long long m, const char* kind) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::istringstream tokens;
  int line = 0;
  while (static_cast<long long>(edges.size()) < m) {
    if (!reader.next(tokens, line)) {
      throw ParseError("expected " + std::to_string(m) + " " + kind + " lines, found " +
                           std::to_string(edges.size()),
                       0);
    }
    const Vertex u = to_vertex(parse_number(tokens, line, "an endpoint"), n, line, "endpoint");
    const Vertex v = to_vertex(parse_number(tokens, line, "an endpoint"), n, line, "endpoint");
    expect_end(tokens, line);
    if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u + 1), line);
    const auto key = std::minmax(u, v);
    if (!seen.insert(key).second) {
      throw ParseError("duplicate edge " + std::to_string(key.first + 1) + " " +
                           std::to_string(key.second + 1),
                       line);
    }
    edges.emplace_back(u, v);
  }
  return edges;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  LineReader reader(in);
  std::istringstream tokens;
  int line = 0;
  if (!reader.next(tokens, line)) throw ParseError("empty graph input", 0);
  std::string tag, kind;
  if (!(tokens >> tag >> kind) || tag != "p" || kind != "tw") {
    throw ParseError("expected header 'p tw <n> <m>'", line);
  }
  const long long n = parse_number(tokens, line, "vertex count");
  const long long m = parse_number(tokens, line, "edge count");
  expect_end(tokens, line);
  if (n < 0 || m < 0) throw ParseError("counts must be non-negative", line);

  auto edges = parse_edge_lines(reader, n, m, "edge");
  if (reader.next(tokens, line)) throw ParseError("unexpected extra line", line);
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

void emit_graph(std::ostream& out, const Graph& g) {
  out << "p tw " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

TreeDecomposition parse_decomposition(std::istream& in, const Graph& g) {
  LineReader reader(in);
  std::istringstream tokens;
  int line = 0;
  if (!reader.next(tokens, line)) throw ParseError("empty decomposition input", 0);
  std::string tag, kind;
  if (!(tokens >> tag >> kind) || tag != "s" || kind != "td") {
    throw ParseError("expected header 's td <bags> <size> <n>'", line);
  }
  const long long bag_count = parse_number(tokens, line, "bag count");
  const long long declared_size = parse_number(tokens, line, "largest bag size");
  const long long n = parse_number(tokens, line, "vertex count");
  expect_end(tokens, line);
  if (bag_count < 1) throw ParseError("at least one bag is required", line);
  if (n != g.order()) {
    throw ParseError("decomposition is for " + std::to_string(n) + " vertices, graph has " +
                         std::to_string(g.order()),
                     line);
  }

  TreeDecomposition td;
  td.bags.assign(static_cast<std::size_t>(bag_count), {});
  std::vector<bool> seen(static_cast<std::size_t>(bag_count), false);
  long long bags_read = 0;
  std::vector<std::pair<int, int>> edges;

  while (reader.next(tokens, line)) {
    std::string head;
    tokens >> head;
    if (head == "b") {
      const long long id = parse_number(tokens, line, "a bag id");
      if (id < 1 || id > bag_count) {
        throw ParseError("bag id " + std::to_string(id) + " out of range 1.." +
                             std::to_string(bag_count),
                         line);
      }
      if (seen[static_cast<std::size_t>(id - 1)]) {
        throw ParseError("bag " + std::to_string(id) + " listed twice", line);
      }
      seen[static_cast<std::size_t>(id - 1)] = true;
      ++bags_read;
      auto& bag = td.bags[static_cast<std::size_t>(id - 1)];
      long long v = 0;
      while (tokens >> v) bag.push_back(to_vertex(v, n, line, "bag vertex"));
      if (tokens.fail() && !tokens.eof()) throw ParseError("expected vertex ids", line);
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
        throw ParseError("bag " + std::to_string(id) + " repeats a vertex", line);
      }
    } else {
      // A bag-tree edge line: two 1-based bag ids.
      std::istringstream pair_tokens(head);
      long long i = 0;
      if (!(pair_tokens >> i) || !pair_tokens.eof()) {
        throw ParseError("expected 'b <id> ...' or '<i> <j>'", line);
      }
      const long long j = parse_number(tokens, line, "a bag id");
      expect_end(tokens, line);
      for (long long id : {i, j}) {
        if (id < 1 || id > bag_count) {
          throw ParseError("bag id " + std::to_string(id) + " out of range 1.." +
                               std::to_string(bag_count),
                           line);
        }
      }
      if (i == j) {
        throw ParseError("bag-tree edge joins bag " + std::to_string(i) + " to itself", line);
      }
      edges.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
    }
  }

  if (bags_read != bag_count) {
    throw ParseError("header announced " + std::to_string(bag_count) + " bags, found " +
                         std::to_string(bags_read),
                     0);
  }
  if (static_cast<long long>(edges.size()) != bag_count - 1) {
    throw ParseError("expected " + std::to_string(bag_count - 1) + " bag-tree edges, found " +
                         std::to_string(edges.size()),
                     0);
  }
  std::size_t largest = 0;
  for (const auto& bag : td.bags) largest = std::max(largest, bag.size());
  if (static_cast<long long>(largest) != declared_size) {
    throw ParseError("header declares largest bag size " + std::to_string(declared_size) +
                         ", actual largest is " + std::to_string(largest),
                     0);
  }
  td.tree_edges = std::move(edges);
  return td;
}

void emit_decomposition(std::ostream& out, const TreeDecomposition& t, Vertex n) {
  std::size_t largest = 0;
  for (const auto& bag : t.bags) largest = std::max(largest, bag.size());
  out << "s td " << t.bags.size() << ' ' << largest << ' ' << n << '\n';
  for (std::size_t i = 0; i < t.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : t.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (auto [i, j] : t.tree_edges) out << i + 1 << ' ' << j + 1 << '\n';
}

PatternGraph parse_pattern(std::istream& in) {
  LineReader reader(in);
  std::istringstream tokens;
  int line = 0;
  if (!reader.next(tokens, line)) throw ParseError("empty pattern input", 0);
  std::string tag, kind;
  if (!(tokens >> tag >> kind) || tag != "p" || kind != "pat") {
    throw ParseError("expected header 'p pat <r> <m>'", line);
  }
  const long long r = parse_number(tokens, line, "vertex count");
  const long long m = parse_number(tokens, line, "edge count");
  expect_end(tokens, line);
  if (r < 0 || m < 0) throw ParseError("counts must be non-negative", line);

  const auto raw = parse_edge_lines(reader, r, m, "edge");
  if (reader.next(tokens, line)) throw ParseError("unexpected extra line", line);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw.size());
  for (auto [u, v] : raw) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  try {
    return PatternGraph::from_edges(static_cast<int>(r), edges);
  } catch (const InputError& e) {
    // Shape rules (size limits, at least one edge) live with the pattern
    // type; report them as a parse problem of this input.
    throw ParseError(e.what(), 0);
  }
}

void emit_pattern(std::ostream& out, const PatternGraph& h) {
  out << "p pat " << h.order() << ' ' << h.edge_count() << '\n';
  for (auto [u, v] : h.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

PatternGraph resolve_pattern(const std::string& spec) {
  if (spec.size() >= 2) {
    const char head = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[0])));
    const std::string digits = spec.substr(1);
    const bool numeric =
        std::all_of(digits.begin(), digits.end(),
                    [](unsigned char c) { return std::isdigit(c) != 0; });
    if (numeric && (head == 'K' || head == 'P' || head == 'C')) {
      const int r = std::stoi(digits);
      switch (head) {
        case 'K': return PatternGraph::clique(r);
        case 'P': return PatternGraph::path(r);
        default: return PatternGraph::cycle(r);
      }
    }
  }
  std::ifstream file(spec);
  if (!file) {
    throw InputError("pattern '" + spec +
                     "' is neither a named shape (K#, P#, C#) nor a readable file");
  }
  return parse_pattern(file);
}

}  // namespace hbip
