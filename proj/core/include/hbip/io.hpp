#pragma once

#include <iosfwd>
#include <string>

#include "hbip/decomposition.hpp"
#include "hbip/graph.hpp"
#include "hbip/pattern.hpp"

namespace hbip {

// Carries the 1-based line number of the offending input line (0 when the
// problem is not tied to a single line, e.g. premature end of file).
class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, int line)
      : InputError(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Graph files: 'c' comment lines, one 'p tw <n> <m>' header, then m lines
// '<u> <v>' with 1-based endpoints.
Graph parse_graph(std::istream& in);
void emit_graph(std::ostream& out, const Graph& g);

// Decomposition files: 'c' comments, one 's td <bags> <size> <n>' header
// where <size> must equal the largest bag size and <n> the graph order,
// 'b <id> <vertices...>' lines (all 1-based), then '<i> <j>' bag-tree edge
// lines. Checks syntax and the declared numbers; use validate() for the
// decomposition properties themselves.
TreeDecomposition parse_decomposition(std::istream& in, const Graph& g);
void emit_decomposition(std::ostream& out, const TreeDecomposition& t, Vertex n);

// Pattern files: 'c' comments, one 'p pat <r> <m>' header, then m edge
// lines, 1-based.
PatternGraph parse_pattern(std::istream& in);
void emit_pattern(std::ostream& out, const PatternGraph& h);

// Accepts K<r> (complete), P<r> (path), C<r> (cycle) or a path to a pattern
// file. Names win over files of the same name.
PatternGraph resolve_pattern(const std::string& spec);

}  // namespace hbip
