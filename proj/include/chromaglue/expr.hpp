// Graph-expression surface syntax:
//   expr    := seq | 'circ(' seq ')' | 'dcirc(' seq ')'
//   seq     := atom { '+' atom }
//   atom    := 'P'INT | 'K'INT | "K'"INT | 'C'INT | literal
//   literal := 'G{' 'n' '=' INT [';' INT'-'INT {',' INT'-'INT}] '}'
// Whitespace-insensitive; errors carry byte offsets.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chromaglue/graph.hpp"

namespace chromaglue {

class ParseError : public std::runtime_error {
 public:
  ParseError(size_t pos, const std::string& expected, const std::string& detail)
      : std::runtime_error("parse error at offset " + std::to_string(pos) + ": expected " +
                           expected + (detail.empty() ? "" : " (" + detail + ")")),
        pos(pos),
        expected(expected) {}
  size_t pos;
  std::string expected;
};

struct GraphAtom {
  enum class Kind { path, cycle, complete, almost_complete, literal };
  Kind kind = Kind::path;
  int n = 1;
  Graph literal;
};

struct GraphExpr {
  std::vector<GraphAtom> atoms;
  bool circled = false;
  bool directed = false;

  /// The glued sequence, before any circular gluing.
  Graph sequence_graph() const;
  bool is_multigraph_result() const { return circled; }
  /// circle_glue / directed_circle_glue of the sequence; requires circled.
  MultiDigraph circled_graph() const;
};

GraphExpr parse_graph_expr(const std::string& s);
std::string to_string(const GraphExpr& e);

}  // namespace chromaglue
