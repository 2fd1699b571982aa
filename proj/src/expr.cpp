#include "chromaglue/expr.hpp"

#include <cctype>
#include <sstream>

namespace chromaglue {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const std::string& what) {
    if (!accept(c)) throw ParseError(pos, what, "");
  }
  bool accept_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }
  int integer(const std::string& what) {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw ParseError(start, what, "");
    long v = std::stol(s.substr(start, pos - start));
    if (v > 1000000) throw ParseError(start, what, "integer too large");
    return static_cast<int>(v);
  }
};

GraphAtom parse_atom(Cursor& cur) {
  cur.skip_ws();
  size_t at = cur.pos;
  GraphAtom atom;
  if (cur.peek() == 'G') {
    ++cur.pos;
    cur.expect('{', "'{' opening graph literal");
    cur.expect('n', "'n' in graph literal");
    cur.expect('=', "'=' in graph literal");
    int n = cur.integer("vertex count");
    std::vector<std::pair<int, int>> edges;
    if (cur.accept(';')) {
      while (cur.peek() != '}') {
        int u = cur.integer("edge endpoint");
        cur.expect('-', "'-' between edge endpoints");
        int v = cur.integer("edge endpoint");
        edges.emplace_back(u, v);
        if (!cur.accept(',')) break;
      }
    }
    cur.expect('}', "'}' closing graph literal");
    atom.kind = GraphAtom::Kind::literal;
    atom.n = n;
    try {
      atom.literal = Graph(n, std::move(edges));
    } catch (const std::invalid_argument& e) {
      throw ParseError(at, "well-formed graph literal", e.what());
    }
    return atom;
  }
  char c = cur.peek();
  if (c == 'P' || c == 'K' || c == 'C') {
    ++cur.pos;
    bool prime = (c == 'K') && cur.accept('\'');
    atom.kind = c == 'P'   ? GraphAtom::Kind::path
                : c == 'C' ? GraphAtom::Kind::cycle
                : prime    ? GraphAtom::Kind::almost_complete
                           : GraphAtom::Kind::complete;
    atom.n = cur.integer("family size");
    // Validate the size bound eagerly so errors carry the atom position.
    try {
      switch (atom.kind) {
        case GraphAtom::Kind::path:
          standard_graph(GraphKind::path, atom.n);
          break;
        case GraphAtom::Kind::cycle:
          standard_graph(GraphKind::cycle, atom.n);
          break;
        case GraphAtom::Kind::complete:
          standard_graph(GraphKind::complete, atom.n);
          break;
        case GraphAtom::Kind::almost_complete:
          standard_graph(GraphKind::almost_complete, atom.n);
          break;
        default:
          break;
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(at, "family size within bounds", e.what());
    }
    return atom;
  }
  throw ParseError(cur.pos, "atom: P<n>, K<n>, K'<n>, C<n>, or G{...}", "");
}

std::vector<GraphAtom> parse_seq(Cursor& cur) {
  std::vector<GraphAtom> atoms;
  atoms.push_back(parse_atom(cur));
  while (cur.accept('+')) atoms.push_back(parse_atom(cur));
  return atoms;
}

}  // namespace

GraphExpr parse_graph_expr(const std::string& s) {
  Cursor cur{s};
  GraphExpr expr;
  if (cur.accept_word("circ(")) {
    expr.circled = true;
  } else if (cur.accept_word("dcirc(")) {
    expr.circled = true;
    expr.directed = true;
  }
  expr.atoms = parse_seq(cur);
  if (expr.circled) cur.expect(')', "')' closing circ(...)");
  if (!cur.eof()) throw ParseError(cur.pos, "end of expression", "");
  if (expr.circled && expr.sequence_graph().n() < 2)
    throw ParseError(0, "circular glue of a graph with at least 2 vertices", "");
  return expr;
}

Graph GraphExpr::sequence_graph() const {
  Graph acc = standard_graph(GraphKind::path, 1);
  for (const GraphAtom& a : atoms) {
    Graph g;
    switch (a.kind) {
      case GraphAtom::Kind::path:
        g = standard_graph(GraphKind::path, a.n);
        break;
      case GraphAtom::Kind::cycle:
        g = standard_graph(GraphKind::cycle, a.n);
        break;
      case GraphAtom::Kind::complete:
        g = standard_graph(GraphKind::complete, a.n);
        break;
      case GraphAtom::Kind::almost_complete:
        g = standard_graph(GraphKind::almost_complete, a.n);
        break;
      case GraphAtom::Kind::literal:
        g = a.literal;
        break;
    }
    acc = glue(acc, g);
  }
  return acc;
}

MultiDigraph GraphExpr::circled_graph() const {
  if (!circled) throw std::invalid_argument("expression is not circled");
  Graph g = sequence_graph();
  return directed ? directed_circle_glue(g) : circle_glue(g);
}

std::string to_string(const GraphExpr& e) {
  std::ostringstream out;
  if (e.circled) out << (e.directed ? "dcirc(" : "circ(");
  for (size_t i = 0; i < e.atoms.size(); ++i) {
    if (i) out << "+";
    const GraphAtom& a = e.atoms[i];
    switch (a.kind) {
      case GraphAtom::Kind::path:
        out << "P" << a.n;
        break;
      case GraphAtom::Kind::cycle:
        out << "C" << a.n;
        break;
      case GraphAtom::Kind::complete:
        out << "K" << a.n;
        break;
      case GraphAtom::Kind::almost_complete:
        out << "K'" << a.n;
        break;
      case GraphAtom::Kind::literal:
        out << to_string(a.literal);
        break;
    }
  }
  if (e.circled) out << ")";
  return out.str();
}

}  // namespace chromaglue
