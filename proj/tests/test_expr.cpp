#include <doctest.h>

#include "chromaglue/expr.hpp"
#include "chromaglue/json_io.hpp"

using namespace chromaglue;

TEST_CASE("named atoms and gluing chains") {
  GraphExpr e = parse_graph_expr("K3+K3");
  CHECK_FALSE(e.circled);
  CHECK(e.sequence_graph() == Graph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}));

  GraphExpr p = parse_graph_expr(" P4 ");
  CHECK(p.sequence_graph() == standard_graph(GraphKind::path, 4));

  GraphExpr kp = parse_graph_expr("K'4");
  CHECK(kp.sequence_graph() == standard_graph(GraphKind::almost_complete, 4));
}

TEST_CASE("graph literals") {
  GraphExpr e = parse_graph_expr("G{n=5; 1-2,1-3,2-3,3-4,3-5,4-5}");
  CHECK(e.sequence_graph() == Graph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}));
  CHECK(parse_graph_expr("G{n=3}").sequence_graph() == Graph(3, {}));
  CHECK(parse_graph_expr("G { n = 2 ; 1-2 }").sequence_graph() == Graph(2, {{1, 2}}));
}

TEST_CASE("circular wrappers") {
  GraphExpr e = parse_graph_expr("circ(P2+C3+P1+C6+P3+C3)");
  CHECK(e.circled);
  CHECK_FALSE(e.directed);
  MultiDigraph m = e.circled_graph();
  CHECK(m.n == 12);
  CHECK(m.total_multiplicity() == 15);

  GraphExpr d = parse_graph_expr("dcirc(K'4)");
  CHECK(d.directed);
  CHECK(d.circled_graph().directed);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_graph_expr("P0"), ParseError);
  CHECK_THROWS_AS(parse_graph_expr("C2"), ParseError);
  CHECK_THROWS_AS(parse_graph_expr("K3+"), ParseError);
  CHECK_THROWS_AS(parse_graph_expr("circ(K3"), ParseError);
  CHECK_THROWS_AS(parse_graph_expr("K3)"), ParseError);
  CHECK_THROWS_AS(parse_graph_expr("G{n=2; 1-5}"), ParseError);
  CHECK_THROWS_AS(parse_graph_expr(""), ParseError);
  try {
    parse_graph_expr("K3+X4");
  } catch (const ParseError& e) {
    CHECK(e.pos == 3);
  }
}

TEST_CASE("print/parse fixed point") {
  for (const char* s :
       {"K3+K3", "circ(P2+C3+P1+C6+P3+C3)", "P4", "K'4+C5", "G{n=3; 1-2,2-3}+K3",
        "dcirc(P5)"}) {
    GraphExpr e1 = parse_graph_expr(s);
    std::string printed = to_string(e1);
    GraphExpr e2 = parse_graph_expr(printed);
    CHECK(to_string(e2) == printed);
    if (!e1.circled) CHECK(e1.sequence_graph() == e2.sequence_graph());
  }
}

TEST_CASE("JSON round trips") {
  QPoly p = q_factorial(4);
  CHECK(qpoly_from_json(to_json(p)) == p);

  QRat r(QPoly::monomial(1, 1) * q_integer(2), q_integer(3));
  CHECK(qrat_from_json(to_json(r)) == r);

  ESym x = ESym({3, 2}, QRat(q_integer(2))) + ESym({5}, QRat(QPoly(-7)));
  CHECK(esym_from_json(to_json(x)) == x);

  Graph g(5, {{1, 2}, {3, 5}});
  CHECK(graph_from_json(to_json(g)) == g);

  Tableau t{{1, 2, 1, 3}};
  CHECK(tableau_from_json(to_json(t)) == t);

  // Oversized coefficients round trip through strings.
  QPoly big = q_factorial(25);
  CHECK(qpoly_from_json(to_json(big)) == big);
}

TEST_CASE("matrix JSON round trip") {
  Graph g = standard_graph(GraphKind::complete, 3);
  ESymMatrix m = ft_matrix(g, 3, true);
  nlohmann::json j = to_json(m, g);
  CHECK(j.at("rows") == m.rows);
  CHECK(j.at("cols") == 3);
  ESymMatrix back = matrix_from_json(j);
  CHECK(back.window_equal(m));
  CHECK(back.graph_n == 3);
}
