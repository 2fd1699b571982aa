#include "chromaglue/json_io.hpp"

namespace chromaglue {

using nlohmann::json;

namespace {

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
  return json(v.get_str());
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

}  // namespace

json to_json(const QPoly& p) {
  json arr = json::array();
  for (const Int& c : p.coeffs()) arr.push_back(int_to_json(c));
  return arr;
}

QPoly qpoly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("QPoly JSON must be an array");
  std::vector<Int> coeffs;
  for (const auto& c : j) coeffs.push_back(int_from_json(c));
  return QPoly(std::move(coeffs));
}

json to_json(const QRat& r) {
  return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

QRat qrat_from_json(const json& j) {
  return QRat(qpoly_from_json(j.at("num")), qpoly_from_json(j.at("den")));
}

json to_json(const ESym& x) {
  json terms = json::array();
  for (const auto& [p, c] : x.terms())
    terms.push_back(json{{"partition", p}, {"coeff", to_json(c)}});
  return json{{"basis", "e"}, {"terms", terms}};
}

ESym esym_from_json(const json& j) {
  if (j.at("basis").get<std::string>() != "e")
    throw std::invalid_argument("only the e basis is supported");
  ESym out;
  for (const auto& t : j.at("terms"))
    out.add_term(t.at("partition").get<Partition>(), qrat_from_json(t.at("coeff")));
  return out;
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
  return json{{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph(j.at("n").get<int>(), std::move(edges));
}

json to_json(const MultiDigraph& g) {
  json arcs = json::array();
  for (const auto& [arc, m] : g.arcs)
    arcs.push_back(json{{"from", arc.first}, {"to", arc.second}, {"mult", m}});
  return json{{"n", g.n}, {"directed", g.directed}, {"arcs", arcs}};
}

json to_json(const ESymMatrix& m, const Graph& g) {
  json rows = json::array();
  for (int i = 1; i <= m.rows; ++i) {
    json row = json::array();
    for (int j2 = 1; j2 <= m.cols; ++j2) row.push_back(to_json(m.at(i, j2)));
    rows.push_back(row);
  }
  return json{{"graph", to_json(g)}, {"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

ESymMatrix matrix_from_json(const json& j) {
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  Graph g = graph_from_json(j.at("graph"));
  ESymMatrix m(rows, cols, g.n());
  const auto& entries = j.at("entries");
  for (int i = 1; i <= rows; ++i)
    for (int j2 = 1; j2 <= cols; ++j2) m.slot(i, j2) = esym_from_json(entries.at(i - 1).at(j2 - 1));
  return m;
}

json to_json(const Tableau& t) { return json{{"drops", t.drops}}; }

Tableau tableau_from_json(const json& j) {
  Tableau t{j.at("drops").get<std::vector<int>>()};
  if (!is_ballot_sequence(t.drops)) throw std::invalid_argument("drops are not a ballot sequence");
  return t;
}

}  // namespace chromaglue
