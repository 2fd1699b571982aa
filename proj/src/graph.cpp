#include "chromaglue/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace chromaglue {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > 31) throw std::invalid_argument("Graph: vertex count out of range");
  for (auto& [i, j] : edges_) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n_ || i == j)
      throw std::invalid_argument("Graph: bad edge {" + std::to_string(i) + "," +
                                  std::to_string(j) + "}");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("Graph: duplicate edge");
  adj_.assign(n_, 0);
  for (auto [i, j] : edges_) {
    adj_[i - 1] |= 1u << (j - 1);
    adj_[j - 1] |= 1u << (i - 1);
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) return false;
  return (adj_[u - 1] >> (v - 1)) & 1u;
}

bool MultiDigraph::has_loop() const {
  for (const auto& [arc, m] : arcs)
    if (arc.first == arc.second) return true;
  return false;
}

int MultiDigraph::total_multiplicity() const {
  int t = 0;
  for (const auto& [arc, m] : arcs) t += m;
  return t;
}

Graph standard_graph(GraphKind kind, int n) {
  std::vector<std::pair<int, int>> e;
  switch (kind) {
    case GraphKind::path:
      if (n < 1) throw std::invalid_argument("path needs n >= 1");
      for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
      break;
    case GraphKind::cycle:
      if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
      for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(1, n);
      break;
    case GraphKind::complete:
      if (n < 1) throw std::invalid_argument("complete needs n >= 1");
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
      break;
    case GraphKind::almost_complete:
      if (n < 2) throw std::invalid_argument("almost-complete needs n >= 2");
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          if (!(i == 1 && j == n)) e.emplace_back(i, j);
      break;
  }
  return Graph(n, std::move(e));
}

Graph glue(const Graph& g, const Graph& h) {
  std::vector<std::pair<int, int>> e = g.edges();
  int shift = g.n() - 1;
  for (auto [i, j] : h.edges()) e.emplace_back(i + shift, j + shift);
  return Graph(g.n() + h.n() - 1, std::move(e));
}

Graph glue(std::initializer_list<Graph> graphs) {
  Graph acc = standard_graph(GraphKind::path, 1);
  for (const Graph& g : graphs) acc = glue(acc, g);
  return acc;
}

Graph reverse(const Graph& g) {
  std::vector<std::pair<int, int>> e;
  for (auto [i, j] : g.edges()) e.emplace_back(g.n() + 1 - j, g.n() + 1 - i);
  return Graph(g.n(), std::move(e));
}

bool is_nuig(const Graph& g) {
  for (auto [i, k] : g.edges())
    for (int j = i + 1; j < k; ++j)
      if (!g.has_edge(i, j) || !g.has_edge(j, k)) return false;
  return true;
}

std::vector<Graph> enumerate_nuigs(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("enumerate_nuigs: n out of range");
  std::vector<Graph> out;
  std::vector<int> h(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<std::pair<int, int>> e;
      for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= h[u - 1]; ++v) e.emplace_back(u, v);
      out.emplace_back(n, std::move(e));
      return;
    }
    int lo = std::max(i + 1, i > 0 ? h[i - 1] : 1);
    for (int v = lo; v <= n; ++v) {
      h[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

MultiDigraph circle_glue(const Graph& g) {
  if (g.n() < 2) throw std::invalid_argument("circle_glue needs |G| >= 2");
  MultiDigraph out;
  out.n = g.n() - 1;
  out.directed = false;
  for (auto [i, j] : g.edges()) {
    int u = i, v = (j == g.n()) ? 1 : j;
    if (u > v) std::swap(u, v);
    out.arcs[{u, v}] += 1;
  }
  return out;
}

MultiDigraph directed_circle_glue(const Graph& g) {
  if (g.n() < 2) throw std::invalid_argument("directed_circle_glue needs |G| >= 2");
  MultiDigraph out;
  out.n = g.n() - 1;
  out.directed = true;
  for (auto [i, j] : g.edges()) {
    int u = i, v = (j == g.n()) ? 1 : j;
    out.arcs[{u, v}] += 1;
  }
  return out;
}

MultiDigraph as_digraph(const Graph& g) {
  MultiDigraph out;
  out.n = g.n();
  out.directed = true;
  for (auto [i, j] : g.edges()) out.arcs[{i, j}] = 1;
  return out;
}

std::string to_string(const Graph& g) {
  std::ostringstream out;
  out << "G{n=" << g.n() << ";";
  for (size_t i = 0; i < g.edges().size(); ++i) {
    out << (i ? "," : " ") << g.edges()[i].first << "-" << g.edges()[i].second;
  }
  out << "}";
  return out.str();
}

std::string to_string(const MultiDigraph& g) {
  std::ostringstream out;
  out << (g.directed ? "D" : "M") << "{n=" << g.n << ";";
  bool first = true;
  for (const auto& [arc, m] : g.arcs) {
    for (int t = 0; t < m; ++t) {
      out << (first ? " " : ",") << arc.first << (g.directed ? ">" : "-") << arc.second;
      first = false;
    }
  }
  out << "}";
  return out.str();
}

Int catalan(int n) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
  return b / (n + 1);
}

}  // namespace chromaglue
