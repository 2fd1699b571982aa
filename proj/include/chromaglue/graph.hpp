// Graphs on vertex set [n], the single-vertex gluing operation, NUIG
// recognition/enumeration, and the circular gluings (simple and directed).
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chromaglue/qpoly.hpp"

namespace chromaglue {

/// Simple graph on vertices 1..n; edges stored as ordered pairs i < j.
class Graph {
 public:
  Graph() : n_(0) {}
  /// Validates 1 <= i < j <= n, rejects duplicates and loops.
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  /// Bitmask of neighbours of v (bit k set means vertex k+1 adjacent).
  uint32_t adj_mask(int v) const { return adj_[v - 1]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<uint32_t> adj_;
};

/// Directed multigraph with loops; also used (with directed=false) for the
/// undirected multigraphs produced by circular gluing. Multiplicities exact.
struct MultiDigraph {
  int n = 0;
  bool directed = true;
  /// Arc (u,v) -> multiplicity. Undirected edges are keyed with u <= v.
  std::map<std::pair<int, int>, int> arcs;

  bool has_loop() const;
  int total_multiplicity() const;
  bool operator==(const MultiDigraph& o) const = default;
};

enum class GraphKind { path, cycle, complete, almost_complete };

/// P_n, C_n, K_n, and K'_n (= K_n minus the edge {1,n}).
Graph standard_graph(GraphKind kind, int n);

/// Glue vertex n of g to vertex 1 of h; associative with identity P_1.
Graph glue(const Graph& g, const Graph& h);
Graph glue(std::initializer_list<Graph> graphs);

/// Edge {i,j} -> {n+1-j, n+1-i}; an involution.
Graph reverse(const Graph& g);

/// Natural unit interval graph test: {i,k} in E forces {i,j},{j,k} for i<j<k.
bool is_nuig(const Graph& g);

/// All NUIGs on [n] (one per Hessenberg function); Catalan(n) of them.
std::vector<Graph> enumerate_nuigs(int n);

/// Merge vertex n into vertex 1, keeping multiplicities; {1,n} becomes a loop.
MultiDigraph circle_glue(const Graph& g);

/// Direct every edge small -> large, then merge n into 1; edges {u,n} become
/// arcs u -> 1, the edge {1,n} a loop at 1.
MultiDigraph directed_circle_glue(const Graph& g);

/// View a simple graph as arcs directed small -> large (multiplicity 1).
MultiDigraph as_digraph(const Graph& g);

std::string to_string(const Graph& g);
std::string to_string(const MultiDigraph& g);

Int catalan(int n);

}  // namespace chromaglue
