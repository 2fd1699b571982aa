// NBC trees, forest triples, subgraph triples, the matrix F_G, gluing via
// matrix product, the break bijection, and the trace identities.
//
// The NBC edge order is always lexicographic on (min,max) pairs.
#pragma once

#include <functional>
#include <optional>

#include "chromaglue/esym.hpp"
#include "chromaglue/graph.hpp"

namespace chromaglue {

struct TreeTriple {
  std::vector<int> vertices;                 // ascending
  std::vector<std::pair<int, int>> edges;    // i<j, sorted
  Composition alpha;                         // |alpha| == vertices.size()
  int r = 1;                                 // 1 <= r <= alpha[0]

  bool operator==(const TreeTriple& o) const = default;
};

/// Sequence of tree triples whose vertex sets partition [n], ordered by
/// minimum vertex.
struct ForestTriple {
  std::vector<TreeTriple> triples;

  bool operator==(const ForestTriple& o) const = default;
};

/// Same data with arbitrary connected subgraphs instead of NBC trees.
struct SubgraphTriple {
  std::vector<TreeTriple> triples;  // edges need not form trees
};

struct FTStats {
  Partition type;
  Partition reduced_type;
  int sign = 1;
  std::optional<long> weight;  // only for NUIG ambient graphs
};

/// True iff no cycle C of g has C \ {max(C)} contained in `edges`.
bool nbc_check(const Graph& g, const std::vector<std::pair<int, int>>& edges);
/// NUIG shortcut: no vertex of the tree has two larger tree-neighbours.
/// Coincides with nbc_check exactly when g is an NUIG.
bool nbc_check_nuig(const std::vector<std::pair<int, int>>& tree_edges);

/// list(T): read the smallest vertex, then repeatedly the smallest unread
/// vertex adjacent (in T) to a read one.
std::vector<int> tree_list_order(const std::vector<int>& vertices,
                                 const std::vector<std::pair<int, int>>& edges);
/// Number of G-inversions of the word: pairs a before b with a > b, {b,a} in E.
long inv_g(const Graph& g, const std::vector<int>& word);

/// Constraints selecting FT^(i)(G+P_j) inside FT(G+P_j).
struct FTFilter {
  int i = 1;
  int j = 1;
};

/// Exhaustive, deterministic enumeration of FT(g), or of FT^(i)(g+P_j) when a
/// filter is given (the path is glued internally). Guard: |g|+j-1 <= 12.
void for_each_forest_triple(const Graph& g, const std::optional<FTFilter>& filter,
                            const std::function<void(const ForestTriple&)>& visit);
std::vector<ForestTriple> enumerate_forest_triples(const Graph& g,
                                                   std::optional<FTFilter> filter = {});

/// type/sign/reduced type, plus weight when with_weight (ambient must be NUIG).
FTStats ft_stats(const ForestTriple& f, const Graph& ambient, bool with_weight);

/// Finite window of the infinite matrix F_G. Entries with i >= graph_n + j
/// vanish identically (and are served as zero outside the window); any other
/// out-of-window read is an error.
struct ESymMatrix {
  int rows = 0;
  int cols = 0;
  int graph_n = 0;
  std::vector<ESym> entries;  // row-major

  ESymMatrix() = default;
  ESymMatrix(int rows, int cols, int graph_n);
  const ESym& at(int i, int j) const;  // 1-based
  ESym& slot(int i, int j);
  bool window_equal(const ESymMatrix& o) const;
};

/// (F_G)_{i,j}: signed sum over FT^(i)(G+P_j) of e_{type'}; q-weighted when
/// with_q (requires NUIG).
ESym ft_matrix_entry(const Graph& g, int i, int j, bool with_q);
/// Window rows 1..n+cols-1, cols 1..cols.
ESymMatrix ft_matrix(const Graph& g, int cols, bool with_q);

enum class MatrixKind { path, complete, almost_complete, cycle_q1 };

/// Closed forms for F_{P_n}(q), F_{K_n}(q), F_{K'_n}(q), F_{C_n}(1).
ESym closed_form_matrix_entry(MatrixKind kind, int n, int i, int j);
ESymMatrix closed_form_matrix(MatrixKind kind, int n, int rows, int cols);

/// Requires a.cols >= b.graph_n + b.cols - 1 so every nonzero inner index is
/// covered; never truncates silently.
ESymMatrix matrix_mul(const ESymMatrix& a, const ESymMatrix& b);

/// X_G = v F_G w^T (q-variant with v(q)).
ESym x_from_matrix(const Graph& g, bool with_q);
/// X_G by direct signed summation over FT(G).
ESym x_forest_direct(const Graph& g, bool with_q);
/// X^{(i)}_G = (F_G)_{i,1}.
ESym x_component(const Graph& g, int i, bool with_q);
/// (F_G)_{i,j} through the glued clique: (F_{G+K_j})_{i,1} / [j-1]_q!.
ESym column_via_kj(const Graph& g, int i, int j, bool with_q);

/// The break bijection of the gluing identity. f must lie in
/// FT^(i)(g+h+P_j); returns (f|_g, f|_h) and the inner index k.
struct BrokenForest {
  ForestTriple left;   // in FT^(i)(g+P_k)
  ForestTriple right;  // in FT^(k)(h+P_j)
  int k = 1;
};
BrokenForest break_forest(const ForestTriple& f, const Graph& g, const Graph& h);
ForestTriple unbreak_forest(const ForestTriple& left, const ForestTriple& right, const Graph& g,
                            const Graph& h);

/// trace(F_G) = sum_{k=1}^{n-1} (F_G)_{k,k}; equals X of circle_glue(g).
ESym trace_x(const Graph& g);
/// trace(F_G(q)) for NUIG g (the q-trace conjecture's left-hand side).
ESym trace_q(const Graph& g);

/// Signed sum over ST^(i)(G+P_j), q = 1; equals ft_matrix_entry by the
/// subgraph-triple identity. Guard |g|+j-1 <= 9.
ESym subgraph_triple_sum(const Graph& g, int i, int j);

/// Explicit small-scale enumeration of ST^(i)(g+P_j) for tests.
void for_each_subgraph_triple(const Graph& g, int i, int j,
                              const std::function<void(const SubgraphTriple&)>& visit);
/// type/sign of a subgraph triple (first-Betti-number sign convention).
FTStats st_stats(const SubgraphTriple& s);

}  // namespace chromaglue
