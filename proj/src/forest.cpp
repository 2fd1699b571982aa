#include "chromaglue/forest.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace chromaglue {

namespace {

int lowest_vertex(uint32_t mask) { return __builtin_ctz(mask) + 1; }

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

bool connected_in(const Graph& g, uint32_t mask) {
  if (mask == 0) return false;
  uint32_t seen = 1u << __builtin_ctz(mask);
  for (;;) {
    uint32_t next = seen;
    uint32_t frontier = seen;
    while (frontier) {
      int v = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      next |= g.adj_mask(v + 1) & mask;
    }
    if (next == seen) break;
    seen = next;
  }
  return seen == mask;
}

using Edge = std::pair<int, int>;

std::vector<Edge> edges_within(const Graph& g, uint32_t mask) {
  std::vector<Edge> out;
  for (auto [u, v] : g.edges())
    if ((mask >> (u - 1)) & 1 && (mask >> (v - 1)) & 1) out.emplace_back(u, v);
  return out;
}

// All spanning trees of g[mask] by include/exclude recursion over the sorted
// edge list, pruned by connectivity of chosen+remaining.
void for_each_spanning_tree(const Graph& g, uint32_t mask,
                            const std::function<void(const std::vector<Edge>&)>& visit) {
  const int size = __builtin_popcount(mask);
  if (size == 1) {
    visit({});
    return;
  }
  std::vector<Edge> edges = edges_within(g, mask);
  std::vector<Edge> chosen;
  std::vector<int> verts;
  for (int v = 1; v <= g.n(); ++v)
    if ((mask >> (v - 1)) & 1) verts.push_back(v);
  std::vector<int> slot(g.n() + 1, -1);
  for (size_t i = 0; i < verts.size(); ++i) slot[verts[i]] = static_cast<int>(i);

  std::function<void(size_t, Dsu&)> rec = [&](size_t idx, Dsu& dsu) {
    if (static_cast<int>(chosen.size()) == size - 1) {
      visit(chosen);
      return;
    }
    if (idx == edges.size()) return;
    // Can the remaining edges still connect everything?
    Dsu probe = dsu;
    int comps = size - static_cast<int>(chosen.size());
    for (size_t t = idx; t < edges.size() && comps > 1; ++t)
      if (probe.unite(slot[edges[t].first], slot[edges[t].second])) --comps;
    if (comps > 1) return;

    auto [u, v] = edges[idx];
    if (dsu.find(slot[u]) != dsu.find(slot[v])) {
      Dsu taken = dsu;
      taken.unite(slot[u], slot[v]);
      chosen.push_back(edges[idx]);
      rec(idx + 1, taken);
      chosen.pop_back();
    }
    rec(idx + 1, dsu);
  };
  Dsu dsu(size);
  rec(0, dsu);
}

// All connected spanning edge-subsets of g[mask] (subgraphs on exactly mask).
void for_each_connected_subgraph(const Graph& g, uint32_t mask,
                                 const std::function<void(const std::vector<Edge>&)>& visit) {
  const int size = __builtin_popcount(mask);
  std::vector<Edge> edges = edges_within(g, mask);
  std::vector<Edge> chosen;
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == edges.size()) {
      if (size == 1) {
        visit(chosen);
        return;
      }
      Dsu dsu(g.n() + 1);
      int comps = size;
      for (const auto& [u, v] : chosen)
        if (dsu.unite(u, v)) --comps;
      if (comps == 1) visit(chosen);
      return;
    }
    rec(idx + 1);
    chosen.push_back(edges[idx]);
    rec(idx + 1);
    chosen.pop_back();
  };
  rec(0);
}

}  // namespace

bool nbc_check(const Graph& g, const std::vector<Edge>& edges) {
  // A cyclic edge set contains a full cycle C, hence C \ {max C}.
  Dsu dsu(g.n() + 1);
  for (const auto& [u, v] : edges)
    if (!dsu.unite(u, v)) return false;
  // For a forest B: a broken circuit exists iff some non-tree edge e closes a
  // cycle whose other edges (the unique B-path) all precede e in lex order.
  std::vector<std::vector<std::pair<int, Edge>>> tree(g.n() + 1);
  for (const auto& e : edges) {
    tree[e.first].push_back({e.second, e});
    tree[e.second].push_back({e.first, e});
  }
  std::vector<Edge> sorted_edges = edges;
  std::sort(sorted_edges.begin(), sorted_edges.end());
  for (auto e : g.edges()) {
    if (std::binary_search(sorted_edges.begin(), sorted_edges.end(), e)) continue;
    if (dsu.find(e.first) != dsu.find(e.second)) continue;
    // Unique path from e.first to e.second in the forest.
    std::vector<Edge> via(g.n() + 1, {0, 0});
    std::vector<int> prev(g.n() + 1, 0), stack{e.first};
    prev[e.first] = e.first;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto& [w, ed] : tree[u]) {
        if (prev[w]) continue;
        prev[w] = u;
        via[w] = ed;
        stack.push_back(w);
      }
    }
    bool all_smaller = true;
    for (int w = e.second; w != e.first; w = prev[w]) {
      if (!(via[w] < e)) {
        all_smaller = false;
        break;
      }
    }
    if (all_smaller) return false;
  }
  return true;
}

bool nbc_check_nuig(const std::vector<Edge>& tree_edges) {
  std::map<int, int> larger;
  for (const auto& [u, v] : tree_edges)
    if (++larger[u] > 1) return false;
  return true;
}

std::vector<int> tree_list_order(const std::vector<int>& vertices, const std::vector<Edge>& edges) {
  if (vertices.empty()) return {};
  std::vector<int> order;
  std::vector<int> unread = vertices;
  std::sort(unread.begin(), unread.end());
  order.push_back(unread.front());
  unread.erase(unread.begin());
  auto adjacent = [&](int a, int b) {
    for (const auto& [u, v] : edges)
      if ((u == a && v == b) || (u == b && v == a)) return true;
    return false;
  };
  while (!unread.empty()) {
    bool advanced = false;
    for (size_t i = 0; i < unread.size(); ++i) {
      for (int seen : order) {
        if (adjacent(unread[i], seen)) {
          order.push_back(unread[i]);
          unread.erase(unread.begin() + i);
          advanced = true;
          break;
        }
      }
      if (advanced) break;
    }
    if (!advanced) throw invariant_error("tree_list_order: disconnected tree");
  }
  return order;
}

long inv_g(const Graph& g, const std::vector<int>& word) {
  long inv = 0;
  for (size_t a = 0; a < word.size(); ++a)
    for (size_t b = a + 1; b < word.size(); ++b)
      if (word[a] > word[b] && g.has_edge(word[b], word[a])) ++inv;
  return inv;
}

// ---------------------------------------------------------------------------
// Composition tables: per-block sums over (alpha, r) with the block's
// constraints. The r-sum contributes [alpha_1]_q (or alpha_1 at q = 1);
// anchored blocks fix r = 1 and/or restrict alpha_1 / alpha_last.
// ---------------------------------------------------------------------------

namespace {

enum class BlockKind { free_block, first_block, last_block, both_block };

ESym build_table(BlockKind kind, bool with_q, int s, int i, int j) {
  ESym out;
  switch (kind) {
    case BlockKind::free_block:
    case BlockKind::last_block:
      for (const Composition& alpha : compositions_of(s)) {
        if (kind == BlockKind::last_block && alpha.back() < j) continue;
        QPoly rfac = with_q ? q_integer(alpha[0]) : QPoly(alpha[0]);
        int sign = (alpha.size() - 1) % 2 ? -1 : 1;
        out.add_term(sort_to_partition(alpha), QRat(QPoly(sign) * rfac));
      }
      break;
    case BlockKind::first_block:
    case BlockKind::both_block:
      // alpha = (i, rest); reduced type drops that first part.
      if (s < i) break;
      if (s == i) {
        if (kind == BlockKind::first_block || s >= j) out.add_term({}, QRat(1));
        break;
      }
      for (const Composition& rest : compositions_of(s - i)) {
        if (kind == BlockKind::both_block && rest.back() < j) continue;
        int sign = rest.size() % 2 ? -1 : 1;
        out.add_term(sort_to_partition(rest), QRat(sign));
      }
      break;
  }
  return out;
}

const ESym& table(BlockKind kind, bool with_q, int s, int i, int j) {
  static std::map<std::tuple<BlockKind, bool, int, int, int>, ESym> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(kind, with_q, s, i, j);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_table(kind, with_q, s, i, j)).first;
  return it->second;
}

bool table_nonempty(BlockKind kind, int s, int i, int j) {
  switch (kind) {
    case BlockKind::free_block:
      return true;
    case BlockKind::last_block:
      return s >= j;
    case BlockKind::first_block:
      return s >= i;
    case BlockKind::both_block:
      return (s == i && s >= j) || s >= i + j;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Partition engine: sums over partitions of the ambient vertex set into
// blocks, each weighted by a per-mask scalar (NBC-tree inversion polynomial,
// NBC-tree count, or signed connected-subgraph count), grouped by block-size
// signature so the symmetric-function algebra runs once per signature.
// ---------------------------------------------------------------------------

struct EngineMode {
  bool with_q = false;        // track q^{weight}
  bool signed_subgraphs = false;  // subgraph triples instead of NBC forests
  bool anchored = true;       // constrain the blocks of vertex 1 and vertex n
};

class PartitionEngine {
 public:
  PartitionEngine(const Graph& base, int j, EngineMode mode)
      : base_(base), j_(j), mode_(mode) {
    if (j < 1) throw std::invalid_argument("path length j must be >= 1");
    ga_ = (j == 1) ? base : glue(base, standard_graph(GraphKind::path, j));
    N_ = ga_.n();
    if (N_ > 16) throw std::invalid_argument("forest engine cost guard: ambient size > 16");
    all_ = (N_ >= 32) ? ~0u : ((1u << N_) - 1);
    path_mask_ = 0;
    for (int v = base_.n(); v <= N_; ++v) path_mask_ |= 1u << (v - 1);
    if (mode_.with_q && !is_nuig(base_))
      throw std::invalid_argument("q-weighted forest sums require an NUIG");
  }

  const Graph& ambient() const { return ga_; }

  /// Signed (weighted) sum over FT^(i)(G+P_j) (or ST^(i)) with reduced type.
  ESym entry(int i) {
    if (i < 1) throw std::invalid_argument("matrix row index must be >= 1");
    if (i >= N_ + 1) return ESym();  // i >= n + j: empty by the zero pattern
    i_ = i;
    sig_.clear();
    sizes_.clear();
    recurse(0, QPoly(1));
    return assemble();
  }

  /// Full signed weighted sum over FT(G) (no anchors, full type).
  ESym full() {
    i_ = 0;
    sig_.clear();
    sizes_.clear();
    recurse(0, QPoly(1));
    return assemble();
  }

 private:
  struct Sig {
    int s_first = 0;   // block of vertex 1 (anchored mode)
    int s_last = 0;    // block of vertex n, 0 when merged with the first
    bool merged = false;
    std::vector<int> frees;
    bool operator<(const Sig& o) const {
      return std::tie(s_first, s_last, merged, frees) <
             std::tie(o.s_first, o.s_last, o.merged, o.frees);
    }
  };

  void recurse(uint32_t covered, const QPoly& acc) {
    if (covered == all_) {
      Sig key = current_sig();
      auto [it, inserted] = sig_.emplace(std::move(key), acc);
      if (!inserted) it->second += acc;
      return;
    }
    uint32_t free = all_ & ~covered;
    int v = lowest_vertex(free);
    for_each_connected_block(v, free, [&](uint32_t block) {
      // The glued path must live in one block with vertex n.
      if ((block & path_mask_) != 0 && (block & path_mask_) != path_mask_) {
        if (mode_.anchored) return;
        if (j_ > 1) return;  // full mode is only used with j == 1
      }
      int s = __builtin_popcount(block);
      BlockKind kind = block_kind(v, block);
      if (mode_.anchored && !table_nonempty(kind, s, i_, j_)) return;
      const QPoly& val = mask_value(block);
      if (val.is_zero()) return;
      QPoly next = acc * val;
      if (mode_.with_q) {
        long cross = 0;
        uint32_t bits = block;
        while (bits) {
          int c = __builtin_ctz(bits);
          bits &= bits - 1;
          uint32_t greater = (c + 1 >= 32) ? 0 : ~((1u << (c + 1)) - 1);
          cross += __builtin_popcount(covered & ga_.adj_mask(c + 1) & greater);
        }
        if (cross) next = next * QPoly::monomial(1, static_cast<int>(cross));
      }
      sizes_.push_back({kind, s});
      recurse(covered | block, next);
      sizes_.pop_back();
    });
  }

  BlockKind block_kind(int min_vertex, uint32_t block) const {
    if (!mode_.anchored) return BlockKind::free_block;
    bool has1 = min_vertex == 1;
    bool hasn = (block >> (base_.n() - 1)) & 1;
    if (has1 && hasn) return BlockKind::both_block;
    if (has1) return BlockKind::first_block;
    if (hasn) return BlockKind::last_block;
    return BlockKind::free_block;
  }

  Sig current_sig() const {
    Sig sig;
    for (const auto& [kind, s] : sizes_) {
      switch (kind) {
        case BlockKind::both_block:
          sig.s_first = s;
          sig.merged = true;
          break;
        case BlockKind::first_block:
          sig.s_first = s;
          break;
        case BlockKind::last_block:
          sig.s_last = s;
          break;
        case BlockKind::free_block:
          sig.frees.push_back(s);
          break;
      }
    }
    std::sort(sig.frees.begin(), sig.frees.end());
    return sig;
  }

  ESym assemble() const {
    ESym total;
    for (const auto& [sig, coeff] : sig_) {
      ESym prod = ESym::one();
      if (sig.s_first) {
        prod = prod * table(sig.merged ? BlockKind::both_block : BlockKind::first_block,
                            mode_.with_q, sig.s_first, i_, j_);
      }
      if (sig.s_last) prod = prod * table(BlockKind::last_block, mode_.with_q, sig.s_last, i_, j_);
      for (int s : sig.frees) prod = prod * table(BlockKind::free_block, mode_.with_q, s, i_, j_);
      total += QRat(coeff) * prod;
    }
    return total;
  }

  // Enumerate connected vertex sets containing v inside `free`, each once.
  void for_each_connected_block(int v, uint32_t free,
                                const std::function<void(uint32_t)>& visit) {
    uint32_t start = 1u << (v - 1);
    std::function<void(uint32_t, uint32_t, uint32_t)> grow = [&](uint32_t cur, uint32_t ext,
                                                                 uint32_t banned) {
      visit(cur);
      uint32_t candidates = ext;
      while (candidates) {
        int u = __builtin_ctz(candidates);
        candidates &= candidates - 1;
        uint32_t ubit = 1u << u;
        uint32_t newext = (ext | (ga_.adj_mask(u + 1) & free)) & ~(cur | ubit) & ~banned;
        grow(cur | ubit, newext, banned);
        banned |= ubit;
        ext &= ~ubit;
      }
    };
    grow(start, ga_.adj_mask(v) & free & ~start, ~free);
  }

  const QPoly& mask_value(uint32_t mask) {
    auto it = mask_memo_.find(mask);
    if (it != mask_memo_.end()) return it->second;
    QPoly val;
    if (mode_.signed_subgraphs) {
      int s = __builtin_popcount(mask);
      Int t = signed_connected_count(mask);
      Int c = (s % 2 == 0) ? Int(-t) : t;  // (-1)^{|S|-1} T(S)
      val = QPoly(c);
    } else {
      for_each_spanning_tree(ga_, mask, [&](const std::vector<Edge>& tree) {
        if (!nbc_check_within(mask, tree)) return;
        if (mode_.with_q) {
          std::vector<int> verts;
          for (int u = 1; u <= N_; ++u)
            if ((mask >> (u - 1)) & 1) verts.push_back(u);
          long w = inv_g(ga_, tree_list_order(verts, tree));
          val += QPoly::monomial(1, static_cast<int>(w));
        } else {
          val += QPoly(1);
        }
      });
    }
    return mask_memo_.emplace(mask, std::move(val)).first->second;
  }

  // Broken-circuit test restricted to cycles inside the block.
  bool nbc_check_within(uint32_t mask, const std::vector<Edge>& tree) {
    std::vector<Edge> sorted_tree = tree;
    std::sort(sorted_tree.begin(), sorted_tree.end());
    std::vector<int> prev(N_ + 1, 0);
    std::vector<Edge> via(N_ + 1, {0, 0});
    std::vector<std::vector<std::pair<int, Edge>>> adj(N_ + 1);
    for (const auto& e : tree) {
      adj[e.first].push_back({e.second, e});
      adj[e.second].push_back({e.first, e});
    }
    for (auto e : edges_within(ga_, mask)) {
      if (std::binary_search(sorted_tree.begin(), sorted_tree.end(), e)) continue;
      std::fill(prev.begin(), prev.end(), 0);
      std::vector<int> stack{e.first};
      prev[e.first] = e.first;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto& [w, ed] : adj[u]) {
          if (prev[w]) continue;
          prev[w] = u;
          via[w] = ed;
          stack.push_back(w);
        }
      }
      bool all_smaller = true;
      for (int w = e.second; w != e.first; w = prev[w]) {
        if (!(via[w] < e)) {
          all_smaller = false;
          break;
        }
      }
      if (all_smaller) return false;
    }
    return true;
  }

  // T(S): signed sum over connected spanning subgraphs of ga[S] of (-1)^{|E|}.
  // Inverts [E(ga[S]) empty] = sum over partitions into components of
  // prod T(component) by peeling the component of the minimum vertex.
  Int signed_connected_count(uint32_t mask) {
    auto it = t_memo_.find(mask);
    if (it != t_memo_.end()) return it->second;
    auto no_edges = [&](uint32_t m) {
      for (auto [u, v] : ga_.edges())
        if ((m >> (u - 1)) & 1 && (m >> (v - 1)) & 1) return false;
      return true;
    };
    Int t = no_edges(mask) ? 1 : 0;
    int v = __builtin_ctz(mask);
    uint32_t rest = mask ^ (1u << v);
    for (uint32_t sub = rest;; sub = (sub - 1) & rest) {
      uint32_t block = (1u << v) | sub;
      if (block != mask && no_edges(mask & ~block)) t -= signed_connected_count(block);
      if (sub == 0) break;
    }
    t_memo_[mask] = t;
    return t;
  }

  Graph base_;
  Graph ga_;
  int j_;
  int N_ = 0;
  int i_ = 0;
  uint32_t all_ = 0, path_mask_ = 0;
  EngineMode mode_;
  std::map<Sig, QPoly> sig_;
  std::vector<std::pair<BlockKind, int>> sizes_;
  std::unordered_map<uint32_t, QPoly> mask_memo_;
  std::unordered_map<uint32_t, Int> t_memo_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Public matrix / trace operations.
// ---------------------------------------------------------------------------

ESym ft_matrix_entry(const Graph& g, int i, int j, bool with_q) {
  PartitionEngine engine(g, j, EngineMode{with_q, false, true});
  return engine.entry(i);
}

ESymMatrix ft_matrix(const Graph& g, int cols, bool with_q) {
  if (cols < 1) throw std::invalid_argument("ft_matrix: cols must be >= 1");
  ESymMatrix m(g.n() + cols - 1, cols, g.n());
  for (int j = 1; j <= cols; ++j) {
    PartitionEngine engine(g, j, EngineMode{with_q, false, true});
    for (int i = 1; i <= m.rows; ++i) m.slot(i, j) = engine.entry(i);
  }
  return m;
}

ESym x_from_matrix(const Graph& g, bool with_q) {
  PartitionEngine engine(g, 1, EngineMode{with_q, false, true});
  ESym x;
  for (int i = 1; i <= g.n(); ++i) {
    QPoly vi = with_q ? q_integer(i) : QPoly(i);
    x += QRat(vi) * (ESym(Partition{i}, QRat(1)) * engine.entry(i));
  }
  return x;
}

ESym x_forest_direct(const Graph& g, bool with_q) {
  PartitionEngine engine(g, 1, EngineMode{with_q, false, false});
  return engine.full();
}

ESym x_component(const Graph& g, int i, bool with_q) { return ft_matrix_entry(g, i, 1, with_q); }

ESym column_via_kj(const Graph& g, int i, int j, bool with_q) {
  if (j < 1) throw std::invalid_argument("column_via_kj: j must be >= 1");
  Graph gk = glue(g, standard_graph(GraphKind::complete, j));
  ESym first_col = ft_matrix_entry(gk, i, 1, with_q);
  Int fac;
  mpz_fac_ui(fac.get_mpz_t(), j - 1);
  QPoly denom = with_q ? q_factorial(j - 1) : QPoly(fac);
  ESym out;
  for (const auto& [p, c] : first_col.terms()) {
    QRat scaled = c / QRat(denom);
    if (!scaled.is_polynomial())
      throw invariant_error("column_via_kj: entry not divisible by [j-1]_q!");
    out.add_term(p, scaled);
  }
  return out;
}

ESym trace_x(const Graph& g) {
  if (g.n() < 2) throw std::invalid_argument("trace needs |G| >= 2");
  ESym t;
  for (int k = 1; k < g.n(); ++k) t += ft_matrix_entry(g, k, k, false);
  return t;
}

ESym trace_q(const Graph& g) {
  if (g.n() < 2) throw std::invalid_argument("trace needs |G| >= 2");
  if (!is_nuig(g)) throw std::invalid_argument("trace_q requires an NUIG");
  ESym t;
  for (int k = 1; k < g.n(); ++k) t += ft_matrix_entry(g, k, k, true);
  return t;
}

ESym subgraph_triple_sum(const Graph& g, int i, int j) {
  if (g.n() + j - 1 > 9) throw std::invalid_argument("subgraph_triple_sum cost guard: n+j-1 > 9");
  PartitionEngine engine(g, j, EngineMode{false, true, true});
  return engine.entry(i);
}

// ---------------------------------------------------------------------------
// Matrix windows, closed forms, gluing product.
// ---------------------------------------------------------------------------

ESymMatrix::ESymMatrix(int rows_, int cols_, int graph_n_)
    : rows(rows_), cols(cols_), graph_n(graph_n_), entries(rows_ * cols_) {}

const ESym& ESymMatrix::at(int i, int j) const {
  static const ESym zero;
  if (i >= 1 && i <= rows && j >= 1 && j <= cols) return entries[(i - 1) * cols + (j - 1)];
  if (i >= graph_n + j && i >= 1 && j >= 1) return zero;  // Prop-style guaranteed zero
  throw invariant_error("matrix window read outside stored bounds: (" + std::to_string(i) + "," +
                        std::to_string(j) + ") of " + std::to_string(rows) + "x" +
                        std::to_string(cols));
}

ESym& ESymMatrix::slot(int i, int j) {
  if (i < 1 || i > rows || j < 1 || j > cols) throw invariant_error("matrix slot out of window");
  return entries[(i - 1) * cols + (j - 1)];
}

bool ESymMatrix::window_equal(const ESymMatrix& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  return entries == o.entries;
}

ESym closed_form_matrix_entry(MatrixKind kind, int n, int i, int j) {
  if (i < 1 || j < 1) throw std::invalid_argument("matrix indices are 1-based");
  ESym out;
  auto e_of = [](int k) { return k == 0 ? Partition{} : Partition{k}; };
  switch (kind) {
    case MatrixKind::path: {
      if (n < 1) throw std::invalid_argument("path needs n >= 1");
      int m = n + j - i - 1;
      if (m < 0) return out;
      if (m == 0) return ESym::one();
      for (const Composition& alpha : compositions_of(m)) {
        if (alpha.back() < j) continue;
        QPoly c(1);
        for (int part : alpha) c *= q_integer(part) - QPoly(1);
        out.add_term(sort_to_partition(alpha), QRat(c));
      }
      return out;
    }
    case MatrixKind::complete: {
      if (n < 2) throw std::invalid_argument("complete needs n >= 2");
      int deg = n - i + j - 1;
      if (i <= std::min(n - 1, j - 1)) {
        QPoly c = QPoly::monomial(1, n - 1) * q_factorial(n - 2) * q_integer(j - i);
        out.add_term(e_of(deg), QRat(c));
      } else if (i >= std::max(n, j + 1) && i <= n + j - 1) {
        QPoly c = QPoly::monomial(1, deg) * q_factorial(n - 2) * q_integer(i - j);
        out.add_term(e_of(deg), QRat(c));
      }
      return out;
    }
    case MatrixKind::almost_complete: {
      if (n < 2) throw std::invalid_argument("almost-complete needs n >= 2");
      int deg = n - i + j - 1;
      if (i <= std::min(n - 1, j)) {
        QPoly c = QPoly::monomial(1, n - 2) * q_factorial(n - 2) * q_integer(j - (i - 1));
        out.add_term(e_of(deg), QRat(c));
      } else if (i >= std::max(n, j + 1) && i <= n + j - 1) {
        QPoly c = QPoly::monomial(1, deg) * q_factorial(n - 2) * q_integer((i - 1) - j);
        out.add_term(e_of(deg), QRat(c));
      }
      return out;
    }
    case MatrixKind::cycle_q1: {
      if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
      int m = n - i + j - 1;
      if (m < 0) return out;
      // Nonempty weak compositions of m where only the first part may be 0.
      for (int a = 0; a <= m; ++a) {
        bool branch1 = a >= j && j >= i + 1;
        bool branch2 = a <= j - 1 && j <= i;
        if (!branch1 && !branch2) continue;
        std::vector<Composition> rests =
            (m - a == 0) ? std::vector<Composition>{{}} : compositions_of(m - a);
        for (const Composition& rest : rests) {
          if (m - a == 0 && a == 0 && rest.empty() && m != 0) continue;
          Int c = std::abs(j - i);
          for (int part : rest) c *= (part - 1);
          if (c == 0) continue;
          Composition alpha{a};
          alpha.insert(alpha.end(), rest.begin(), rest.end());
          out.add_term(sort_to_partition(alpha), QRat(QPoly(c)));
        }
      }
      return out;
    }
  }
  return out;
}

ESymMatrix closed_form_matrix(MatrixKind kind, int n, int rows, int cols) {
  ESymMatrix m(rows, cols, n);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) m.slot(i, j) = closed_form_matrix_entry(kind, n, i, j);
  return m;
}

ESymMatrix matrix_mul(const ESymMatrix& a, const ESymMatrix& b) {
  if (a.cols < b.graph_n + b.cols - 1)
    throw invariant_error("matrix_mul: left window has " + std::to_string(a.cols) +
                          " columns, needs " + std::to_string(b.graph_n + b.cols - 1));
  ESymMatrix out(std::min(a.rows, (a.graph_n + b.graph_n - 1) + b.cols - 1), b.cols,
                 a.graph_n + b.graph_n - 1);
  for (int i = 1; i <= out.rows; ++i) {
    for (int j = 1; j <= out.cols; ++j) {
      ESym sum;
      for (int k = 1; k <= b.graph_n + j - 1; ++k) sum += a.at(i, k) * b.at(k, j);
      out.slot(i, j) = sum;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Explicit forest-triple objects: enumeration, statistics, break bijection.
// ---------------------------------------------------------------------------

namespace {

std::vector<int> mask_vertices(uint32_t mask) {
  std::vector<int> v;
  while (mask) {
    v.push_back(__builtin_ctz(mask) + 1);
    mask &= mask - 1;
  }
  return v;
}

void validate_forest(const ForestTriple& f, int expected_n) {
  std::vector<bool> seen(expected_n + 1, false);
  int prev_min = 0;
  for (const auto& t : f.triples) {
    if (t.vertices.empty()) throw invariant_error("forest triple: empty tree");
    if (t.edges.size() + 1 != t.vertices.size())
      throw invariant_error("forest triple: edge count is not |V|-1");
    if (static_cast<int>(t.alpha.size()) == 0 ||
        std::accumulate(t.alpha.begin(), t.alpha.end(), 0) !=
            static_cast<int>(t.vertices.size()))
      throw invariant_error("forest triple: |alpha| != |T|");
    if (t.r < 1 || t.r > t.alpha[0]) throw invariant_error("forest triple: r out of range");
    int mn = *std::min_element(t.vertices.begin(), t.vertices.end());
    if (mn <= prev_min) throw invariant_error("forest triple: trees not ordered by min vertex");
    prev_min = mn;
    for (int v : t.vertices) {
      if (v < 1 || v > expected_n || seen[v])
        throw invariant_error("forest triple: vertices do not partition [n]");
      seen[v] = true;
    }
  }
  for (int v = 1; v <= expected_n; ++v)
    if (!seen[v]) throw invariant_error("forest triple: vertices do not partition [n]");
}

}  // namespace

void for_each_forest_triple(const Graph& g, const std::optional<FTFilter>& filter,
                            const std::function<void(const ForestTriple&)>& visit) {
  int j = filter ? filter->j : 1;
  if (j < 1) throw std::invalid_argument("forest triple filter needs j >= 1");
  if (g.n() + j - 1 > 12)
    throw std::invalid_argument("forest triple enumeration cost guard: |G|+j-1 > 12");
  Graph ga = (j == 1) ? g : glue(g, standard_graph(GraphKind::path, j));
  const int N = ga.n();
  const uint32_t all = (1u << N) - 1;
  uint32_t path_mask = 0;
  if (filter)
    for (int v = g.n(); v <= N; ++v) path_mask |= 1u << (v - 1);

  std::vector<TreeTriple> stack;
  std::function<void(uint32_t)> rec = [&](uint32_t covered) {
    if (covered == all) {
      ForestTriple f{stack};
      visit(f);
      return;
    }
    uint32_t free = all & ~covered;
    int v = lowest_vertex(free);
    // Masks ascending keeps the stream deterministic.
    for (uint32_t block = free;; block = (block - 1) & free) {
      if (block & (1u << (v - 1))) {
        bool path_ok = !filter || (block & path_mask) == 0 || (block & path_mask) == path_mask;
        if (path_ok && connected_in(ga, block)) {
          std::vector<int> verts = mask_vertices(block);
          bool is_first = (v == 1);
          bool is_last = filter && ((block >> (g.n() - 1)) & 1);
          for_each_spanning_tree(ga, block, [&](const std::vector<Edge>& tree) {
            if (!nbc_check(ga, tree)) return;
            for (const Composition& alpha : compositions_of(static_cast<int>(verts.size()))) {
              if (filter && is_first && alpha[0] != filter->i) continue;
              if (filter && is_last && alpha.back() < j) continue;
              int rmax = (filter && is_first) ? 1 : alpha[0];
              for (int r = 1; r <= rmax; ++r) {
                TreeTriple t{verts, tree, alpha, r};
                std::sort(t.edges.begin(), t.edges.end());
                stack.push_back(std::move(t));
                rec(covered | block);
                stack.pop_back();
              }
            }
          });
        }
      }
      if (block == 0) break;
    }
  };
  rec(0);
}

std::vector<ForestTriple> enumerate_forest_triples(const Graph& g, std::optional<FTFilter> filter) {
  std::vector<ForestTriple> out;
  for_each_forest_triple(g, filter, [&](const ForestTriple& f) { out.push_back(f); });
  return out;
}

FTStats ft_stats(const ForestTriple& f, const Graph& ambient, bool with_weight) {
  validate_forest(f, ambient.n());
  FTStats out;
  Composition all_parts;
  int sign_exp = 0;
  for (const auto& t : f.triples) {
    all_parts.insert(all_parts.end(), t.alpha.begin(), t.alpha.end());
    sign_exp += static_cast<int>(t.alpha.size()) - 1;
  }
  out.type = sort_to_partition(all_parts);
  out.reduced_type = remove_one_part(out.type, f.triples.front().alpha[0]);
  out.sign = sign_exp % 2 ? -1 : 1;
  if (with_weight) {
    if (!is_nuig(ambient)) throw std::invalid_argument("weight requires an NUIG ambient graph");
    std::vector<int> word;
    long rsum = 0;
    for (const auto& t : f.triples) {
      std::vector<int> part = tree_list_order(t.vertices, t.edges);
      word.insert(word.end(), part.begin(), part.end());
      rsum += t.r - 1;
    }
    out.weight = inv_g(ambient, word) + rsum;
  }
  return out;
}

BrokenForest break_forest(const ForestTriple& f, const Graph& g, const Graph& h) {
  const int n = g.n(), np = h.n();
  int total = 0;
  for (const auto& t : f.triples) total += static_cast<int>(t.vertices.size());
  const int j = total - (n + np - 1) + 1;
  if (j < 1) throw invariant_error("break_forest: input too small for G+H+P_j");
  validate_forest(f, total);

  auto contains = [](const TreeTriple& t, int v) {
    return std::find(t.vertices.begin(), t.vertices.end(), v) != t.vertices.end();
  };
  size_t idx = 0;
  while (idx < f.triples.size() && !contains(f.triples[idx], n)) ++idx;
  if (idx == f.triples.size()) throw invariant_error("break_forest: no tree contains vertex n");
  const TreeTriple& tt = f.triples[idx];

  int size_g = 0;
  for (int v : tt.vertices)
    if (v <= n) ++size_g;
  int t = 0, acc = 0;
  while (acc < size_g) acc += tt.alpha[t++];
  const int k = acc - size_g + 1;

  TreeTriple left_t, right_t;
  for (int v : tt.vertices) {
    if (v <= n) left_t.vertices.push_back(v);
    if (v >= n) right_t.vertices.push_back(v - (n - 1));
  }
  for (auto [u, v] : tt.edges) {
    if (u <= n && v <= n) left_t.edges.emplace_back(u, v);
    if (u >= n && v >= n) right_t.edges.emplace_back(u - (n - 1), v - (n - 1));
  }
  // Attach the path n..n+k-1 to the G side.
  for (int p = 1; p < k; ++p) {
    left_t.vertices.push_back(n + p);
    left_t.edges.emplace_back(n + p - 1, n + p);
  }
  std::sort(left_t.vertices.begin(), left_t.vertices.end());
  std::sort(left_t.edges.begin(), left_t.edges.end());
  std::sort(right_t.edges.begin(), right_t.edges.end());
  left_t.alpha = Composition(tt.alpha.begin(), tt.alpha.begin() + t);
  left_t.r = tt.r;
  right_t.alpha = Composition{k};
  right_t.alpha.insert(right_t.alpha.end(), tt.alpha.begin() + t, tt.alpha.end());
  right_t.r = 1;

  BrokenForest out;
  out.k = k;
  for (size_t a = 0; a < f.triples.size(); ++a) {
    if (a == idx) continue;
    const TreeTriple& other = f.triples[a];
    if (other.vertices.front() < n) {
      out.left.triples.push_back(other);
    } else {
      TreeTriple shifted = other;
      for (int& v : shifted.vertices) v -= n - 1;
      for (auto& [u, v] : shifted.edges) {
        u -= n - 1;
        v -= n - 1;
      }
      out.right.triples.push_back(shifted);
    }
  }
  out.left.triples.push_back(left_t);
  out.right.triples.push_back(right_t);
  auto by_min = [](const TreeTriple& a, const TreeTriple& b) {
    return a.vertices.front() < b.vertices.front();
  };
  std::sort(out.left.triples.begin(), out.left.triples.end(), by_min);
  std::sort(out.right.triples.begin(), out.right.triples.end(), by_min);
  return out;
}

ForestTriple unbreak_forest(const ForestTriple& left, const ForestTriple& right, const Graph& g,
                            const Graph& h) {
  const int n = g.n(), np = h.n();
  int left_total = 0;
  for (const auto& t : left.triples) left_total += static_cast<int>(t.vertices.size());
  const int k = left_total - n + 1;
  if (k < 1) throw invariant_error("unbreak_forest: left side smaller than |G|");
  validate_forest(left, left_total);
  {
    int right_total = 0;
    for (const auto& t : right.triples) right_total += static_cast<int>(t.vertices.size());
    if (right_total < np) throw invariant_error("unbreak_forest: right side smaller than |H|");
  }

  auto contains = [](const TreeTriple& t, int v) {
    return std::find(t.vertices.begin(), t.vertices.end(), v) != t.vertices.end();
  };
  ForestTriple out;
  TreeTriple merged;
  std::optional<TreeTriple> gpart;
  for (const auto& t : left.triples) {
    if (contains(t, n))
      gpart = t;
    else
      out.triples.push_back(t);
  }
  if (!gpart) throw invariant_error("unbreak_forest: no left tree contains vertex n");
  // Strip the path n+1..n+k-1 from the G-side tree.
  for (int v : gpart->vertices)
    if (v <= n) merged.vertices.push_back(v);
  for (auto [u, v] : gpart->edges)
    if (v <= n) merged.edges.emplace_back(u, v);
  merged.alpha = gpart->alpha;
  merged.r = gpart->r;

  std::optional<TreeTriple> hpart;
  for (const auto& t : right.triples) {
    TreeTriple shifted = t;
    for (int& v : shifted.vertices) v += n - 1;
    for (auto& [u, v] : shifted.edges) {
      u += n - 1;
      v += n - 1;
    }
    std::sort(shifted.vertices.begin(), shifted.vertices.end());
    if (contains(shifted, n)) {
      hpart = shifted;
    } else {
      out.triples.push_back(shifted);
    }
  }
  if (!hpart) throw invariant_error("unbreak_forest: no right tree contains the glued vertex");
  if (hpart->alpha.empty() || hpart->alpha[0] != k || hpart->r != 1)
    throw invariant_error("unbreak_forest: right side is not in FT^(k)");
  merged.vertices.insert(merged.vertices.end(), hpart->vertices.begin(), hpart->vertices.end());
  merged.edges.insert(merged.edges.end(), hpart->edges.begin(), hpart->edges.end());
  std::sort(merged.vertices.begin(), merged.vertices.end());
  merged.vertices.erase(std::unique(merged.vertices.begin(), merged.vertices.end()),
                        merged.vertices.end());
  std::sort(merged.edges.begin(), merged.edges.end());
  merged.alpha.insert(merged.alpha.end(), hpart->alpha.begin() + 1, hpart->alpha.end());
  out.triples.push_back(merged);
  std::sort(out.triples.begin(), out.triples.end(), [](const TreeTriple& a, const TreeTriple& b) {
    return a.vertices.front() < b.vertices.front();
  });
  int right_total = 0;
  for (const auto& t : right.triples) right_total += static_cast<int>(t.vertices.size());
  validate_forest(out, n - 1 + right_total);
  return out;
}

void for_each_subgraph_triple(const Graph& g, int i, int j,
                              const std::function<void(const SubgraphTriple&)>& visit) {
  if (g.n() + j - 1 > 9)
    throw std::invalid_argument("subgraph triple enumeration cost guard: n+j-1 > 9");
  Graph ga = (j == 1) ? g : glue(g, standard_graph(GraphKind::path, j));
  const int N = ga.n();
  const uint32_t all = (1u << N) - 1;
  uint32_t path_mask = 0;
  for (int v = g.n(); v <= N; ++v) path_mask |= 1u << (v - 1);

  std::vector<TreeTriple> stack;
  std::function<void(uint32_t)> rec = [&](uint32_t covered) {
    if (covered == all) {
      visit(SubgraphTriple{stack});
      return;
    }
    uint32_t free = all & ~covered;
    int v = lowest_vertex(free);
    for (uint32_t block = free;; block = (block - 1) & free) {
      if (block & (1u << (v - 1))) {
        bool path_ok = (block & path_mask) == 0 || (block & path_mask) == path_mask;
        if (path_ok && connected_in(ga, block)) {
          std::vector<int> verts = mask_vertices(block);
          bool is_first = (v == 1);
          bool is_last = (block >> (g.n() - 1)) & 1;
          for_each_connected_subgraph(ga, block, [&](const std::vector<Edge>& sub) {
            for (const Composition& alpha : compositions_of(static_cast<int>(verts.size()))) {
              if (is_first && alpha[0] != i) continue;
              if (is_last && alpha.back() < j) continue;
              int rmax = is_first ? 1 : alpha[0];
              for (int r = 1; r <= rmax; ++r) {
                TreeTriple t{verts, sub, alpha, r};
                std::sort(t.edges.begin(), t.edges.end());
                stack.push_back(std::move(t));
                rec(covered | block);
                stack.pop_back();
              }
            }
          });
        }
      }
      if (block == 0) break;
    }
  };
  rec(0);
}

FTStats st_stats(const SubgraphTriple& s) {
  FTStats out;
  Composition all_parts;
  int sign_exp = 0;
  for (const auto& t : s.triples) {
    all_parts.insert(all_parts.end(), t.alpha.begin(), t.alpha.end());
    // First Betti number |E| - |V| + 1 joins the composition-length exponent.
    sign_exp += static_cast<int>(t.alpha.size()) - 1 +
                static_cast<int>(t.edges.size()) - static_cast<int>(t.vertices.size()) + 1;
  }
  out.type = sort_to_partition(all_parts);
  out.reduced_type = remove_one_part(out.type, s.triples.front().alpha[0]);
  out.sign = ((sign_exp % 2) + 2) % 2 ? -1 : 1;
  return out;
}

}  // namespace chromaglue
