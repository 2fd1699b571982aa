// Hikita's standard Young tableau machinery for NUIGs: drop sequences,
// the c_T coefficients, the tableau matrix T_G(q), and the break map.
#pragma once

#include <functional>

#include "chromaglue/esym.hpp"
#include "chromaglue/forest.hpp"
#include "chromaglue/graph.hpp"

namespace chromaglue {

/// A standard Young tableau encoded by its ballot drop sequence: entry k was
/// dropped on top of column drops[k-1].
struct Tableau {
  std::vector<int> drops;

  Partition shape() const;
  /// shape with one instance of the last drop's column removed.
  Partition reduced_shape() const;
  /// Column of the largest entry.
  int last_column() const { return drops.back(); }
  /// Row lists, bottom row first.
  std::vector<std::vector<int>> rows() const;

  bool operator==(const Tableau& o) const = default;
};

bool is_ballot_sequence(const std::vector<int>& drops);

/// Heights and top entries of the partial tableau T|_{<k}.
struct DropState {
  std::vector<int> heights;      // per column, weakly decreasing
  std::vector<int> top_entries;  // per column

  int cols() const { return static_cast<int>(heights.size()); }
  static DropState from_drops(const std::vector<int>& drops);
};

struct DeltaStep {
  std::vector<int> delta;  // indexed 0..cols+1
  std::vector<int> R;      // leftmost neighbour columns
  std::vector<int> W;      // leftmost non-neighbour columns (legal drops)
};

/// delta/R/W for dropping entry k given the reversed graph.
DeltaStep delta_step(const DropState& state, int k, const Graph& gbar);

/// The probability factor p(b, q) = prod_R [|i-b|]_q / prod_{W, i != b} [|i-b|]_q.
QRat drop_probability(const DropState& state, int k, int b, const Graph& gbar);
/// c^{(k)}_T = q^{#neighbour columns past b} [b]_q p(b, q); b must lie in W.
QRat c_factor(const DropState& state, int k, int b, const Graph& gbar);

/// Depth-first enumeration of SYT(G) with the running coefficient c_T.
/// Requires is_nuig(g); guard n <= 12.
void for_each_syt(const Graph& g, const std::function<void(const Tableau&, const QRat&)>& visit);
std::vector<std::pair<Tableau, QRat>> syt_enumerate(const Graph& g);

/// X_G(x;q) = sum over SYT(G) of c_T e_shape(T); coefficients asserted
/// polynomial.
ESym hikita_x(const Graph& g);

/// (T_G(q))_{i,j} via SYT(G+K_j) filtered on the last drop; asserted
/// polynomial after the [i]_q [j-1]_q! normalization.
ESym tab_matrix_entry(const Graph& g, int i, int j);

/// Window rows 1..n+cols-1 of T_G(q), shaped like the forest-triple window.
ESymMatrix tab_matrix(const Graph& g, int cols);

/// c^{(i)}_lambda(G) and its quotient by [i]_q (both asserted polynomial).
struct ColumnSum {
  QPoly sum;
  QPoly quotient;
};
ColumnSum column_sum(const Graph& g, const Partition& lambda, int i);

/// Break map of the tableau gluing identity: T in SYT^(i)(g+h+K_j) splits at
/// k = the column of entry |h|+j-1.
struct BrokenTableau {
  Tableau left;   // in SYT^(i)(g+K_k)
  Tableau right;  // in SYT^(k)(h+K_j)
  int k = 1;
};
BrokenTableau break_tableau(const Tableau& t, const Graph& g, const Graph& h);
Tableau unbreak_tableau(const Tableau& left, const Tableau& right, const Graph& g, const Graph& h);

std::string to_string(const Tableau& t);

}  // namespace chromaglue
