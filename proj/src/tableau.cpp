#include "chromaglue/tableau.hpp"

#include <algorithm>
#include <sstream>

namespace chromaglue {

Partition Tableau::shape() const {
  DropState st = DropState::from_drops(drops);
  int maxh = 0;
  for (int h : st.heights) maxh = std::max(maxh, h);
  Partition shape;
  for (int row = 1; row <= maxh; ++row) {
    int len = 0;
    for (int h : st.heights)
      if (h >= row) ++len;
    shape.push_back(len);
  }
  std::sort(shape.begin(), shape.end(), std::greater<int>());
  return shape;
}

Partition Tableau::reduced_shape() const { return remove_one_part(shape(), last_column()); }

std::vector<std::vector<int>> Tableau::rows() const {
  std::vector<int> heights;
  std::vector<std::vector<int>> rows;
  for (size_t k = 0; k < drops.size(); ++k) {
    int col = drops[k];
    if (col > static_cast<int>(heights.size())) heights.push_back(0);
    int row = ++heights[col - 1];
    if (row > static_cast<int>(rows.size())) rows.emplace_back();
    rows[row - 1].push_back(static_cast<int>(k) + 1);
  }
  return rows;
}

bool is_ballot_sequence(const std::vector<int>& drops) {
  std::vector<int> count;
  for (int b : drops) {
    if (b < 1) return false;
    if (b > static_cast<int>(count.size()) + 1) return false;
    if (b == static_cast<int>(count.size()) + 1) count.push_back(0);
    ++count[b - 1];
    if (b >= 2 && count[b - 1] > count[b - 2]) return false;
  }
  return true;
}

DropState DropState::from_drops(const std::vector<int>& drops) {
  DropState st;
  for (size_t k = 0; k < drops.size(); ++k) {
    int col = drops[k];
    if (col < 1 || col > st.cols() + 1) throw invariant_error("drop sequence is not ballot");
    if (col == st.cols() + 1) {
      st.heights.push_back(0);
      st.top_entries.push_back(0);
    }
    if (col >= 2 && st.heights[col - 1] + 1 > st.heights[col - 2])
      throw invariant_error("drop sequence is not ballot");
    st.heights[col - 1] += 1;
    st.top_entries[col - 1] = static_cast<int>(k) + 1;
  }
  return st;
}

DeltaStep delta_step(const DropState& state, int k, const Graph& gbar) {
  const int cols = state.cols();
  DeltaStep out;
  out.delta.assign(cols + 2, 0);
  out.delta[0] = 1;
  for (int i = 1; i <= cols; ++i)
    out.delta[i] = gbar.has_edge(state.top_entries[i - 1], k) ? 1 : 0;
  for (int i = 1; i <= cols; ++i)
    if (out.delta[i] == 1 && out.delta[i - 1] == 0) out.R.push_back(i);
  for (int i = 1; i <= cols + 1; ++i)
    if (out.delta[i] == 0 && out.delta[i - 1] == 1) out.W.push_back(i);
  return out;
}

QRat drop_probability(const DropState& state, int k, int b, const Graph& gbar) {
  DeltaStep d = delta_step(state, k, gbar);
  if (std::find(d.W.begin(), d.W.end(), b) == d.W.end())
    throw std::invalid_argument("drop column b is not in W_k");
  // The q^{#neighbour columns past b} prefactor is what makes the W-sum
  // telescope to 1 as a rational function.
  int past = 0;
  for (int jj = b + 1; jj < static_cast<int>(d.delta.size()) - 1; ++jj)
    if (d.delta[jj] == 1) ++past;
  QPoly num = QPoly::monomial(1, past);
  QPoly den(1);
  for (int i : d.R) num *= q_integer(std::abs(i - b));
  for (int i : d.W)
    if (i != b) den *= q_integer(std::abs(i - b));
  return QRat(num, den);
}

QRat c_factor(const DropState& state, int k, int b, const Graph& gbar) {
  return QRat(q_integer(b)) * drop_probability(state, k, b, gbar);
}

void for_each_syt(const Graph& g, const std::function<void(const Tableau&, const QRat&)>& visit) {
  if (!is_nuig(g)) throw std::invalid_argument("SYT(G) requires an NUIG");
  if (g.n() > 12) throw std::invalid_argument("SYT enumeration cost guard: n > 12");
  Graph gbar = reverse(g);
  const int n = g.n();
  DropState state;
  std::vector<int> drops;

  std::function<void(int, const QRat&)> rec = [&](int k, const QRat& c) {
    if (k > n) {
      visit(Tableau{drops}, c);
      return;
    }
    DeltaStep d = delta_step(state, k, gbar);
    for (int b : d.W) {
      QRat step = c_factor(state, k, b, gbar);
      int saved_top = 0;
      bool new_col = (b == state.cols() + 1);
      if (new_col) {
        state.heights.push_back(1);
        state.top_entries.push_back(k);
      } else {
        state.heights[b - 1] += 1;
        saved_top = state.top_entries[b - 1];
        state.top_entries[b - 1] = k;
      }
      drops.push_back(b);
      rec(k + 1, c * step);
      drops.pop_back();
      if (new_col) {
        state.heights.pop_back();
        state.top_entries.pop_back();
      } else {
        state.heights[b - 1] -= 1;
        state.top_entries[b - 1] = saved_top;
      }
    }
  };
  rec(1, QRat(1));
}

std::vector<std::pair<Tableau, QRat>> syt_enumerate(const Graph& g) {
  std::vector<std::pair<Tableau, QRat>> out;
  for_each_syt(g, [&](const Tableau& t, const QRat& c) { out.emplace_back(t, c); });
  return out;
}

ESym hikita_x(const Graph& g) {
  ESym x;
  for_each_syt(g, [&](const Tableau& t, const QRat& c) { x.add_term(t.shape(), c); });
  for (const auto& [p, c] : x.terms()) {
    if (!c.is_polynomial())
      throw invariant_error("hikita_x: coefficient of e" + partition_name(p) +
                            " is not a polynomial: " + to_string(c));
  }
  return x;
}

ESym tab_matrix_entry(const Graph& g, int i, int j) {
  if (i < 1 || j < 1) throw std::invalid_argument("matrix indices are 1-based");
  if (!is_nuig(g)) throw std::invalid_argument("tab_matrix_entry requires an NUIG");
  Graph gk = (j == 1) ? g : glue(g, standard_graph(GraphKind::complete, j));
  ESym sum;
  for_each_syt(gk, [&](const Tableau& t, const QRat& c) {
    if (t.last_column() != i) return;
    sum.add_term(t.reduced_shape(), c);
  });
  QRat norm = QRat(q_integer(i) * q_factorial(j - 1));
  ESym out;
  for (const auto& [p, c] : sum.terms()) {
    QRat scaled = c / norm;
    if (!scaled.is_polynomial())
      throw invariant_error("tab_matrix_entry: (" + std::to_string(i) + "," + std::to_string(j) +
                            ") coefficient of e" + partition_name(p) +
                            " is not a polynomial: " + to_string(scaled));
    out.add_term(p, scaled);
  }
  return out;
}

ESymMatrix tab_matrix(const Graph& g, int cols) {
  if (cols < 1) throw std::invalid_argument("tab_matrix: cols must be >= 1");
  ESymMatrix m(g.n() + cols - 1, cols, g.n());
  for (int j = 1; j <= cols; ++j)
    for (int i = 1; i <= m.rows; ++i) m.slot(i, j) = tab_matrix_entry(g, i, j);
  return m;
}

ColumnSum column_sum(const Graph& g, const Partition& lambda, int i) {
  QRat sum;
  for_each_syt(g, [&](const Tableau& t, const QRat& c) {
    if (t.last_column() != i) return;
    if (t.shape() != lambda) return;
    sum += c;
  });
  ColumnSum out;
  if (!sum.is_polynomial())
    throw invariant_error("column_sum: not a polynomial: " + to_string(sum));
  out.sum = sum.as_polynomial();
  QRat quot = sum / QRat(q_integer(i));
  if (!quot.is_polynomial())
    throw invariant_error("column_sum: not divisible by [i]_q: " + to_string(sum));
  out.quotient = quot.as_polynomial();
  return out;
}

BrokenTableau break_tableau(const Tableau& t, const Graph& g, const Graph& h) {
  const int n = g.n(), np = h.n();
  const int total = static_cast<int>(t.drops.size());
  const int j = total - (n + np - 2);
  if (j < 1) throw invariant_error("break_tableau: drop sequence too short for G+H+K_j");
  if (!is_ballot_sequence(t.drops)) throw invariant_error("break_tableau: not a ballot sequence");
  const int split = np + j - 1;  // entries 1..split belong to the H+K_j side
  BrokenTableau out;
  out.k = t.drops[split - 1];
  out.right.drops.assign(t.drops.begin(), t.drops.begin() + split);
  for (int c = 1; c <= out.k; ++c) out.left.drops.push_back(c);
  out.left.drops.insert(out.left.drops.end(), t.drops.begin() + split, t.drops.end());
  if (!is_ballot_sequence(out.left.drops))
    throw invariant_error("break_tableau: left part is not ballot");
  return out;
}

Tableau unbreak_tableau(const Tableau& left, const Tableau& right, const Graph& g,
                        const Graph& h) {
  const int n = g.n();
  const int k = right.drops.back();
  if (static_cast<int>(left.drops.size()) != n + k - 1)
    throw invariant_error("unbreak_tableau: left size does not match G+K_k");
  if (static_cast<int>(right.drops.size()) < h.n())
    throw invariant_error("unbreak_tableau: right side smaller than |H|");
  for (int c = 1; c <= k; ++c)
    if (left.drops[c - 1] != c)
      throw invariant_error("unbreak_tableau: left tableau does not start with the K_k row");
  Tableau out;
  out.drops = right.drops;
  out.drops.insert(out.drops.end(), left.drops.begin() + k, left.drops.end());
  if (!is_ballot_sequence(out.drops)) throw invariant_error("unbreak_tableau: not ballot");
  return out;
}

std::string to_string(const Tableau& t) {
  auto rws = t.rows();
  std::ostringstream out;
  for (size_t r = 0; r < rws.size(); ++r) {
    if (r) out << " / ";
    for (size_t c = 0; c < rws[r].size(); ++c) out << (c ? " " : "") << rws[r][c];
  }
  return out.str();
}

}  // namespace chromaglue
