#include "chromaglue/verify.hpp"

#include <random>
#include <set>

#include "chromaglue/forest.hpp"
#include "chromaglue/json_io.hpp"
#include "chromaglue/oracle.hpp"
#include "chromaglue/tableau.hpp"

namespace chromaglue {

using nlohmann::json;

void for_each_graph(int n, const std::function<void(const Graph&)>& visit) {
  std::vector<std::pair<int, int>> all_edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) all_edges.emplace_back(i, j);
  const uint64_t total = 1ull << all_edges.size();
  for (uint64_t mask = 0; mask < total; ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (size_t t = 0; t < all_edges.size(); ++t)
      if ((mask >> t) & 1) edges.push_back(all_edges[t]);
    visit(Graph(n, std::move(edges)));
  }
}

std::vector<Graph> sample_graphs(int n, int count, unsigned seed) {
  std::vector<std::pair<int, int>> all_edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) all_edges.emplace_back(i, j);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<uint64_t> dist(0, (1ull << all_edges.size()) - 1);
  std::set<uint64_t> picked;
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    uint64_t mask = dist(rng);
    if (!picked.insert(mask).second) continue;
    std::vector<std::pair<int, int>> edges;
    for (size_t t = 0; t < all_edges.size(); ++t)
      if ((mask >> t) & 1) edges.push_back(all_edges[t]);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

namespace {

struct Ctx {
  SuiteResult result;
  const CounterexampleSink& sink;

  void check(bool ok, const std::function<json()>& describe) {
    ++result.checked;
    if (!ok) {
      ++result.counterexamples;
      json j = describe();
      j["suite"] = result.suite;
      sink(j);
    }
  }
};

Graph named(const std::string& s) {
  if (s[0] == 'P') return standard_graph(GraphKind::path, s[1] - '0');
  if (s[0] == 'C') return standard_graph(GraphKind::cycle, s[1] - '0');
  if (s[1] == '\'') return standard_graph(GraphKind::almost_complete, s[2] - '0');
  return standard_graph(GraphKind::complete, s[1] - '0');
}

void suite_gluing(Ctx& ctx, int max_n) {
  const int cols = 3;
  std::vector<std::string> plain = {"P2", "P3", "P4", "K3", "K4", "K'3", "C4", "C5"};
  std::vector<std::string> nuig = {"P2", "P3", "K3", "K4", "K'4"};
  auto check_pair = [&](const std::string& a, const std::string& b, bool with_q) {
    Graph g = named(a), h = named(b);
    if (max_n > 0 && g.n() + h.n() - 1 > max_n) return;
    ESymMatrix lhs = ft_matrix(glue(g, h), cols, with_q);
    ESymMatrix rhs =
        matrix_mul(ft_matrix(g, h.n() + cols - 1, with_q), ft_matrix(h, cols, with_q));
    ctx.check(lhs.window_equal(rhs), [&] {
      return json{{"identity", "F_{G+H} = F_G F_H"},
                  {"G", a},
                  {"H", b},
                  {"q", with_q}};
    });
  };
  for (const auto& a : plain)
    for (const auto& b : plain) check_pair(a, b, false);
  for (const auto& a : nuig)
    for (const auto& b : nuig) check_pair(a, b, true);
}

void suite_trace(Ctx& ctx, int max_n) {
  if (max_n == 0) max_n = 6;
  auto check_graph = [&](const Graph& g) {
    ESym lhs = trace_x(g);
    ESym rhs = chromatic_e(circle_glue(g), false);
    ctx.check(lhs == rhs, [&] {
      return json{{"identity", "X_{G°} = trace(F_G)"},
                  {"graph", to_json(g)},
                  {"trace", to_string(lhs)},
                  {"oracle", to_string(rhs)}};
    });
  };
  for (int n = 2; n <= std::min(5, max_n); ++n) for_each_graph(n, check_graph);
  if (max_n >= 6)
    for (const Graph& g : sample_graphs(6, 2000, 20250810u)) check_graph(g);
  if (max_n >= 7)
    for (const Graph& g : enumerate_nuigs(7)) check_graph(g);
}

void suite_samemats(Ctx& ctx, int max_n) {
  if (max_n == 0) max_n = 5;
  for (int n = 1; n <= std::min(5, max_n); ++n) {
    for (const Graph& g : enumerate_nuigs(n)) {
      for (int j = 1; j <= 3; ++j) {
        for (int i = 1; i <= n + j - 1; ++i) {
          ESym f = ft_matrix_entry(g, i, j, true);
          ESym t = tab_matrix_entry(g, i, j);
          ctx.check(f == t, [&] {
            return json{{"identity", "F_G(q) = T_G(q)"},
                        {"graph", to_json(g)},
                        {"i", i},
                        {"j", j},
                        {"forest", to_string(f)},
                        {"tableau", to_string(t)}};
          });
        }
      }
    }
  }
  if (max_n >= 6) {
    for (const Graph& g : enumerate_nuigs(6)) {
      for (int i = 1; i <= 6; ++i) {
        ESym f = ft_matrix_entry(g, i, 1, true);
        ESym t = tab_matrix_entry(g, i, 1);
        ctx.check(f == t, [&] {
          return json{{"identity", "first-column F = T (n = 6)"},
                      {"graph", to_json(g)},
                      {"i", i}};
        });
      }
    }
  }
}

void suite_qtrace(Ctx& ctx, int max_n) {
  if (max_n == 0) max_n = 6;
  for (int n = 2; n <= max_n; ++n) {
    for (const Graph& g : enumerate_nuigs(n)) {
      ESym lhs = trace_q(g);
      ESym rhs = chromatic_e(directed_circle_glue(g), true);
      ctx.check(lhs == rhs, [&] {
        return json{{"identity", "X_{vec G°}(x;q) = trace(F_G(q))"},
                    {"graph", to_json(g)},
                    {"trace", to_string(lhs)},
                    {"oracle", to_string(rhs)}};
      });
    }
  }
}

void suite_subgraph(Ctx& ctx, int max_n) {
  if (max_n == 0) max_n = 6;
  for (int n = 1; n <= max_n; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      for (int j = 1; n + j - 1 <= max_n; ++j) {
        for (int i = 1; i <= n + j - 1; ++i) {
          ESym st = subgraph_triple_sum(g, i, j);
          ESym ft = ft_matrix_entry(g, i, j, false);
          ctx.check(st == ft, [&] {
            return json{{"identity", "subgraph-triple sum = forest-triple sum"},
                        {"graph", to_json(g)},
                        {"i", i},
                        {"j", j}};
          });
        }
      }
    });
  }
}

void suite_closedforms(Ctx& ctx, int max_n) {
  if (max_n == 0) max_n = 6;
  // Paths, with q.
  for (int n = 1; n <= std::min(6, max_n); ++n) {
    Graph p = standard_graph(GraphKind::path, n);
    for (int j = 1; j <= 4; ++j)
      for (int i = 1; i <= n + j - 1; ++i)
        ctx.check(
            ft_matrix_entry(p, i, j, true) == closed_form_matrix_entry(MatrixKind::path, n, i, j),
            [&] {
              return json{{"identity", "F_{P_n}(q) closed form"}, {"n", n}, {"i", i}, {"j", j}};
            });
  }
  // Complete and almost-complete, with q.
  for (int n = 2; n <= std::min(5, max_n); ++n) {
    Graph k = standard_graph(GraphKind::complete, n);
    Graph kp = standard_graph(GraphKind::almost_complete, n);
    for (int j = 1; j <= 3; ++j) {
      for (int i = 1; i <= n + j - 1; ++i) {
        ctx.check(ft_matrix_entry(k, i, j, true) ==
                      closed_form_matrix_entry(MatrixKind::complete, n, i, j),
                  [&] {
                    return json{
                        {"identity", "F_{K_n}(q) closed form"}, {"n", n}, {"i", i}, {"j", j}};
                  });
        ctx.check(ft_matrix_entry(kp, i, j, true) ==
                      closed_form_matrix_entry(MatrixKind::almost_complete, n, i, j),
                  [&] {
                    return json{
                        {"identity", "F_{K'_n}(q) closed form"}, {"n", n}, {"i", i}, {"j", j}};
                  });
      }
    }
  }
  // Cycles at q = 1.
  for (int n = 3; n <= std::min(6, max_n); ++n) {
    Graph c = standard_graph(GraphKind::cycle, n);
    for (int j = 1; j <= 3; ++j)
      for (int i = 1; i <= n + j - 1; ++i)
        ctx.check(ft_matrix_entry(c, i, j, false) ==
                      closed_form_matrix_entry(MatrixKind::cycle_q1, n, i, j),
                  [&] {
                    return json{{"identity", "F_{C_n} closed form"}, {"n", n}, {"i", i}, {"j", j}};
                  });
  }
  // Closed-form X formulas against the oracle.
  for (int n = 1; n <= std::min(7, max_n + 1); ++n) {
    Graph p = standard_graph(GraphKind::path, n);
    ctx.check(chromatic_e(p, true) == closed_form_x(ClosedFormX::path_q, n), [&] {
      return json{{"identity", "X_{P_n}(x;q) composition formula"}, {"n", n}};
    });
  }
  for (int n = 3; n <= std::min(7, max_n + 1); ++n) {
    Graph c = standard_graph(GraphKind::cycle, n);
    ctx.check(chromatic_e(c, false) == closed_form_x(ClosedFormX::cycle_q1, n), [&] {
      return json{{"identity", "X_{C_n}(x) composition formula"}, {"n", n}};
    });
    MultiDigraph dc;
    dc.n = n;
    dc.directed = true;
    for (int i = 1; i < n; ++i) dc.arcs[{i, i + 1}] = 1;
    dc.arcs[{n, 1}] = 1;
    ctx.check(chromatic_e(dc, true) == closed_form_x(ClosedFormX::directed_cycle_q, n), [&] {
      return json{{"identity", "X_{vec C_n}(x;q) composition formula"}, {"n", n}};
    });
  }
}

void suite_oracle_cross(Ctx& ctx, int max_n) {
  if (max_n == 0) max_n = 5;
  for (int n = 1; n <= std::min(5, max_n); ++n) {
    for_each_graph(n, [&](const Graph& g) {
      ESym oracle = chromatic_e(g, false);
      ESym matrix = x_from_matrix(g, false);
      ESym direct = x_forest_direct(g, false);
      ctx.check(oracle == matrix && oracle == direct, [&] {
        return json{{"identity", "oracle = vFw = forest sum (q=1)"}, {"graph", to_json(g)}};
      });
    });
  }
  for (int n = 1; n <= std::min(6, max_n); ++n) {
    for (const Graph& g : enumerate_nuigs(n)) {
      ESym oracle = chromatic_e(g, true);
      ESym matrix = x_from_matrix(g, true);
      ESym direct = x_forest_direct(g, true);
      ESym hikita = hikita_x(g);
      ctx.check(oracle == matrix && oracle == direct && oracle == hikita, [&] {
        return json{{"identity", "oracle = vFw = forest sum = Hikita (q)"},
                    {"graph", to_json(g)}};
      });
    }
  }
  if (max_n >= 6) {
    // Exhaustive n = 6 at q = 1; chromatic_e also asserts the symmetry report.
    for_each_graph(6, [&](const Graph& g) {
      ESym oracle = chromatic_e(g, false);
      ctx.check(oracle == x_from_matrix(g, false), [&] {
        return json{{"identity", "oracle = vFw (q=1, n=6)"}, {"graph", to_json(g)}};
      });
    });
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "gluing", "trace", "samemats", "qtrace", "subgraph", "closedforms", "oracle-cross"};
  return names;
}

SuiteResult run_suite(const std::string& name, int max_n, const CounterexampleSink& sink) {
  SuiteResult result;
  result.suite = name;
  Ctx ctx{result, sink};
  if (name == "gluing")
    suite_gluing(ctx, max_n);
  else if (name == "trace")
    suite_trace(ctx, max_n);
  else if (name == "samemats")
    suite_samemats(ctx, max_n);
  else if (name == "qtrace")
    suite_qtrace(ctx, max_n);
  else if (name == "subgraph")
    suite_subgraph(ctx, max_n);
  else if (name == "closedforms")
    suite_closedforms(ctx, max_n);
  else if (name == "oracle-cross")
    suite_oracle_cross(ctx, max_n);
  else
    throw std::invalid_argument("unknown suite: " + name);
  return ctx.result;
}

}  // namespace chromaglue
