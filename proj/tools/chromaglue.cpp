// chromaglue: exact chromatic (quasi)symmetric functions of glued graphs.
#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "chromaglue/expr.hpp"
#include "chromaglue/forest.hpp"
#include "chromaglue/json_io.hpp"
#include "chromaglue/oracle.hpp"
#include "chromaglue/tableau.hpp"
#include "chromaglue/verify.hpp"

using namespace chromaglue;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitCounterexample = 3;

json envelope(const std::string& command) {
  return json{{"schema", kSchemaTag}, {"command", command}};
}

int cmd_x(const std::string& expr_text, bool with_q, const std::string& method,
          const std::string& format) {
  GraphExpr expr = parse_graph_expr(expr_text);
  ESym x;
  if (expr.circled) {
    if (method != "oracle")
      throw std::invalid_argument("circular-glue expressions support only --method oracle");
    x = chromatic_e(expr.circled_graph(), with_q);
  } else {
    Graph g = expr.sequence_graph();
    if (method == "oracle")
      x = chromatic_e(g, with_q);
    else if (method == "forest")
      x = x_forest_direct(g, with_q);
    else if (method == "matrix")
      x = x_from_matrix(g, with_q);
    else if (method == "hikita") {
      if (!with_q) {
        x = hikita_x(g).at_q1();
      } else {
        x = hikita_x(g);
      }
    } else
      throw std::invalid_argument("unknown method: " + method);
  }
  if (format == "json") {
    json out = envelope("x");
    out["expr"] = to_string(expr);
    out["q"] = with_q;
    out["method"] = method;
    out["result"] = to_json(x);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_string(x) << "\n";
  }
  return kExitOk;
}

int cmd_matrix(const std::string& expr_text, int cols, bool with_q, const std::string& format) {
  GraphExpr expr = parse_graph_expr(expr_text);
  if (expr.circled) throw std::invalid_argument("matrix applies to plain gluing expressions");
  Graph g = expr.sequence_graph();
  ESymMatrix m = ft_matrix(g, cols, with_q);
  if (format == "json") {
    json out = envelope("matrix");
    out["expr"] = to_string(expr);
    out["q"] = with_q;
    json body = to_json(m, g);
    out.update(body);
    std::cout << out.dump() << "\n";
  } else {
    for (int i = 1; i <= m.rows; ++i) {
      std::cout << "[ ";
      for (int j = 1; j <= m.cols; ++j) {
        if (j > 1) std::cout << " | ";
        std::cout << to_string(m.at(i, j));
      }
      std::cout << " ]\n";
    }
  }
  return kExitOk;
}

int cmd_trace(const std::string& expr_text, bool with_q, bool directed,
              const std::string& format) {
  GraphExpr expr = parse_graph_expr(expr_text);
  if (expr.circled)
    throw std::invalid_argument("trace applies to the plain expression; it glues internally");
  Graph g = expr.sequence_graph();
  if (directed) with_q = true;
  ESym tr = with_q ? trace_q(g) : trace_x(g);
  bool agree = true;
  ESym oracle;
  if (directed) {
    oracle = chromatic_e(directed_circle_glue(g), true);
    agree = (oracle == tr);
  }
  if (format == "json") {
    json out = envelope("trace");
    out["expr"] = to_string(expr);
    out["q"] = with_q;
    out["trace"] = to_json(tr);
    if (directed) {
      out["oracle"] = to_json(oracle);
      out["agreement"] = agree;
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_string(tr) << "\n";
    if (directed) {
      std::cout << "oracle: " << to_string(oracle) << "\n";
      std::cout << "agreement: " << (agree ? "yes" : "NO") << "\n";
    }
  }
  return agree ? kExitOk : kExitCounterexample;
}

int cmd_hikita(const std::string& expr_text, const std::string& format) {
  GraphExpr expr = parse_graph_expr(expr_text);
  if (expr.circled) throw std::invalid_argument("hikita applies to plain NUIG expressions");
  Graph g = expr.sequence_graph();
  auto tableaux = syt_enumerate(g);
  if (format == "json") {
    json out = envelope("hikita");
    out["expr"] = to_string(expr);
    json list = json::array();
    for (const auto& [t, c] : tableaux) {
      json item = to_json(t);
      item["shape"] = t.shape();
      item["c"] = to_json(c);
      list.push_back(item);
    }
    out["tableaux"] = list;
    out["result"] = to_json(hikita_x(g));
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& [t, c] : tableaux)
      std::cout << to_string(t) << "   c_T = " << to_pretty_string(c) << "\n";
    std::cout << "X = " << to_string(hikita_x(g)) << "\n";
  }
  return kExitOk;
}

int cmd_epos(const std::string& expr_text, bool with_q, const std::string& format) {
  GraphExpr expr = parse_graph_expr(expr_text);
  ESym x = expr.circled ? chromatic_e(expr.circled_graph(), with_q)
                        : x_from_matrix(expr.sequence_graph(), with_q);
  EPosResult q1 = is_e_positive(x, EPosMode::at_q1);
  std::optional<EPosResult> coeff;
  if (with_q) coeff = is_e_positive(x, EPosMode::coefficientwise);
  if (format == "json") {
    json out = envelope("epos");
    out["expr"] = to_string(expr);
    out["q"] = with_q;
    out["result"] = to_json(x);
    out["epositive_at_q1"] = q1.positive;
    if (q1.witness)
      out["witness"] = json{{"partition", q1.witness->first},
                            {"coeff", to_json(q1.witness->second)}};
    if (coeff) {
      out["epositive_coefficientwise"] = coeff->positive;
      if (coeff->witness)
        out["witness_coefficientwise"] = json{{"partition", coeff->witness->first},
                                              {"coeff", to_json(coeff->witness->second)}};
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "X = " << to_string(x) << "\n";
    std::cout << "e-positive at q=1: " << (q1.positive ? "yes" : "NO") << "\n";
    if (q1.witness)
      std::cout << "witness: e" << partition_name(q1.witness->first) << " has coefficient "
                << to_string(q1.witness->second) << "\n";
    if (coeff) {
      std::cout << "e-positive coefficientwise: " << (coeff->positive ? "yes" : "NO") << "\n";
      if (coeff->witness)
        std::cout << "witness: e" << partition_name(coeff->witness->first) << " has coefficient "
                  << to_string(coeff->witness->second) << "\n";
    }
  }
  return kExitOk;
}

int cmd_nuig_enum(int n, const std::string& format) {
  std::vector<Graph> nuigs = enumerate_nuigs(n);
  if (format == "json") {
    json out = envelope("nuig-enum");
    out["n"] = n;
    out["count"] = nuigs.size();
    json list = json::array();
    for (const Graph& g : nuigs) list.push_back(to_json(g));
    out["graphs"] = list;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << nuigs.size() << " NUIGs on " << n << " vertices\n";
    for (const Graph& g : nuigs) std::cout << to_string(g) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, int max_n) {
  SuiteResult result = run_suite(suite, max_n, [](const json& counterexample) {
    std::cout << counterexample.dump() << "\n";
  });
  std::cout << "suite " << result.suite << ": " << result.checked << " checks, "
            << result.counterexamples << " counterexamples -> "
            << (result.ok() ? "VERIFIED" : "FAILED") << "\n";
  return result.ok() ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact chromatic symmetric and quasisymmetric functions of glued graphs"};
  app.require_subcommand(1);

  std::string expr_text, method = "oracle", format = "text", suite;
  bool with_q = false, directed = false;
  int cols = 3, nuig_n = 3, max_n = 0;

  auto* x = app.add_subcommand("x", "chromatic (quasi)symmetric function of an expression");
  x->add_option("expr", expr_text)->required();
  x->add_flag("--q", with_q, "q-refined");
  x->add_option("--method", method)->check(CLI::IsMember({"oracle", "forest", "matrix", "hikita"}));
  x->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* mat = app.add_subcommand("matrix", "forest-triple matrix window F_G");
  mat->add_option("expr", expr_text)->required();
  mat->add_option("--cols", cols)->required()->check(CLI::PositiveNumber);
  mat->add_flag("--q", with_q);
  mat->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* tr = app.add_subcommand("trace", "trace(F_G), the circular-glue chromatic function");
  tr->add_option("expr", expr_text)->required();
  tr->add_flag("--q", with_q);
  tr->add_flag("--directed", directed, "compare trace(F_G(q)) with the directed-glue oracle");
  tr->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* hk = app.add_subcommand("hikita", "tableau listing with coefficients c_T");
  hk->add_option("expr", expr_text)->required();
  hk->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* ep = app.add_subcommand("epos", "e-positivity verdict with witness");
  ep->add_option("expr", expr_text)->required();
  ep->add_flag("--q", with_q);
  ep->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* ne = app.add_subcommand("nuig-enum", "enumerate natural unit interval graphs");
  ne->add_option("n", nuig_n)->required()->check(CLI::Range(1, 9));
  ne->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* vf = app.add_subcommand("verify", "run a verification suite");
  vf->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  vf->add_option("--max-n", max_n, "size cap (0 = suite default)");

  try {
    app.parse(argc, argv);
    if (x->parsed()) return cmd_x(expr_text, with_q, method, format);
    if (mat->parsed()) return cmd_matrix(expr_text, cols, with_q, format);
    if (tr->parsed()) return cmd_trace(expr_text, with_q, directed, format);
    if (hk->parsed()) return cmd_hikita(expr_text, format);
    if (ep->parsed()) return cmd_epos(expr_text, with_q, format);
    if (ne->parsed()) return cmd_nuig_enum(nuig_n, format);
    if (vf->parsed()) return cmd_verify(suite, max_n);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const invariant_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitUsage;
}
