// Verification suites: each streams counterexamples as JSON objects and
// returns a summary. Used by the CLI `verify` subcommand and the acceptance
// harness.
#pragma once

#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

#include "chromaglue/graph.hpp"

namespace chromaglue {

struct SuiteResult {
  std::string suite;
  long checked = 0;
  long counterexamples = 0;
  bool ok() const { return counterexamples == 0; }
};

using CounterexampleSink = std::function<void(const nlohmann::json&)>;

/// Suites: gluing, trace, samemats, qtrace, subgraph, closedforms,
/// oracle-cross. max_n = 0 picks the suite default.
SuiteResult run_suite(const std::string& name, int max_n, const CounterexampleSink& sink);

const std::vector<std::string>& suite_names();

/// All graphs on [n] (every edge subset), deterministic order.
void for_each_graph(int n, const std::function<void(const Graph&)>& visit);
/// Deterministic pseudo-random sample of `count` graphs on [n].
std::vector<Graph> sample_graphs(int n, int count, unsigned seed);

}  // namespace chromaglue
