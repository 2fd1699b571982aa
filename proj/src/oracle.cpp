#include "chromaglue/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace chromaglue {

namespace {

struct ColoringEnumerator {
  int n;
  std::vector<uint32_t> conflict;              // underlying undirected adjacency
  std::vector<std::vector<int>> arc_mult;      // arc_mult[u][v], 0-based
  bool with_q;

  std::map<Composition, QPoly> buckets;

  // RGS backtracking: vertices join existing independent classes or open a
  // new one; every leaf is then expanded over all bijections classes->colors.
  std::vector<int> cls;          // class of each vertex
  std::vector<uint32_t> members; // vertex mask per class

  void run() {
    cls.assign(n, -1);
    members.clear();
    place(0);
  }

  void place(int v) {
    if (v == n) {
      expand();
      return;
    }
    for (size_t c = 0; c < members.size(); ++c) {
      if (members[c] & conflict[v]) continue;
      cls[v] = static_cast<int>(c);
      members[c] |= 1u << v;
      place(v + 1);
      members[c] &= ~(1u << v);
    }
    cls[v] = static_cast<int>(members.size());
    members.push_back(1u << v);
    place(v + 1);
    members.pop_back();
  }

  void expand() {
    const int k = static_cast<int>(members.size());
    // Ascent weight between whole classes is fixed by the partition.
    std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
    if (with_q) {
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (arc_mult[u][v]) m[cls[u]][cls[v]] += arc_mult[u][v];
    }
    std::vector<int> color(k);
    std::iota(color.begin(), color.end(), 0);  // color[c] for class c
    std::vector<int> size(k);
    for (int c = 0; c < k; ++c) size[c] = __builtin_popcount(members[c]);
    do {
      int asc = 0;
      if (with_q) {
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b)
            if (color[a] < color[b]) asc += m[a][b];
      }
      Composition comp(k);
      for (int c = 0; c < k; ++c) comp[color[c]] = size[c];
      QPoly& bucket = buckets[comp];
      bucket += QPoly::monomial(1, asc);
    } while (std::next_permutation(color.begin(), color.end()));
  }
};

long long multiset_permutations(const Partition& p) {
  auto fact = [](int x) {
    long long f = 1;
    for (int t = 2; t <= x; ++t) f *= t;
    return f;
  };
  long long total = fact(static_cast<int>(p.size()));
  size_t i = 0;
  while (i < p.size()) {
    size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    total /= fact(static_cast<int>(j - i));
    i = j;
  }
  return total;
}

std::string comp_text(const Composition& c) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
  out << ")";
  return out.str();
}

}  // namespace

ChromaticMonomial chromatic_monomial(const MultiDigraph& g, bool with_q, OracleOptions opt) {
  if (g.n > opt.max_n)
    throw std::invalid_argument("oracle cost guard: n = " + std::to_string(g.n) + " > " +
                                std::to_string(opt.max_n));
  ChromaticMonomial out;
  if (g.has_loop()) {
    // No proper coloring exists; the zero function is vacuously symmetric.
    out.expansion = MonomialExpansion{};
    return out;
  }
  ColoringEnumerator en;
  en.n = g.n;
  en.with_q = with_q;
  en.conflict.assign(g.n, 0);
  en.arc_mult.assign(g.n, std::vector<int>(g.n, 0));
  for (const auto& [arc, mult] : g.arcs) {
    int u = arc.first - 1, v = arc.second - 1;
    en.conflict[u] |= 1u << v;
    en.conflict[v] |= 1u << u;
    en.arc_mult[u][v] += mult;
  }
  en.run();
  out.buckets = std::move(en.buckets);

  // Symmetry: all rearrangements of a partition must hold equal totals, and
  // none may be absent (bucket values cannot cancel to zero).
  std::map<Partition, std::pair<Composition, const QPoly*>> rep;
  std::map<Partition, int> seen_count;
  for (const auto& [comp, poly] : out.buckets) {
    Partition key(comp);
    std::sort(key.begin(), key.end(), std::greater<int>());
    auto it = rep.find(key);
    if (it == rep.end()) {
      rep.emplace(key, std::make_pair(comp, &poly));
      seen_count[key] = 1;
    } else {
      ++seen_count[key];
      if (*(it->second.second) != poly) {
        out.report.symmetric = false;
        out.report.witness = std::make_pair(it->second.first, comp);
        return out;
      }
    }
  }
  for (const auto& [key, cnt] : seen_count) {
    if (cnt == multiset_permutations(key)) continue;
    // Locate an absent rearrangement for the witness.
    Composition missing(key.rbegin(), key.rend());
    do {
      if (!out.buckets.count(missing)) break;
    } while (std::next_permutation(missing.begin(), missing.end()));
    out.report.symmetric = false;
    out.report.witness = std::make_pair(rep.at(key).first, missing);
    return out;
  }
  MonomialExpansion ex;
  for (const auto& [key, r] : rep) ex.terms[key] = *r.second;
  out.expansion = std::move(ex);
  return out;
}

ChromaticMonomial chromatic_monomial(const Graph& g, bool with_q, OracleOptions opt) {
  return chromatic_monomial(as_digraph(g), with_q, opt);
}

ESym chromatic_e(const MultiDigraph& g, bool with_q, OracleOptions opt) {
  ChromaticMonomial cm = chromatic_monomial(g, with_q, opt);
  if (!cm.report.symmetric) {
    throw invariant_error("chromatic function is not symmetric: compositions " +
                          comp_text(cm.report.witness->first) + " and " +
                          comp_text(cm.report.witness->second) + " disagree");
  }
  return monomial_to_e(*cm.expansion);
}

ESym chromatic_e(const Graph& g, bool with_q, OracleOptions opt) {
  return chromatic_e(as_digraph(g), with_q, opt);
}

ESym closed_form_x(ClosedFormX kind, int n) {
  if (kind == ClosedFormX::path_q && n < 1) throw std::invalid_argument("path needs n >= 1");
  if (kind != ClosedFormX::path_q && n < 3) throw std::invalid_argument("cycle needs n >= 3");
  ESym out;
  for (const Composition& alpha : compositions_of(n)) {
    QPoly coeff(1);
    switch (kind) {
      case ClosedFormX::path_q:
        coeff = q_integer(alpha[0]);
        for (size_t t = 1; t < alpha.size(); ++t) coeff *= q_integer(alpha[t]) - QPoly(1);
        break;
      case ClosedFormX::cycle_q1:
        coeff = QPoly(alpha[0]);
        for (size_t t = 0; t < alpha.size(); ++t) coeff *= QPoly(alpha[t] - 1);
        break;
      case ClosedFormX::directed_cycle_q:
        coeff = QPoly(alpha[0]);
        for (size_t t = 0; t < alpha.size(); ++t) coeff *= q_integer(alpha[t]) - QPoly(1);
        break;
    }
    out.add_term(sort_to_partition(alpha), QRat(coeff));
  }
  return out;
}

}  // namespace chromaglue
