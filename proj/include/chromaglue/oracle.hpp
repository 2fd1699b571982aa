// Ground-truth chromatic (quasi)symmetric functions by exhaustive
// proper-coloring enumeration, plus the closed-form X formulas.
#pragma once

#include <optional>

#include "chromaglue/esym.hpp"
#include "chromaglue/graph.hpp"

namespace chromaglue {

struct SymmetryReport {
  bool symmetric = true;
  /// Two count-vector compositions with the same sorted parts but different
  /// accumulated totals (the second may be an absent rearrangement).
  std::optional<std::pair<Composition, Composition>> witness;
};

struct ChromaticMonomial {
  /// Sum of q^{asc} over surjective proper colorings, per count vector.
  std::map<Composition, QPoly> buckets;
  SymmetryReport report;
  /// Present iff the report is positive.
  std::optional<MonomialExpansion> expansion;
};

struct OracleOptions {
  int max_n = 9;  // cost guard; n^n worst case
};

ChromaticMonomial chromatic_monomial(const MultiDigraph& g, bool with_q, OracleOptions opt = {});
ChromaticMonomial chromatic_monomial(const Graph& g, bool with_q, OracleOptions opt = {});

/// e-expansion of X_g (or X_g(x;q)); throws invariant_error with the witness
/// pair when the monomial data is not symmetric.
ESym chromatic_e(const MultiDigraph& g, bool with_q, OracleOptions opt = {});
ESym chromatic_e(const Graph& g, bool with_q, OracleOptions opt = {});

enum class ClosedFormX { path_q, cycle_q1, directed_cycle_q };

/// The composition-sum formulas for X_{P_n}(x;q), X_{C_n}(x), X_{vec C_n}(x;q).
ESym closed_form_x(ClosedFormX kind, int n);

}  // namespace chromaglue
