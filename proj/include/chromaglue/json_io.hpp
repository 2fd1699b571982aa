// JSON forms for the documented "chromaglue/1" schema. Coefficients that fit
// a 64-bit integer are emitted as JSON numbers, larger ones as decimal
// strings; the readers accept both.
#pragma once

#include <json.hpp>

#include "chromaglue/esym.hpp"
#include "chromaglue/forest.hpp"
#include "chromaglue/graph.hpp"
#include "chromaglue/tableau.hpp"

namespace chromaglue {

inline constexpr const char* kSchemaTag = "chromaglue/1";

nlohmann::json to_json(const QPoly& p);
QPoly qpoly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QRat& r);
QRat qrat_from_json(const nlohmann::json& j);

/// {"basis":"e","terms":[{"partition":[3,2],"coeff":{"num":[...],"den":[...]}}]}
nlohmann::json to_json(const ESym& x);
ESym esym_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MultiDigraph& g);

/// {"graph":...,"rows":R,"cols":C,"entries":[[ESym,...],...]}
nlohmann::json to_json(const ESymMatrix& m, const Graph& g);
ESymMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);

}  // namespace chromaglue
