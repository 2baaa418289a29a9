#pragma once

#include <json.hpp>

#include "blockbetti/betti_table.hpp"
#include "blockbetti/blocks.hpp"
#include "blockbetti/classify.hpp"
#include "blockbetti/graph.hpp"
#include "blockbetti/groebner.hpp"
#include "blockbetti/monomial.hpp"

// JSON views of the core types. Vertices are printed 1-based throughout.
namespace blockbetti {

using Json = nlohmann::ordered_json;

Json vertex_list(Mask m);
Json graph_json(const Graph& g);
/// Block structure (connected input) plus decomposition.
Json analysis_json(const Graph& g);
Json verdict_json(const ClassificationVerdict& v);
Json table_json(const BettiTable& t);
Json ideal_json(const MonomialIdeal& I, int n);
Json groebner_json(const Graph& g, const MonomialIdeal& in);

/// Inverse of table_json's entry list (for round trips and stored references).
BettiTable table_from_json(const Json& j);

std::string hex_hash(std::uint64_t h);

}  // namespace blockbetti
