#pragma once

// JSON encodings of the library's values. Parsers throw std::invalid_argument
// on malformed input.

#include "json.hpp"
#include "scclab/bounds.hpp"
#include "scclab/cover.hpp"
#include "scclab/experiment.hpp"
#include "scclab/graph.hpp"
#include "scclab/partitions.hpp"
#include "scclab/representation.hpp"

namespace scclab {

using Json = nlohmann::json;

/// {"n": int, "edges": [[u, v], ...]} with u < v and no duplicates.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// {"mode": "cover"|"partition", "cliques": [[v, ...], ...]}
Json cover_to_json(const CliqueCover& c);
CliqueCover cover_from_json(const Json& j);

/// {"labels": [[label, ...] per vertex]}
Json representation_to_json(const Representation& r);
Representation representation_from_json(const Json& j);

/// {"n": int, "t": int, "d": int, "rows": [[[cell elements] x d] x t]}
Json family_to_json(const PartitionFamily& f);
PartitionFamily family_from_json(const Json& j);

/// {"optimum": int, "witness": cover, "nodes": int}
Json solve_result_to_json(const SolveResult& r);
Json cover_report_to_json(const CoverReport& r);
Json family_report_to_json(const FamilyReport& r);
Json chain_report_to_json(const ChainReport& r);
Json experiment_row_to_json(const ExperimentRow& r);

}  // namespace scclab
