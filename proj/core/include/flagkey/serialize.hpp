#pragma once

#include <nlohmann/json_fwd.hpp>

#include "flagkey/applications.hpp"

namespace flagkey {

using json = nlohmann::json;

// Tableaux: shape descriptor plus row arrays with nulls for absent cells,
// identical for skew and shuffle shapes.
json tableau_to_json(const Tableau& t);

// Crystal graphs as node/edge lists.
json crystal_graph_to_json(const CrystalGraph& g);
// Plain-text description for offline rendering: one node line per element
// (index, weight, reading word) and one edge line per lowering move.
std::string crystal_graph_to_text(const CrystalGraph& g);

// Key expansions as a JSON object mapping composition strings to integers.
json key_expansion_to_json(const KeyExpansion& e);

json axiom_report_to_json(const AxiomReport& r);
json witness_to_json(const Witness& w);

json jt_matrix_to_json(const JTMatrix& m);

json component_keys_to_json(const std::vector<ComponentKey>& comps,
                            const CrystalGraph& ambient);

}  // namespace flagkey
