#pragma once

#include <json.hpp>

#include "treecolor/checks.hpp"
#include "treecolor/coloring.hpp"
#include "treecolor/experiments.hpp"
#include "treecolor/partition.hpp"
#include "treecolor/solver.hpp"

namespace treecolor {

using json = nlohmann::json;

json to_json(const ColorPartition& p);
json to_json(const Coloring& c);
json to_json(const Profile& p);
/// {passed, failures: [{condition, k, lhs, rhs[, node, rule]}]}
json to_json(const CheckReport& r);
/// {status, witness?, nodes_expanded, elapsed_ms}
json to_json(const SolveResult& r);
json to_json(const TnscRecord& r);
json to_json(const CensusSummary& s);
json to_json(const ConjectureRow& r);
json to_json(const CatalanRow& r);

/// Accepts a JSON array of positive integers or a comma-separated list.
Coloring coloring_from_text(std::string_view text);

}  // namespace treecolor
