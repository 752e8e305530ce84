#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "treecolor/coloring.hpp"
#include "treecolor/partition.hpp"
#include "treecolor/solver.hpp"
#include "treecolor/tree.hpp"

namespace treecolor {

/// Balance objectives. All are minimized; entropy is exposed as -S.
struct MinMax {};
struct MinMoment {
    double p = 2.0;
};
struct MaxEntropy {};
struct MinCost {
    /// cost[a - 1] is the cost of a class with a nodes.
    std::vector<double> cost;
};

using Objective = std::variant<MinMax, MinMoment, MaxEntropy, MinCost>;

/// Parses "max", "moment:P", "entropy". Cost tables come from files, so the
/// caller builds MinCost directly.
Objective parse_objective(std::string_view text);
std::string objective_name(const Objective& objective);

/// max a_i, sum a_i^p, sum a_i ln a_i (= -S), or sum f(a_i). Throws
/// std::invalid_argument for a non-positive p or a cost table that misses a
/// class size.
double objective_value(const ColorPartition& partition, const Objective& objective);

/// Color budget: exactly chi = h + 1 classes, or at most `limit` classes.
struct ColorBudget {
    bool exactly_chi = true;
    int limit = 0;

    static ColorBudget chi() { return {}; }
    static ColorBudget at_most(int c) { return {false, c}; }
};

struct Optimum {
    Coloring coloring;
    ColorPartition partition;
    double value = 0.0;
};

/// Exact: scans every colorable partition within the color budget and keeps
/// the smallest objective value, ties to the lexicographically smallest
/// partition. Throws BudgetExceeded from the solver, std::invalid_argument
/// if the budget is below h + 1.
Optimum optimize(const RootedTree& tree, const Objective& objective, ColorBudget colors,
                 const SolveOptions& options = {});

/// Heuristic: nodes by decreasing height, each takes the least-loaded class
/// absent from its ancestors. Always valid; no optimality claim.
Optimum greedy_balance(const RootedTree& tree, int colors, const Objective& report_objective = MinMax{});

}  // namespace treecolor
