#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "treecolor/coloring.hpp"
#include "treecolor/partition.hpp"
#include "treecolor/tree.hpp"

namespace treecolor {

inline constexpr std::int64_t kDefaultBudget = 100'000'000;

/// kDefaultBudget unless TREECOLOR_BUDGET holds a positive integer.
std::int64_t default_budget();

enum class SolveStatus { colorable, not_colorable, budget_exceeded };

std::string_view to_string(SolveStatus s);

struct SolveStats {
    std::int64_t nodes_expanded = 0;
    std::chrono::nanoseconds elapsed{0};
};

struct SolveResult {
    SolveStatus status = SolveStatus::not_colorable;
    /// Present iff status == colorable; class i of the partition is color i+1.
    std::optional<Coloring> witness;
    SolveStats stats;

    bool colorable() const noexcept { return status == SolveStatus::colorable; }
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const ColorPartition& partition, std::int64_t budget);
    const ColorPartition& partition() const noexcept { return partition_; }

private:
    ColorPartition partition_;
};

struct SolveOptions {
    /// Cap on node/class assignments tried.
    std::int64_t budget = kDefaultBudget;
    /// Prune with the prefix inequalities on the uncolored forest and on the
    /// current subtree. Never changes the answer.
    bool prune = true;
    /// Remember search states already shown to fail. Never changes the answer.
    bool memoize = true;
};

/// Exact decision: is there a valid coloring whose classes have exactly the
/// given sizes? Throws std::invalid_argument if the partition does not sum to
/// the tree size.
SolveResult is_colorable(const RootedTree& tree, const ColorPartition& partition, const SolveOptions& options = {});

struct PartitionFilter {
    int min_classes = 1;
    int max_classes = -1;  // -1: unbounded
};

/// Every normalized partition realizable by a valid coloring, lexicographically
/// decreasing. Throws BudgetExceeded if any single decision runs out.
std::vector<ColorPartition> all_colorable_partitions(const RootedTree& tree, const SolveOptions& options = {},
                                                     PartitionFilter filter = {});

/// Brute force: every valid coloring up to relabeling, labels in first-use
/// preorder order, using at most max_colors labels (-1: no limit). Visitor
/// returns false to stop early.
void oracle_colorings(const RootedTree& tree, const std::function<bool(const Coloring&)>& visit,
                      int max_colors = -1);

}  // namespace treecolor
