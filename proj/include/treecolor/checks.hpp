#pragma once

#include <string_view>
#include <vector>

#include "treecolor/partition.hpp"
#include "treecolor/tree.hpp"

namespace treecolor {

enum class Condition { sum, root_unit, prefix_k, unique_path, node_bound };

std::string_view to_string(Condition c);

/// One violated necessary condition. For inequalities lhs > rhs; for the sum
/// condition lhs != rhs.
struct CheckFailure {
    Condition condition;
    int lhs = 0;
    int rhs = 0;
    /// prefix_k: number of classes summed. node_bound: size threshold for the
    /// chain and capacity rules, rank for the matching rule. 0 otherwise.
    int k = 0;
    /// node_bound only: the node whose bound is exceeded, or -1.
    NodeId node = -1;
    /// node_bound only: "matching", "chain" or "capacity".
    std::string_view rule = {};

    friend bool operator==(const CheckFailure&, const CheckFailure&) = default;
};

struct CheckReport {
    std::vector<CheckFailure> failures;
    bool passed() const noexcept { return failures.empty(); }
    bool failed(Condition c) const noexcept;
    void merge(const CheckReport& other);
};

/// Sum of classes equals n, some class has size 1, and for every k the k
/// largest classes hold at most n_0 + ... + n_{k-1} nodes. Sorting makes the
/// top-k prefix the worst subset of k colors, so checking it covers all
/// subsets.
CheckReport check_necessary(const ColorPartition& partition, const Profile& by_height);

/// If depths 0..d each hold a single node, at least d + 1 classes have size 1.
CheckReport check_unique_path(const ColorPartition& partition, const RootedTree& tree);

/// Largest class that may contain v: 1 plus the leaves under the siblings of
/// v and of each of its ancestors below the root.
int node_color_bound(const RootedTree& tree, NodeId v);
std::vector<int> node_color_bounds(const RootedTree& tree);

/// Sound test built on the per-node class bounds:
///  - matching: the i-th largest class fits under the i-th largest bound;
///  - chain: nodes with bound <= t on one root path need distinct classes of
///    size <= t;
///  - capacity: nodes with bound <= t fit in the classes of size <= t.
CheckReport check_node_bounds(const ColorPartition& partition, const RootedTree& tree);

/// check_necessary, check_unique_path and check_node_bounds combined.
CheckReport check_all(const ColorPartition& partition, const RootedTree& tree);

}  // namespace treecolor
