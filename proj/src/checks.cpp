#include "treecolor/checks.hpp"

#include <algorithm>
#include <stdexcept>

namespace treecolor {

std::string_view to_string(Condition c)
{
    switch (c) {
    case Condition::sum: return "sum";
    case Condition::root_unit: return "root_unit";
    case Condition::prefix_k: return "prefix_k";
    case Condition::unique_path: return "unique_path";
    case Condition::node_bound: return "node_bound";
    }
    return "?";
}

bool CheckReport::failed(Condition c) const noexcept
{
    return std::ranges::any_of(failures, [c](const CheckFailure& f) { return f.condition == c; });
}

void CheckReport::merge(const CheckReport& other)
{
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

CheckReport check_necessary(const ColorPartition& partition, const Profile& by_height)
{
    if (by_height.axis() != ProfileAxis::by_height)
        throw std::invalid_argument("check_necessary needs a height profile");
    CheckReport report;
    const int n = by_height.total();
    if (partition.total() != n)
        report.failures.push_back({.condition = Condition::sum, .lhs = partition.total(), .rhs = n});
    if (const int units = partition.count_of(1); units < 1)
        report.failures.push_back({.condition = Condition::root_unit, .lhs = 1, .rhs = units});
    for (std::size_t k = 1; k <= partition.size(); ++k) {
        const int lhs = partition.top_sum(k);
        const int rhs = by_height.prefix_sum(k);
        if (lhs > rhs)
            report.failures.push_back(
                {.condition = Condition::prefix_k, .lhs = lhs, .rhs = rhs, .k = static_cast<int>(k)});
    }
    return report;
}

CheckReport check_unique_path(const ColorPartition& partition, const RootedTree& tree)
{
    const Profile depths = depth_profile(tree);
    int unique_depth = 0;
    while (static_cast<std::size_t>(unique_depth + 1) < depths.size() && depths[unique_depth + 1] == 1)
        ++unique_depth;
    CheckReport report;
    if (const int units = partition.count_of(1); units < unique_depth + 1)
        report.failures.push_back({.condition = Condition::unique_path, .lhs = unique_depth + 1, .rhs = units});
    return report;
}

std::vector<int> node_color_bounds(const RootedTree& tree)
{
    std::vector<int> leaves(tree.size(), 0);
    for (NodeId v = tree.n() - 1; v >= 0; --v) {
        if (tree.is_leaf(v))
            leaves[v] = 1;
        for (NodeId c : tree.children(v))
            leaves[v] += leaves[c];
    }
    // Sibling leaves of v are the parent's leaves minus v's own.
    std::vector<int> bound(tree.size(), 1);
    for (NodeId v = 1; v < tree.n(); ++v) {
        const NodeId p = *tree.parent(v);
        bound[v] = bound[p] + leaves[p] - leaves[v];
    }
    return bound;
}

int node_color_bound(const RootedTree& tree, NodeId v)
{
    tree.depth(v);  // validates v
    return node_color_bounds(tree)[static_cast<std::size_t>(v)];
}

CheckReport check_node_bounds(const ColorPartition& partition, const RootedTree& tree)
{
    CheckReport report;
    const std::vector<int> bound = node_color_bounds(tree);

    std::vector<NodeId> by_bound(tree.size());
    for (NodeId v = 0; v < tree.n(); ++v)
        by_bound[v] = v;
    std::ranges::stable_sort(by_bound, [&](NodeId a, NodeId b) { return bound[a] > bound[b]; });

    for (std::size_t i = 0; i < partition.size(); ++i) {
        const NodeId anchor = i < by_bound.size() ? by_bound[i] : -1;
        const int cap = anchor >= 0 ? bound[anchor] : 0;
        if (partition[i] > cap) {
            report.failures.push_back({.condition = Condition::node_bound,
                                       .lhs = partition[i],
                                       .rhs = cap,
                                       .k = static_cast<int>(i) + 1,
                                       .node = anchor,
                                       .rule = "matching"});
            break;
        }
    }

    std::vector<int> thresholds(bound);
    std::ranges::sort(thresholds);
    thresholds.erase(std::ranges::unique(thresholds).begin(), thresholds.end());
    for (int t : thresholds) {
        int classes = 0;
        int capacity = 0;
        for (int a : partition.sizes()) {
            if (a <= t) {
                ++classes;
                capacity += a;
            }
        }
        // Longest chain of low-bound nodes along any root path.
        std::vector<int> chain(tree.size(), 0);
        int longest = 0;
        NodeId deepest = -1;
        int low_nodes = 0;
        for (NodeId v = 0; v < tree.n(); ++v) {
            const int above = v == kRoot ? 0 : chain[*tree.parent(v)];
            const bool low = bound[v] <= t;
            chain[v] = above + (low ? 1 : 0);
            low_nodes += low ? 1 : 0;
            if (chain[v] > longest) {
                longest = chain[v];
                deepest = v;
            }
        }
        if (longest > classes)
            report.failures.push_back({.condition = Condition::node_bound,
                                       .lhs = longest,
                                       .rhs = classes,
                                       .k = t,
                                       .node = deepest,
                                       .rule = "chain"});
        if (low_nodes > capacity)
            report.failures.push_back({.condition = Condition::node_bound,
                                       .lhs = low_nodes,
                                       .rhs = capacity,
                                       .k = t,
                                       .node = -1,
                                       .rule = "capacity"});
    }
    return report;
}

CheckReport check_all(const ColorPartition& partition, const RootedTree& tree)
{
    CheckReport report = check_necessary(partition, height_profile(tree));
    report.merge(check_unique_path(partition, tree));
    report.merge(check_node_bounds(partition, tree));
    return report;
}

}  // namespace treecolor
