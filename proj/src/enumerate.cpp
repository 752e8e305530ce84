#include "treecolor/enumerate.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace treecolor {

std::string_view to_string(TreeClass c)
{
    switch (c) {
    case TreeClass::rooted: return "rooted";
    case TreeClass::binary: return "binary";
    case TreeClass::full_binary: return "full_binary";
    }
    return "?";
}

TreeClass tree_class_from_string(std::string_view s)
{
    if (s == "rooted")
        return TreeClass::rooted;
    if (s == "binary")
        return TreeClass::binary;
    if (s == "full_binary" || s == "full")
        return TreeClass::full_binary;
    throw std::invalid_argument("unknown tree class '" + std::string(s) + "'");
}

namespace {

RootedTree tree_from_levels(const std::vector<int>& level)
{
    std::vector<NodeId> parent(level.size(), -1);
    std::vector<NodeId> last_at_depth(level.size() + 1, -1);
    for (std::size_t i = 0; i < level.size(); ++i) {
        if (i > 0)
            parent[i] = last_at_depth[level[i] - 1];
        last_at_depth[level[i]] = static_cast<NodeId>(i);
    }
    return RootedTree::from_parents(parent);
}

// Rooted trees via successor on canonical level sequences, starting from the
// path and ending at the star.
void rooted_trees(int n, const std::function<void(const RootedTree&)>& visit)
{
    std::vector<int> level(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        level[i] = i;
    for (;;) {
        visit(tree_from_levels(level));
        int p = n - 1;
        while (p > 0 && level[p] == 1)
            --p;
        if (p == 0)
            return;
        int q = p - 1;
        while (level[q] != level[p] - 1)
            --q;
        const int shift = p - q;
        for (int i = p; i < n; ++i)
            level[i] = level[i - shift];
    }
}

// A shape is a list of (left, right) slots per node, node 0 the root, -1 empty.
using Slots = std::vector<std::array<NodeId, 2>>;

const std::vector<Slots>& shapes(int n, bool full, std::map<int, std::vector<Slots>>& memo)
{
    if (auto it = memo.find(n); it != memo.end())
        return it->second;
    std::vector<Slots> out;
    if (n == 0) {
        out.push_back({});
    }
    else if (full && n == 1) {
        out.push_back({{-1, -1}});
    }
    else {
        const int rest = n - 1;
        for (int left = full ? 1 : 0; left <= rest - (full ? 1 : 0); left += full ? 2 : 1) {
            const int right = rest - left;
            const auto& ls = shapes(left, full, memo);
            const auto& rs = shapes(right, full, memo);
            for (const auto& l : ls) {
                for (const auto& r : rs) {
                    Slots s;
                    s.reserve(static_cast<std::size_t>(n));
                    s.push_back({left ? 1 : -1, right ? 1 + left : -1});
                    for (auto [a, b] : l)
                        s.push_back({a < 0 ? -1 : a + 1, b < 0 ? -1 : b + 1});
                    for (auto [a, b] : r)
                        s.push_back({a < 0 ? -1 : a + 1 + left, b < 0 ? -1 : b + 1 + left});
                    out.push_back(std::move(s));
                }
            }
        }
    }
    return memo.emplace(n, std::move(out)).first->second;
}

RootedTree tree_from_slots(const Slots& slots)
{
    std::vector<std::vector<NodeId>> children(slots.size());
    std::vector<Side> sides(slots.size(), Side::none);
    for (std::size_t v = 0; v < slots.size(); ++v) {
        for (int k = 0; k < 2; ++k) {
            if (slots[v][k] >= 0) {
                children[v].push_back(slots[v][k]);
                sides[slots[v][k]] = k == 0 ? Side::left : Side::right;
            }
        }
    }
    return RootedTree::from_children(children, sides);
}

}  // namespace

void for_each_tree(TreeClass cls, int n, const std::function<void(const RootedTree&)>& visit)
{
    if (n < 1)
        throw std::invalid_argument("tree size must be at least 1");
    if (cls == TreeClass::full_binary && n % 2 == 0)
        throw std::invalid_argument("full binary trees have an odd number of nodes");
    if (cls == TreeClass::rooted) {
        rooted_trees(n, visit);
        return;
    }
    std::map<int, std::vector<Slots>> memo;
    for (const auto& s : shapes(n, cls == TreeClass::full_binary, memo))
        visit(tree_from_slots(s));
}

std::vector<RootedTree> enumerate_trees(TreeClass cls, int n)
{
    std::vector<RootedTree> out;
    for_each_tree(cls, n, [&](const RootedTree& t) { out.push_back(t); });
    return out;
}

}  // namespace treecolor
