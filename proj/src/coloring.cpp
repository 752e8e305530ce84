#include "treecolor/coloring.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace treecolor {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors))
{
    for (int c : colors_)
        if (c < 1)
            throw std::invalid_argument("color labels must be positive");
}

int Coloring::color_count() const
{
    std::vector<int> sorted(colors_);
    std::ranges::sort(sorted);
    return static_cast<int>(std::ranges::unique(sorted).begin() - sorted.begin());
}

ColoringCheck verify_coloring(const RootedTree& tree, const Coloring& coloring)
{
    if (coloring.size() != tree.size())
        throw std::invalid_argument("coloring has " + std::to_string(coloring.size()) + " entries for a tree of " +
                                    std::to_string(tree.size()) + " nodes");
    std::unordered_map<int, NodeId> on_path;
    std::vector<NodeId> path;
    for (NodeId v = 0; v < tree.n(); ++v) {
        while (!path.empty() && tree.subtree_end(path.back()) <= v) {
            on_path.erase(coloring[path.back()]);
            path.pop_back();
        }
        if (auto it = on_path.find(coloring[v]); it != on_path.end())
            return {Violation{it->second, v}};
        on_path.emplace(coloring[v], v);
        path.push_back(v);
    }
    return {};
}

Coloring canonical_by_depth(const RootedTree& tree)
{
    std::vector<int> c(tree.size());
    for (NodeId v = 0; v < tree.n(); ++v)
        c[v] = tree.depth(v) + 1;
    return Coloring(std::move(c));
}

Coloring canonical_by_height(const RootedTree& tree)
{
    std::vector<int> c(tree.size());
    for (NodeId v = 0; v < tree.n(); ++v)
        c[v] = tree.height(v) + 1;
    return Coloring(std::move(c));
}

int min_colors(const RootedTree& tree)
{
    return tree.height() + 1;
}

ColorPartition partition_of(const Coloring& coloring)
{
    std::map<int, int> counts;
    for (int c : coloring.colors())
        ++counts[c];
    std::vector<int> sizes;
    sizes.reserve(counts.size());
    for (auto [label, count] : counts)
        sizes.push_back(count);
    return ColorPartition(std::move(sizes));
}

std::string to_dot(const RootedTree& tree, const Coloring& coloring)
{
    if (coloring.size() != tree.size())
        throw std::invalid_argument("coloring size mismatch");
    static constexpr std::array<const char*, 12> palette = {
        "#4e79a7", "#e15759", "#59a14f", "#f2f2f2", "#f28e2b", "#b07aa1",
        "#76b7b2", "#edc948", "#ff9da7", "#9c755f", "#bab0ac", "#d37295",
    };
    // Rank labels by class size, ties by label, so the biggest class gets
    // the first palette entry.
    std::map<int, int> counts;
    for (int c : coloring.colors())
        ++counts[c];
    std::vector<std::pair<int, int>> order(counts.begin(), counts.end());
    std::ranges::stable_sort(order, [](auto a, auto b) { return a.second > b.second; });
    std::map<int, std::size_t> rank;
    for (std::size_t i = 0; i < order.size(); ++i)
        rank[order[i].first] = i;

    std::ostringstream out;
    out << "digraph tree {\n  node [shape=circle, style=filled, fontname=\"Helvetica\"];\n";
    for (NodeId v = 0; v < tree.n(); ++v) {
        out << "  n" << v << " [label=\"" << coloring[v] << "\", fillcolor=\"" << palette[rank[coloring[v]] % palette.size()]
            << "\"];\n";
    }
    for (NodeId v = 1; v < tree.n(); ++v)
        out << "  n" << *tree.parent(v) << " -> n" << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace treecolor
