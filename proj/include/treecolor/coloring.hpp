#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treecolor/partition.hpp"
#include "treecolor/tree.hpp"

namespace treecolor {

/// Total assignment of a positive color label to every node, indexed by
/// preorder node id. Labels are opaque: two colorings with the same classes
/// are equivalent. Validity is checked by verify_coloring, not enforced here.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<int> colors);

    std::span<const int> colors() const noexcept { return colors_; }
    std::size_t size() const noexcept { return colors_.size(); }
    int operator[](NodeId v) const { return colors_.at(static_cast<std::size_t>(v)); }
    /// Number of distinct labels in use.
    int color_count() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<int> colors_;
};

/// An ancestor/descendant pair sharing a color.
struct Violation {
    NodeId ancestor;
    NodeId descendant;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ColoringCheck {
    std::optional<Violation> violation;
    bool valid() const noexcept { return !violation; }
};

/// Checks that no node shares its color with one of its ancestors. Throws
/// std::invalid_argument when the coloring does not cover the tree.
ColoringCheck verify_coloring(const RootedTree& tree, const Coloring& coloring);

/// Color = depth + 1.
Coloring canonical_by_depth(const RootedTree& tree);
/// Color = height + 1.
Coloring canonical_by_height(const RootedTree& tree);

/// Minimum number of colors of a valid coloring, h + 1.
int min_colors(const RootedTree& tree);

ColorPartition partition_of(const Coloring& coloring);

/// Graphviz DOT with one fill color per class; classes are ranked by size
/// (largest first) so equivalent colorings render alike.
std::string to_dot(const RootedTree& tree, const Coloring& coloring);

}  // namespace treecolor
