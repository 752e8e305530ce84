#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace treecolor {

/// Dense node index. The root is always 0 and ids follow preorder.
using NodeId = std::int32_t;

inline constexpr NodeId kRoot = 0;

/// Position of a child under a binary parent. Only meaningful when the tree
/// is binary; a lone child may sit on either side.
enum class Side : std::uint8_t { none, left, right };

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

enum class ProfileAxis : std::uint8_t { by_height, by_depth };

/// Node counts per level, n_0..n_h by height or d_0..d_h by depth.
class Profile {
public:
    Profile(std::vector<int> counts, ProfileAxis axis);

    std::span<const int> counts() const noexcept { return counts_; }
    ProfileAxis axis() const noexcept { return axis_; }
    std::size_t size() const noexcept { return counts_.size(); }
    int operator[](std::size_t i) const { return counts_.at(i); }
    int total() const noexcept;
    /// Sum of the first k entries; entries past the end count as zero.
    int prefix_sum(std::size_t k) const noexcept;

    friend bool operator==(const Profile&, const Profile&) = default;

private:
    std::vector<int> counts_;
    ProfileAxis axis_;
};

/// Immutable rooted tree. Node ids are assigned in preorder, children keep
/// their stored order, and depth/height are precomputed.
class RootedTree {
public:
    /// Builds from a parent array (parent[root] < 0). Children keep the order
    /// in which they appear in the array; ids are renumbered to preorder.
    /// `sides` optionally pins left/right positions (indexed like `parent`).
    static RootedTree from_parents(std::span<const NodeId> parent,
                                   std::span<const Side> sides = {});

    /// Builds from per-node child lists where node 0 is the root.
    static RootedTree from_children(const std::vector<std::vector<NodeId>>& children,
                                    std::span<const Side> sides = {});

    /// Single-node tree.
    static RootedTree leaf();

    /// Perfect binary tree of the given height.
    static RootedTree perfect_binary(int height);

    /// Path with n nodes.
    static RootedTree path(int n);

    /// Root with `leaves` leaf children.
    static RootedTree star(int leaves);

    std::size_t size() const noexcept { return parent_.size(); }
    int n() const noexcept { return static_cast<int>(parent_.size()); }
    int height() const noexcept { return height_[kRoot]; }

    std::span<const NodeId> children(NodeId v) const;
    std::optional<NodeId> parent(NodeId v) const;
    int depth(NodeId v) const;
    int height(NodeId v) const;
    Side side(NodeId v) const;
    bool is_leaf(NodeId v) const { return children(v).empty(); }

    bool is_binary() const noexcept { return binary_; }
    bool is_full_binary() const noexcept { return full_binary_; }

    /// Preorder index range end of the subtree rooted at v (exclusive).
    NodeId subtree_end(NodeId v) const;
    /// Whether `u` is a proper ancestor of `v`.
    bool is_ancestor(NodeId u, NodeId v) const;

    friend bool operator==(const RootedTree&, const RootedTree&) = default;

private:
    RootedTree() = default;
    void finalize();
    void check_node(NodeId v) const;

    std::vector<std::vector<NodeId>> children_;
    std::vector<NodeId> parent_;
    std::vector<Side> side_;
    std::vector<int> depth_;
    std::vector<int> height_;
    std::vector<NodeId> subtree_end_;
    bool binary_ = false;
    bool full_binary_ = false;
};

RootedTree parse_tree(std::string_view text);
std::string serialize_tree(const RootedTree& tree);

/// AHU-style canonical string: children encodings sorted, so two trees map
/// to the same string iff they are isomorphic as unordered rooted trees. The
/// result is itself a valid tree text.
std::string canonical_form(const RootedTree& tree);

Profile height_profile(const RootedTree& tree);
Profile depth_profile(const RootedTree& tree);

std::vector<NodeId> siblings(const RootedTree& tree, NodeId v);
/// The lambda'th ancestor; ancestor(v, 0) == v; absent past the root.
std::optional<NodeId> ancestor(const RootedTree& tree, NodeId v, int lambda);
int subtree_leaf_count(const RootedTree& tree, NodeId w);

/// Removes all leaves of a full binary tree, keeping left/right positions.
RootedTree strip_leaves(const RootedTree& full);
/// Gives every node of a binary tree exactly two children by adding leaves
/// into its empty slots.
RootedTree complete_to_full(const RootedTree& binary);

}  // namespace treecolor
