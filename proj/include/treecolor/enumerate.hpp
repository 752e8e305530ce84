#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "treecolor/tree.hpp"

namespace treecolor {

enum class TreeClass { rooted, binary, full_binary };

std::string_view to_string(TreeClass c);
/// Accepts "rooted", "binary", "full_binary" and the short form "full".
TreeClass tree_class_from_string(std::string_view s);

/// Visits every tree of the class with n nodes in a deterministic order.
///  - rooted: one representative per unordered isomorphism class, generated
///    from canonical level sequences.
///  - binary / full_binary: one tree per distinct left/right shape.
/// Throws std::invalid_argument for n < 1 or an even n with full_binary.
void for_each_tree(TreeClass cls, int n, const std::function<void(const RootedTree&)>& visit);

std::vector<RootedTree> enumerate_trees(TreeClass cls, int n);

}  // namespace treecolor
