#include "treecolor/tree.hpp"

#include <algorithm>
#include <numeric>

namespace treecolor {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset)
{
}

Profile::Profile(std::vector<int> counts, ProfileAxis axis) : counts_(std::move(counts)), axis_(axis)
{
    while (!counts_.empty() && counts_.back() == 0)
        counts_.pop_back();
    for (int c : counts_)
        if (c < 0)
            throw std::invalid_argument("profile counts must be non-negative");
}

int Profile::total() const noexcept
{
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

int Profile::prefix_sum(std::size_t k) const noexcept
{
    k = std::min(k, counts_.size());
    return std::accumulate(counts_.begin(), counts_.begin() + static_cast<std::ptrdiff_t>(k), 0);
}

namespace {

// Renumbers an arbitrary child-list tree rooted at 0 into preorder.
struct Preorder {
    std::vector<NodeId> order;     // new id -> old id
    std::vector<NodeId> new_id;    // old id -> new id
};

Preorder preorder_of(const std::vector<std::vector<NodeId>>& children)
{
    const auto n = children.size();
    Preorder p;
    p.order.reserve(n);
    p.new_id.assign(n, -1);
    std::vector<NodeId> stack{0};
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw std::invalid_argument("child id out of range");
        if (p.new_id[v] != -1)
            throw std::invalid_argument("node reached twice: not a tree");
        p.new_id[v] = static_cast<NodeId>(p.order.size());
        p.order.push_back(v);
        const auto& ch = children[v];
        for (auto it = ch.rbegin(); it != ch.rend(); ++it)
            stack.push_back(*it);
    }
    if (p.order.size() != n)
        throw std::invalid_argument("tree is not connected");
    return p;
}

}  // namespace

RootedTree RootedTree::from_children(const std::vector<std::vector<NodeId>>& children,
                                     std::span<const Side> sides)
{
    if (children.empty())
        throw std::invalid_argument("tree must have at least one node");
    if (!sides.empty() && sides.size() != children.size())
        throw std::invalid_argument("sides size mismatch");

    const Preorder p = preorder_of(children);
    const auto n = children.size();

    RootedTree t;
    t.children_.resize(n);
    t.parent_.assign(n, -1);
    t.side_.assign(n, Side::none);
    for (std::size_t nv = 0; nv < n; ++nv) {
        const NodeId old = p.order[nv];
        for (NodeId c : children[old]) {
            t.children_[nv].push_back(p.new_id[c]);
            t.parent_[p.new_id[c]] = static_cast<NodeId>(nv);
        }
        if (!sides.empty())
            t.side_[nv] = sides[old];
    }
    t.finalize();
    // Explicit sides may have reordered a right-before-left pair; a reordering
    // changes preorder, so renumber once more.
    if (!sides.empty()) {
        bool reordered = false;
        for (auto& ch : t.children_) {
            if (ch.size() == 2 && t.side_[ch[0]] == Side::right && t.side_[ch[1]] == Side::left) {
                std::swap(ch[0], ch[1]);
                reordered = true;
            }
        }
        if (reordered) {
            const auto sides_copy = t.side_;
            return from_children(t.children_, sides_copy);
        }
    }
    return t;
}

RootedTree RootedTree::from_parents(std::span<const NodeId> parent, std::span<const Side> sides)
{
    const auto n = parent.size();
    if (n == 0)
        throw std::invalid_argument("tree must have at least one node");
    NodeId root = -1;
    for (std::size_t v = 0; v < n; ++v) {
        if (parent[v] < 0) {
            if (root != -1)
                throw std::invalid_argument("more than one root");
            root = static_cast<NodeId>(v);
        }
        else if (static_cast<std::size_t>(parent[v]) >= n) {
            throw std::invalid_argument("parent id out of range");
        }
    }
    if (root == -1)
        throw std::invalid_argument("no root");

    // Move the root to slot 0 so from_children can start there.
    std::vector<NodeId> remap(n);
    std::iota(remap.begin(), remap.end(), 0);
    std::swap(remap[0], remap[static_cast<std::size_t>(root)]);
    std::vector<std::vector<NodeId>> children(n);
    for (std::size_t v = 0; v < n; ++v)
        if (parent[v] >= 0)
            children[remap[parent[v]]].push_back(remap[v]);
    std::vector<Side> remapped_sides;
    if (!sides.empty()) {
        if (sides.size() != n)
            throw std::invalid_argument("sides size mismatch");
        remapped_sides.resize(n);
        for (std::size_t v = 0; v < n; ++v)
            remapped_sides[remap[v]] = sides[v];
    }
    return from_children(children, remapped_sides);
}

RootedTree RootedTree::leaf()
{
    return from_children({{}});
}

RootedTree RootedTree::perfect_binary(int height)
{
    if (height < 0)
        throw std::invalid_argument("height must be non-negative");
    const std::size_t n = (std::size_t{1} << (height + 1)) - 1;
    std::vector<std::vector<NodeId>> children(n);
    for (std::size_t v = 0; 2 * v + 2 < n; ++v)
        children[v] = {static_cast<NodeId>(2 * v + 1), static_cast<NodeId>(2 * v + 2)};
    return from_children(children);
}

RootedTree RootedTree::path(int n)
{
    if (n < 1)
        throw std::invalid_argument("path needs at least one node");
    std::vector<std::vector<NodeId>> children(static_cast<std::size_t>(n));
    for (int v = 0; v + 1 < n; ++v)
        children[v] = {v + 1};
    return from_children(children);
}

RootedTree RootedTree::star(int leaves)
{
    if (leaves < 0)
        throw std::invalid_argument("negative leaf count");
    std::vector<std::vector<NodeId>> children(static_cast<std::size_t>(leaves) + 1);
    for (int v = 1; v <= leaves; ++v)
        children[0].push_back(v);
    return from_children(children);
}

void RootedTree::finalize()
{
    const auto n = parent_.size();
    depth_.assign(n, 0);
    height_.assign(n, 0);
    subtree_end_.assign(n, 0);
    // Preorder: parents precede children.
    for (std::size_t v = 1; v < n; ++v)
        depth_[v] = depth_[parent_[v]] + 1;
    for (std::size_t i = n; i-- > 0;) {
        NodeId end = static_cast<NodeId>(i) + 1;
        for (NodeId c : children_[i]) {
            height_[i] = std::max(height_[i], height_[c] + 1);
            end = std::max(end, subtree_end_[c]);
        }
        subtree_end_[i] = end;
    }

    binary_ = std::ranges::all_of(children_, [](const auto& ch) { return ch.size() <= 2; });
    full_binary_ = std::ranges::all_of(children_, [](const auto& ch) { return ch.size() == 0 || ch.size() == 2; });

    if (!binary_) {
        std::ranges::fill(side_, Side::none);
        return;
    }
    // A binary tree always carries positions. Lone children default to left
    // unless pinned; pairs are left then right.
    for (const auto& ch : children_) {
        if (ch.size() == 2) {
            const bool swapped = side_[ch[0]] == Side::right && side_[ch[1]] == Side::left;
            if (!swapped) {
                if (side_[ch[0]] == Side::right || side_[ch[1]] == Side::left)
                    throw std::invalid_argument("two children claim the same side");
                side_[ch[0]] = Side::left;
                side_[ch[1]] = Side::right;
            }
        }
        else if (ch.size() == 1 && side_[ch[0]] == Side::none) {
            side_[ch[0]] = Side::left;
        }
    }
    side_[kRoot] = Side::none;
}

void RootedTree::check_node(NodeId v) const
{
    if (v < 0 || static_cast<std::size_t>(v) >= parent_.size())
        throw std::out_of_range("invalid node id " + std::to_string(v));
}

std::span<const NodeId> RootedTree::children(NodeId v) const
{
    check_node(v);
    return children_[v];
}

std::optional<NodeId> RootedTree::parent(NodeId v) const
{
    check_node(v);
    if (parent_[v] < 0)
        return std::nullopt;
    return parent_[v];
}

int RootedTree::depth(NodeId v) const
{
    check_node(v);
    return depth_[v];
}

int RootedTree::height(NodeId v) const
{
    check_node(v);
    return height_[v];
}

Side RootedTree::side(NodeId v) const
{
    check_node(v);
    return side_[v];
}

NodeId RootedTree::subtree_end(NodeId v) const
{
    check_node(v);
    return subtree_end_[v];
}

bool RootedTree::is_ancestor(NodeId u, NodeId v) const
{
    check_node(u);
    check_node(v);
    return u < v && v < subtree_end_[u];
}

RootedTree parse_tree(std::string_view text)
{
    std::vector<std::vector<NodeId>> children;
    std::vector<NodeId> stack;
    bool closed_root = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
            continue;
        if (closed_root)
            throw ParseError("trailing input after tree", i);
        if (c == '(') {
            const auto id = static_cast<NodeId>(children.size());
            children.emplace_back();
            if (!stack.empty())
                children[stack.back()].push_back(id);
            stack.push_back(id);
        }
        else if (c == ')') {
            if (stack.empty())
                throw ParseError("unbalanced ')'", i);
            stack.pop_back();
            if (stack.empty())
                closed_root = true;
        }
        else {
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
    }
    if (children.empty())
        throw ParseError("empty input", 0);
    if (!stack.empty())
        throw ParseError("unterminated '('", text.size());
    return RootedTree::from_children(children);
}

std::string serialize_tree(const RootedTree& tree)
{
    std::string out;
    out.reserve(2 * tree.size());
    // Preorder ids: close parens for every subtree that ends before the next id.
    std::vector<NodeId> open;
    for (NodeId v = 0; v < tree.n(); ++v) {
        while (!open.empty() && tree.subtree_end(open.back()) <= v) {
            out += ')';
            open.pop_back();
        }
        out += '(';
        open.push_back(v);
    }
    out.append(open.size(), ')');
    return out;
}

std::string canonical_form(const RootedTree& tree)
{
    std::vector<std::string> code(tree.size());
    for (NodeId v = tree.n() - 1; v >= 0; --v) {
        std::vector<std::string> parts;
        for (NodeId c : tree.children(v))
            parts.push_back(std::move(code[c]));
        std::ranges::sort(parts);
        std::string s = "(";
        for (auto& p : parts)
            s += p;
        s += ')';
        code[v] = std::move(s);
    }
    return code[kRoot];
}

Profile height_profile(const RootedTree& tree)
{
    std::vector<int> counts(static_cast<std::size_t>(tree.height()) + 1, 0);
    for (NodeId v = 0; v < tree.n(); ++v)
        ++counts[tree.height(v)];
    return {std::move(counts), ProfileAxis::by_height};
}

Profile depth_profile(const RootedTree& tree)
{
    std::vector<int> counts(static_cast<std::size_t>(tree.height()) + 1, 0);
    for (NodeId v = 0; v < tree.n(); ++v)
        ++counts[tree.depth(v)];
    return {std::move(counts), ProfileAxis::by_depth};
}

std::vector<NodeId> siblings(const RootedTree& tree, NodeId v)
{
    const auto p = tree.parent(v);
    if (!p)
        return {};
    std::vector<NodeId> out;
    for (NodeId c : tree.children(*p))
        if (c != v)
            out.push_back(c);
    return out;
}

std::optional<NodeId> ancestor(const RootedTree& tree, NodeId v, int lambda)
{
    if (lambda < 0)
        throw std::invalid_argument("ancestor order must be non-negative");
    std::optional<NodeId> cur = v;
    tree.depth(v);  // validates v
    for (int i = 0; i < lambda && cur; ++i)
        cur = tree.parent(*cur);
    return cur;
}

int subtree_leaf_count(const RootedTree& tree, NodeId w)
{
    int leaves = 0;
    for (NodeId u = w; u < tree.subtree_end(w); ++u)
        leaves += tree.is_leaf(u) ? 1 : 0;
    return leaves;
}

RootedTree strip_leaves(const RootedTree& full)
{
    if (!full.is_full_binary() || full.n() < 3)
        throw std::invalid_argument("strip_leaves needs a full binary tree with at least one internal node");
    std::vector<NodeId> new_id(full.size(), -1);
    std::vector<std::vector<NodeId>> children;
    std::vector<Side> sides;
    for (NodeId v = 0; v < full.n(); ++v) {
        if (full.is_leaf(v))
            continue;
        new_id[v] = static_cast<NodeId>(children.size());
        children.emplace_back();
        sides.push_back(full.side(v));
        if (v != kRoot)
            children[new_id[*full.parent(v)]].push_back(new_id[v]);
    }
    return RootedTree::from_children(children, sides);
}

RootedTree complete_to_full(const RootedTree& binary)
{
    if (!binary.is_binary())
        throw std::invalid_argument("complete_to_full needs a binary tree");
    std::vector<std::vector<NodeId>> children(binary.size());
    for (NodeId v = 0; v < binary.n(); ++v) {
        NodeId slot[2] = {-1, -1};
        for (NodeId c : binary.children(v))
            slot[binary.side(c) == Side::right ? 1 : 0] = c;
        for (NodeId& s : slot) {
            if (s == -1) {
                s = static_cast<NodeId>(children.size());
                children.emplace_back();
            }
        }
        children[v] = {slot[0], slot[1]};
    }
    return RootedTree::from_children(children);
}

}  // namespace treecolor
