#include "treecolor/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "treecolor/checks.hpp"

namespace treecolor {

std::int64_t default_budget()
{
    if (const char* env = std::getenv("TREECOLOR_BUDGET")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return kDefaultBudget;
}

std::string_view to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::colorable: return "colorable";
    case SolveStatus::not_colorable: return "not_colorable";
    case SolveStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

BudgetExceeded::BudgetExceeded(const ColorPartition& partition, std::int64_t budget)
    : std::runtime_error("expansion budget of " + std::to_string(budget) + " exceeded on partition " +
                         partition.to_string()),
      partition_(partition)
{
}

namespace {

struct OutOfBudget {};

// Depth-first search over nodes in preorder. Each step colors one node with a
// class that still has budget and is not used on its root path.
class Search {
public:
    Search(const RootedTree& tree, const ColorPartition& partition, const SolveOptions& options)
        : tree_(tree),
          options_(options),
          rem_(partition.sizes().begin(), partition.sizes().end()),
          on_path_(partition.size(), false),
          color_(tree.size(), -1),
          left_by_height_(static_cast<std::size_t>(tree.height()) + 1, 0),
          subtree_prefix_(tree.size()),
          leaves_(tree.size(), 0),
          later_size_(tree.size(), 0),
          later_leaves_(tree.size(), 0)
    {
        for (NodeId v = tree.n() - 1; v >= 0; --v) {
            if (tree.is_leaf(v))
                leaves_[v] = 1;
            const auto kids = tree.children(v);
            int size = 0;
            int leaves = 0;
            for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
                later_size_[*it] = size;
                later_leaves_[*it] = leaves;
                size += tree.subtree_end(*it) - *it;
                leaves += leaves_[*it];
            }
            if (!kids.empty())
                leaves_[v] = leaves;
        }
        for (NodeId v = 0; v < tree.n(); ++v)
            ++left_by_height_[tree.height(v)];
        // subtree_prefix_[v][k] = nodes of T_v with height < k.
        for (NodeId v = tree.n() - 1; v >= 0; --v) {
            auto& pre = subtree_prefix_[v];
            pre.assign(static_cast<std::size_t>(tree.height(v)) + 2, 0);
            for (NodeId u = v; u < tree.subtree_end(v); ++u)
                ++pre[static_cast<std::size_t>(tree.height(u)) + 1];
            for (std::size_t k = 1; k < pre.size(); ++k)
                pre[k] += pre[k - 1];
        }
    }

    bool run() { return visit(0); }
    std::int64_t expanded() const noexcept { return expanded_; }

    Coloring witness() const
    {
        std::vector<int> labels(color_.size());
        for (std::size_t v = 0; v < color_.size(); ++v)
            labels[v] = color_[v] + 1;
        return Coloring(std::move(labels));
    }

private:
    bool visit(NodeId v)
    {
        if (v == tree_.n())
            return true;
        // Leave the subtrees that ended before v.
        std::size_t popped = 0;
        while (!path_.empty() && tree_.subtree_end(path_.back()) <= v) {
            on_path_[color_[path_.back()]] = false;
            popped_.push_back(path_.back());
            path_.pop_back();
            ++popped;
        }
        bool found = false;
        if (options_.memoize) {
            state_key(v);
            if (!failed_.contains(key_)) {
                std::string key = key_;
                found = place(v);
                if (!found && failed_.size() < kMemoCap)
                    failed_.insert(std::move(key));
            }
        }
        else {
            found = place(v);
        }
        for (; popped > 0; --popped) {
            path_.push_back(popped_.back());
            on_path_[color_[popped_.back()]] = true;
            popped_.pop_back();
        }
        return found;
    }

    bool place(NodeId v)
    {
        std::vector<int> candidates;
        for (int c = 0; c < static_cast<int>(rem_.size()); ++c)
            if (rem_[c] > 0 && !on_path_[c])
                candidates.push_back(c);

        if (options_.prune && (!subtree_fits(v, candidates) || !pending_fits(v)))
            return false;

        // Off-path classes with equal remaining budget are interchangeable for
        // every node still to come; keep one per budget value.
        std::ranges::stable_sort(candidates, [&](int a, int b) { return rem_[a] > rem_[b]; });
        candidates.erase(std::ranges::unique(candidates, [&](int a, int b) { return rem_[a] == rem_[b]; }).begin(),
                         candidates.end());

        const int h = tree_.height(v);
        for (int c : candidates) {
            if (++expanded_ > options_.budget)
                throw OutOfBudget{};
            --rem_[c];
            --left_by_height_[h];
            color_[v] = c;
            on_path_[c] = true;
            path_.push_back(v);
            if ((!options_.prune || forest_fits()) && visit(v + 1))
                return true;
            path_.pop_back();
            on_path_[c] = false;
            color_[v] = -1;
            ++left_by_height_[h];
            ++rem_[c];
        }
        return false;
    }

    // Everything still to come depends only on the budgets of the classes on
    // the current root path (in path order) and on the multiset of the other
    // budgets.
    void state_key(NodeId v)
    {
        key_.clear();
        auto put = [this](int x) {
            key_.push_back(static_cast<char>(x & 0xff));
            key_.push_back(static_cast<char>((x >> 8) & 0xff));
        };
        put(v);
        for (NodeId a : path_)
            put(rem_[color_[a]]);
        put(-1);
        scratch_.clear();
        for (std::size_t c = 0; c < rem_.size(); ++c)
            if (!on_path_[c] && rem_[c] > 0)
                scratch_.push_back(rem_[c]);
        std::ranges::sort(scratch_);
        for (int x : scratch_)
            put(x);
    }

    // T_v can only use off-path classes. With those budgets r sorted
    // decreasing, at most min_k (P_k(T_v) + sum_{i>k} r_i) of its nodes can be
    // colored.
    bool subtree_fits(NodeId v, const std::vector<int>& available) const
    {
        std::vector<int> r;
        r.reserve(available.size());
        for (int c : available)
            r.push_back(rem_[c]);
        std::ranges::sort(r, std::greater<>{});
        const auto& pre = subtree_prefix_[v];
        const int size = pre.back();
        int tail = 0;
        for (int x : r)
            tail += x;
        for (std::size_t k = 0;; ++k) {
            const int bound = pre[std::min(k, pre.size() - 1)] + tail;
            if (bound < size)
                return false;
            if (k >= r.size() || k + 1 >= pre.size())
                return true;
            tail -= r[k];
        }
    }

    // The uncolored nodes form trees hanging off the current root path. Those
    // hanging below path position i may not use the classes at positions
    // 0..i, and no class covers more nodes of a tree than it has leaves. Each
    // remaining budget has to be shipped into these groups; check the cut
    // condition of that transportation problem over every set of groups.
    bool pending_fits(NodeId v)
    {
        group_size_.clear();
        group_leaves_.clear();
        group_pos_.clear();
        const std::size_t d = path_.size();
        for (std::size_t i = 0; i < d; ++i) {
            const NodeId next = i + 1 < d ? path_[i + 1] : v;
            int size = later_size_[next];
            int leaves = later_leaves_[next];
            if (i + 1 == d) {
                size += tree_.subtree_end(v) - v;
                leaves += leaves_[v];
            }
            if (size > 0) {
                group_size_.push_back(size);
                group_leaves_.push_back(leaves);
                group_pos_.push_back(static_cast<int>(i));
            }
        }
        const std::size_t g = group_size_.size();
        if (g == 0 || g > kMaxGroups)
            return true;
        // first_group_[p]: groups with index below it may use the class at
        // path position p.
        scratch_.clear();
        path_budget_.clear();
        for (std::size_t p = 0; p < d; ++p) {
            const int r = rem_[color_[path_[p]]];
            if (r == 0)
                continue;
            std::size_t k = 0;
            while (k < g && group_pos_[k] < static_cast<int>(p))
                ++k;
            path_budget_.emplace_back(r, k);
        }
        for (std::size_t c = 0; c < rem_.size(); ++c)
            if (!on_path_[c] && rem_[c] > 0)
                scratch_.push_back(rem_[c]);
        for (std::uint32_t s = 1; s < (1u << g); ++s) {
            int demand = 0;
            int leaves_all = 0;
            prefix_leaves_.assign(g + 1, 0);
            for (std::size_t k = 0; k < g; ++k) {
                const bool in = (s >> k) & 1u;
                prefix_leaves_[k + 1] = prefix_leaves_[k] + (in ? group_leaves_[k] : 0);
                if (in)
                    demand += group_size_[k];
            }
            leaves_all = prefix_leaves_[g];
            int supply = 0;
            for (int r : scratch_)
                supply += std::min(r, leaves_all);
            for (const auto& [r, k] : path_budget_)
                supply += std::min(r, prefix_leaves_[k]);
            if (supply < demand)
                return false;
        }
        return true;
    }

    // Every remaining budget must be spent on the uncolored forest, whose
    // trees each obey the prefix inequalities.
    bool forest_fits()
    {
        scratch_.assign(rem_.begin(), rem_.end());
        std::ranges::sort(scratch_, std::greater<>{});
        int lhs = 0;
        int rhs = 0;
        for (std::size_t k = 0; k < scratch_.size() && scratch_[k] > 0; ++k) {
            lhs += scratch_[k];
            if (k < left_by_height_.size())
                rhs += left_by_height_[k];
            if (lhs > rhs)
                return false;
        }
        return true;
    }

    const RootedTree& tree_;
    const SolveOptions& options_;
    std::vector<int> rem_;
    std::vector<bool> on_path_;
    std::vector<int> color_;
    std::vector<int> left_by_height_;
    std::vector<std::vector<int>> subtree_prefix_;
    std::vector<NodeId> path_;
    std::vector<NodeId> popped_;
    std::vector<int> scratch_;
    std::vector<int> leaves_;
    std::vector<int> later_size_;
    std::vector<int> later_leaves_;
    std::vector<int> group_size_;
    std::vector<int> group_leaves_;
    std::vector<int> group_pos_;
    std::vector<int> prefix_leaves_;
    std::vector<std::pair<int, std::size_t>> path_budget_;
    std::string key_;
    std::unordered_set<std::string> failed_;
    std::int64_t expanded_ = 0;

    static constexpr std::size_t kMemoCap = 4'000'000;
    static constexpr std::size_t kMaxGroups = 12;
};

}  // namespace

SolveResult is_colorable(const RootedTree& tree, const ColorPartition& partition, const SolveOptions& options)
{
    if (partition.total() != tree.n())
        throw std::invalid_argument("partition " + partition.to_string() + " does not sum to tree size " +
                                    std::to_string(tree.n()));
    const auto start = std::chrono::steady_clock::now();
    SolveResult result;
    Search search(tree, partition, options);
    try {
        if (search.run()) {
            result.status = SolveStatus::colorable;
            result.witness = search.witness();
        }
        else {
            result.status = SolveStatus::not_colorable;
        }
    }
    catch (const OutOfBudget&) {
        result.status = SolveStatus::budget_exceeded;
    }
    result.stats.nodes_expanded = std::min(search.expanded(), options.budget);
    result.stats.elapsed = std::chrono::steady_clock::now() - start;
    return result;
}

std::vector<ColorPartition> all_colorable_partitions(const RootedTree& tree, const SolveOptions& options,
                                                     PartitionFilter filter)
{
    std::vector<ColorPartition> out;
    const int min_parts = std::max(filter.min_classes, min_colors(tree));
    if (filter.max_classes >= 0 && filter.max_classes < min_parts)
        return out;
    for_each_integer_partition(
        tree.n(),
        [&](const ColorPartition& p) {
            if (!check_all(p, tree).passed())
                return;
            const SolveResult r = is_colorable(tree, p, options);
            if (r.status == SolveStatus::budget_exceeded)
                throw BudgetExceeded(p, options.budget);
            if (r.colorable())
                out.push_back(p);
        },
        min_parts, filter.max_classes);
    return out;
}

namespace {

bool oracle_rec(const RootedTree& tree, NodeId v, int used, int max_colors, std::vector<int>& color,
                const std::function<bool(const Coloring&)>& visit)
{
    if (v == tree.n())
        return visit(Coloring(color));
    const int limit = max_colors < 0 ? used + 1 : std::min(used + 1, max_colors);
    for (int c = 1; c <= limit; ++c) {
        bool clash = false;
        for (auto a = tree.parent(v); a && !clash; a = tree.parent(*a))
            clash = color[*a] == c;
        if (clash)
            continue;
        color[v] = c;
        if (!oracle_rec(tree, v + 1, std::max(used, c), max_colors, color, visit))
            return false;
    }
    color[v] = 0;
    return true;
}

}  // namespace

void oracle_colorings(const RootedTree& tree, const std::function<bool(const Coloring&)>& visit, int max_colors)
{
    std::vector<int> color(tree.size(), 0);
    oracle_rec(tree, 0, 0, max_colors, color, visit);
}

}  // namespace treecolor
