#include "treecolor/experiments.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "treecolor/checks.hpp"

namespace treecolor {

bool TnscCensus::partial() const noexcept
{
    return std::ranges::any_of(records, [](const TnscRecord& r) { return !r.undecided_partitions.empty(); });
}

std::vector<RootedTree> isomorphism_classes(TreeClass cls, int n)
{
    std::map<std::string, RootedTree> unique;
    for_each_tree(cls, n, [&](const RootedTree& t) { unique.try_emplace(canonical_form(t), t); });
    std::vector<RootedTree> out;
    out.reserve(unique.size());
    for (auto& [key, tree] : unique)
        out.push_back(tree);
    return out;
}

TnscCensus find_tnsc(TreeClass cls, int n_max, const SolveOptions& options)
{
    if (n_max < 1)
        throw std::invalid_argument("n_max must be at least 1");
    TnscCensus census;
    const int step = cls == TreeClass::full_binary ? 2 : 1;
    for (int n = 1; n <= n_max; n += step) {
        const auto partitions = integer_partitions(n);
        CensusSummary summary{cls, n, 0, 0};
        for (const RootedTree& tree : isomorphism_classes(cls, n)) {
            ++summary.trees_scanned;
            const Profile profile = height_profile(tree);
            TnscRecord record{canonical_form(tree), cls, n, profile, {}, {}};
            for (const ColorPartition& p : partitions) {
                if (!check_necessary(p, profile).passed())
                    continue;
                const SolveResult r = is_colorable(tree, p, options);
                if (r.status == SolveStatus::not_colorable)
                    record.failing_partitions.push_back(p);
                else if (r.status == SolveStatus::budget_exceeded)
                    record.undecided_partitions.push_back(p);
            }
            if (!record.failing_partitions.empty() || !record.undecided_partitions.empty()) {
                if (!record.failing_partitions.empty())
                    ++summary.tnsc_count;
                census.records.push_back(std::move(record));
            }
        }
        census.summary.push_back(summary);
    }
    return census;
}

std::vector<ConjectureRow> test_perfect_conjecture(int h_max, const SolveOptions& options)
{
    if (h_max < 0)
        throw std::invalid_argument("h_max must be non-negative");
    std::vector<ConjectureRow> rows;
    for (int h = 0; h <= h_max; ++h) {
        const auto start = std::chrono::steady_clock::now();
        const RootedTree tree = RootedTree::perfect_binary(h);
        const Profile profile = height_profile(tree);
        ConjectureRow row;
        row.height = h;
        row.n = tree.n();
        for_each_integer_partition(tree.n(), [&](const ColorPartition& p) {
            if (!check_necessary(p, profile).passed())
                return;
            ++row.partitions_tested;
            const SolveResult r = is_colorable(tree, p, options);
            switch (r.status) {
            case SolveStatus::colorable:
                ++row.colorable;
                if (static_cast<int>(p.size()) == h + 1)
                    row.chi_partitions.push_back(p);
                break;
            case SolveStatus::not_colorable: row.counterexamples.push_back(p); break;
            case SolveStatus::budget_exceeded: row.undecided.push_back(p); break;
            }
        });
        row.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::uint64_t catalan_number(int n)
{
    if (n < 0 || n > 16)
        throw std::invalid_argument("catalan_number supports 0 <= n <= 16");
    auto factorial = [](int k) {
        unsigned __int128 f = 1;
        for (int i = 2; i <= k; ++i)
            f *= static_cast<unsigned>(i);
        return f;
    };
    return static_cast<std::uint64_t>(factorial(2 * n) / factorial(n + 1) / factorial(n));
}

namespace {

// Shape key that keeps left/right positions: (parent, side) per preorder node.
std::vector<int> shape_key(const RootedTree& t)
{
    std::vector<int> key;
    key.reserve(2 * t.size());
    for (NodeId v = 0; v < t.n(); ++v) {
        key.push_back(t.parent(v).value_or(-1));
        key.push_back(static_cast<int>(t.side(v)));
    }
    return key;
}

}  // namespace

std::vector<CatalanRow> catalan_census(int n_max)
{
    if (n_max < 1 || n_max > 10)
        throw std::invalid_argument("catalan_census supports 1 <= n_max <= 10");
    std::vector<CatalanRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        CatalanRow row;
        row.n = n;
        row.formula = catalan_number(n);
        for_each_tree(TreeClass::binary, n, [&](const RootedTree&) { ++row.binary; });
        std::set<std::vector<int>> stripped;
        for_each_tree(TreeClass::full_binary, 2 * n + 1, [&](const RootedTree& full) {
            ++row.full_binary;
            RootedTree skeleton = strip_leaves(full);
            if (skeleton.n() == n && complete_to_full(skeleton) == full)
                stripped.insert(shape_key(skeleton));
        });
        row.bijection = stripped.size();
        rows.push_back(row);
    }
    return rows;
}

}  // namespace treecolor
