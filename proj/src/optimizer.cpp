#include "treecolor/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace treecolor {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Objective parse_objective(std::string_view text)
{
    if (text == "max")
        return MinMax{};
    if (text == "entropy")
        return MaxEntropy{};
    if (text.starts_with("moment:")) {
        const std::string arg(text.substr(7));
        std::size_t used = 0;
        double p = 0.0;
        try {
            p = std::stod(arg, &used);
        }
        catch (const std::exception&) {
            used = 0;
        }
        if (used != arg.size() || arg.empty() || !std::isfinite(p) || p <= 0.0)
            throw std::invalid_argument("moment order must be a finite positive number, got '" + arg + "'");
        return MinMoment{p};
    }
    throw std::invalid_argument("unknown objective '" + std::string(text) + "'");
}

std::string objective_name(const Objective& objective)
{
    return std::visit(overloaded{
                          [](const MinMax&) { return std::string("max"); },
                          [](const MinMoment& m) {
                              std::string s = std::to_string(m.p);
                              s.erase(s.find_last_not_of('0') + 1);
                              if (s.back() == '.')
                                  s.pop_back();
                              return "moment:" + s;
                          },
                          [](const MaxEntropy&) { return std::string("entropy"); },
                          [](const MinCost&) { return std::string("cost"); },
                      },
                      objective);
}

double objective_value(const ColorPartition& partition, const Objective& objective)
{
    const auto sizes = partition.sizes();
    return std::visit(
        overloaded{
            [&](const MinMax&) { return static_cast<double>(partition.largest()); },
            [&](const MinMoment& m) {
                if (!(m.p > 0.0) || !std::isfinite(m.p))
                    throw std::invalid_argument("moment order must be finite and positive");
                double sum = 0.0;
                for (int a : sizes)
                    sum += std::pow(static_cast<double>(a), m.p);
                return sum;
            },
            [&](const MaxEntropy&) {
                double sum = 0.0;
                for (int a : sizes)
                    sum += a * std::log(static_cast<double>(a));
                return sum;
            },
            [&](const MinCost& c) {
                double sum = 0.0;
                for (int a : sizes) {
                    if (static_cast<std::size_t>(a) > c.cost.size())
                        throw std::invalid_argument("cost table has no entry for class size " + std::to_string(a));
                    sum += c.cost[static_cast<std::size_t>(a) - 1];
                }
                return sum;
            },
        },
        objective);
}

Optimum optimize(const RootedTree& tree, const Objective& objective, ColorBudget colors, const SolveOptions& options)
{
    const int chi = min_colors(tree);
    PartitionFilter filter;
    if (colors.exactly_chi) {
        filter = {chi, chi};
    }
    else {
        if (colors.limit < chi)
            throw std::invalid_argument("color budget " + std::to_string(colors.limit) + " is below chi = " +
                                        std::to_string(chi));
        filter = {1, colors.limit};
    }
    const auto candidates = all_colorable_partitions(tree, options, filter);
    if (candidates.empty())
        throw std::logic_error("no colorable partition within the color budget");

    // Candidates come lexicographically decreasing; walk them from the
    // smallest so that strict improvement keeps the lexicographic tie-break.
    const ColorPartition* best = nullptr;
    double best_value = 0.0;
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
        const double value = objective_value(*it, objective);
        const double tol = 1e-12 * std::max(1.0, std::abs(best_value));
        if (!best || value < best_value - tol) {
            best = &*it;
            best_value = value;
        }
    }
    const SolveResult r = is_colorable(tree, *best, options);
    if (!r.witness)
        throw BudgetExceeded(*best, options.budget);
    return {*r.witness, *best, best_value};
}

Optimum greedy_balance(const RootedTree& tree, int colors, const Objective& report_objective)
{
    if (colors < min_colors(tree))
        throw std::invalid_argument("greedy_balance needs at least h + 1 colors");
    std::vector<NodeId> order(tree.size());
    std::iota(order.begin(), order.end(), 0);
    std::ranges::stable_sort(order, [&](NodeId a, NodeId b) { return tree.height(a) > tree.height(b); });

    // Ancestors have strictly larger height, so they are colored first.
    std::vector<int> color(tree.size(), 0);
    std::vector<int> load(static_cast<std::size_t>(colors) + 1, 0);
    std::vector<bool> blocked(static_cast<std::size_t>(colors) + 1, false);
    for (NodeId v : order) {
        std::fill(blocked.begin(), blocked.end(), false);
        for (auto a = tree.parent(v); a; a = tree.parent(*a))
            blocked[color[*a]] = true;
        int pick = 0;
        for (int c = 1; c <= colors; ++c)
            if (!blocked[c] && (pick == 0 || load[c] < load[pick]))
                pick = c;
        color[v] = pick;
        ++load[pick];
    }
    Coloring coloring(std::move(color));
    ColorPartition partition = partition_of(coloring);
    const double value = objective_value(partition, report_objective);
    return {std::move(coloring), std::move(partition), value};
}

}  // namespace treecolor
