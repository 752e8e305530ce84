#include "treecolor/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "treecolor/checks.hpp"
#include "treecolor/coloring.hpp"
#include "treecolor/enumerate.hpp"
#include "treecolor/experiments.hpp"
#include "treecolor/json_io.hpp"
#include "treecolor/optimizer.hpp"
#include "treecolor/solver.hpp"
#include "treecolor/tree.hpp"

namespace treecolor {

namespace {

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TreeInput {
    std::string text;
    std::string file;

    void attach(CLI::App* cmd)
    {
        auto* t = cmd->add_option("--tree", text, "Tree in nested-parenthesis form, e.g. \"(()())\"");
        auto* f = cmd->add_option("--file", file, "File holding the tree text");
        t->excludes(f);
    }

    RootedTree load() const
    {
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in)
                throw UsageError("cannot open " + file);
            std::stringstream ss;
            ss << in.rdbuf();
            return parse_tree(ss.str());
        }
        if (text.empty())
            throw UsageError("one of --tree or --file is required");
        return parse_tree(text);
    }
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Cost table: JSON array or whitespace separated numbers, f(1) first.
Objective load_objective(const std::string& arg)
{
    if (!arg.starts_with("cost:"))
        return parse_objective(arg);
    const std::string body = read_file(arg.substr(5));
    MinCost cost;
    const json j = json::parse(body, nullptr, false);
    if (!j.is_discarded() && j.is_array()) {
        for (const auto& e : j) {
            if (!e.is_number())
                throw UsageError("cost table entries must be numbers");
            cost.cost.push_back(e.get<double>());
        }
    }
    else {
        std::istringstream in(body);
        double x = 0.0;
        while (in >> x)
            cost.cost.push_back(x);
        if (!in.eof())
            throw UsageError("cost table is neither a JSON array nor a list of numbers");
    }
    return cost;
}

ColorBudget parse_colors(const std::string& s)
{
    if (s == "chi")
        return ColorBudget::chi();
    std::size_t used = 0;
    int c = 0;
    try {
        c = std::stoi(s, &used);
    }
    catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || c < 1)
        throw UsageError("--colors takes 'chi' or a positive integer");
    return ColorBudget::at_most(c);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Ancestor-distinct coloring of rooted trees", "treecolor"};
    app.require_subcommand(1);

    TreeInput tree_in;
    std::string partition_text;
    std::string canonical = "depth";
    std::string coloring_text;
    std::string objective_text = "max";
    std::string colors_text = "chi";
    std::string class_text = "rooted";
    int n_max = 5;
    int h_max = 2;
    std::int64_t budget = default_budget();
    bool dot = false;
    bool refined = false;
    bool greedy = false;

    auto add_budget = [&](CLI::App* c) {
        c->add_option("--budget", budget, "Node-expansion cap per decision")->check(CLI::PositiveNumber);
    };

    auto* parse_cmd = app.add_subcommand("parse", "Parse a tree and report its structure");
    tree_in.attach(parse_cmd);

    auto* profile_cmd = app.add_subcommand("profile", "Height and depth profiles");
    tree_in.attach(profile_cmd);

    auto* color_cmd = app.add_subcommand("color", "Canonical coloring by depth or height");
    tree_in.attach(color_cmd);
    color_cmd->add_option("--canonical", canonical)->check(CLI::IsMember({"depth", "height"}));
    color_cmd->add_flag("--dot", dot, "Include Graphviz DOT in the output");

    auto* verify_cmd = app.add_subcommand("verify", "Check a coloring against the ancestor rule");
    tree_in.attach(verify_cmd);
    verify_cmd->add_option("--coloring", coloring_text, "Per-node colors in preorder (JSON array or 1,2,...)")
        ->required();
    verify_cmd->add_flag("--dot", dot, "Include Graphviz DOT in the output");

    auto* check_cmd = app.add_subcommand("check", "Necessary conditions on a candidate partition");
    tree_in.attach(check_cmd);
    check_cmd->add_option("--partition", partition_text)->required();
    check_cmd->add_flag("--refined", refined, "Also apply the unique-path and per-node bound conditions");

    auto* solve_cmd = app.add_subcommand("solve", "Decide whether a partition is colorable");
    tree_in.attach(solve_cmd);
    solve_cmd->add_option("--partition", partition_text)->required();
    add_budget(solve_cmd);

    auto* partitions_cmd = app.add_subcommand("partitions", "All colorable partitions");
    tree_in.attach(partitions_cmd);
    partitions_cmd->add_option("--colors", colors_text, "'chi', a maximum class count, or 'all'");
    add_budget(partitions_cmd);

    auto* optimize_cmd = app.add_subcommand("optimize", "Best balanced coloring");
    tree_in.attach(optimize_cmd);
    optimize_cmd->add_option("--objective", objective_text, "max | moment:P | entropy | cost:FILE");
    optimize_cmd->add_option("--colors", colors_text, "'chi' or a maximum class count");
    optimize_cmd->add_flag("--greedy", greedy, "Use the greedy heuristic instead of the exact search");
    add_budget(optimize_cmd);

    auto* tnsc_cmd = app.add_subcommand("tnsc", "Census of trees where the necessary conditions are not sufficient");
    tnsc_cmd->add_option("--class", class_text)->check(CLI::IsMember({"rooted", "binary", "full", "full_binary"}));
    tnsc_cmd->add_option("--nmax", n_max)->check(CLI::PositiveNumber);
    add_budget(tnsc_cmd);

    auto* conj_cmd = app.add_subcommand("conjecture", "Sufficiency test on perfect binary trees");
    conj_cmd->add_option("--hmax", h_max)->check(CLI::NonNegativeNumber);
    add_budget(conj_cmd);

    auto* catalan_cmd = app.add_subcommand("catalan", "Catalan counts by enumeration and bijection");
    catalan_cmd->add_option("--nmax", n_max)->check(CLI::Range(1, 10));

    std::vector<const char*> argv{"treecolor"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    }
    catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const SolveOptions options{.budget = budget};
    try {
        if (parse_cmd->parsed()) {
            const RootedTree t = tree_in.load();
            out << json{{"tree", serialize_tree(t)},
                        {"canonical", canonical_form(t)},
                        {"n", t.n()},
                        {"height", t.height()},
                        {"binary", t.is_binary()},
                        {"full_binary", t.is_full_binary()}}
                       .dump()
                << '\n';
            return kExitOk;
        }
        if (profile_cmd->parsed()) {
            const RootedTree t = tree_in.load();
            out << json{{"n", t.n()},
                        {"height", t.height()},
                        {"height_profile", to_json(height_profile(t))},
                        {"depth_profile", to_json(depth_profile(t))}}
                       .dump()
                << '\n';
            return kExitOk;
        }
        if (color_cmd->parsed()) {
            const RootedTree t = tree_in.load();
            const Coloring c = canonical == "height" ? canonical_by_height(t) : canonical_by_depth(t);
            json j = {{"canonical", canonical},
                      {"coloring", to_json(c)},
                      {"partition", to_json(partition_of(c))},
                      {"colors", c.color_count()}};
            if (dot)
                j["dot"] = to_dot(t, c);
            out << j.dump() << '\n';
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            const RootedTree t = tree_in.load();
            const Coloring c = coloring_from_text(coloring_text);
            const ColoringCheck check = verify_coloring(t, c);
            json j = {{"valid", check.valid()}};
            if (check.violation)
                j["violation"] = {check.violation->ancestor, check.violation->descendant};
            else
                j["partition"] = to_json(partition_of(c));
            if (dot)
                j["dot"] = to_dot(t, c);
            out << j.dump() << '\n';
            return check.valid() ? kExitOk : kExitNegative;
        }
        if (check_cmd->parsed()) {
            const RootedTree t = tree_in.load();
            const ColorPartition p = ColorPartition::parse(partition_text);
            const CheckReport report = refined ? check_all(p, t) : check_necessary(p, height_profile(t));
            out << to_json(report).dump() << '\n';
            return report.passed() ? kExitOk : kExitNegative;
        }
        if (solve_cmd->parsed()) {
            const RootedTree t = tree_in.load();
            const ColorPartition p = ColorPartition::parse(partition_text);
            if (p.total() != t.n()) {
                // Nothing to search: no coloring can have these sizes.
                out << json{{"status", "not_colorable"}, {"nodes_expanded", 0}}.dump() << '\n';
                return kExitNegative;
            }
            const SolveResult r = is_colorable(t, p, options);
            out << to_json(r).dump() << '\n';
            switch (r.status) {
            case SolveStatus::colorable: return kExitOk;
            case SolveStatus::not_colorable: return kExitNegative;
            case SolveStatus::budget_exceeded: return kExitBudget;
            }
        }
        if (partitions_cmd->parsed()) {
            const RootedTree t = tree_in.load();
            PartitionFilter filter;
            if (colors_text == "chi")
                filter = {min_colors(t), min_colors(t)};
            else if (colors_text != "all")
                filter.max_classes = parse_colors(colors_text).limit;
            const auto ps = all_colorable_partitions(t, options, filter);
            json list = json::array();
            for (const auto& p : ps)
                list.push_back(to_json(p));
            out << json{{"count", ps.size()}, {"partitions", std::move(list)}}.dump() << '\n';
            return kExitOk;
        }
        if (optimize_cmd->parsed()) {
            const RootedTree t = tree_in.load();
            const Objective objective = load_objective(objective_text);
            const ColorBudget colors = parse_colors(colors_text);
            const Optimum best = greedy ? greedy_balance(t, colors.exactly_chi ? min_colors(t) : colors.limit, objective)
                                        : optimize(t, objective, colors, options);
            out << json{{"method", greedy ? "greedy" : "exact"},
                        {"objective", objective_name(objective)},
                        {"partition", to_json(best.partition)},
                        {"value", best.value},
                        {"coloring", to_json(best.coloring)}}
                       .dump()
                << '\n';
            return kExitOk;
        }
        if (tnsc_cmd->parsed()) {
            const TnscCensus census = find_tnsc(tree_class_from_string(class_text), n_max, options);
            for (const auto& r : census.records)
                out << to_json(r).dump() << '\n';
            for (const auto& s : census.summary)
                out << to_json(s).dump() << '\n';
            return census.partial() ? kExitBudget : kExitOk;
        }
        if (conj_cmd->parsed()) {
            bool refuted = false;
            bool undecided = false;
            for (const auto& row : test_perfect_conjecture(h_max, options)) {
                out << to_json(row).dump() << '\n';
                refuted = refuted || !row.counterexamples.empty();
                undecided = undecided || !row.undecided.empty();
            }
            return refuted ? kExitNegative : undecided ? kExitBudget : kExitOk;
        }
        if (catalan_cmd->parsed()) {
            json rows = json::array();
            bool all = true;
            for (const auto& row : catalan_census(n_max)) {
                rows.push_back(to_json(row));
                all = all && row.matches();
            }
            out << json{{"rows", std::move(rows)}, {"all_match", all}}.dump() << '\n';
            return all ? kExitOk : kExitNegative;
        }
    }
    catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitBudget;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace treecolor
