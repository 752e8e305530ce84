#include "treecolor/json_io.hpp"

#include <stdexcept>

namespace treecolor {

json to_json(const ColorPartition& p)
{
    return json(std::vector<int>(p.sizes().begin(), p.sizes().end()));
}

json to_json(const Coloring& c)
{
    return json(std::vector<int>(c.colors().begin(), c.colors().end()));
}

json to_json(const Profile& p)
{
    return json(std::vector<int>(p.counts().begin(), p.counts().end()));
}

json to_json(const CheckReport& r)
{
    json failures = json::array();
    for (const CheckFailure& f : r.failures) {
        json j = {{"condition", to_string(f.condition)}, {"k", f.k}, {"lhs", f.lhs}, {"rhs", f.rhs}};
        if (f.condition == Condition::node_bound) {
            j["node"] = f.node;
            j["rule"] = f.rule;
        }
        failures.push_back(std::move(j));
    }
    return {{"passed", r.passed()}, {"failures", std::move(failures)}};
}

json to_json(const SolveResult& r)
{
    json j = {{"status", to_string(r.status)}};
    if (r.witness)
        j["witness"] = to_json(*r.witness);
    j["nodes_expanded"] = r.stats.nodes_expanded;
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.stats.elapsed).count();
    return j;
}

namespace {

json partitions_json(const std::vector<ColorPartition>& ps)
{
    json a = json::array();
    for (const auto& p : ps)
        a.push_back(to_json(p));
    return a;
}

}  // namespace

json to_json(const TnscRecord& r)
{
    json j = {{"record", "tnsc"},
              {"class", to_string(r.cls)},
              {"n", r.n},
              {"tree", r.tree},
              {"profile", to_json(r.profile)},
              {"failing_partitions", partitions_json(r.failing_partitions)}};
    if (!r.undecided_partitions.empty())
        j["undecided_partitions"] = partitions_json(r.undecided_partitions);
    return j;
}

json to_json(const CensusSummary& s)
{
    return {{"record", "summary"},
            {"class", to_string(s.cls)},
            {"n", s.n},
            {"trees_scanned", s.trees_scanned},
            {"tnsc_count", s.tnsc_count}};
}

json to_json(const ConjectureRow& r)
{
    return {{"h", r.height},
            {"n", r.n},
            {"partitions_tested", r.partitions_tested},
            {"colorable", r.colorable},
            {"counterexamples", partitions_json(r.counterexamples)},
            {"undecided", partitions_json(r.undecided)},
            {"chi_partitions", partitions_json(r.chi_partitions)}};
}

json to_json(const CatalanRow& r)
{
    return {{"n", r.n},
            {"catalan", r.formula},
            {"binary", r.binary},
            {"full_binary", r.full_binary},
            {"bijection", r.bijection},
            {"matches", r.matches()}};
}

Coloring coloring_from_text(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') {
        const json j = json::parse(text, nullptr, false);
        if (j.is_discarded() || !j.is_array())
            throw std::invalid_argument("coloring is not a JSON array");
        std::vector<int> colors;
        for (const auto& e : j) {
            if (!e.is_number_integer())
                throw std::invalid_argument("coloring entries must be integers");
            colors.push_back(e.get<int>());
        }
        return Coloring(std::move(colors));
    }
    // Same syntax as a partition list, but order and zeros are meaningful.
    std::vector<int> colors;
    std::size_t i = 0;
    while (i < text.size()) {
        const auto next = text.find(',', i);
        const std::string item(text.substr(i, next == std::string_view::npos ? std::string_view::npos : next - i));
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        }
        catch (const std::exception&) {
            throw std::invalid_argument("bad coloring entry '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos)
            throw std::invalid_argument("bad coloring entry '" + item + "'");
        colors.push_back(value);
        if (next == std::string_view::npos)
            break;
        i = next + 1;
    }
    return Coloring(std::move(colors));
}

}  // namespace treecolor
