#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "treecolor/checks.hpp"
#include "treecolor/coloring.hpp"
#include "treecolor/enumerate.hpp"
#include "treecolor/experiments.hpp"
#include "treecolor/json_io.hpp"
#include "treecolor/optimizer.hpp"
#include "treecolor/solver.hpp"
#include "treecolor/tree.hpp"

namespace py = pybind11;
using namespace treecolor;

namespace {

py::object to_py(const json& j)
{
    switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
        py::list l;
        for (const auto& e : j)
            l.append(to_py(e));
        return std::move(l);
    }
    case json::value_t::object: {
        py::dict d;
        for (const auto& [k, v] : j.items())
            d[py::str(k)] = to_py(v);
        return std::move(d);
    }
    default: return py::none();
    }
}

std::vector<int> as_list(std::span<const int> s)
{
    return {s.begin(), s.end()};
}

SolveOptions opts(std::int64_t budget)
{
    return SolveOptions{.budget = budget};
}

ColorBudget colors_arg(const py::object& colors)
{
    if (py::isinstance<py::str>(colors)) {
        if (colors.cast<std::string>() != "chi")
            throw std::invalid_argument("colors must be 'chi' or an int");
        return ColorBudget::chi();
    }
    return ColorBudget::at_most(colors.cast<int>());
}

}  // namespace

PYBIND11_MODULE(_treecolor, m)
{
    m.doc() = "Ancestor-distinct coloring of rooted trees";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<RootedTree>(m, "RootedTree")
        .def_property_readonly("n", &RootedTree::n)
        .def_property_readonly("height", py::overload_cast<>(&RootedTree::height, py::const_))
        .def_property_readonly("is_binary", &RootedTree::is_binary)
        .def_property_readonly("is_full_binary", &RootedTree::is_full_binary)
        .def("children", [](const RootedTree& t, NodeId v) { return std::vector<NodeId>(t.children(v).begin(), t.children(v).end()); })
        .def("parent", &RootedTree::parent)
        .def("depth", &RootedTree::depth)
        .def("node_height", py::overload_cast<NodeId>(&RootedTree::height, py::const_))
        .def("__str__", &serialize_tree)
        .def("__repr__", [](const RootedTree& t) { return "RootedTree('" + serialize_tree(t) + "')"; })
        .def("__eq__", [](const RootedTree& a, const RootedTree& b) { return a == b; });

    m.def("parse_tree", &parse_tree, py::arg("text"));
    m.def("serialize_tree", &serialize_tree);
    m.def("canonical_form", &canonical_form);
    m.def("perfect_binary", &RootedTree::perfect_binary, py::arg("height"));
    m.def("height_profile", [](const RootedTree& t) { return as_list(height_profile(t).counts()); });
    m.def("depth_profile", [](const RootedTree& t) { return as_list(depth_profile(t).counts()); });
    m.def("enumerate_trees", [](const std::string& cls, int n) { return enumerate_trees(tree_class_from_string(cls), n); },
          py::arg("cls"), py::arg("n"));
    m.def("strip_leaves", &strip_leaves);
    m.def("complete_to_full", &complete_to_full);

    m.def("canonical_by_depth", [](const RootedTree& t) { return as_list(canonical_by_depth(t).colors()); });
    m.def("canonical_by_height", [](const RootedTree& t) { return as_list(canonical_by_height(t).colors()); });
    m.def("min_colors", &min_colors);
    m.def(
        "verify_coloring",
        [](const RootedTree& t, std::vector<int> colors) -> py::object {
            const ColoringCheck c = verify_coloring(t, Coloring(std::move(colors)));
            if (c.valid())
                return py::none();
            return py::make_tuple(c.violation->ancestor, c.violation->descendant);
        },
        "None when valid, else an (ancestor, descendant) pair sharing a color.");
    m.def("partition_of", [](std::vector<int> colors) { return as_list(partition_of(Coloring(std::move(colors))).sizes()); });

    m.def("check_necessary", [](const RootedTree& t, std::vector<int> p) {
        return to_py(to_json(check_necessary(ColorPartition(std::move(p)), height_profile(t))));
    });
    m.def("check_unique_path", [](const RootedTree& t, std::vector<int> p) {
        return to_py(to_json(check_unique_path(ColorPartition(std::move(p)), t)));
    });
    m.def("check_node_bounds", [](const RootedTree& t, std::vector<int> p) {
        return to_py(to_json(check_node_bounds(ColorPartition(std::move(p)), t)));
    });
    m.def("node_color_bound", &node_color_bound);

    m.def(
        "is_colorable",
        [](const RootedTree& t, std::vector<int> p, std::int64_t budget) {
            return to_py(to_json(is_colorable(t, ColorPartition(std::move(p)), opts(budget))));
        },
        py::arg("tree"), py::arg("partition"), py::arg("budget") = kDefaultBudget);
    m.def(
        "all_colorable_partitions",
        [](const RootedTree& t, std::int64_t budget) {
            std::vector<std::vector<int>> out;
            for (const auto& p : all_colorable_partitions(t, opts(budget)))
                out.push_back(as_list(p.sizes()));
            return out;
        },
        py::arg("tree"), py::arg("budget") = kDefaultBudget);

    m.def(
        "optimize",
        [](const RootedTree& t, const std::string& objective, const py::object& colors, std::int64_t budget) {
            const Optimum o = optimize(t, parse_objective(objective), colors_arg(colors), opts(budget));
            return to_py(json{{"partition", to_json(o.partition)}, {"value", o.value}, {"coloring", to_json(o.coloring)}});
        },
        py::arg("tree"), py::arg("objective") = "max", py::arg("colors") = "chi", py::arg("budget") = kDefaultBudget);
    m.def(
        "greedy_balance",
        [](const RootedTree& t, int colors) {
            const Optimum o = greedy_balance(t, colors);
            return to_py(json{{"partition", to_json(o.partition)}, {"value", o.value}, {"coloring", to_json(o.coloring)}});
        },
        py::arg("tree"), py::arg("colors"));
    m.def("objective_value", [](std::vector<int> p, const std::string& objective) {
        return objective_value(ColorPartition(std::move(p)), parse_objective(objective));
    });

    m.def(
        "find_tnsc",
        [](const std::string& cls, int n_max, std::int64_t budget) {
            const TnscCensus c = find_tnsc(tree_class_from_string(cls), n_max, opts(budget));
            json records = json::array();
            for (const auto& r : c.records)
                records.push_back(to_json(r));
            json summary = json::array();
            for (const auto& s : c.summary)
                summary.push_back(to_json(s));
            return to_py(json{{"records", records}, {"summary", summary}, {"partial", c.partial()}});
        },
        py::arg("cls"), py::arg("n_max"), py::arg("budget") = kDefaultBudget);
    m.def(
        "test_perfect_conjecture",
        [](int h_max, std::int64_t budget) {
            json rows = json::array();
            for (const auto& r : test_perfect_conjecture(h_max, opts(budget)))
                rows.push_back(to_json(r));
            return to_py(rows);
        },
        py::arg("h_max"), py::arg("budget") = kDefaultBudget);
    m.def("catalan_census", [](int n_max) {
        json rows = json::array();
        for (const auto& r : catalan_census(n_max))
            rows.push_back(to_json(r));
        return to_py(rows);
    });
}
