// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Reference values come from the brute-force oracles in
// oracles.hpp wherever they are computed rather than quoted.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "trees.hpp"
#include "treecolor/checks.hpp"
#include "treecolor/coloring.hpp"
#include "treecolor/experiments.hpp"
#include "treecolor/optimizer.hpp"
#include "treecolor/solver.hpp"

using namespace treecolor;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    Outcome o;
    try {
        o = body();
    }
    catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (o.ok && secs > limit_s) {
        o.ok = false;
        o.detail = "exceeded the " + std::to_string(limit_s) + " s limit";
    }
    if (!o.ok)
        ++failures;
    std::printf("%s %2d  %-58s %9.3f s%s%s\n", o.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
                o.detail.empty() ? "" : "  -- ", o.detail.c_str());
    std::fflush(stdout);
}

std::vector<int> to_vec(const ColorPartition& p) { return {p.sizes().begin(), p.sizes().end()}; }

std::string join(const std::vector<ColorPartition>& ps)
{
    std::string s;
    for (const auto& p : ps)
        s += (s.empty() ? "" : " ") + p.to_string();
    return s.empty() ? "none" : s;
}

// Trees of every size up to n_max, one per isomorphism class, with the class
// count cross-checked against the oracle.
std::vector<RootedTree> rooted_upto(int n_max, Outcome& o)
{
    std::vector<RootedTree> out;
    for (int n = 1; n <= n_max; ++n) {
        auto trees = isomorphism_classes(TreeClass::rooted, n);
        o.expect(trees.size() == oracle::rooted_classes(n).size(), "class count differs at n=" + std::to_string(n));
        for (auto& t : trees)
            out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

int main()
{
    criterion(1, "depth-example margins 3<=4, 6<=6, 7<=7, 8<=8", 1, [] {
        Outcome o;
        const RootedTree t = parse_tree(fixtures::kDepthExample);
        const Profile depth = depth_profile(t);
        const Profile height = height_profile(t);
        o.expect(to_vec(ColorPartition(std::vector<int>(depth.counts().begin(), depth.counts().end()))) ==
                     std::vector<int>{3, 3, 1, 1},
                 "depth profile");
        o.expect(std::vector<int>(height.counts().begin(), height.counts().end()) == std::vector<int>{4, 2, 1, 1},
                 "height profile");
        const ColorPartition p(std::vector<int>(depth.counts().begin(), depth.counts().end()));
        o.expect(check_necessary(p, height).passed(), "check_necessary rejected the depth profile");
        const int lhs[] = {3, 6, 7, 8};
        const int rhs[] = {4, 6, 7, 8};
        for (int k = 1; k <= 4; ++k) {
            o.expect(p.top_sum(k) == lhs[k - 1], "lhs at k=" + std::to_string(k));
            o.expect(height.prefix_sum(static_cast<std::size_t>(k)) == rhs[k - 1], "rhs at k=" + std::to_string(k));
        }
        return o;
    });

    criterion(2, "perfect h=2: 3-class partitions and min-max optimum", 1, [] {
        Outcome o;
        const RootedTree t = RootedTree::perfect_binary(2);
        const auto got = all_colorable_partitions(t, {}, {3, 3});
        o.expect(got == std::vector<ColorPartition>{{4, 2, 1}, {3, 3, 1}}, "got " + join(got));
        std::set<std::vector<int>> brute;
        for (const auto& s : oracle::colorable_partitions(fixtures::parents_of(t)))
            if (s.size() == 3)
                brute.insert(s);
        o.expect(brute == std::set<std::vector<int>>{{4, 2, 1}, {3, 3, 1}}, "oracle disagrees");
        const Optimum best = optimize(t, MinMax{}, ColorBudget::chi());
        o.expect(best.value == 3.0 && verify_coloring(t, best.coloring).valid(), "optimum");
        o.detail = o.ok ? "partitions " + join(got) + ", optimum " + best.partition.to_string() : o.detail;
        return o;
    });

    criterion(3, "rooted census to n=5: only T_R with (2,2,1)", 10, [] {
        Outcome o;
        const TnscCensus c = find_tnsc(TreeClass::rooted, 5);
        o.expect(!c.partial(), "partial census");
        o.expect(c.records.size() == 1, "record count " + std::to_string(c.records.size()));
        if (c.records.size() == 1) {
            o.expect(c.records[0].n == 5, "size");
            o.expect(c.records[0].tree == canonical_form(parse_tree(fixtures::kTR)), "tree " + c.records[0].tree);
            o.expect(c.records[0].failing_partitions == std::vector<ColorPartition>{{2, 2, 1}}, "partitions");
        }
        for (const auto& s : c.summary)
            if (s.n <= 4)
                o.expect(s.tnsc_count == 0, "record at n=" + std::to_string(s.n));
        return o;
    });

    criterion(4, "binary census to n=7: one class with (2,2,2,1)", 120, [] {
        Outcome o;
        const TnscCensus c = find_tnsc(TreeClass::binary, 7);
        o.expect(!c.partial(), "partial census");
        o.expect(c.records.size() == 1, "record count " + std::to_string(c.records.size()));
        if (c.records.size() == 1) {
            o.expect(c.records[0].n == 7, "size");
            o.expect(c.records[0].failing_partitions == std::vector<ColorPartition>{{2, 2, 2, 1}}, "partitions");
            o.detail = "tree " + c.records[0].tree;
        }
        return o;
    });

    criterion(5, "full binary census to n=13: T_F, T_G with (3,3,3,3,1)", 600, [] {
        Outcome o;
        const TnscCensus c = find_tnsc(TreeClass::full_binary, 13);
        o.expect(!c.partial(), "partial census");
        o.expect(c.records.size() == 2, "record count " + std::to_string(c.records.size()));
        std::set<std::vector<int>> profiles;
        for (const auto& r : c.records) {
            o.expect(r.n == 13, "record at n=" + std::to_string(r.n));
            o.expect(r.failing_partitions == std::vector<ColorPartition>{{3, 3, 3, 3, 1}},
                     "partitions " + join(r.failing_partitions));
            profiles.insert({r.profile.counts().begin(), r.profile.counts().end()});
        }
        o.expect(profiles == std::set<std::vector<int>>{{7, 2, 2, 1, 1}, {7, 3, 1, 1, 1}}, "profiles");
        return o;
    });

    criterion(6, "unique-path rejects T_R/T_B, node bounds reject T_F/T_G", 1, [] {
        Outcome o;
        const ColorPartition small_fail[] = {{2, 2, 1}, {2, 2, 2, 1}};
        const char* small_tree[] = {fixtures::kTR, fixtures::kTB};
        for (int i = 0; i < 2; ++i) {
            const RootedTree t = parse_tree(small_tree[i]);
            o.expect(check_necessary(small_fail[i], height_profile(t)).passed(), "basic check");
            o.expect(check_unique_path(small_fail[i], t).failed(Condition::unique_path), "unique-path accepted");
        }
        for (const char* text : {fixtures::kTF, fixtures::kTG}) {
            const RootedTree t = parse_tree(text);
            const ColorPartition p{3, 3, 3, 3, 1};
            o.expect(check_necessary(p, height_profile(t)).passed(), "basic check");
            o.expect(check_unique_path(p, t).passed(), "unique-path rejected T_F/T_G");
            o.expect(check_node_bounds(p, t).failed(Condition::node_bound), "node bounds accepted T_F/T_G");
        }
        return o;
    });

    criterion(7, "necessity replay over every coloring, n<=8", 600, [] {
        Outcome o;
        long colorings = 0;
        for (const RootedTree& t : rooted_upto(8, o)) {
            const Profile prof = height_profile(t);
            oracle::for_each_coloring(fixtures::parents_of(t), [&](const std::vector<int>& label) {
                ++colorings;
                const auto sizes = oracle::sizes_of(label);
                const ColorPartition p(sizes);
                o.expect(check_necessary(p, prof).passed(), canonical_form(t) + " " + p.to_string());
            });
        }
        if (o.ok)
            o.detail = std::to_string(colorings) + " colorings";
        return o;
    });

    criterion(8, "is_colorable equals the oracle, n<=7", 600, [] {
        Outcome o;
        long pairs = 0;
        for (const RootedTree& t : rooted_upto(7, o)) {
            const auto brute = oracle::colorable_partitions(fixtures::parents_of(t));
            for_each_integer_partition(t.n(), [&](const ColorPartition& p) {
                ++pairs;
                const SolveResult r = is_colorable(t, p);
                o.expect(r.status != SolveStatus::budget_exceeded, "budget");
                o.expect(r.colorable() == brute.contains(to_vec(p)), canonical_form(t) + " " + p.to_string());
                if (r.witness)
                    o.expect(verify_coloring(t, *r.witness).valid() && partition_of(*r.witness) == p, "witness");
            });
        }
        if (o.ok)
            o.detail = std::to_string(pairs) + " pairs";
        return o;
    });

    criterion(9, "chi = h+1: canonical colorings valid, h classes impossible", 600, [] {
        Outcome o;
        for (const RootedTree& t : rooted_upto(8, o)) {
            const int h = t.height();
            const auto parent = fixtures::parents_of(t);
            for (const Coloring& c : {canonical_by_depth(t), canonical_by_height(t)}) {
                bool valid = true;
                for (int v = 0; v < t.n(); ++v)
                    for (int a = parent[v]; a >= 0; a = parent[a])
                        valid = valid && c[v] != c[a];
                o.expect(valid && verify_coloring(t, c).valid(), "canonical coloring invalid");
                o.expect(c.color_count() == h + 1, "canonical color count");
            }
            if (h == 0)
                continue;
            for_each_integer_partition(
                t.n(),
                [&](const ColorPartition& p) {
                    o.expect(is_colorable(t, p).status == SolveStatus::not_colorable,
                             canonical_form(t) + " " + p.to_string());
                },
                h, h);
        }
        return o;
    });

    criterion(10, "height profile is the lexicographic maximum, n<=7", 300, [] {
        Outcome o;
        for (const RootedTree& t : rooted_upto(7, o)) {
            const Profile prof = height_profile(t);
            const ColorPartition hp(std::vector<int>(prof.counts().begin(), prof.counts().end()));
            const auto all = all_colorable_partitions(t);
            o.expect(!all.empty() && all.front() == hp, canonical_form(t));
            const auto brute = oracle::colorable_partitions(fixtures::parents_of(t));
            o.expect(*brute.rbegin() == to_vec(hp), "oracle maximum " + canonical_form(t));
        }
        return o;
    });

    criterion(11, "perfect-tree conjecture: h<=3 clean, h=4 reported", 1800, [] {
        Outcome o;
        const auto rows = test_perfect_conjecture(4);
        std::ostringstream report;
        for (const auto& r : rows) {
            if (r.height <= 3) {
                o.expect(r.counterexamples.empty(), "counterexample at h=" + std::to_string(r.height));
                o.expect(r.undecided.empty(), "undecided at h=" + std::to_string(r.height));
            }
            report << "h=" << r.height << ": " << r.partitions_tested << " tested, " << r.colorable
                   << " colorable, " << r.counterexamples.size() << " counterexamples, " << r.undecided.size()
                   << " undecided; ";
        }
        o.expect(rows.size() == 5, "missing rows");
        if (o.ok) {
            o.detail = report.str();
            o.detail.resize(o.detail.size() - 2);
        }
        return o;
    });

    criterion(12, "Catalan counts n<=8, enumeration and bijection", 60, [] {
        Outcome o;
        const auto rows = catalan_census(8);
        o.expect(rows.size() == 8, "row count");
        for (const auto& r : rows) {
            const auto c = oracle::catalan(r.n);
            o.expect(r.formula == c && r.binary == c && r.full_binary == c && r.bijection == c,
                     "mismatch at n=" + std::to_string(r.n));
        }
        return o;
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
    return failures == 0 ? 0 : 1;
}
