#include <doctest.h>

#include "fixtures.hpp"
#include "treecolor/coloring.hpp"
#include "treecolor/enumerate.hpp"
#include "treecolor/solver.hpp"

using namespace treecolor;

TEST_CASE("verify_coloring accepts canonical colorings and catches clashes")
{
    const RootedTree path = RootedTree::path(3);
    const ColoringCheck bad = verify_coloring(path, Coloring({1, 1, 1}));
    REQUIRE_FALSE(bad.valid());
    CHECK(bad.violation->ancestor == 0);
    CHECK(bad.violation->descendant == 1);

    // Siblings may share a color, cousins too; only ancestry matters.
    const RootedTree perfect = RootedTree::perfect_binary(2);
    CHECK(verify_coloring(perfect, Coloring({1, 2, 3, 3, 2, 3, 3})).valid());
    const ColoringCheck deep = verify_coloring(perfect, Coloring({1, 2, 3, 2, 2, 3, 3}));
    REQUIRE_FALSE(deep.valid());
    CHECK(deep.violation == Violation{1, 3});

    CHECK_THROWS_AS(verify_coloring(perfect, Coloring({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(Coloring({1, 0}), std::invalid_argument);
}

TEST_CASE("the solver's (3,3,1) witness on the perfect tree of height 2 is valid")
{
    const RootedTree perfect = RootedTree::perfect_binary(2);
    const SolveResult r = is_colorable(perfect, ColorPartition{3, 3, 1});
    REQUIRE(r.witness);
    CHECK(verify_coloring(perfect, *r.witness).valid());
    CHECK(partition_of(*r.witness) == ColorPartition{3, 3, 1});
}

TEST_CASE("canonical colorings")
{
    const RootedTree perfect = RootedTree::perfect_binary(2);
    CHECK(partition_of(canonical_by_depth(perfect)) == ColorPartition{4, 2, 1});
    CHECK(partition_of(canonical_by_height(perfect)) == ColorPartition{4, 2, 1});

    const RootedTree fig = parse_tree(fixtures::kDepthExample);
    CHECK(partition_of(canonical_by_depth(fig)) == ColorPartition{3, 3, 1, 1});
    CHECK(partition_of(canonical_by_height(fig)) == ColorPartition{4, 2, 1, 1});

    CHECK(partition_of(canonical_by_depth(RootedTree::leaf())) == ColorPartition{1});
    CHECK(partition_of(canonical_by_height(RootedTree::leaf())) == ColorPartition{1});
}

TEST_CASE("min_colors is h + 1")
{
    CHECK(min_colors(RootedTree::perfect_binary(2)) == 3);
    CHECK(min_colors(RootedTree::leaf()) == 1);
    CHECK(min_colors(RootedTree::path(6)) == 6);
}

TEST_CASE("partition_of ignores label values")
{
    CHECK(partition_of(Coloring({5, 9, 9})) == ColorPartition{2, 1});
    CHECK(partition_of(Coloring({9, 5, 5})) == ColorPartition{2, 1});
    CHECK(partition_of(Coloring({5, 9, 9})).size() == 2);
}

TEST_CASE("canonical colorings over all rooted trees up to 9 nodes")
{
    for (int n = 1; n <= 9; ++n) {
        for_each_tree(TreeClass::rooted, n, [&](const RootedTree& t) {
            const Coloring by_depth = canonical_by_depth(t);
            const Coloring by_height = canonical_by_height(t);
            CHECK(verify_coloring(t, by_depth).valid());
            CHECK(verify_coloring(t, by_height).valid());
            CHECK(by_depth.color_count() == min_colors(t));
            CHECK(by_height.color_count() == min_colors(t));

            const Profile hp = height_profile(t);
            const Profile dp = depth_profile(t);
            CHECK(partition_of(by_depth) == ColorPartition(std::vector<int>(dp.counts().begin(), dp.counts().end())));
            // Height classes attain every max-form inequality with equality.
            const ColorPartition hpart = partition_of(by_height);
            for (std::size_t k = 1; k <= hp.size(); ++k)
                CHECK(hpart.top_sum(k) == hp.prefix_sum(k));

            // Relabeling by any injective map keeps the partition.
            std::vector<int> relabeled;
            for (int c : by_depth.colors())
                relabeled.push_back(100 - 7 * c);
            CHECK(partition_of(Coloring(relabeled)) == partition_of(by_depth));

            // Some leaf sits at depth h, so its root path needs h + 1 colors.
            bool deep_leaf = false;
            for (NodeId v = 0; v < t.n(); ++v)
                deep_leaf = deep_leaf || (t.is_leaf(v) && t.depth(v) == t.height());
            CHECK(deep_leaf);
        });
    }
}

TEST_CASE("no rooted tree up to 8 nodes has a valid coloring with h colors")
{
    for (int n = 2; n <= 8; ++n) {
        for_each_tree(TreeClass::rooted, n, [&](const RootedTree& t) {
            bool found = false;
            oracle_colorings(
                t,
                [&](const Coloring&) {
                    found = true;
                    return false;
                },
                t.height());
            CHECK_FALSE(found);
        });
    }
}

TEST_CASE("to_dot emits one fill color per class")
{
    const RootedTree perfect = RootedTree::perfect_binary(2);
    const std::string dot = to_dot(perfect, canonical_by_depth(perfect));
    CHECK(dot.starts_with("digraph tree {"));
    CHECK(dot.find("n0 -> n1;") != std::string::npos);
    // Largest class (the leaves) takes the first palette entry.
    CHECK(dot.find("n2 [label=\"3\", fillcolor=\"#4e79a7\"]") != std::string::npos);
    CHECK(dot.find("n0 [label=\"1\", fillcolor=\"#59a14f\"]") != std::string::npos);
}
