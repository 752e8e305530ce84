#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "treecolor/enumerate.hpp"
#include "treecolor/partition.hpp"
#include "treecolor/solver.hpp"
#include "treecolor/tree.hpp"

namespace treecolor {

/// A tree admitting partitions that pass check_necessary yet are not
/// colorable.
struct TnscRecord {
    std::string tree;  // canonical_form
    TreeClass cls = TreeClass::rooted;
    int n = 0;
    Profile profile{{}, ProfileAxis::by_height};
    std::vector<ColorPartition> failing_partitions;
    /// Partitions whose decision ran out of budget; the record is partial.
    std::vector<ColorPartition> undecided_partitions;
};

struct CensusSummary {
    TreeClass cls = TreeClass::rooted;
    int n = 0;
    int trees_scanned = 0;
    int tnsc_count = 0;
};

struct TnscCensus {
    std::vector<TnscRecord> records;     // sorted by (n, canonical form)
    std::vector<CensusSummary> summary;  // one per scanned size
    bool partial() const noexcept;
};

/// One representative per unordered isomorphism class, sorted by canonical
/// form. Binary and full binary shapes that are mirror images collapse.
std::vector<RootedTree> isomorphism_classes(TreeClass cls, int n);

/// Every tree of the class up to n_max nodes (odd sizes only for full binary),
/// every integer partition passing check_necessary, decided exactly.
TnscCensus find_tnsc(TreeClass cls, int n_max, const SolveOptions& options = {});

struct ConjectureRow {
    int height = 0;
    int n = 0;
    int partitions_tested = 0;
    int colorable = 0;
    std::vector<ColorPartition> counterexamples;
    std::vector<ColorPartition> undecided;
    /// Colorable partitions with exactly h + 1 classes.
    std::vector<ColorPartition> chi_partitions;
    std::chrono::milliseconds elapsed{0};
};

/// For each h <= h_max, decides every partition of 2^(h+1) - 1 that passes
/// check_necessary on the perfect binary tree of height h.
std::vector<ConjectureRow> test_perfect_conjecture(int h_max, const SolveOptions& options = {});

struct CatalanRow {
    int n = 0;
    std::uint64_t formula = 0;      // (2n)! / (n+1)! / n!
    std::uint64_t binary = 0;       // enumerated binary trees with n nodes
    std::uint64_t full_binary = 0;  // enumerated full binary trees with 2n+1 nodes
    std::uint64_t bijection = 0;    // distinct binary trees reached by stripping leaves, round-tripped
    bool matches() const noexcept { return formula == binary && binary == full_binary && full_binary == bijection; }
};

std::uint64_t catalan_number(int n);

/// Rows for n = 1..n_max, n_max <= 10.
std::vector<CatalanRow> catalan_census(int n_max);

}  // namespace treecolor
