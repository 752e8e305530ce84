#pragma once

#include <doctest.h>

#include "treecolor/partition.hpp"
#include "trees.hpp"

namespace doctest {
template <>
struct StringMaker<treecolor::ColorPartition> {
    static String convert(const treecolor::ColorPartition& p) { return p.to_string().c_str(); }
};
}  // namespace doctest
