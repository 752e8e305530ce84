#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treecolor {

/// Multiset of color-class sizes, stored non-increasing with zeros dropped.
/// Label order never matters, so any input order normalizes to one value.
class ColorPartition {
public:
    ColorPartition() = default;
    explicit ColorPartition(std::vector<int> sizes);
    ColorPartition(std::initializer_list<int> sizes) : ColorPartition(std::vector<int>(sizes)) {}

    /// Parses "2,2,1" (any order, whitespace tolerated).
    static ColorPartition parse(std::string_view text);

    std::span<const int> sizes() const noexcept { return sizes_; }
    std::size_t size() const noexcept { return sizes_.size(); }
    bool empty() const noexcept { return sizes_.empty(); }
    int operator[](std::size_t i) const { return sizes_.at(i); }
    int total() const noexcept;
    /// Sum of the k largest classes.
    int top_sum(std::size_t k) const noexcept;
    int count_of(int size) const noexcept;
    int largest() const noexcept { return sizes_.empty() ? 0 : sizes_.front(); }

    std::string to_string() const;

    friend bool operator==(const ColorPartition&, const ColorPartition&) = default;
    /// Lexicographic on the sorted sizes.
    friend std::strong_ordering operator<=>(const ColorPartition& a, const ColorPartition& b)
    {
        return a.sizes_ <=> b.sizes_;
    }

private:
    std::vector<int> sizes_;
};

/// Visits the integer partitions of n in lexicographically decreasing order,
/// restricted to those with between min_parts and max_parts parts.
void for_each_integer_partition(int n, const std::function<void(const ColorPartition&)>& visit,
                                int min_parts = 1, int max_parts = -1);

std::vector<ColorPartition> integer_partitions(int n, int min_parts = 1, int max_parts = -1);

}  // namespace treecolor
