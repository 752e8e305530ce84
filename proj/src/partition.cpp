#include "treecolor/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace treecolor {

ColorPartition::ColorPartition(std::vector<int> sizes)
{
    for (int s : sizes) {
        if (s < 0)
            throw std::invalid_argument("class sizes must be non-negative");
        if (s > 0)
            sizes_.push_back(s);
    }
    std::ranges::sort(sizes_, std::greater<>{});
}

ColorPartition ColorPartition::parse(std::string_view text)
{
    std::vector<int> sizes;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ','))
            ++i;
        if (i == text.size())
            break;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc{} || value < 0)
            throw std::invalid_argument("bad partition entry at offset " + std::to_string(i));
        sizes.push_back(value);
        i = static_cast<std::size_t>(ptr - text.data());
        if (i < text.size() && text[i] != ',' && text[i] != ' ')
            throw std::invalid_argument("bad partition separator at offset " + std::to_string(i));
    }
    if (sizes.empty())
        throw std::invalid_argument("empty partition");
    return ColorPartition(std::move(sizes));
}

int ColorPartition::total() const noexcept
{
    return std::accumulate(sizes_.begin(), sizes_.end(), 0);
}

int ColorPartition::top_sum(std::size_t k) const noexcept
{
    k = std::min(k, sizes_.size());
    return std::accumulate(sizes_.begin(), sizes_.begin() + static_cast<std::ptrdiff_t>(k), 0);
}

int ColorPartition::count_of(int size) const noexcept
{
    return static_cast<int>(std::ranges::count(sizes_, size));
}

std::string ColorPartition::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(sizes_[i]);
    }
    return out + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, int min_parts, int max_parts,
                    const std::function<void(const ColorPartition&)>& visit)
{
    const int parts = static_cast<int>(cur.size());
    if (remaining == 0) {
        if (parts >= min_parts)
            visit(ColorPartition(cur));
        return;
    }
    if (max_parts >= 0 && parts >= max_parts)
        return;
    // Even with every part as large as allowed we must reach min_parts.
    if (min_parts > parts + remaining)
        return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        if (max_parts >= 0 && (remaining + p - 1) / p > max_parts - parts)
            break;
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, min_parts, max_parts, visit);
        cur.pop_back();
    }
}

}  // namespace

void for_each_integer_partition(int n, const std::function<void(const ColorPartition&)>& visit, int min_parts,
                                int max_parts)
{
    if (n < 1)
        throw std::invalid_argument("partitions need n >= 1");
    std::vector<int> cur;
    partitions_rec(n, n, cur, min_parts, max_parts, visit);
}

std::vector<ColorPartition> integer_partitions(int n, int min_parts, int max_parts)
{
    std::vector<ColorPartition> out;
    for_each_integer_partition(n, [&](const ColorPartition& p) { out.push_back(p); }, min_parts, max_parts);
    return out;
}

}  // namespace treecolor
