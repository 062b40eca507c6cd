#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "ephem/text.hpp"

namespace ephem {

/*
 * O(1) range arg-min (or arg-max, with std::greater) over a static array.
 *
 * Positions are grouped in blocks of 64. Inside a block each position keeps
 * a bitmask of the monotone stack ending at it, so an in-block query is one
 * mask and one count-trailing-zeros. Whole blocks are covered by a sparse
 * table over block representatives. Space is O(n) words.
 */
template <typename Better = std::less<Index>>
class RangeArgExtremum {
public:
    RangeArgExtremum() = default;

    explicit RangeArgExtremum(std::vector<Index> values) : values_(std::move(values)) {
        const std::size_t n = values_.size();
        masks_.resize(n);
        const std::size_t blocks = (n + kBlock - 1) / kBlock;
        std::vector<std::uint32_t> block_best(blocks);

        std::vector<std::size_t> stack;
        stack.reserve(kBlock);
        for (std::size_t b = 0; b < blocks; ++b) {
            const std::size_t start = b * kBlock;
            const std::size_t end = std::min(n, start + kBlock);
            stack.clear();
            std::uint64_t cur = 0;
            for (std::size_t i = start; i < end; ++i) {
                while (!stack.empty() && better_(values_[i], values_[stack.back()])) {
                    cur &= ~(1ull << (stack.back() - start));
                    stack.pop_back();
                }
                stack.push_back(i);
                cur |= 1ull << (i - start);
                masks_[i] = cur;
            }
            block_best[b] = static_cast<std::uint32_t>(in_block(start, end - 1));
        }

        table_.push_back(std::move(block_best));
        for (std::size_t width = 2; width <= blocks; width *= 2) {
            const auto& prev = table_.back();
            std::vector<std::uint32_t> row(blocks - width + 1);
            for (std::size_t i = 0; i < row.size(); ++i) {
                row[i] = pick(prev[i], prev[i + width / 2]);
            }
            table_.push_back(std::move(row));
        }
    }

    std::size_t size() const { return values_.size(); }
    Index value(std::size_t i) const { return values_[i]; }
    const std::vector<Index>& values() const { return values_; }

    // assumes l <= r < size()
    std::size_t query(std::size_t l, std::size_t r) const {
        const std::size_t bl = l / kBlock;
        const std::size_t br = r / kBlock;
        if (bl == br) return in_block(l, r);
        std::size_t best = pick(in_block(l, bl * kBlock + kBlock - 1), in_block(br * kBlock, r));
        if (br - bl > 1) {
            const std::size_t lo = bl + 1;
            const std::size_t width = br - lo;
            const int k = std::bit_width(width) - 1;
            best = pick(best, pick(table_[k][lo], table_[k][br - (std::size_t{1} << k)]));
        }
        return best;
    }

private:
    static constexpr std::size_t kBlock = 64;

    std::size_t in_block(std::size_t l, std::size_t r) const {
        const std::size_t start = l - l % kBlock;
        const std::uint64_t m = masks_[r] & (~0ull << (l - start));
        return start + static_cast<std::size_t>(std::countr_zero(m));
    }

    std::size_t pick(std::size_t a, std::size_t b) const {
        if (better_(values_[b], values_[a])) return b;
        if (better_(values_[a], values_[b])) return a;
        return std::min(a, b);
    }

    Better better_{};
    std::vector<Index> values_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::vector<std::uint32_t>> table_;
};

using RangeArgMin = RangeArgExtremum<std::less<Index>>;
using RangeArgMax = RangeArgExtremum<std::greater<Index>>;

}  // namespace ephem
