#pragma once

#include <vector>

#include "ephem/rmq.hpp"
#include "ephem/text.hpp"

namespace ephem {

/// {first + k * diff : 0 <= k < count}.
struct ArithmeticProgression {
    Index first = 0;
    Index diff = 1;
    Index count = 0;

    bool empty() const { return count == 0; }
    Index last() const { return first + (count - 1) * diff; }
    bool contains(Index x) const {
        return count > 0 && x >= first && x <= last() && (x - first) % diff == 0;
    }
    std::vector<Index> to_vector() const;
    /// The elements lying in [lo, hi].
    ArithmeticProgression restrict_to(Index lo, Index hi) const;
    friend bool operator==(const ArithmeticProgression&, const ArithmeticProgression&) = default;
};

namespace detail {

/// Longest common extension between suffixes of one string, O(1) per query.
class LceIndex {
public:
    LceIndex() = default;
    explicit LceIndex(std::span<const Letter> s);
    Index operator()(Index i, Index j) const;

private:
    Index n_ = 0;
    std::vector<Index> isa_;
    RangeArgMin lcp_min_;
};

/// Per-direction tables: borders, Z-array and LCE over P or reverse(P).
struct PrefSufSide {
    std::vector<Letter> s;
    std::vector<Index> border;  // border[k]: longest proper border of s[0..k)
    std::vector<Index> z;       // z[0] = m
    LceIndex lce;

    explicit PrefSufSide(std::vector<Letter> str);
};

}  // namespace detail

/*
 * Prefix-suffix queries over a pattern P of length m: all offsets at which
 * P occurs in P[0..a) . P[m-b..m), for any 0 <= a, b <= m. The offsets
 * always form one arithmetic progression and each query takes O(1) time
 * after O(m) preprocessing.
 *
 * Every occurrence uses at least half of the prefix side or at least half
 * of the suffix side. Occurrences of the first kind are pinned down by the
 * period of P[0..a): either P shares that period and they form a
 * progression bounded by the periodic run of the concatenation, or there is
 * a single candidate aligned with the first period break. The second kind
 * is the same argument on reverse(P).
 */
class PrefSufIndex {
public:
    explicit PrefSufIndex(std::span<const Letter> pattern);

    Index pattern_length() const { return m_; }
    ArithmeticProgression query(Index a, Index b) const;

    /// True iff P occurs at offset t of P[0..a) . P[m-b..m). O(1).
    bool occurs_at(Index a, Index b, Index t) const;

private:
    Index m_;
    detail::PrefSufSide fwd_;
    detail::PrefSufSide rev_;
};

}  // namespace ephem
