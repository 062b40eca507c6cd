#include "ephem/prefix_suffix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "ephem/suffix_array.hpp"

namespace ephem {

std::vector<Index> ArithmeticProgression::to_vector() const {
    std::vector<Index> out;
    out.reserve(static_cast<std::size_t>(count));
    for (Index k = 0; k < count; ++k) out.push_back(first + k * diff);
    return out;
}

ArithmeticProgression ArithmeticProgression::restrict_to(Index lo, Index hi) const {
    if (count == 0) return {};
    const Index k_lo = lo <= first ? 0 : (lo - first + diff - 1) / diff;
    const Index k_hi = std::min(count - 1, hi < first ? Index{-1} : (hi - first) / diff);
    if (k_lo > k_hi) return {};
    return {first + k_lo * diff, diff, k_hi - k_lo + 1};
}

namespace detail {

LceIndex::LceIndex(std::span<const Letter> s) : n_(static_cast<Index>(s.size())) {
    const auto sa = build_suffix_array(s);
    isa_ = invert_permutation(sa);
    lcp_min_ = RangeArgMin(build_lcp(s, sa, isa_));
}

Index LceIndex::operator()(Index i, Index j) const {
    if (i >= n_ || j >= n_) return 0;
    if (i == j) return n_ - i;
    const Index a = std::min(isa_[i], isa_[j]);
    const Index b = std::max(isa_[i], isa_[j]);
    return lcp_min_.value(lcp_min_.query(a + 1, b));
}

PrefSufSide::PrefSufSide(std::vector<Letter> str) : s(std::move(str)) {
    const auto m = static_cast<Index>(s.size());
    if (m == 0) return;
    border.assign(m + 1, 0);
    for (Index k = 1; k < m; ++k) {
        Index b = border[k];
        while (b > 0 && s[k] != s[b]) b = border[b];
        border[k + 1] = s[k] == s[b] ? b + 1 : 0;
    }
    z.assign(m, 0);
    z[0] = m;
    for (Index i = 1, l = 0, r = 0; i < m; ++i) {
        if (i < r) z[i] = std::min(r - i, z[i - l]);
        while (i + z[i] < m && s[z[i]] == s[i + z[i]]) ++z[i];
        if (i + z[i] > r) {
            l = i;
            r = i + z[i];
        }
    }
    lce = LceIndex(s);
}

}  // namespace detail

namespace {

struct Family {
    ArithmeticProgression found;  // verified occurrences
    Index candidate = -1;         // still to be verified
};

// Occurrences using at least half of the left piece s[0..a), in the
// concatenation s[0..a) . s[m-b..m).
Family left_heavy(const detail::PrefSufSide& side, Index m, Index a, Index b) {
    Family out;
    if (a == 0) {
        out.candidate = 0;
        return out;
    }
    const Index period = a - side.border[a];
    if (2 * period > a) {
        // only the full left piece is a long enough border
        out.candidate = 0;
        return out;
    }
    // s[0..run) is the longest prefix of s with this period
    const Index run = period + side.z[period];

    // g: how far the periodic left piece extends into the right piece
    Index g = 0;
    if (b > 0) {
        const Index r = side.lce(m - b, a - period);
        if (std::min(r, b) < period) {
            g = std::min(r, b);
        } else {
            g = std::min(b, period + side.lce(m - b, m - b + period));
        }
    }
    const Index periodic_end = a + g;

    if (run >= m) {
        if (periodic_end >= m) out.found = {0, period, (periodic_end - m) / period + 1};
    } else {
        out.candidate = periodic_end - run;
    }
    return out;
}

ArithmeticProgression mirror(const ArithmeticProgression& ap, Index span) {
    if (ap.empty()) return ap;
    return {span - ap.last(), ap.diff, ap.count};
}

}  // namespace

PrefSufIndex::PrefSufIndex(std::span<const Letter> pattern)
    : m_(static_cast<Index>(pattern.size())),
      fwd_(std::vector<Letter>(pattern.begin(), pattern.end())),
      rev_(std::vector<Letter>(pattern.rbegin(), pattern.rend())) {
    if (m_ == 0) throw std::invalid_argument("prefix-suffix index of an empty pattern");
}

bool PrefSufIndex::occurs_at(Index a, Index b, Index t) const {
    if (t < 0 || t > a || t > a + b - m_) return false;
    const Index left = a - t;       // letters taken from P[0..a)
    const Index right = m_ - left;  // letters taken from P[m-b..m)
    const bool left_ok = left == 0 || t == 0 || fwd_.z[t] >= left;
    const bool right_ok = right == 0 || rev_.z[b - right] >= right;
    return left_ok && right_ok;
}

ArithmeticProgression PrefSufIndex::query(Index a, Index b) const {
    if (a < 0 || a > m_ || b < 0 || b > m_) {
        throw std::out_of_range("prefix-suffix query (" + std::to_string(a) + ", " +
                                std::to_string(b) + ") outside [0, " + std::to_string(m_) + "]");
    }
    if (a + b < m_) return {};
    const Index span = a + b - m_;

    Family left = left_heavy(fwd_, m_, a, b);
    Family right = left_heavy(rev_, m_, b, a);
    right.found = mirror(right.found, span);
    if (right.candidate >= 0) right.candidate = span - right.candidate;

    ArithmeticProgression parts[4] = {left.found, right.found, {}, {}};
    if (left.candidate >= 0 && occurs_at(a, b, left.candidate)) parts[2] = {left.candidate, 1, 1};
    if (right.candidate >= 0 && occurs_at(a, b, right.candidate)) parts[3] = {right.candidate, 1, 1};

    Index first = span + 1;
    Index last = -1;
    Index diff = 0;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        first = std::min(first, p.first);
        last = std::max(last, p.last());
        if (p.count >= 2) diff = p.diff;
    }
    if (last < 0) return {};
    if (first == last) return {first, 1, 1};
    if (diff == 0) diff = last - first;
    assert((last - first) % diff == 0);
    return {first, diff, (last - first) / diff + 1};
}

}  // namespace ephem
