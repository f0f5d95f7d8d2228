#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "unirank/family.hpp"
#include "unirank/laurent.hpp"

namespace unirank::enumeration {

// Rank-refined count of one family at one weight, built by exhausting the
// sequences of the verbal definition.  Serves as the independent oracle for
// the generating-function route.
struct RankHistogram {
    long weight = 0;
    std::map<long, Int> counts;

    Int total() const {
        Int t = 0;
        for (const auto& [m, c] : counts) t += c;
        return t;
    }

    const Int& at(long m) const {
        static const Int zero(0);
        auto it = counts.find(m);
        return it == counts.end() ? zero : it->second;
    }

    bool symmetric() const {
        for (const auto& [m, c] : counts)
            if (at(-m) != c) return false;
        return true;
    }
};

// Size of the largest k x k square fitting in the Ferrers diagram.
inline long durfee(std::vector<long> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<long>());
    long k = 0;
    while (k < static_cast<long>(parts.size()) && parts[k] >= k + 1) ++k;
    return k;
}

// One unimodal sequence: ascent run, peak (possibly doubled), descent run.
// Descent parts carry the overline mark the nu family uses.
struct SequenceShape {
    long peak = 0;
    int peak_multiplicity = 1;
    std::vector<long> ascents;                      // nonincreasing
    std::vector<std::pair<long, bool>> descents;    // (value, overlined), nonincreasing

    long weight() const {
        long w = peak * peak_multiplicity;
        for (long a : ascents) w += a;
        for (const auto& [b, over] : descents) w += b;
        return w;
    }

    long rank(Family f) const {
        if (f != Family::nu)
            return static_cast<long>(descents.size()) - static_cast<long>(ascents.size());
        long r = 0;
        for (const auto& [b, over] : descents)
            if (b % 2 == 1 && !over) ++r;
        for (long a : ascents)
            if (a % 2 == 1) --r;
        return r;
    }

    bool valid(Family f) const {
        if (peak < 1 || peak_multiplicity != (f == Family::w ? 2 : 1)) return false;
        for (long a : ascents)
            if (a < 1 || a > peak) return false;
        long descent_cap = peak;
        if (f == Family::v) descent_cap = peak - durfee(ascents);
        for (const auto& [b, over] : descents) {
            if (b < 1 || b > descent_cap) return false;
            if (over && f != Family::nu) return false; // overlines belong to nu only
        }
        if (f == Family::nu) {
            if (peak % 2 == 0) return false;
            std::map<long, long> even_mult;
            for (long a : ascents)
                if (a % 2 == 0 && ++even_mult[a] > 1) return false;
            std::map<long, long> overlines;
            for (const auto& [b, over] : descents) {
                if (b % 2 == 0) return false;
                if (over && ++overlines[b] > 1) return false;
                // an overlined part equal to the peak would be the largest part
                if (over && b == peak) return false;
            }
        }
        return true;
    }
};

// Materialize every shape of small weight, overline patterns included, and
// keep the ones the family admits.  Exponential; intended as a cross-check
// oracle for the grouped enumerators.
template <typename Fn>
void visit_shapes(Family f, long n, const Fn& visit) {
    if (n > 16) throw std::invalid_argument("visit_shapes: weight too large for shape walking");
    SequenceShape s;
    s.peak_multiplicity = (f == Family::w) ? 2 : 1;
    for (long c = 1; c * s.peak_multiplicity <= n; ++c) {
        s.peak = c;
        const long rem = n - c * s.peak_multiplicity;
        // enumerate ascent partitions, then descent overpartitions of the rest
        std::function<void(long, long)> asc = [&](long remaining, long max_part) {
            std::function<void(long, long)> desc = [&](long remaining_d, long max_d) {
                if (remaining_d == 0) {
                    if (s.valid(f)) visit(s);
                    return;
                }
                for (long b = std::min(max_d, remaining_d); b >= 1; --b) {
                    const bool first_of_value =
                        s.descents.empty() || s.descents.back().first != b;
                    const int choices = (f == Family::nu && first_of_value) ? 2 : 1;
                    for (int over = 0; over < choices; ++over) {
                        s.descents.emplace_back(b, over == 1);
                        desc(remaining_d - b, b);
                        s.descents.pop_back();
                    }
                }
            };
            if (remaining == 0) {
                const long left = rem - std::accumulate(s.ascents.begin(), s.ascents.end(), 0L);
                desc(left, s.peak);
                return;
            }
            for (long a = std::min(max_part, remaining); a >= 1; --a) {
                s.ascents.push_back(a);
                asc(remaining - a, a);
                s.ascents.pop_back();
            }
        };
        for (long ascent_weight = 0; ascent_weight <= rem; ++ascent_weight)
            asc(ascent_weight, c);
    }
}

inline RankHistogram ranks_by_shape_walk(Family f, long n) {
    RankHistogram h;
    h.weight = n;
    if (n == 0) {
        if (f != Family::nu) h.counts[0] = 1;
        return h;
    }
    visit_shapes(f, n, [&](const SequenceShape& s) { h.counts[s.rank(f)] += 1; });
    return h;
}

namespace detail {

// Counts of partitions of each weight <= max_weight into parts <= cap,
// grouped by number of parts.  Every partition is walked explicitly.
using PartsByCount = std::vector<std::map<long, Int>>; // weight -> (#parts -> count)

inline void walk_plain(long remaining, long max_part, long nparts,
                       std::map<long, Int>& out) {
    if (remaining == 0) {
        out[nparts] += 1;
        return;
    }
    for (long p = std::min(max_part, remaining); p >= 1; --p)
        walk_plain(remaining - p, p, nparts + 1, out);
}

inline PartsByCount plain_partitions(long max_weight, long cap) {
    PartsByCount table(static_cast<std::size_t>(max_weight) + 1);
    for (long w = 0; w <= max_weight; ++w) walk_plain(w, cap, 0, table[w]);
    return table;
}

// As above but grouped by (#parts, durfee size).  Parts are generated in
// nonincreasing order, so the Durfee size is the count of indices i with
// part_i >= i+1.
using PartsByCountDurfee = std::vector<std::map<std::pair<long, long>, Int>>;

inline void walk_durfee(long remaining, long max_part, long nparts, long dsize,
                        std::map<std::pair<long, long>, Int>& out) {
    if (remaining == 0) {
        out[{nparts, dsize}] += 1;
        return;
    }
    for (long p = std::min(max_part, remaining); p >= 1; --p)
        walk_durfee(remaining - p, p, nparts + 1, dsize + (p >= nparts + 1 ? 1 : 0), out);
}

inline PartsByCountDurfee durfee_partitions(long max_weight, long cap) {
    PartsByCountDurfee table(static_cast<std::size_t>(max_weight) + 1);
    for (long w = 0; w <= max_weight; ++w) walk_durfee(w, cap, 0, 0, table[w]);
    return table;
}

// Ascent side of the nu family: partitions with parts <= cap and no repeated
// even part, grouped by number of odd parts.
inline void walk_nu_ascent(long remaining, long max_val, long nodd,
                           std::map<long, Int>& out) {
    if (remaining == 0) {
        out[nodd] += 1;
        return;
    }
    for (long v = std::min(max_val, remaining); v >= 1; --v) {
        if (v % 2 == 0) {
            walk_nu_ascent(remaining - v, v - 1, nodd, out);
        } else {
            for (long used = v; used <= remaining; used += v)
                walk_nu_ascent(remaining - used, v - 1, nodd + used / v, out);
        }
    }
}

// Descent side of the nu family: overpartitions into odd parts <= cap, where
// at most one copy of each value is overlined and an overlined part equal to
// `peak` is rejected whenever that part would be the maximum (parts never
// exceed the peak, so it always would be).  Grouped by the number of
// non-overlined parts.
inline void walk_nu_descent(long remaining, long max_odd, long peak, long nplain,
                            std::map<long, Int>& out) {
    if (remaining == 0) {
        out[nplain] += 1;
        return;
    }
    long start = std::min(max_odd, remaining);
    if (start % 2 == 0) --start;
    for (long v = start; v >= 1; v -= 2) {
        for (long mult = 1; mult * v <= remaining; ++mult) {
            walk_nu_descent(remaining - mult * v, v - 2, peak, nplain + mult, out);
            if (v != peak)
                walk_nu_descent(remaining - mult * v, v - 2, peak, nplain + mult - 1, out);
        }
    }
}

inline void cross(const std::map<long, Int>& ascent, const std::map<long, Int>& descent,
                  std::map<long, Int>& hist) {
    for (const auto& [ra, ca] : ascent)
        for (const auto& [rb, cb] : descent) hist[rb - ra] += ca * cb;
}

} // namespace detail

inline constexpr long default_weight_limit = 40;

inline void check_weight(long n, long limit) {
    if (n < 0) throw std::invalid_argument("enumeration: negative weight");
    if (n > limit)
        throw std::invalid_argument("enumeration: weight " + std::to_string(n) +
                                    " exceeds limit " + std::to_string(limit) +
                                    " (growth is exponential; raise the limit explicitly)");
}

inline RankHistogram ranks_u(long n, long limit = default_weight_limit) {
    check_weight(n, limit);
    RankHistogram h;
    h.weight = n;
    if (n == 0) {
        h.counts[0] = 1; // empty sequence, rank 0
        return h;
    }
    for (long c = 1; c <= n; ++c) {
        const long rem = n - c;
        auto side = detail::plain_partitions(rem, c);
        for (long a = 0; a <= rem; ++a) detail::cross(side[a], side[rem - a], h.counts);
    }
    return h;
}

inline RankHistogram ranks_w(long n, long limit = default_weight_limit) {
    check_weight(n, limit);
    RankHistogram h;
    h.weight = n;
    if (n == 0) {
        h.counts[0] = 1;
        return h;
    }
    for (long c = 1; 2 * c <= n; ++c) {
        const long rem = n - 2 * c;
        auto side = detail::plain_partitions(rem, c);
        for (long a = 0; a <= rem; ++a) detail::cross(side[a], side[rem - a], h.counts);
    }
    return h;
}

inline RankHistogram ranks_v(long n, long limit = default_weight_limit) {
    check_weight(n, limit);
    RankHistogram h;
    h.weight = n;
    if (n == 0) {
        h.counts[0] = 1;
        return h;
    }
    for (long c = 1; c <= n; ++c) {
        const long rem = n - c;
        auto ascent = detail::durfee_partitions(rem, c);
        // descent caps depend on the ascent partition's Durfee size
        std::map<long, detail::PartsByCount> descent_by_cap;
        for (long a = 0; a <= rem; ++a) {
            for (const auto& [key, ca] : ascent[a]) {
                const auto [nparts, dsize] = key;
                const long cap = std::max<long>(c - dsize, 0);
                auto it = descent_by_cap.find(cap);
                if (it == descent_by_cap.end())
                    it = descent_by_cap.emplace(cap, detail::plain_partitions(rem, cap)).first;
                for (const auto& [rb, cb] : it->second[rem - a]) h.counts[rb - nparts] += ca * cb;
            }
        }
    }
    return h;
}

// The nu enumerator starts at weight 1: the generating function has zero
// constant term, and the series is treated as authoritative at n = 0, so the
// empty sequence is not emitted.
inline RankHistogram ranks_nu(long n, long limit = default_weight_limit) {
    check_weight(n, limit);
    RankHistogram h;
    h.weight = n;
    if (n == 0) return h;
    for (long c = 1; c <= n; c += 2) {
        const long rem = n - c;
        detail::PartsByCount ascent(static_cast<std::size_t>(rem) + 1),
            descent(static_cast<std::size_t>(rem) + 1);
        for (long w = 0; w <= rem; ++w) {
            detail::walk_nu_ascent(w, c, 0, ascent[w]);
            detail::walk_nu_descent(w, c, c, 0, descent[w]);
        }
        for (long a = 0; a <= rem; ++a) detail::cross(ascent[a], descent[rem - a], h.counts);
    }
    return h;
}

inline RankHistogram ranks(Family f, long n, long limit = default_weight_limit) {
    switch (f) {
        case Family::u: return ranks_u(n, limit);
        case Family::w: return ranks_w(n, limit);
        case Family::v: return ranks_v(n, limit);
        case Family::nu: return ranks_nu(n, limit);
    }
    throw std::logic_error("ranks: bad family enum");
}

} // namespace unirank::enumeration
