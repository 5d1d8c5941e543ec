#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "reclaim/model.hpp"

namespace reclaim {

struct Interval {
    long long a = 0;
    long long b = 0;
    long long length() const { return b - a; }
    friend bool operator==(const Interval& x, const Interval& y) {
        return x.a == y.a && x.b == y.b;
    }
};

/// Partition of [0, L] by how many pads carry a stockpile over each point:
/// q1 = exactly one side, q2 = both sides, e = neither. Maximal intervals
/// with positive length; zero-width gaps are not represented.
struct OccupancyDecomposition {
    std::vector<Interval> q1;
    std::vector<Interval> q2;
    std::vector<Interval> e;
    Rational len_q1;
    Rational len_q2;
    Rational len_e;
};

/// Preemptive lower bounds of Theorem 3. k_per_gap[i] is the bound K_{i+1}
/// for the i-th maximal empty interval; argmin_gap = -1 means K0 wins
/// (ties resolve to K0).
struct PreemptiveBounds {
    Rational k0;
    std::vector<Rational> k_per_gap;
    Rational k_star;
    int argmin_gap = -1;
};

namespace detail {

inline std::vector<Interval> pad_intervals(const std::vector<Stockpile>& piles) {
    std::vector<Interval> out;
    for (const auto& p : piles) {
        if (!out.empty() && out.back().b == p.l) out.back().b = p.r;  // merge touching
        else out.push_back({p.l, p.r});
    }
    return out;
}

inline bool covers(const std::vector<Interval>& set, long long a, long long b) {
    for (const auto& iv : set)
        if (iv.a <= a && b <= iv.b) return true;
    return false;
}

}  // namespace detail

inline OccupancyDecomposition occupancy_decomposition(const Instance& inst) {
    std::vector<Interval> s1 = detail::pad_intervals(inst.piles_p1);
    std::vector<Interval> s2 = detail::pad_intervals(inst.piles_p2);

    std::vector<long long> cuts{0, inst.L};
    for (const auto& iv : s1) { cuts.push_back(iv.a); cuts.push_back(iv.b); }
    for (const auto& iv : s2) { cuts.push_back(iv.a); cuts.push_back(iv.b); }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    OccupancyDecomposition out;
    long long lq1 = 0, lq2 = 0, le = 0;
    auto push = [](std::vector<Interval>& list, long long a, long long b) {
        if (!list.empty() && list.back().b == a) list.back().b = b;
        else list.push_back({a, b});
    };
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        long long a = cuts[i], b = cuts[i + 1];
        if (a < 0 || b > inst.L || a >= b) continue;
        bool in1 = detail::covers(s1, a, b);
        bool in2 = detail::covers(s2, a, b);
        if (in1 && in2) { push(out.q2, a, b); lq2 += b - a; }
        else if (in1 || in2) { push(out.q1, a, b); lq1 += b - a; }
        else { push(out.e, a, b); le += b - a; }
    }
    out.len_q1 = Rational(lq1);
    out.len_q2 = Rational(lq2);
    out.len_e = Rational(le);
    return out;
}

/// Eq. (1): 2r/s + sum_j [p_j - p_j/s] with r the farthest right endpoint.
inline Rational single_reclaimer_lower_bound(const Instance& inst) {
    long long r = 0;
    for (const auto& p : inst.piles_p1) r = std::max(r, p.r);
    for (const auto& p : inst.piles_p2) r = std::max(r, p.r);
    Rational total = inst.total_reclaim_time();
    return Rational(2 * r) / inst.s + total - total / inst.s;
}

namespace detail {

/// f(x) = 2 l(Q2 cap [0,x]) + (1 + 1/s) l(Q1 cap [0,x]) + (2/s) l(E cap [0,x]),
/// the return time of R0 reclaiming everything left of x on both pads.
inline Rational occupancy_f(const OccupancyDecomposition& occ, const Rational& s,
                            const Rational& x) {
    auto clip = [&x](const std::vector<Interval>& set) {
        Rational len(0);
        for (const auto& iv : set) {
            Rational hi = rat_min(x, Rational(iv.b));
            if (Rational(iv.a) < hi) len += hi - Rational(iv.a);
        }
        return len;
    };
    Rational lq2 = clip(occ.q2), lq1 = clip(occ.q1), le = clip(occ.e);
    return Rational(2) * lq2 + lq1 + lq1 / s + Rational(2) * le / s;
}

}  // namespace detail

inline PreemptiveBounds preemptive_bounds(const Instance& inst) {
    OccupancyDecomposition occ = occupancy_decomposition(inst);
    PreemptiveBounds out;
    Rational two_k0 = Rational(2) * occ.len_q2 + occ.len_q1 + occ.len_q1 / inst.s +
                      Rational(2) * occ.len_e / inst.s;
    out.k0 = two_k0 / Rational(2);
    out.k_star = out.k0;
    out.argmin_gap = -1;
    for (size_t i = 0; i < occ.e.size(); ++i) {
        Rational f_a = detail::occupancy_f(occ, inst.s, Rational(occ.e[i].a));
        Rational g_b = two_k0 - detail::occupancy_f(occ, inst.s, Rational(occ.e[i].b));
        Rational ki = rat_max(f_a, g_b);
        out.k_per_gap.push_back(ki);
        if (ki < out.k_star) {
            out.k_star = ki;
            out.argmin_gap = static_cast<int>(i);
        }
    }
    return out;
}

}  // namespace reclaim
