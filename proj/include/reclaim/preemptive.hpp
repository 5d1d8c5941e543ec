#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "reclaim/bounds.hpp"
#include "reclaim/model.hpp"

namespace reclaim {

/// Piecewise-linear return-time functions f (for R0) and g (for R1),
/// tabulated at the sorted endpoint list x_0 = 0 <= ... <= x_m = L.
/// f is strictly increasing, g strictly decreasing, f + g = 2 K0.
struct SplitFunctions {
    std::vector<Rational> breakpoints;
    std::vector<Rational> f_values;
    std::vector<Rational> g_values;

    Rational k0() const { return f_values.back() / Rational(2); }
};

inline SplitFunctions split_functions(const Instance& inst) {
    OccupancyDecomposition occ = occupancy_decomposition(inst);
    std::vector<long long> cuts{0, inst.L};
    auto add_endpoints = [&cuts](const std::vector<Stockpile>& piles) {
        for (const auto& p : piles) { cuts.push_back(p.l); cuts.push_back(p.r); }
    };
    add_endpoints(inst.piles_p1);
    add_endpoints(inst.piles_p2);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    SplitFunctions sf;
    Rational f(0);
    sf.breakpoints.emplace_back(cuts.front());
    sf.f_values.push_back(f);
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        long long a = cuts[i], b = cuts[i + 1];
        Rational width(b - a);
        Rational slope;  // per unit of space
        if (detail::covers(occ.q2, a, b)) slope = Rational(2);
        else if (detail::covers(occ.q1, a, b)) slope = Rational(1) + Rational(1) / inst.s;
        else slope = Rational(2) / inst.s;
        f += width * slope;
        sf.breakpoints.emplace_back(b);
        sf.f_values.push_back(f);
    }
    Rational two_k0 = sf.f_values.back();
    for (const auto& v : sf.f_values) sf.g_values.push_back(two_k0 - v);
    return sf;
}

/// The unique x* with f(x*) = g(x*) = K0. For an empty instance f(x) = 2x/s,
/// so x* comes out as L/2.
inline std::pair<Rational, SplitFunctions> split_point(const Instance& inst) {
    SplitFunctions sf = split_functions(inst);
    Rational k0 = sf.k0();
    if (k0.is_zero()) return {Rational(0), std::move(sf)};
    size_t k = 1;
    while (k < sf.f_values.size() && sf.f_values[k] <= k0) ++k;
    if (k == sf.f_values.size())
        throw std::logic_error("split_point: bracketing index not found");
    const Rational& x0 = sf.breakpoints[k - 1];
    const Rational& x1 = sf.breakpoints[k];
    const Rational& f0 = sf.f_values[k - 1];
    const Rational& f1 = sf.f_values[k];
    Rational x_star = x0 + (k0 - f0) / (f1 - f0) * (x1 - x0);
    return {x_star, std::move(sf)};
}

namespace detail {

struct PilePart {
    int id;
    Rational lo, hi;
    bool cut;
};

inline std::vector<PilePart> parts_left(const std::vector<Stockpile>& piles, const Rational& c) {
    std::vector<PilePart> out;
    for (const auto& p : piles) {
        if (!(Rational(p.l) < c)) break;
        Rational hi = rat_min(Rational(p.r), c);
        out.push_back({p.id, Rational(p.l), hi, hi != Rational(p.r)});
    }
    return out;
}

inline std::vector<PilePart> parts_right(const std::vector<Stockpile>& piles, const Rational& c) {
    std::vector<PilePart> out;
    for (const auto& p : piles) {
        if (!(c < Rational(p.r))) continue;
        Rational lo = rat_max(Rational(p.l), c);
        out.push_back({p.id, lo, Rational(p.r), lo != Rational(p.l)});
    }
    return out;
}

/// Appends a travel leg (speed s) and, for each part, a speed-1 sweep.
inline void run_leg(ReclaimerPath& path, std::vector<ReclaimAssignment>& as, Reclaimer who,
                    const Rational& s, Rational& t, Rational& x, const Rational& target,
                    const std::vector<PilePart>& parts, SweepDir dir) {
    auto move_to = [&](const Rational& to) {
        if (to == x) return;
        t += (to - x).abs() / s;
        x = to;
        path.points.emplace_back(t, x);
    };
    for (const auto& part : parts) {
        Rational from = dir == SweepDir::LeftToRight ? part.lo : part.hi;
        Rational to = dir == SweepDir::LeftToRight ? part.hi : part.lo;
        move_to(from);
        Rational t0 = t;
        t += part.hi - part.lo;
        x = to;
        path.points.emplace_back(t, x);
        as.push_back({part.id, who, t0, t, dir, part.lo, part.hi});
    }
    move_to(target);
}

}  // namespace detail

/// Optimal preemptive schedule of Theorem 3 with makespan K*. If x* falls in
/// an empty interval the schedule is non-preemptive (each reclaimer takes one
/// side of the gap); otherwise stockpiles straddling x* are cut and the
/// result is flagged preemptive.
inline SolveResult preemptive_schedule(const Instance& inst) {
    if (inst.precedence)
        throw std::invalid_argument("preemptive_schedule: precedence chains are not supported");

    auto [x_star, sf] = split_point(inst);
    OccupancyDecomposition occ = occupancy_decomposition(inst);

    Rational cut_left = x_star, cut_right = x_star;
    bool gap_case = false;
    for (const auto& gap : occ.e) {
        if (Rational(gap.a) <= x_star && x_star <= Rational(gap.b)) {
            cut_left = Rational(gap.a);
            cut_right = Rational(gap.b);
            gap_case = true;
            break;
        }
    }

    SolveResult res;
    res.solver = "preemptive_schedule";
    res.choice = std::string(gap_case ? "gap" : "split") + " x*=" + x_star.str();

    // R0: up over pad-1 parts left of the cut, back over pad-2 parts.
    {
        Rational t(0), x(0);
        res.schedule.path0.points.emplace_back(t, x);
        auto up = detail::parts_left(inst.piles_p1, cut_left);
        detail::run_leg(res.schedule.path0, res.schedule.assignments, Reclaimer::R0, inst.s,
                        t, x, cut_left, up, SweepDir::LeftToRight);
        auto down = detail::parts_left(inst.piles_p2, cut_left);
        std::reverse(down.begin(), down.end());
        detail::run_leg(res.schedule.path0, res.schedule.assignments, Reclaimer::R0, inst.s,
                        t, x, Rational(0), down, SweepDir::RightToLeft);
    }
    // R1: down over pad-1 parts right of the cut, back up over pad-2 parts.
    {
        Rational t(0), x(inst.L);
        res.schedule.path1.points.emplace_back(t, x);
        auto down = detail::parts_right(inst.piles_p1, cut_right);
        std::reverse(down.begin(), down.end());
        detail::run_leg(res.schedule.path1, res.schedule.assignments, Reclaimer::R1, inst.s,
                        t, x, cut_right, down, SweepDir::RightToLeft);
        auto up = detail::parts_right(inst.piles_p2, cut_right);
        detail::run_leg(res.schedule.path1, res.schedule.assignments, Reclaimer::R1, inst.s,
                        t, x, Rational(inst.L), up, SweepDir::LeftToRight);
    }

    for (const auto& a : res.schedule.assignments) {
        const Stockpile& p = inst.pile(a.pile);
        if (a.x_lo != Rational(p.l) || a.x_hi != Rational(p.r)) res.preemptive = true;
    }
    res.makespan = makespan(res.schedule);
    return res;
}

}  // namespace reclaim
