#pragma once

#include <stdexcept>

#include "reclaim/bounds.hpp"
#include "reclaim/model.hpp"

namespace reclaim {

/// Forward-Backward: R0 sweeps pad P1 left to right, then pad P2 right to
/// left, traveling at speed s between piles, and returns to 0. R1 stays
/// parked at L. Optimal for a single reclaimer without precedence; the
/// makespan equals the Eq.-type lower bound exactly.
inline SolveResult forward_backward(const Instance& inst) {
    if (inst.precedence)
        throw std::invalid_argument("forward_backward: precedence chains are not supported");

    SolveResult res;
    res.solver = "forward_backward";

    ReclaimerPath& path = res.schedule.path0;
    Rational t(0), x(0);
    path.points.emplace_back(t, x);
    auto move_to = [&](const Rational& target) {
        if (target == x) return;
        t += (target - x).abs() / inst.s;
        x = target;
        path.points.emplace_back(t, x);
    };
    auto sweep = [&](const Stockpile& p, SweepDir dir) {
        Rational from = dir == SweepDir::LeftToRight ? Rational(p.l) : Rational(p.r);
        Rational to = dir == SweepDir::LeftToRight ? Rational(p.r) : Rational(p.l);
        move_to(from);
        Rational t0 = t;
        t += Rational(p.length());
        x = to;
        path.points.emplace_back(t, x);
        res.schedule.assignments.push_back(
            {p.id, Reclaimer::R0, t0, t, dir, Rational(p.l), Rational(p.r)});
    };

    for (const auto& p : inst.piles_p1) sweep(p, SweepDir::LeftToRight);
    for (auto it = inst.piles_p2.rbegin(); it != inst.piles_p2.rend(); ++it)
        sweep(*it, SweepDir::RightToLeft);
    move_to(Rational(0));

    res.schedule.path1.points.emplace_back(Rational(0), Rational(inst.L));
    res.makespan = t;
    return res;
}

}  // namespace reclaim
