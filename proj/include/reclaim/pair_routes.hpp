#pragma once

// Route machinery shared by the two-reclaimer pair schedules: a route is a
// list of legs (travel / speed-1 sweep), executed either eagerly or as a
// minimal-delay follower that must stay on one side of a fixed opposing
// trajectory (the no-pass constraint). Sweeps are atomic: a reclaimer never
// pauses or changes speed mid-reclaim, so all waiting happens before a sweep
// starts or inside travel legs.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "reclaim/model.hpp"

namespace reclaim {

struct RouteLeg {
    bool is_sweep = false;
    int pile = -1;       // sweep only
    Rational from, to;   // sweep endpoints; |to - from| traversed at speed 1
    Rational target;     // travel destination
};

struct RouteResult {
    ReclaimerPath path;
    // (pile, t_start, t_end, from, to) per executed sweep, in route order.
    struct SweepRecord { int pile; Rational t0, t1, from, to; };
    std::vector<SweepRecord> sweeps;
};

namespace route_detail {

inline void emit(ReclaimerPath& path, const Rational& t, const Rational& x) {
    if (!path.points.empty()) {
        auto& last = path.points.back();
        if (last.first == t) {
            if (last.second != x)
                throw std::logic_error("route: conflicting breakpoints at equal time");
            return;
        }
    }
    path.points.emplace_back(t, x);
}

/// W(t) with the path held at its final position after its last breakpoint.
inline Rational w_at(const ReclaimerPath& w, const Rational& t) {
    if (t >= w.points.back().first) return w.points.back().second;
    return path_position(w, t);
}

}  // namespace route_detail

/// Runs a route with no opposing constraint: travel at speed s, sweeps at
/// speed 1, no idling.
inline RouteResult run_route_eager(const std::vector<RouteLeg>& legs, const Rational& s,
                                   const Rational& start_x) {
    RouteResult res;
    Rational t(0), x = start_x;
    route_detail::emit(res.path, t, x);
    auto move_to = [&](const Rational& target) {
        if (target == x) return;
        t += (target - x).abs() / s;
        x = target;
        route_detail::emit(res.path, t, x);
    };
    for (const auto& leg : legs) {
        if (!leg.is_sweep) { move_to(leg.target); continue; }
        move_to(leg.from);
        Rational t0 = t;
        t += (leg.to - leg.from).abs();
        x = leg.to;
        route_detail::emit(res.path, t, x);
        res.sweeps.push_back({leg.pile, t0, t, leg.from, leg.to});
    }
    return res;
}

namespace route_detail {

/// Follower that must keep its position >= W(t) at all times (equality is
/// allowed: reclaimers may go side by side). Travel toward lower targets is
/// clamped against W (the follower rides W's slope when in contact); sweeps
/// start at the earliest time the whole speed-1 line clears W.
class AboveFollower {
public:
    AboveFollower(const ReclaimerPath& w, Rational s) : w_(w), s_(std::move(s)) {}

    RouteResult run(const std::vector<RouteLeg>& legs, const Rational& start_x) {
        res_ = RouteResult();
        t_ = Rational(0);
        x_ = start_x;
        emit(res_.path, t_, x_);
        for (const auto& leg : legs) {
            if (!leg.is_sweep) { travel_to(leg.target); continue; }
            travel_to(leg.from);
            Rational start = earliest_sweep_start(leg);
            hold_until(leg.from, start);
            Rational t0 = t_;
            t_ += (leg.to - leg.from).abs();
            x_ = leg.to;
            emit(res_.path, t_, x_);
            res_.sweeps.push_back({leg.pile, t0, t_, leg.from, leg.to});
        }
        return res_;
    }

private:
    // Piece of W covering time t: w(tau) = base + slope * (tau - piece_t0) on
    // [piece_t0, piece_t1); the final piece extends to infinity with slope 0.
    struct Piece {
        Rational t0, t1, x0, slope;
        bool last;
    };

    Piece piece_at(const Rational& t) const {
        const auto& pts = w_.points;
        if (t >= pts.back().first)
            return {pts.back().first, pts.back().first, pts.back().second, Rational(0), true};
        size_t lo = 0, hi = pts.size() - 1;
        while (lo + 1 < hi) {
            size_t mid = (lo + hi) / 2;
            if (pts[mid].first <= t) lo = mid; else hi = mid;
        }
        Rational slope = (pts[lo + 1].second - pts[lo].second) /
                         (pts[lo + 1].first - pts[lo].first);
        return {pts[lo].first, pts[lo + 1].first, pts[lo].second, slope, false};
    }

    Rational w_val(const Piece& p, const Rational& t) const {
        return p.x0 + p.slope * (t - p.t0);
    }

    /// Travel at speed s toward target; upward moves are always safe, downward
    /// moves ride W on contact.
    void travel_to(const Rational& target) {
        if (target == x_) return;
        if (target > x_) {
            // Moving away from the constraint: x - W can only grow.
            t_ += (target - x_) / s_;
            x_ = target;
            emit(res_.path, t_, x_);
            return;
        }
        while (x_ > target) {
            Piece pc = piece_at(t_);
            Rational w_now = w_val(pc, t_);
            if (x_ == w_now && pc.slope > -s_) {
                // In contact: ride W until it reaches the target or the piece ends.
                if (pc.slope < Rational(0) && w_val(pc, pc.last ? pc.t0 : pc.t1) <= target &&
                    !pc.last) {
                    Rational hit = pc.t0 + (target - pc.x0) / pc.slope;
                    if (hit >= t_ && hit <= pc.t1) {
                        t_ = hit;
                        x_ = target;
                        emit(res_.path, t_, x_);
                        return;
                    }
                }
                if (pc.last)
                    throw std::logic_error("follower: stuck riding a parked path");
                t_ = pc.t1;
                x_ = w_val(pc, pc.t1);
                emit(res_.path, t_, x_);
                continue;
            }
            // Free descent at speed s inside this piece.
            Rational t_target = t_ + (x_ - target) / s_;
            Rational t_next = rat_min(t_target, pc.last ? t_target : pc.t1);
            // Contact time: x_ - s (tau - t_) == w piece.
            if (pc.slope != -s_) {
                Rational t_contact = t_ + (x_ - w_now) / (pc.slope + s_);
                if (t_contact >= t_ && t_contact < t_next) t_next = t_contact;
            }
            x_ = x_ - s_ * (t_next - t_);
            t_ = t_next;
            emit(res_.path, t_, x_);
        }
    }

    /// Wait at position `a` until `until`, pushed up and back by W if W rises
    /// above a in the meantime (position = max(a, W(t))).
    void hold_until(const Rational& a, const Rational& until) {
        while (t_ < until) {
            Piece pc = piece_at(t_);
            Rational seg_end = pc.last ? until : rat_min(until, pc.t1);
            Rational w0 = w_val(pc, t_), w1 = w_val(pc, seg_end);
            if (w0 <= a && w1 <= a) {
                if (x_ != a)
                    throw std::logic_error("follower: hold invariant broken");
                t_ = seg_end;
                emit(res_.path, t_, x_);
                continue;
            }
            // W interacts with level a inside the segment: emit the crossing(s).
            if (w0 <= a && w1 > a) {
                Rational cross = pc.t0 + (a - pc.x0) / pc.slope;
                emit(res_.path, cross, a);
                t_ = seg_end;
                x_ = w1;
                emit(res_.path, t_, x_);
            } else if (w0 > a && w1 <= a) {
                Rational cross = pc.t0 + (a - pc.x0) / pc.slope;
                t_ = cross;
                x_ = a;
                emit(res_.path, t_, x_);
            } else {  // entire segment above a: ride W
                t_ = seg_end;
                x_ = w1;
                emit(res_.path, t_, x_);
            }
        }
        if (x_ != a) throw std::logic_error("follower: hold did not settle at sweep start");
    }

    /// Earliest start sigma >= t_ such that the sweep line stays >= W over its
    /// whole duration. Candidates: now, every W breakpoint shifted through the
    /// line, level crossings of the two sweep endpoints, and the time W parks.
    Rational earliest_sweep_start(const RouteLeg& leg) const {
        Rational dir = leg.to > leg.from ? Rational(1) : Rational(-1);
        Rational dur = (leg.to - leg.from).abs();
        std::set<Rational> cands{t_, w_.points.back().first};
        const auto& pts = w_.points;
        for (size_t i = 0; i < pts.size(); ++i) {
            const Rational& tau = pts[i].first;
            const Rational& wv = pts[i].second;
            cands.insert(tau);
            if (tau >= dur) cands.insert(tau - dur);
            // Line through the breakpoint: leg.from + dir (tau - sigma) = wv.
            Rational sig = tau - dir * (wv - leg.from);
            cands.insert(sig);
        }
        // Crossings of W with the levels of both sweep endpoints.
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            Rational m = (pts[i + 1].second - pts[i].second) /
                         (pts[i + 1].first - pts[i].first);
            if (m.is_zero()) continue;
            for (int which = 0; which < 2; ++which) {
                Rational level = which == 0 ? leg.from : leg.to;
                Rational cross = pts[i].first + (level - pts[i].second) / m;
                if (cross < pts[i].first || cross > pts[i + 1].first) continue;
                cands.insert(cross);
                if (cross >= dur) cands.insert(cross - dur);
            }
        }
        for (const auto& sig : cands) {
            if (sig < t_) continue;
            if (sweep_clears(leg.from, dir, dur, sig)) return sig;
        }
        throw std::logic_error("follower: no feasible sweep start found");
    }

    /// Exact check: line a + dir (tau - sigma) >= W(tau) for all tau in
    /// [sigma, sigma + dur]. Both are piecewise linear, so checking the window
    /// ends plus every W breakpoint inside suffices.
    bool sweep_clears(const Rational& a, const Rational& dir, const Rational& dur,
                      const Rational& sigma) const {
        Rational end = sigma + dur;
        auto line = [&](const Rational& tau) { return a + dir * (tau - sigma); };
        if (line(sigma) < w_at(w_, sigma)) return false;
        if (line(end) < w_at(w_, end)) return false;
        for (const auto& [tau, wv] : w_.points) {
            if (tau <= sigma || tau >= end) continue;
            if (line(tau) < wv) return false;
        }
        return true;
    }

    const ReclaimerPath& w_;
    Rational s_;
    RouteResult res_;
    Rational t_, x_;
};

inline ReclaimerPath mirror_path(const ReclaimerPath& p, long long L) {
    ReclaimerPath out;
    for (const auto& [t, x] : p.points) out.points.emplace_back(t, Rational(L) - x);
    return out;
}

}  // namespace route_detail

/// Runs a route for the reclaimer designated to wait, keeping it above (R1)
/// or below (R0) the fixed opposing path `winner`. Minimal delay for its leg
/// order; the result never violates no-pass against `winner`.
inline RouteResult run_route_following(const std::vector<RouteLeg>& legs, const Rational& s,
                                       const Rational& start_x, const ReclaimerPath& winner,
                                       bool stay_above, long long L) {
    if (stay_above) {
        route_detail::AboveFollower f(winner, s);
        return f.run(legs, start_x);
    }
    // Mirror space so "below" becomes "above", run, mirror back.
    std::vector<RouteLeg> mlegs;
    for (const auto& leg : legs) {
        RouteLeg m = leg;
        if (leg.is_sweep) {
            m.from = Rational(L) - leg.from;
            m.to = Rational(L) - leg.to;
        } else {
            m.target = Rational(L) - leg.target;
        }
        mlegs.push_back(m);
    }
    ReclaimerPath mw = route_detail::mirror_path(winner, L);
    route_detail::AboveFollower f(mw, s);
    RouteResult mres = f.run(mlegs, Rational(L) - start_x);
    RouteResult res;
    res.path = route_detail::mirror_path(mres.path, L);
    for (const auto& sw : mres.sweeps)
        res.sweeps.push_back({sw.pile, sw.t0, sw.t1, Rational(L) - sw.from, Rational(L) - sw.to});
    return res;
}

}  // namespace reclaim
