#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reclaim/rational.hpp"

namespace reclaim {

enum class Pad { P1, P2 };

/// One reclaim task: an interval [l, r] on one of the two pads.
/// Endpoints are integers; the reclaim time equals the length r - l.
struct Stockpile {
    int id = 0;
    Pad pad = Pad::P1;
    long long l = 0;
    long long r = 0;

    long long length() const { return r - l; }
};

/// Two opposed pads of length L, travel speed s >= 1 (reclaim speed is 1),
/// ordered stockpile lists per pad, and an optional total reclaim order.
/// Pile ids are global: pad-1 piles come first, then pad-2 piles.
struct Instance {
    long long L = 0;
    Rational s = 1;
    std::vector<Stockpile> piles_p1;
    std::vector<Stockpile> piles_p2;
    std::optional<std::vector<int>> precedence;

    int n1() const { return static_cast<int>(piles_p1.size()); }
    int n() const { return n1() + static_cast<int>(piles_p2.size()); }

    const Stockpile& pile(int id) const {
        return id < n1() ? piles_p1[id] : piles_p2[id - n1()];
    }

    std::vector<Stockpile> all_piles() const {
        std::vector<Stockpile> out(piles_p1);
        out.insert(out.end(), piles_p2.begin(), piles_p2.end());
        return out;
    }

    Rational total_reclaim_time() const {
        long long t = 0;
        for (const auto& p : piles_p1) t += p.length();
        for (const auto& p : piles_p2) t += p.length();
        return Rational(t);
    }
};

/// Positioning variant input: only the lengths are given; pad and location
/// are decided by the solver. Reclaim order is the index order 1..n.
struct LengthsInstance {
    long long L = 0;
    Rational s = 1;
    std::vector<long long> lengths;
};

/// Piecewise-linear position function as an ordered breakpoint list.
/// A single breakpoint encodes a reclaimer that never moves (makespan 0).
struct ReclaimerPath {
    std::vector<std::pair<Rational, Rational>> points;  // (t, x), t strictly increasing

    bool empty() const { return points.empty(); }
    Rational end_time() const { return points.empty() ? Rational(0) : points.back().first; }
};

enum class Reclaimer { R0 = 0, R1 = 1 };
enum class SweepDir { LeftToRight, RightToLeft };

/// Records which reclaimer handles a stockpile, in which time window and
/// direction. For a preemptively cut pile, x_lo/x_hi name the sub-interval
/// this record covers; otherwise they equal the pile extent.
struct ReclaimAssignment {
    int pile = 0;
    Reclaimer reclaimer = Reclaimer::R0;
    Rational t_start;
    Rational t_end;
    SweepDir dir = SweepDir::LeftToRight;
    Rational x_lo;
    Rational x_hi;
};

struct Schedule {
    ReclaimerPath path0;
    ReclaimerPath path1;
    std::vector<ReclaimAssignment> assignments;
};

/// Solver output: exact makespan, the schedule, and where it came from.
struct SolveResult {
    Rational makespan;
    Schedule schedule;
    std::string solver;
    std::string choice;       // combinatorial choice the solver committed to
    bool preemptive = false;  // schedule cuts at least one stockpile
};

// ---------------------------------------------------------------------------
// Instance validation
// ---------------------------------------------------------------------------

enum class InstanceViolationKind {
    BadInterval,     // l >= r or endpoint outside [0, L]
    Overlap,         // same-pad stockpiles overlap or are out of order
    BadSpeed,        // s < 1
    BadPrecedence,   // precedence is not a permutation of all pile ids
    BadId,           // pile ids not consecutive in pad order
};

struct InstanceViolation {
    InstanceViolationKind kind;
    std::string message;
};

namespace detail {
inline void check_pad(const std::vector<Stockpile>& piles, long long L, const char* pad_name,
                      int first_id, std::vector<InstanceViolation>& out) {
    for (size_t i = 0; i < piles.size(); ++i) {
        const Stockpile& p = piles[i];
        if (p.id != first_id + static_cast<int>(i))
            out.push_back({InstanceViolationKind::BadId,
                           std::string(pad_name) + " pile at index " + std::to_string(i) +
                               " has id " + std::to_string(p.id)});
        if (p.l >= p.r)
            out.push_back({InstanceViolationKind::BadInterval,
                           "pile " + std::to_string(p.id) + ": l < r required"});
        if (p.l < 0 || p.r > L)
            out.push_back({InstanceViolationKind::BadInterval,
                           "pile " + std::to_string(p.id) + ": outside [0, L]"});
        if (i > 0 && piles[i - 1].r > p.l)
            out.push_back({InstanceViolationKind::Overlap,
                           std::string("overlap on ") + pad_name + " between piles " +
                               std::to_string(piles[i - 1].id) + " and " + std::to_string(p.id)});
    }
}
}  // namespace detail

inline std::vector<InstanceViolation> validate_instance(const Instance& inst) {
    std::vector<InstanceViolation> out;
    if (inst.s < Rational(1))
        out.push_back({InstanceViolationKind::BadSpeed, "travel speed s must be >= 1"});
    if (inst.L < 0)
        out.push_back({InstanceViolationKind::BadInterval, "pad length L must be >= 0"});
    detail::check_pad(inst.piles_p1, inst.L, "P1", 0, out);
    detail::check_pad(inst.piles_p2, inst.L, "P2", inst.n1(), out);
    if (inst.precedence) {
        std::vector<int> chain = *inst.precedence;
        if (static_cast<int>(chain.size()) != inst.n()) {
            out.push_back({InstanceViolationKind::BadPrecedence,
                           "precedence chain must list every stockpile exactly once"});
        } else {
            std::vector<int> sorted = chain;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < inst.n(); ++i)
                if (sorted[i] != i) {
                    out.push_back({InstanceViolationKind::BadPrecedence,
                                   "precedence chain is not a permutation of pile ids"});
                    break;
                }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Path geometry
// ---------------------------------------------------------------------------

/// Exact position of the path at time t (linear interpolation between the
/// surrounding breakpoints). Throws std::out_of_range outside [0, C_k].
inline Rational path_position(const ReclaimerPath& path, const Rational& t) {
    if (path.points.empty()) throw std::out_of_range("path_position: empty path");
    if (t < path.points.front().first || t > path.points.back().first)
        throw std::out_of_range("path_position: t outside path domain");
    // Binary search for the segment containing t.
    size_t lo = 0, hi = path.points.size() - 1;
    while (lo + 1 < hi) {
        size_t mid = (lo + hi) / 2;
        if (path.points[mid].first <= t) lo = mid; else hi = mid;
    }
    const auto& [t0, x0] = path.points[lo];
    if (t == t0) return x0;
    const auto& [t1, x1] = path.points[lo + 1 < path.points.size() ? lo + 1 : lo];
    if (t == t1) return x1;
    return x0 + (x1 - x0) * (t - t0) / (t1 - t0);
}

inline Rational makespan(const Schedule& sched) {
    return rat_max(sched.path0.end_time(), sched.path1.end_time());
}

// ---------------------------------------------------------------------------
// Schedule validation
// ---------------------------------------------------------------------------

enum class ValidateMode { Free, Precedence };

enum class ScheduleViolationKind {
    BadPath,        // breakpoints not strictly increasing in t / out of [0,L]
    BadSlope,       // a segment slope outside {0, +s, -s, +1, -1}
    BadAnchor,      // path does not start and end at the reclaimer's anchor
    NoPass,         // H1(t) < H0(t) somewhere
    Uncovered,      // a stockpile has no (complete) assignment
    BadAssignment,  // assignment window does not match a clean +-1 sweep
    TimeOverlap,    // two assignments of one reclaimer overlap in time
    PrecedenceOrder // chain order violated
};

struct ScheduleViolation {
    ScheduleViolationKind kind;
    std::string message;
};

struct ValidateOptions {
    ValidateMode mode = ValidateMode::Free;
    bool preemptive = false;  // accept piles split into several assignments
};

namespace detail {

inline void check_path_shape(const ReclaimerPath& path, const Rational& s, long long L,
                             Rational anchor, const char* name,
                             std::vector<ScheduleViolation>& out) {
    const auto& pts = path.points;
    if (pts.empty()) {
        out.push_back({ScheduleViolationKind::BadPath, std::string(name) + ": empty path"});
        return;
    }
    if (pts.front().first != Rational(0))
        out.push_back({ScheduleViolationKind::BadPath, std::string(name) + ": must start at t=0"});
    if (pts.front().second != anchor || pts.back().second != anchor)
        out.push_back({ScheduleViolationKind::BadAnchor,
                       std::string(name) + ": must start and end at its anchor"});
    for (size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].second < Rational(0) || pts[i].second > Rational(L))
            out.push_back({ScheduleViolationKind::BadPath,
                           std::string(name) + ": breakpoint position outside [0, L]"});
        if (i == 0) continue;
        if (!(pts[i - 1].first < pts[i].first)) {
            out.push_back({ScheduleViolationKind::BadPath,
                           std::string(name) + ": breakpoint times not strictly increasing"});
            return;
        }
        Rational slope = (pts[i].second - pts[i - 1].second) / (pts[i].first - pts[i - 1].first);
        if (slope != Rational(0) && slope != s && slope != -s &&
            slope != Rational(1) && slope != Rational(-1))
            out.push_back({ScheduleViolationKind::BadSlope,
                           std::string(name) + ": segment " + std::to_string(i - 1) +
                               " slope " + slope.str() + " not in {0, +-1, +-s}"});
    }
}

/// Position at time t, with the path held at its endpoints outside its domain.
inline Rational position_clamped(const ReclaimerPath& path, const Rational& t) {
    if (t <= path.points.front().first) return path.points.front().second;
    if (t >= path.points.back().first) return path.points.back().second;
    return path_position(path, t);
}

}  // namespace detail

/// Checks feasibility of a schedule: slope alphabet, anchoring, the no-pass
/// condition at the merged breakpoint set (sufficient for piecewise-linear
/// paths), assignment coverage, and the chain order in precedence mode.
inline std::vector<ScheduleViolation> validate_schedule(const Instance& inst,
                                                        const Schedule& sched,
                                                        const ValidateOptions& opt = {}) {
    std::vector<ScheduleViolation> out;
    detail::check_path_shape(sched.path0, inst.s, inst.L, Rational(0), "R0", out);
    detail::check_path_shape(sched.path1, inst.s, inst.L, Rational(inst.L), "R1", out);
    for (const auto& v : out)
        if (v.kind == ScheduleViolationKind::BadPath) return out;  // geometry unusable

    // (c) no-pass at every breakpoint time of either path
    {
        std::set<Rational> times;
        for (const auto& [t, x] : sched.path0.points) times.insert(t);
        for (const auto& [t, x] : sched.path1.points) times.insert(t);
        for (const auto& t : times) {
            Rational h0 = detail::position_clamped(sched.path0, t);
            Rational h1 = detail::position_clamped(sched.path1, t);
            if (h1 < h0) {
                out.push_back({ScheduleViolationKind::NoPass,
                               "no-pass violated at t=" + t.str()});
                break;
            }
        }
    }

    // (d) coverage: each pile fully covered by clean speed-1 sweeps
    std::vector<std::vector<const ReclaimAssignment*>> by_pile(inst.n());
    for (const auto& a : sched.assignments) {
        if (a.pile < 0 || a.pile >= inst.n()) {
            out.push_back({ScheduleViolationKind::BadAssignment,
                           "assignment names unknown pile " + std::to_string(a.pile)});
            continue;
        }
        by_pile[a.pile].push_back(&a);
    }

    for (int id = 0; id < inst.n(); ++id) {
        const Stockpile& p = inst.pile(id);
        auto& as = by_pile[id];
        if (as.empty()) {
            out.push_back({ScheduleViolationKind::Uncovered,
                           "uncovered stockpile " + std::to_string(id)});
            continue;
        }
        if (!opt.preemptive && as.size() > 1) {
            out.push_back({ScheduleViolationKind::BadAssignment,
                           "pile " + std::to_string(id) + " split without preemptive mode"});
            continue;
        }
        // The spatial spans must partition [l, r].
        std::vector<std::pair<Rational, Rational>> spans;
        for (const auto* a : as) spans.emplace_back(a->x_lo, a->x_hi);
        std::sort(spans.begin(), spans.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        bool cover = spans.front().first == Rational(p.l);
        for (size_t i = 0; cover && i + 1 < spans.size(); ++i)
            cover = spans[i].second == spans[i + 1].first;
        cover = cover && spans.back().second == Rational(p.r);
        for (const auto& sp : spans)
            if (!(sp.first < sp.second)) cover = false;
        if (!cover) {
            out.push_back({ScheduleViolationKind::Uncovered,
                           "pile " + std::to_string(id) + " spans do not cover [l, r]"});
            continue;
        }
        for (const auto* a : as) {
            const ReclaimerPath& path =
                a->reclaimer == Reclaimer::R0 ? sched.path0 : sched.path1;
            Rational len = a->x_hi - a->x_lo;
            if (a->t_end - a->t_start != len) {
                out.push_back({ScheduleViolationKind::BadAssignment,
                               "pile " + std::to_string(id) + ": window length != span length"});
                continue;
            }
            Rational start_x = a->dir == SweepDir::LeftToRight ? a->x_lo : a->x_hi;
            Rational slope = a->dir == SweepDir::LeftToRight ? Rational(1) : Rational(-1);
            bool ok = true;
            try {
                if (path_position(path, a->t_start) != start_x) ok = false;
                if (ok && path_position(path, a->t_end) != start_x + slope * len) ok = false;
            } catch (const std::out_of_range&) {
                ok = false;
            }
            if (ok) {
                // Interior breakpoints must lie on the sweep line.
                for (const auto& [t, x] : path.points) {
                    if (t <= a->t_start || t >= a->t_end) continue;
                    if (x != start_x + slope * (t - a->t_start)) { ok = false; break; }
                }
            }
            if (!ok)
                out.push_back({ScheduleViolationKind::BadAssignment,
                               "pile " + std::to_string(id) +
                                   ": path is not a clean speed-1 sweep over the span"});
        }
    }

    // Per-reclaimer assignment windows must be pairwise disjoint.
    for (int k = 0; k < 2; ++k) {
        std::vector<std::pair<Rational, Rational>> win;
        for (const auto& a : sched.assignments)
            if (static_cast<int>(a.reclaimer) == k) win.emplace_back(a.t_start, a.t_end);
        std::sort(win.begin(), win.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (size_t i = 0; i + 1 < win.size(); ++i)
            if (win[i + 1].first < win[i].second) {
                out.push_back({ScheduleViolationKind::TimeOverlap,
                               std::string("R") + std::to_string(k) +
                                   ": reclaim windows overlap in time"});
                break;
            }
    }

    // (e) precedence: the chain order must be respected across reclaimers.
    if (opt.mode == ValidateMode::Precedence) {
        if (!inst.precedence) {
            out.push_back({ScheduleViolationKind::PrecedenceOrder,
                           "precedence mode requires an instance chain"});
        } else {
            const auto& chain = *inst.precedence;
            for (size_t i = 0; i + 1 < chain.size(); ++i) {
                Rational end_i, start_next;
                bool have = false;
                if (!by_pile[chain[i]].empty() && !by_pile[chain[i + 1]].empty()) {
                    end_i = by_pile[chain[i]].front()->t_end;
                    start_next = by_pile[chain[i + 1]].front()->t_start;
                    have = true;
                }
                if (have && start_next < end_i)
                    out.push_back({ScheduleViolationKind::PrecedenceOrder,
                                   "pile " + std::to_string(chain[i + 1]) +
                                       " starts before pile " + std::to_string(chain[i]) +
                                       " finishes"});
            }
        }
    }
    return out;
}

}  // namespace reclaim
