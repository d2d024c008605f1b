#pragma once

// Exact rational linear programming. Two-phase dense simplex with Bland's
// anti-cycling rule; no scaling, no tolerances, guaranteed termination.
// Free variables are split into positive parts, inequalities get slacks,
// phase one uses artificials.
//
// On top of the solver sit the two polyhedral primitives the rest of the
// library is built from: implicit-equality detection (one LP per
// constraint) and relative-interior points (average of per-constraint
// slack maximizers).

#include "hov/geometry.hpp"
#include "hov/linalg.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace hov {

enum class Rel { LessEq, Eq };

struct LinearConstraint {
    Vec normal;
    Rat rhs;
    Rel rel = Rel::LessEq;
};

enum class LPStatus { Optimal, Infeasible, Unbounded };
enum class Sense { Max, Min };

struct LPOutcome {
    LPStatus status = LPStatus::Infeasible;
    std::optional<Point> point;  // present iff Optimal; exactly feasible
    std::optional<Rat> value;
};

namespace detail {

// Tableau simplex, minimization, Bland's rule. `ncols` real columns plus
// rhs; entering variables restricted to indices < `enter_limit`.
// Returns false on unboundedness.
inline bool simplex_min(Matrix& t, std::vector<std::size_t>& basis, const Vec& cost,
                        std::size_t enter_limit) {
    const std::size_t m = t.size();
    const std::size_t ncols = cost.size();
    for (;;) {
        // Reduced costs d_j = c_j - c_B^T B^{-1} A_j, recomputed fresh.
        Vec red = cost;
        for (std::size_t i = 0; i < m; ++i) {
            const Rat& cb = cost[basis[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < ncols; ++j)
                if (t[i][j] != 0) red[j] -= cb * t[i][j];
        }
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < enter_limit; ++j) {
            if (red[j] < 0) {
                enter = j;
                break;  // Bland: smallest index
            }
        }
        if (enter == ncols) return true;  // optimal

        std::size_t leave = m;
        Rat best_ratio(0);
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            const Rat ratio = t[i][ncols] / t[i][enter];
            if (leave == m || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) return false;  // unbounded

        const Rat inv = Rat(1) / t[leave][enter];
        for (std::size_t j = 0; j <= ncols; ++j) t[leave][j] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rat f = t[i][enter];
            for (std::size_t j = 0; j <= ncols; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
}

}  // namespace detail

inline LPOutcome solve(const std::vector<LinearConstraint>& constraints, const Vec& objective,
                       Sense sense) {
    const std::size_t n = objective.size();
    for (const auto& c : constraints)
        if (c.normal.size() != n) throw std::invalid_argument("lp: dimension mismatch");

    const std::size_t m = constraints.size();
    std::size_t num_slack = 0;
    for (const auto& c : constraints)
        if (c.rel == Rel::LessEq) ++num_slack;

    // Columns: x+ (n), x- (n), slacks, artificials (m). rhs is last.
    const std::size_t nstruct = 2 * n + num_slack;
    const std::size_t ncols = nstruct + m;
    Matrix t(m, Vec(ncols + 1, Rat(0)));
    std::vector<std::size_t> basis(m);
    std::size_t slack_at = 2 * n;
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = constraints[i];
        const bool flip = c.rhs < 0;
        const Rat sgn = flip ? Rat(-1) : Rat(1);
        for (std::size_t j = 0; j < n; ++j) {
            t[i][j] = sgn * c.normal[j];
            t[i][n + j] = -sgn * c.normal[j];
        }
        if (c.rel == Rel::LessEq) t[i][slack_at++] = sgn;
        t[i][nstruct + i] = 1;
        t[i][ncols] = sgn * c.rhs;
        basis[i] = nstruct + i;
    }

    // Phase 1: minimize the artificials.
    Vec phase1(ncols, Rat(0));
    for (std::size_t i = 0; i < m; ++i) phase1[nstruct + i] = 1;
    detail::simplex_min(t, basis, phase1, ncols);
    Rat art_sum(0);
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] >= nstruct) art_sum += t[i][ncols];
    if (art_sum != 0) return {LPStatus::Infeasible, std::nullopt, std::nullopt};

    // Drive zero-level artificials out of the basis where possible;
    // a row with no structural pivot is redundant and stays put at zero.
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < nstruct) continue;
        std::size_t piv = nstruct;
        for (std::size_t j = 0; j < nstruct; ++j)
            if (t[i][j] != 0) {
                piv = j;
                break;
            }
        if (piv == nstruct) continue;
        const Rat inv = Rat(1) / t[i][piv];
        for (std::size_t j = 0; j <= ncols; ++j) t[i][j] *= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == i || t[r][piv] == 0) continue;
            const Rat f = t[r][piv];
            for (std::size_t j = 0; j <= ncols; ++j) t[r][j] -= f * t[i][j];
        }
        basis[i] = piv;
    }

    // Phase 2 over structural columns only.
    Vec cost(ncols, Rat(0));
    for (std::size_t j = 0; j < n; ++j) {
        const Rat cj = sense == Sense::Max ? -objective[j] : objective[j];
        cost[j] = cj;
        cost[n + j] = -cj;
    }
    if (!detail::simplex_min(t, basis, cost, nstruct))
        return {LPStatus::Unbounded, std::nullopt, std::nullopt};

    Point x(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n)
            x[basis[i]] += t[i][ncols];
        else if (basis[i] < 2 * n)
            x[basis[i] - n] -= t[i][ncols];
    }
    return {LPStatus::Optimal, x, linalg::dot(objective, x)};
}

inline std::optional<Point> feasible_point(const std::vector<LinearConstraint>& constraints,
                                           std::size_t ambient_dim) {
    auto out = solve(constraints, Vec(ambient_dim, Rat(0)), Sense::Min);
    if (out.status != LPStatus::Optimal) return std::nullopt;
    return out.point;
}

// Indices of LessEq constraints whose slack is zero over the whole feasible
// set. nullopt signals an empty polyhedron.
inline std::optional<std::vector<std::size_t>> implicit_equalities(
    const std::vector<LinearConstraint>& constraints, std::size_t ambient_dim) {
    if (!feasible_point(constraints, ambient_dim)) return std::nullopt;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        if (constraints[i].rel != Rel::LessEq) continue;
        auto lo = solve(constraints, constraints[i].normal, Sense::Min);
        if (lo.status == LPStatus::Optimal && *lo.value == constraints[i].rhs) out.push_back(i);
    }
    return out;
}

// A point of the relative interior: every implicit equality holds with
// equality, every other inequality with strictly positive slack. Built by
// averaging one slack-maximizing point per non-implicit constraint (slack
// capped at 1 so the subproblems stay bounded). nullopt means empty.
inline std::optional<Point> relint_point(const std::vector<LinearConstraint>& constraints,
                                         std::size_t ambient_dim) {
    const auto imp = implicit_equalities(constraints, ambient_dim);
    if (!imp) return std::nullopt;
    std::vector<bool> is_implicit(constraints.size(), false);
    for (auto i : *imp) is_implicit[i] = true;

    // Lifted system over (x, u).
    std::vector<LinearConstraint> lifted;
    for (const auto& c : constraints) {
        Vec nrm = c.normal;
        nrm.push_back(Rat(0));
        lifted.push_back({std::move(nrm), c.rhs, c.rel});
    }
    {
        Vec cap(ambient_dim + 1, Rat(0));
        cap[ambient_dim] = 1;
        lifted.push_back({std::move(cap), Rat(1), Rel::LessEq});
    }
    Vec obj(ambient_dim + 1, Rat(0));
    obj[ambient_dim] = 1;

    std::vector<Point> samples;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        if (constraints[i].rel != Rel::LessEq || is_implicit[i]) continue;
        Vec nrm = constraints[i].normal;
        nrm.push_back(Rat(1));  // a.x + u <= b
        lifted.push_back({std::move(nrm), constraints[i].rhs, Rel::LessEq});
        auto out = solve(lifted, obj, Sense::Max);
        lifted.pop_back();
        if (out.status != LPStatus::Optimal)
            throw std::logic_error("relint_point: slack subproblem not optimal");
        Point x(out.point->begin(), out.point->begin() + ambient_dim);
        samples.push_back(std::move(x));
    }
    if (samples.empty()) return feasible_point(constraints, ambient_dim);

    Point avg(ambient_dim, Rat(0));
    for (const auto& s : samples) avg = linalg::add(avg, s);
    return linalg::scale(avg, Rat(1) / Rat(static_cast<int>(samples.size())));
}

}  // namespace hov
