#include "gridmix/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gridmix::lp {

PivotChoice choose_pivot(const StandardForm& t, PivotRule rule, double opt_tol, double pivot_tol,
                         const std::vector<bool>& excluded) {
    PivotChoice choice;
    std::optional<std::size_t> entering;
    double best = -opt_tol;
    for (std::size_t c = 0; c < t.cols; ++c) {
        if (!excluded.empty() && excluded[c]) continue;
        const double r = t.reduced_cost(c);
        if (r >= -opt_tol) continue;
        if (rule == PivotRule::Bland) {
            entering = c;
            break;
        }
        if (r < best) {
            best = r;
            entering = c;
        }
    }
    if (!entering) return choice;
    choice.entering = *entering;

    std::optional<std::size_t> leaving;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < t.rows; ++r) {
        const double a = t.at(r, *entering);
        if (a <= pivot_tol) continue;
        const double ratio = std::max(t.rhs(r), 0.0) / a;
        if (!leaving) {
            leaving = r;
            best_ratio = ratio;
            continue;
        }
        const double tie = 1e-12 * std::max(1.0, std::abs(best_ratio));
        if (ratio < best_ratio - tie) {
            leaving = r;
            best_ratio = ratio;
        } else if (rule == PivotRule::Bland && ratio <= best_ratio + tie &&
                   t.basis[r] < t.basis[*leaving]) {
            leaving = r;
            best_ratio = std::min(best_ratio, ratio);
        }
    }
    if (!leaving) {
        choice.unbounded = true;
        return choice;
    }
    choice.pivot = Pivot{*leaving, *entering};
    return choice;
}

namespace {

enum class PhaseResult { Optimal, Unbounded, IterationLimit };

// Rebuilds the reduced-cost row for the given column costs.
void price(StandardForm& t, const std::vector<double>& cost) {
    for (std::size_t c = 0; c <= t.cols; ++c) t.at(t.rows, c) = c < t.cols ? cost[c] : 0.0;
    for (std::size_t r = 0; r < t.rows; ++r) {
        const double cb = cost[t.basis[r]];
        if (cb == 0.0) continue;
        for (std::size_t c = 0; c <= t.cols; ++c) t.at(t.rows, c) -= cb * t.at(r, c);
    }
}

// Current phase objective; the rhs cell of the cost row stores its negation.
double phase_objective(const StandardForm& t) { return -t.rhs(t.rows); }

struct PhaseRunner {
    StandardForm& t;
    const SolverOptions& opts;
    std::size_t& iterations;
    bool& used_bland;

    PhaseResult run(const std::vector<bool>& excluded, double opt_tol) {
        const std::size_t stall_limit =
            opts.stall_limit != 0 ? opts.stall_limit : 2 * (t.rows + t.structural_count);
        PivotRule rule = PivotRule::Dantzig;
        double best = phase_objective(t);
        std::size_t stalled = 0;
        while (true) {
            const PivotChoice choice = choose_pivot(t, rule, opt_tol, opts.pivot_tol, excluded);
            if (choice.unbounded) return PhaseResult::Unbounded;
            if (!choice.pivot) return PhaseResult::Optimal;
            if (iterations >= opts.max_iterations) return PhaseResult::IterationLimit;
            t.pivot(choice.pivot->row, choice.pivot->col);
            ++iterations;
            const double z = phase_objective(t);
            if (z < best - 1e-12 * std::max(1.0, std::abs(best))) {
                best = z;
                stalled = 0;
            } else if (++stalled > stall_limit && opts.anti_cycling && rule != PivotRule::Bland) {
                rule = PivotRule::Bland;
                used_bland = true;
            }
        }
    }
};

// Pivots zero-level artificials out of the basis where a structural or logical
// column allows it. Rows with no such column are redundant and keep their
// artificial at zero.
void drive_out_artificials(StandardForm& t, double pivot_tol) {
    for (std::size_t r = 0; r < t.rows; ++r) {
        if (t.kinds[t.basis[r]] != ColumnKind::Artificial) continue;
        std::optional<std::size_t> col;
        double best = pivot_tol;
        for (std::size_t c = 0; c < t.cols; ++c) {
            if (t.kinds[c] == ColumnKind::Artificial) continue;
            if (std::abs(t.at(r, c)) > best) {
                best = std::abs(t.at(r, c));
                col = c;
            }
        }
        if (col) t.pivot(r, *col);
    }
}

}  // namespace

Solution solve(const LinearProgram& lp, const SolverOptions& opts) {
    StandardForm t = standardize(lp, opts.equilibrate);
    Solution sol;

    std::vector<bool> artificial(t.cols, false);
    for (std::size_t c = 0; c < t.cols; ++c) artificial[c] = t.kinds[c] == ColumnKind::Artificial;
    PhaseRunner runner{t, opts, sol.iterations, sol.used_bland};

    if (t.artificial_count > 0) {
        std::vector<double> cost(t.cols, 0.0);
        double rhs_mass = 0.0;
        for (std::size_t c = 0; c < t.cols; ++c)
            if (artificial[c]) cost[c] = 1.0;
        for (std::size_t r = 0; r < t.rows; ++r) rhs_mass += t.rhs(r);
        price(t, cost);
        const PhaseResult res = runner.run({}, opts.opt_tol);
        if (res == PhaseResult::IterationLimit) {
            sol.status = Status::IterationLimit;
            return sol;
        }
        if (phase_objective(t) > opts.feas_tol * std::max(1.0, rhs_mass)) {
            sol.status = Status::Infeasible;
            return sol;
        }
        drive_out_artificials(t, opts.pivot_tol);
    }

    const double sign = lp.sense == Sense::Maximize ? -1.0 : 1.0;
    std::vector<double> cost(t.cols, 0.0);
    double cmax = 0.0;
    for (std::size_t j = 0; j < t.structural_count; ++j) {
        cost[j] = sign * lp.objective[j];
        cmax = std::max(cmax, std::abs(cost[j]));
    }
    price(t, cost);
    const PhaseResult res = runner.run(artificial, opts.opt_tol * std::max(1.0, cmax));
    if (res == PhaseResult::Unbounded) {
        sol.status = Status::Unbounded;
        return sol;
    }
    if (res == PhaseResult::IterationLimit) {
        sol.status = Status::IterationLimit;
        return sol;
    }

    sol.status = Status::Optimal;
    sol.values = t.shift;
    for (std::size_t r = 0; r < t.rows; ++r) {
        const std::size_t c = t.basis[r];
        if (c < t.structural_count) sol.values[c] += std::max(0.0, t.rhs(r));
    }
    sol.objective_value = dot(lp.objective, sol.values);

    const FeasibilityReport rep = check_feasible(lp, sol.values, opts.feas_tol);
    sol.activities.reserve(rep.rows.size());
    sol.slacks.reserve(rep.rows.size());
    for (const auto& row : rep.rows) {
        sol.activities.push_back(row.activity);
        sol.slacks.push_back(row.slack);
    }
    sol.binding = rep.binding;
    return sol;
}

}  // namespace gridmix::lp
