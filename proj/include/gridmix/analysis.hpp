#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gridmix/lp.hpp"
#include "gridmix/model.hpp"

namespace gridmix::analysis {

class UnsupportedSize : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct VertexOptions {
    std::size_t max_vars{4};
    double feas_tol{1e-6};      // relative to row scale
    double dedup_tol{1e-6};     // relative to coordinate magnitude
    double singular_tol{1e-12}; // absolute, on max-abs normalized rows
};

struct Vertex {
    std::vector<double> point;
    double objective{0.0};
    std::vector<std::string> binding;  // constraint labels plus "lb:<var>" bounds
};

/// Brute-force vertex enumeration: every choice of var_count hyperplanes among
/// the constraints and the variable bounds is intersected; feasible, distinct
/// intersection points are returned in lexicographic subset order.
/// This is the serial reference; `enumerate_vertices` splits the subsets over
/// OpenMP threads and returns the identical list.
std::vector<Vertex> enumerate_vertices_serial(const lp::LinearProgram& lp, const VertexOptions& opts = {});
std::vector<Vertex> enumerate_vertices(const lp::LinearProgram& lp, const VertexOptions& opts = {});

struct OracleResult {
    lp::Status status{lp::Status::Infeasible};
    std::vector<double> point;
    double objective{0.0};
    std::vector<Vertex> vertices;
};

/// Optimum by enumeration. Unboundedness is decided by searching the extreme
/// rays of the recession cone for an improving direction.
OracleResult oracle_solve(const lp::LinearProgram& lp, const VertexOptions& opts = {});

/// Number of linearly independent active hyperplanes (rows and bounds) at `x`.
std::size_t active_rank(const lp::LinearProgram& lp, const std::vector<double>& x, double tol = 1e-6);

struct NamedObjective {
    std::string name;
    std::vector<double> coefficients;
};

struct CornerRow {
    std::vector<double> point;
    std::vector<std::string> binding;
    std::vector<double> values;  // one per objective
};

struct CornerReport {
    std::vector<std::string> variables;
    std::vector<std::string> objectives;
    std::vector<CornerRow> rows;
    std::vector<std::size_t> argmin;  // first minimizing row per objective
    bool shared_argmin{false};        // some row minimizes every objective
};

CornerReport corner_report(const lp::LinearProgram& lp, const std::vector<NamedObjective>& objectives,
                           const VertexOptions& opts = {});

/// Shared-space model rebuilt so that the published corner points are its
/// vertices: wind period fractions (0.38, 0.3769, 0.24), which reproduce the
/// published per-period result rows, demand rows at the rounded printed
/// right-hand sides, the 3.578e12 g emissions cap and a land row without the
/// rooftop offset.
model::Scenario corner_point_scenario();

struct SweepPoint {
    double value{0.0};
    lp::Solution solution;
};

/// Parameters accepted by `sweep`: the cap names plus "annual_need_mwh".
bool is_sweep_parameter(std::string_view name) noexcept;

/// `steps` evenly spaced values from `from` to `to` inclusive.
std::vector<double> linspace(double from, double to, std::size_t steps);

/// Re-solves the scenario once per value, OpenMP-parallel over values. Results
/// are in input order; infeasible points are kept with their status.
std::vector<SweepPoint> sweep(const model::Scenario& s, std::string_view parameter,
                              const std::vector<double>& values, const lp::SolverOptions& opts = {});
std::vector<SweepPoint> sweep_serial(const model::Scenario& s, std::string_view parameter,
                                     const std::vector<double>& values,
                                     const lp::SolverOptions& opts = {});

/// Scenario with one sweep parameter replaced.
model::Scenario with_parameter(model::Scenario s, std::string_view parameter, double value);

enum class Classification { Match, Near, Ledger };
std::string_view to_string(Classification c) noexcept;

inline constexpr double kMatchTolerance = 1e-3;
inline constexpr double kNearTolerance = 1e-2;

Classification classify(double relative_delta) noexcept;

struct AuditRow {
    int table{0};
    std::string title;
    std::string scenario;
    std::string objective;  // objective evaluated on the row
    std::vector<std::string> variables;
    std::vector<double> printed_point;
    double printed_objective{0.0};
    bool printed_point_feasible{false};
    bool printed_point_is_vertex{false};
    lp::Status solver_status{lp::Status::Optimal};
    std::vector<double> solver_point;
    double solver_objective{0.0};
    std::optional<double> table_derived_objective;
    double oracle_objective{0.0};
    bool oracle_agrees{false};
    double delta{0.0};  // (solver - printed) / printed
    Classification classification{Classification::Ledger};
    Classification expected{Classification::Ledger};
    double tolerance{0.0};  // accepted |delta| for Match/Near rows
    std::vector<std::string> notes;

    bool passes(bool strict) const noexcept;
};

struct ReproductionReport {
    std::vector<AuditRow> rows;

    bool passed(bool strict = false) const noexcept;
    const AuditRow* find(int table) const noexcept;
};

ReproductionReport reproduce_paper();

}  // namespace gridmix::analysis
