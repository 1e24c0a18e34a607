#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gridmix::lp {

/// Raised when the shapes of an LP do not agree (objective vs. rows vs. bounds).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Raised for NaN/infinite data, negative bounds, all-zero rows and unit mismatches.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, GreaterEqual, Equal };

/// Physical unit carried by a constraint row. The coefficient numerator and the
/// right-hand side must agree.
enum class Unit { Dimensionless, MWh, GramsCO2, Usd, SquareFeet };

std::string_view to_string(Relation r) noexcept;
std::string_view to_string(Unit u) noexcept;

struct Constraint {
    std::vector<double> coefficients;
    Relation relation{Relation::LessEqual};
    double rhs{0.0};
    std::string label;
    Unit coefficient_unit{Unit::Dimensionless};
    Unit rhs_unit{Unit::Dimensionless};
};

struct LinearProgram {
    Sense sense{Sense::Minimize};
    std::vector<double> objective;
    std::vector<Constraint> constraints;
    std::vector<double> lower_bounds;  // MWh, finite and >= 0
    std::vector<std::string> names;

    std::size_t var_count() const noexcept { return objective.size(); }

    /// Creates an empty program over `names.size()` variables with zero lower bounds.
    static LinearProgram with_variables(std::vector<std::string> names,
                                        Sense sense = Sense::Minimize);

    Constraint& add(std::vector<double> coefficients, Relation relation, double rhs,
                    std::string label, Unit unit = Unit::Dimensionless);
};

/// Throws ContractError on shape mismatches and ValidationError on bad values.
void validate(const LinearProgram& lp);

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };
std::string_view to_string(Status s) noexcept;

struct SolverOptions {
    double feas_tol{1e-7};        // relative to row scale
    double pivot_tol{1e-9};       // absolute, on equilibrated tableau entries
    double opt_tol{1e-9};         // relative to the largest objective coefficient
    bool equilibrate{true};
    bool anti_cycling{true};
    // Iterations without objective improvement before switching to Bland's
    // rule; 0 means 2·(m+n).
    std::size_t stall_limit{0};
    std::size_t max_iterations{10000};
};

struct Solution {
    Status status{Status::Infeasible};
    std::vector<double> values;
    double objective_value{0.0};
    std::vector<double> activities;
    std::vector<double> slacks;
    std::vector<std::string> binding;
    std::size_t iterations{0};
    bool used_bland{false};

    bool optimal() const noexcept { return status == Status::Optimal; }
};

enum class ColumnKind { Structural, Slack, Surplus, Artificial };

/// Equality-form tableau for the two-phase method.
///
/// Rows hold the equilibrated constraints (one per LP row, sign-flipped so the
/// right-hand side is nonnegative); the last stored row is the reduced-cost row
/// of whichever phase is active. Structural columns come first and are in
/// shifted coordinates: x = y + lower_bound.
struct StandardForm {
    std::size_t rows{0};
    std::size_t cols{0};  // excluding the RHS column
    std::vector<double> cells;  // (rows + 1) x (cols + 1), row-major
    std::vector<std::size_t> basis;  // basic column per row
    std::vector<ColumnKind> kinds;
    std::vector<double> row_scale;  // divisor applied to each original row
    std::vector<bool> row_flipped;
    std::vector<double> shift;  // per structural variable
    std::size_t structural_count{0};
    std::size_t slack_count{0};
    std::size_t surplus_count{0};
    std::size_t artificial_count{0};

    double& at(std::size_t r, std::size_t c) noexcept { return cells[r * (cols + 1) + c]; }
    double at(std::size_t r, std::size_t c) const noexcept { return cells[r * (cols + 1) + c]; }
    double& rhs(std::size_t r) noexcept { return at(r, cols); }
    double rhs(std::size_t r) const noexcept { return at(r, cols); }
    /// Reduced cost of column c in the active phase.
    double reduced_cost(std::size_t c) const noexcept { return at(rows, c); }

    void pivot(std::size_t row, std::size_t col);
};

StandardForm standardize(const LinearProgram& lp, bool equilibrate = true);

enum class PivotRule { Dantzig, Bland };

struct Pivot {
    std::size_t row;
    std::size_t col;
    bool operator==(const Pivot&) const = default;
};

/// Result of one entering/leaving choice. `unbounded` is set when an improving
/// column has no positive entry; `pivot` is empty at optimality.
struct PivotChoice {
    std::optional<Pivot> pivot;
    bool unbounded{false};
    std::size_t entering{0};
};

/// Picks the next pivot. Columns flagged in `excluded` never enter.
PivotChoice choose_pivot(const StandardForm& tableau, PivotRule rule, double opt_tol,
                         double pivot_tol, const std::vector<bool>& excluded = {});

Solution solve(const LinearProgram& lp, const SolverOptions& opts = {});

struct RowCheck {
    std::string label;
    double activity{0.0};
    double slack{0.0};      // |activity - rhs|
    double violation{0.0};  // relative, 0 when satisfied
    bool satisfied{true};
    bool binding{false};
};

struct FeasibilityReport {
    bool feasible{true};
    std::vector<RowCheck> rows;
    double worst_violation{0.0};
    std::vector<std::string> violated;
    std::vector<std::string> binding;
    std::vector<std::string> bound_violations;
};

/// Scale used for relative comparisons on row `c` at point `x`.
double row_scale(const Constraint& c, const std::vector<double>& x) noexcept;

FeasibilityReport check_feasible(const LinearProgram& lp, const std::vector<double>& values,
                                 double tol = 1e-6);

double dot(const std::vector<double>& a, const std::vector<double>& b) noexcept;

}  // namespace gridmix::lp
