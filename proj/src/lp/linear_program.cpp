#include "gridmix/lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gridmix::lp {

std::string_view to_string(Relation r) noexcept {
    switch (r) {
        case Relation::LessEqual: return "<=";
        case Relation::GreaterEqual: return ">=";
        case Relation::Equal: return "=";
    }
    return "?";
}

std::string_view to_string(Unit u) noexcept {
    switch (u) {
        case Unit::Dimensionless: return "1";
        case Unit::MWh: return "MWh";
        case Unit::GramsCO2: return "gCO2";
        case Unit::Usd: return "USD";
        case Unit::SquareFeet: return "ft2";
    }
    return "?";
}

std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::Optimal: return "optimal";
        case Status::Infeasible: return "infeasible";
        case Status::Unbounded: return "unbounded";
        case Status::IterationLimit: return "iteration-limit";
    }
    return "?";
}

LinearProgram LinearProgram::with_variables(std::vector<std::string> names, Sense sense) {
    LinearProgram lp;
    lp.sense = sense;
    lp.objective.assign(names.size(), 0.0);
    lp.lower_bounds.assign(names.size(), 0.0);
    lp.names = std::move(names);
    return lp;
}

Constraint& LinearProgram::add(std::vector<double> coefficients, Relation relation, double rhs,
                               std::string label, Unit unit) {
    constraints.push_back(Constraint{std::move(coefficients), relation, rhs, std::move(label),
                                     unit, unit});
    return constraints.back();
}

double dot(const std::vector<double>& a, const std::vector<double>& b) noexcept {
    double s = 0.0;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void validate(const LinearProgram& lp) {
    const std::size_t n = lp.var_count();
    if (n == 0) throw ContractError("linear program has no variables");
    if (lp.lower_bounds.size() != n)
        throw ContractError("lower bound vector has length " + std::to_string(lp.lower_bounds.size()) +
                            ", expected " + std::to_string(n));
    if (!lp.names.empty() && lp.names.size() != n)
        throw ContractError("name vector length does not match variable count");
    for (double c : lp.objective)
        if (!std::isfinite(c)) throw ValidationError("objective coefficient is not finite");
    for (std::size_t j = 0; j < n; ++j) {
        const double lb = lp.lower_bounds[j];
        if (!std::isfinite(lb) || lb < 0.0)
            throw ValidationError("lower bound of variable " + std::to_string(j) +
                                  " must be finite and >= 0");
    }
    for (const auto& c : lp.constraints) {
        if (c.coefficients.size() != n)
            throw ContractError("constraint '" + c.label + "' has " +
                                std::to_string(c.coefficients.size()) + " coefficients, expected " +
                                std::to_string(n));
        if (!std::isfinite(c.rhs))
            throw ValidationError("constraint '" + c.label + "' has a non-finite rhs");
        bool any = false;
        for (double a : c.coefficients) {
            if (!std::isfinite(a))
                throw ValidationError("constraint '" + c.label + "' has a non-finite coefficient");
            any = any || a != 0.0;
        }
        if (!any) throw ValidationError("constraint '" + c.label + "' has no nonzero coefficient");
        if (c.coefficient_unit != c.rhs_unit)
            throw ValidationError("constraint '" + c.label + "' mixes units " +
                                  std::string(to_string(c.coefficient_unit)) + " and " +
                                  std::string(to_string(c.rhs_unit)));
    }
}

double row_scale(const Constraint& c, const std::vector<double>& x) noexcept {
    double s = std::max(1.0, std::abs(c.rhs));
    double mag = 0.0;
    for (std::size_t j = 0; j < c.coefficients.size() && j < x.size(); ++j)
        mag += std::abs(c.coefficients[j] * x[j]);
    return std::max(s, mag);
}

FeasibilityReport check_feasible(const LinearProgram& lp, const std::vector<double>& values,
                                 double tol) {
    if (values.size() != lp.var_count())
        throw ContractError("point has " + std::to_string(values.size()) + " values, expected " +
                            std::to_string(lp.var_count()));
    FeasibilityReport rep;
    rep.rows.reserve(lp.constraints.size());
    for (const auto& c : lp.constraints) {
        RowCheck row;
        row.label = c.label;
        row.activity = dot(c.coefficients, values);
        row.slack = std::abs(row.activity - c.rhs);
        const double scale = row_scale(c, values);
        double excess = 0.0;
        switch (c.relation) {
            case Relation::LessEqual: excess = row.activity - c.rhs; break;
            case Relation::GreaterEqual: excess = c.rhs - row.activity; break;
            case Relation::Equal: excess = row.slack; break;
        }
        row.violation = std::max(0.0, excess) / scale;
        row.satisfied = row.violation <= tol;
        row.binding = row.slack <= tol * scale;
        rep.worst_violation = std::max(rep.worst_violation, row.violation);
        if (!row.satisfied) rep.violated.push_back(c.label);
        if (row.binding) rep.binding.push_back(c.label);
        rep.rows.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < values.size(); ++j) {
        const double lb = lp.lower_bounds[j];
        const double v = (lb - values[j]) / std::max(1.0, std::abs(lb));
        if (v > tol) {
            rep.bound_violations.push_back(lp.names.empty() ? "x" + std::to_string(j) : lp.names[j]);
            rep.worst_violation = std::max(rep.worst_violation, v);
        }
    }
    rep.feasible = rep.violated.empty() && rep.bound_violations.empty();
    return rep;
}

}  // namespace gridmix::lp
