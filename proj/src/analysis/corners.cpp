#include <algorithm>
#include <cmath>

#include "gridmix/analysis.hpp"

namespace gridmix::analysis {

CornerReport corner_report(const lp::LinearProgram& lp, const std::vector<NamedObjective>& objectives,
                           const VertexOptions& opts) {
    for (const auto& o : objectives)
        if (o.coefficients.size() != lp.var_count())
            throw lp::ContractError("objective '" + o.name + "' has the wrong length");

    CornerReport rep;
    rep.variables = lp.names;
    for (const auto& o : objectives) rep.objectives.push_back(o.name);
    for (auto& v : enumerate_vertices(lp, opts)) {
        CornerRow row;
        for (const auto& o : objectives) row.values.push_back(lp::dot(o.coefficients, v.point));
        row.point = std::move(v.point);
        row.binding = std::move(v.binding);
        rep.rows.push_back(std::move(row));
    }
    if (rep.rows.empty()) return rep;

    // Rows within a relative 1e-9 of the minimum tie for it.
    std::vector<bool> shared(rep.rows.size(), true);
    for (std::size_t k = 0; k < objectives.size(); ++k) {
        double best = rep.rows.front().values[k];
        std::size_t arg = 0;
        for (std::size_t i = 1; i < rep.rows.size(); ++i)
            if (rep.rows[i].values[k] < best) {
                best = rep.rows[i].values[k];
                arg = i;
            }
        rep.argmin.push_back(arg);
        const double tie = 1e-9 * std::max(1.0, std::abs(best));
        for (std::size_t i = 0; i < rep.rows.size(); ++i)
            if (rep.rows[i].values[k] > best + tie) shared[i] = false;
    }
    rep.shared_argmin = std::any_of(shared.begin(), shared.end(), [](bool b) { return b; });
    return rep;
}

model::Scenario corner_point_scenario() {
    model::Scenario s = *model::find_builtin("m3_shared_space", model::CoefficientVariant::AsPrinted);
    s.name = "corner_points";
    s.description = "shared-space model with the wind period fractions implied by the published results";
    s.sources[0].period_fractions = {0.38, 0.3769, 0.24};
    s.sources[1].rooftop_allowance = 0.0;
    s.caps.emissions_g = 3.578e12;
    // Demand rows at the rounded right-hand sides 7.069e6, 13.192e6 and 6.006e6.
    const double printed_rhs[] = {7.069e6, 13.192e6, 6.006e6};
    for (std::size_t p = 0; p < model::kPeriodCount; ++p)
        s.periods[p].demand_fraction = printed_rhs[p] / s.annual_need;
    return s;
}

}  // namespace gridmix::analysis
