#include "gridmix/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gridmix::model {

std::string_view to_string(DemandMode m) noexcept {
    return m == DemandMode::FlatAnnual ? "flat-annual" : "per-period";
}

std::string_view to_string(SpaceMode m) noexcept {
    return m == SpaceMode::SeparateBounds ? "separate-bounds" : "shared-land";
}

std::string_view to_string(ObjectiveMode m) noexcept {
    switch (m) {
        case ObjectiveMode::Lcoe: return "lcoe";
        case ObjectiveMode::OmOnly: return "om";
        case ObjectiveMode::Emissions: return "emissions";
    }
    return "?";
}

std::string_view to_string(CoefficientVariant v) noexcept {
    return v == CoefficientVariant::AsPrinted ? "as-printed" : "table-derived";
}

DemandMode parse_demand_mode(std::string_view s) {
    if (s == "flat-annual") return DemandMode::FlatAnnual;
    if (s == "per-period") return DemandMode::PerPeriod;
    throw ConfigError("unknown demand_mode '" + std::string(s) + "' (flat-annual | per-period)");
}

SpaceMode parse_space_mode(std::string_view s) {
    if (s == "separate-bounds") return SpaceMode::SeparateBounds;
    if (s == "shared-land") return SpaceMode::SharedLand;
    throw ConfigError("unknown space_mode '" + std::string(s) + "' (separate-bounds | shared-land)");
}

ObjectiveMode parse_objective_mode(std::string_view s) {
    if (s == "lcoe") return ObjectiveMode::Lcoe;
    if (s == "om") return ObjectiveMode::OmOnly;
    if (s == "emissions") return ObjectiveMode::Emissions;
    throw ConfigError("unknown objective_mode '" + std::string(s) + "' (lcoe | om | emissions)");
}

CoefficientVariant parse_variant(std::string_view s) {
    if (s == "as-printed") return CoefficientVariant::AsPrinted;
    if (s == "table-derived") return CoefficientVariant::TableDerived;
    throw ConfigError("unknown coefficient_variant '" + std::string(s) +
                      "' (as-printed | table-derived)");
}

std::optional<double>& cap_by_name(Caps& caps, std::string_view name) {
    if (name == "emissions_g") return caps.emissions_g;
    if (name == "budget_usd") return caps.budget_usd;
    if (name == "land_ft2") return caps.land_ft2;
    if (name == "rooftop_mwh") return caps.rooftop_mwh;
    throw ConfigError("unknown cap '" + std::string(name) +
                      "' (emissions_g | budget_usd | land_ft2 | rooftop_mwh)");
}

std::optional<std::size_t> Scenario::source_index(std::string_view source) const noexcept {
    for (std::size_t i = 0; i < sources.size(); ++i)
        if (sources[i].name == source) return i;
    return std::nullopt;
}

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw ConfigError(message);
}

bool nonnegative(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

void validate(const Scenario& s) {
    const std::string where = "scenario '" + s.name + "': ";
    require(!s.sources.empty(), where + "no energy sources");
    require(std::isfinite(s.annual_need) && s.annual_need > 0.0, where + "annual need must be > 0");
    for (const auto& src : s.sources) {
        const std::string at = where + "source '" + src.name + "': ";
        require(!src.name.empty(), where + "source without a name");
        require(nonnegative(src.lcoe) && nonnegative(src.capital_cost) && nonnegative(src.om_cost) &&
                    nonnegative(src.emissions) && nonnegative(src.land_use) &&
                    nonnegative(src.rooftop_allowance) && nonnegative(src.min_annual_output),
                at + "unit rates must be finite and >= 0");
        for (double f : src.period_fractions)
            require(std::isfinite(f) && f >= 0.0 && f <= 1.0, at + "period fraction outside [0,1]");
        require(src.period_fractions.empty() || src.period_fractions.size() == kPeriodCount,
                at + "expected 3 period fractions");
        require(src.min_annual_output == 0.0 || src.name == "nuclear",
                at + "a minimum annual output is only allowed for nuclear");
    }
    for (std::size_t i = 0; i < s.sources.size(); ++i)
        for (std::size_t j = i + 1; j < s.sources.size(); ++j)
            require(s.sources[i].name != s.sources[j].name,
                    where + "duplicate source '" + s.sources[i].name + "'");

    const auto check_cap = [&](const std::optional<double>& cap, const char* name) {
        if (cap) require(std::isfinite(*cap) && *cap > 0.0, where + "cap " + name + " must be > 0");
    };
    check_cap(s.caps.emissions_g, "emissions_g");
    check_cap(s.caps.budget_usd, "budget_usd");
    check_cap(s.caps.land_ft2, "land_ft2");
    check_cap(s.caps.rooftop_mwh, "rooftop_mwh");

    if (!s.periods.empty()) {
        require(s.periods.size() == kPeriodCount, where + "expected 3 day periods");
        int hours = 0;
        for (const auto& p : s.periods) {
            require(p.hours > 0, where + "period '" + p.name + "' needs positive hours");
            require(std::isfinite(p.demand_fraction) && p.demand_fraction >= 0.0 &&
                        p.demand_fraction <= 1.0,
                    where + "period '" + p.name + "' demand fraction outside [0,1]");
            hours += p.hours;
        }
        require(hours == 24, where + "period hours sum to " + std::to_string(hours) + ", expected 24");
    }
    if (s.demand_mode == DemandMode::PerPeriod) {
        require(s.periods.size() == kPeriodCount, where + "per-period demand needs 3 day periods");
        for (const auto& src : s.sources)
            require(src.period_fractions.size() == kPeriodCount,
                    where + "per-period demand needs period fractions for source '" + src.name + "'");
    }
    if (s.space_mode == SpaceMode::SharedLand)
        require(s.caps.land_ft2.has_value(), where + "shared-land space mode needs caps.land_ft2");
}

lp::LinearProgram compile(const Scenario& s) {
    validate(s);
    using lp::Relation;
    using lp::Unit;
    const std::size_t n = s.sources.size();

    std::vector<std::string> names;
    names.reserve(n);
    for (const auto& src : s.sources) names.push_back(src.name);
    auto prog = lp::LinearProgram::with_variables(std::move(names));

    for (std::size_t j = 0; j < n; ++j) {
        const auto& src = s.sources[j];
        switch (s.objective_mode) {
            case ObjectiveMode::Lcoe: prog.objective[j] = src.lcoe; break;
            case ObjectiveMode::OmOnly: prog.objective[j] = src.om_cost; break;
            case ObjectiveMode::Emissions: prog.objective[j] = src.emissions; break;
        }
        prog.lower_bounds[j] = src.min_annual_output;
    }

    const auto column = [&](auto field) {
        std::vector<double> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = field(s.sources[j]);
        return row;
    };

    if (s.demand_mode == DemandMode::FlatAnnual) {
        prog.add(std::vector<double>(n, 1.0), Relation::GreaterEqual, s.annual_need, "demand", Unit::MWh);
    } else {
        for (std::size_t p = 0; p < kPeriodCount; ++p) {
            prog.add(column([p](const EnergySource& e) { return e.period_fractions[p]; }),
                     Relation::GreaterEqual, s.annual_need * s.periods[p].demand_fraction,
                     "demand_" + s.periods[p].name, Unit::MWh);
        }
    }

    const auto add_if_nonzero = [&](std::vector<double> coeffs, double rhs, std::string label, Unit unit) {
        for (double c : coeffs)
            if (c != 0.0) {
                prog.add(std::move(coeffs), Relation::LessEqual, rhs, std::move(label), unit);
                return;
            }
    };

    if (s.caps.emissions_g)
        add_if_nonzero(column([](const EnergySource& e) { return e.emissions; }), *s.caps.emissions_g,
                       "emissions", Unit::GramsCO2);
    if (s.caps.budget_usd)
        add_if_nonzero(column([](const EnergySource& e) { return e.capital_cost; }), *s.caps.budget_usd,
                       "budget", Unit::Usd);

    if (s.space_mode == SpaceMode::SeparateBounds) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& src = s.sources[j];
            std::vector<double> row(n, 0.0);
            if (src.rooftop_allowance > 0.0) {
                if (!s.caps.rooftop_mwh) continue;
                row[j] = 1.0;
                prog.add(std::move(row), Relation::LessEqual, *s.caps.rooftop_mwh, "roof_" + src.name,
                         Unit::MWh);
            } else if (src.land_use > 0.0 && s.caps.land_ft2) {
                row[j] = src.land_use;
                prog.add(std::move(row), Relation::LessEqual, *s.caps.land_ft2, "land_" + src.name,
                         Unit::SquareFeet);
            }
        }
    } else {
        // Rooftop output is exempt: land_use * (x - allowance) summed over sources.
        double offset = 0.0;
        for (const auto& src : s.sources) offset += src.land_use * src.rooftop_allowance;
        add_if_nonzero(column([](const EnergySource& e) { return e.land_use; }), *s.caps.land_ft2 + offset,
                       "land", Unit::SquareFeet);
    }

    lp::validate(prog);
    return prog;
}

ScenarioReport report_point(const Scenario& s, const std::vector<double>& values) {
    ScenarioReport rep;
    rep.scenario = s.name;
    rep.variant = s.variant;
    rep.objective_mode = s.objective_mode;
    // Period rows only when some source has a daily profile.
    const bool profiled = std::any_of(s.sources.begin(), s.sources.end(),
                                      [](const EnergySource& src) { return !src.period_fractions.empty(); });
    const std::size_t periods = profiled ? kPeriodCount : 0;
    for (const auto& p : s.periods) rep.period_names.push_back(p.name);
    if (rep.period_names.empty()) rep.period_names = {"early_morning", "daytime", "evening"};
    if (!profiled) rep.period_names.clear();

    rep.total.name = "total";
    rep.total.period_production.assign(periods, 0.0);
    for (std::size_t j = 0; j < s.sources.size() && j < values.size(); ++j) {
        const auto& src = s.sources[j];
        const double x = values[j];
        SourceReport row;
        row.name = src.name;
        row.period_production.assign(periods, 0.0);
        for (std::size_t p = 0; p < src.period_fractions.size() && p < periods; ++p)
            row.period_production[p] = x * src.period_fractions[p];
        row.annual_production = x;
        row.land_ft2 = src.land_use * std::max(0.0, x - src.rooftop_allowance);
        row.emissions_g = src.emissions * x;
        row.capital_usd = src.capital_cost * x;
        switch (s.objective_mode) {
            case ObjectiveMode::Lcoe: row.objective = src.lcoe * x; break;
            case ObjectiveMode::OmOnly: row.objective = src.om_cost * x; break;
            case ObjectiveMode::Emissions: row.objective = src.emissions * x; break;
        }
        for (std::size_t p = 0; p < periods; ++p) rep.total.period_production[p] += row.period_production[p];
        rep.total.annual_production += row.annual_production;
        rep.total.land_ft2 += row.land_ft2;
        rep.total.emissions_g += row.emissions_g;
        rep.total.capital_usd += row.capital_usd;
        rep.total.objective += row.objective;
        rep.sources.push_back(std::move(row));
    }
    return rep;
}

ScenarioReport report(const Scenario& s, const lp::Solution& solution) {
    if (!solution.optimal()) {
        ScenarioReport rep;
        rep.scenario = s.name;
        rep.variant = s.variant;
        rep.objective_mode = s.objective_mode;
        rep.status = solution.status;
        return rep;
    }
    ScenarioReport rep = report_point(s, solution.values);
    rep.binding = solution.binding;
    return rep;
}

}  // namespace gridmix::model
