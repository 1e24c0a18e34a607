#include <utility>

#include "gridmix/derivation.hpp"
#include "gridmix/model.hpp"

namespace gridmix::model {

namespace {

// Coefficients shared by every scenario in one variant.
struct Coefficients {
    CoefficientVariant variant;
    double annual_need;
    std::vector<DayPeriod> periods;
    EnergySource wind, solar, nuclear, geothermal, gas, hydro;
    double emissions_cap;
    double budget;
    double land_cap;
    double rooftop_mwh;
};

std::vector<DayPeriod> day_periods(double early, double day, double evening) {
    return {{"early_morning", 7, early}, {"daytime", 12, day}, {"evening", 5, evening}};
}

Coefficients table_derived() {
    const auto d = derivation::derive_all();
    const auto v = [&d](std::string_view name) { return d.value(name); };
    Coefficients c{CoefficientVariant::TableDerived,
                   v("annual_need_mwh"),
                   day_periods(v("demand_fraction_early_morning"), v("demand_fraction_daytime"),
                               v("demand_fraction_evening")),
                   {},
                   {},
                   {},
                   {},
                   {},
                   {},
                   v("emissions_cap_g"),
                   v("budget_usd"),
                   v("land_budget_ft2"),
                   v("rooftop_production_mwh")};
    c.wind = {"wind", v("lcoe_wind"), v("capital_wind"), v("om_wind"), v("emissions_wind_g_per_mwh"),
              v("land_wind_ft2_per_mwh"), 0.0,
              {v("wind_fraction_early_morning"), v("wind_fraction_daytime"), v("wind_fraction_evening")},
              0.0};
    c.solar = {"solar", v("lcoe_solar"), v("capital_solar"), v("om_solar"), v("emissions_solar_g_per_mwh"),
               v("land_solar_ft2_per_mwh"), v("rooftop_production_mwh"),
               {v("solar_fraction_early_morning"), v("solar_fraction_daytime"), v("solar_fraction_evening")},
               0.0};
    c.nuclear = {"nuclear", v("lcoe_nuclear"), v("capital_nuclear"), 0.0, v("emissions_nuclear_g_per_mwh"),
                 v("land_nuclear_ft2_per_mwh"), 0.0,
                 {v("nuclear_fraction_early_morning"), v("nuclear_fraction_daytime"),
                  v("nuclear_fraction_evening")},
                 v("nuclear_min_output_mwh")};
    c.geothermal = {"geothermal", v("lcoe_geothermal"), v("capital_geothermal"), 0.0,
                    v("emissions_geothermal_g_per_mwh"), v("land_geothermal_ft2_per_mwh"), 0.0,
                    {v("geothermal_fraction_early_morning"), v("geothermal_fraction_daytime"),
                     v("geothermal_fraction_evening")},
                    0.0};
    const std::vector<double> flat{7.0 / 24.0, 12.0 / 24.0, 5.0 / 24.0};
    c.gas = {"gas_combined_cycle", v("lcoe_gas_combined_cycle"), 0.0, 0.0, v("emissions_gas_g_per_mwh"),
             0.0, 0.0, flat, 0.0};
    c.hydro = {"hydro", v("lcoe_hydro"), 0.0, 0.0, 0.0, 0.0, 0.0, flat, 0.0};
    return c;
}

Coefficients as_printed_base() {
    Coefficients c = table_derived();
    c.variant = CoefficientVariant::AsPrinted;
    c.annual_need = 25'621'059.0;
    c.emissions_cap = 3.578e12;
    c.budget = 2e9;
    c.land_cap = 50'589'860'000.0;
    c.rooftop_mwh = 344'900.0;
    c.nuclear.emissions = 49'000.0;
    return c;
}

Scenario base(const Coefficients& c, std::string name, std::string description) {
    Scenario s;
    s.name = std::move(name);
    s.description = std::move(description);
    s.annual_need = c.annual_need;
    s.periods = c.periods;
    s.variant = c.variant;
    return s;
}

Scenario cost_only(const Coefficients& c) {
    Scenario s = base(c, "m0_cost_only", "six sources, annual demand only, minimize levelized cost");
    s.sources = {c.wind, c.solar, c.nuclear, c.geothermal, c.gas, c.hydro};
    s.sources[2].min_annual_output = 0.0;
    return s;
}

Scenario flat_demand(const Coefficients& c) {
    Scenario s = base(c, "m1_flat_demand",
                      "wind + solar, annual demand, emissions/budget caps, separate land and roof bounds");
    s.sources = {c.wind, c.solar};
    s.caps = {c.emissions_cap, c.budget, c.land_cap, c.rooftop_mwh};
    return s;
}

Scenario period_demand(const Coefficients& c) {
    Scenario s = base(c, "m2_period_demand", "wind + solar with demand split over three day periods");
    s.sources = {c.wind, c.solar};
    if (c.variant == CoefficientVariant::AsPrinted) {
        s.sources[0].period_fractions = {0.3760, 0.3775, 0.2456};
        s.sources[1].period_fractions = {0.01, 0.9797, 0.01};
    }
    s.demand_mode = DemandMode::PerPeriod;
    s.caps = {c.emissions_cap, c.budget, c.land_cap, c.rooftop_mwh};
    return s;
}

Scenario shared_space(const Coefficients& c) {
    Scenario s = period_demand(c);
    s.name = "m3_shared_space";
    s.description = "period demand; wind and ground solar share one land budget";
    s.space_mode = SpaceMode::SharedLand;
    s.caps.rooftop_mwh.reset();
    if (c.variant == CoefficientVariant::AsPrinted) {
        s.caps.emissions_g = 16'325e9;
        s.sources[1].rooftop_allowance = 2'190'438.0;
    }
    return s;
}

Scenario nuclear(const Coefficients& c) {
    Scenario s = base(c, "m4_nuclear", "wind + solar + nuclear (one-reactor floor), shared land");
    s.sources = {c.wind, c.solar, c.nuclear};
    s.demand_mode = DemandMode::PerPeriod;
    s.space_mode = SpaceMode::SharedLand;
    s.caps = {c.emissions_cap, c.budget, c.land_cap, std::nullopt};
    if (c.variant == CoefficientVariant::AsPrinted) {
        s.sources[1].period_fractions = {0.01, 0.9797, 0.01};
        s.sources[1].rooftop_allowance = 10'279'088.0;
        s.caps.emissions_g = 163'325e9;
    }
    return s;
}

Scenario tight_space(const Coefficients& c) {
    Scenario s = nuclear(c);
    s.name = "m4_tight_space";
    s.description = "nuclear model with the land budget reduced to 205,898,600 ft2";
    s.caps.land_ft2 = 205'898'600.0;
    return s;
}

Scenario geothermal(const Coefficients& c) {
    Scenario s = base(c, "m5_geothermal", "wind + solar + geothermal, shared land");
    s.sources = {c.wind, c.solar, c.geothermal};
    s.demand_mode = DemandMode::PerPeriod;
    s.space_mode = SpaceMode::SharedLand;
    s.caps = {c.emissions_cap, c.budget, c.land_cap, std::nullopt};
    if (c.variant == CoefficientVariant::AsPrinted) {
        s.sources[0].lcoe = 73.7;
        s.sources[1].lcoe = 55.8;
        s.sources[1].period_fractions = {0.01, 0.9797, 0.01};
        s.sources[1].rooftop_allowance = 10'279'088.0;
        s.sources[2].period_fractions = {0.2916, 0.5, 0.21};
    }
    return s;
}

Scenario om_objective(const Coefficients& c) {
    Scenario s = shared_space(c);
    s.name = "a1_om_objective";
    s.description = "shared-space constraints, minimize O&M and transmission cost only";
    s.objective_mode = ObjectiveMode::OmOnly;
    return s;
}

Scenario min_emissions(const Coefficients& c) {
    Scenario s = shared_space(c);
    s.name = "b1_min_emissions";
    s.description = "shared-space constraints, minimize emissions; budget row priced at LCOE";
    s.objective_mode = ObjectiveMode::Emissions;
    s.caps.emissions_g.reset();
    for (auto& src : s.sources) src.capital_cost = src.lcoe;
    return s;
}

void append_catalog(std::vector<Scenario>& out, const Coefficients& c) {
    out.push_back(cost_only(c));
    out.push_back(flat_demand(c));
    out.push_back(period_demand(c));
    out.push_back(shared_space(c));
    out.push_back(nuclear(c));
    out.push_back(tight_space(c));
    out.push_back(geothermal(c));
    out.push_back(om_objective(c));
    out.push_back(min_emissions(c));
}

}  // namespace

std::vector<Scenario> builtin_scenarios() {
    std::vector<Scenario> out;
    append_catalog(out, as_printed_base());
    append_catalog(out, table_derived());
    return out;
}

std::optional<Scenario> find_builtin(std::string_view name, CoefficientVariant variant) {
    for (auto& s : builtin_scenarios())
        if (s.name == name && s.variant == variant) return std::move(s);
    return std::nullopt;
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> names;
    for (const auto& s : builtin_scenarios())
        if (s.variant == CoefficientVariant::AsPrinted) names.push_back(s.name);
    return names;
}

}  // namespace gridmix::model
