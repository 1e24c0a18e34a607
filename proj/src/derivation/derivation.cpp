#include "gridmix/derivation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gridmix::derivation {

namespace {

void require_fraction(double f, std::string_view what, bool allow_zero) {
    if (!std::isfinite(f) || f > 1.0 || f < 0.0 || (!allow_zero && f == 0.0))
        throw DomainError(std::string(what) + " must lie in " + (allow_zero ? "[0,1]" : "(0,1]") +
                          ", got " + std::to_string(f));
}

void require_nonnegative(double v, std::string_view what) {
    if (!std::isfinite(v) || v < 0.0)
        throw DomainError(std::string(what) + " must be finite and >= 0");
}

}  // namespace

double estimate_city_share(double city_elec_mwh, double elec_coverage, double city_gas_mwh,
                           double gas_coverage, double state_total_mwh) {
    require_fraction(elec_coverage, "electricity coverage", false);
    require_fraction(gas_coverage, "gas coverage", false);
    require_nonnegative(city_elec_mwh, "city electricity");
    require_nonnegative(city_gas_mwh, "city gas");
    if (!std::isfinite(state_total_mwh) || state_total_mwh <= 0.0)
        throw DomainError("state total must be > 0");
    return (city_elec_mwh / elec_coverage + city_gas_mwh / gas_coverage) / state_total_mwh;
}

double annual_need(double state_total_mwh, double adjusted_share, double non_clean_fraction) {
    require_nonnegative(state_total_mwh, "state total");
    require_fraction(adjusted_share, "adjusted share", true);
    require_fraction(non_clean_fraction, "non-clean fraction", true);
    return state_total_mwh * adjusted_share * non_clean_fraction;
}

double baseline_emissions(const std::vector<MixEntry>& mix, double total_mwh) {
    require_nonnegative(total_mwh, "total consumption");
    double grams = 0.0;
    for (const auto& e : mix) {
        require_nonnegative(e.fraction, "mix fraction");
        require_nonnegative(e.grams_per_mwh, "emission rate");
        grams += total_mwh * e.fraction * e.grams_per_mwh;
    }
    return grams;
}

double emissions_cap(double baseline_grams, double reduction) {
    require_nonnegative(baseline_grams, "baseline emissions");
    require_fraction(reduction, "reduction", true);
    return baseline_grams * (1.0 - reduction);
}

double land_budget(double state_area_ft2, double unoccupied_fraction, double dedication) {
    require_nonnegative(state_area_ft2, "state area");
    require_fraction(unoccupied_fraction, "unoccupied fraction", true);
    require_fraction(dedication, "dedication", true);
    return state_area_ft2 * unoccupied_fraction * dedication;
}

double production_bound(double area_ft2, double land_rate) {
    require_nonnegative(area_ft2, "area");
    if (!std::isfinite(land_rate) || land_rate <= 0.0) throw DomainError("land rate must be > 0");
    return std::floor(area_ft2 / land_rate);
}

double period_rhs(double annual_need_mwh, double demand_fraction) {
    require_nonnegative(annual_need_mwh, "annual need");
    require_fraction(demand_fraction, "demand fraction", true);
    return annual_need_mwh * demand_fraction;
}

double Constant::delta() const noexcept {
    if (!printed || *printed == 0.0) return 0.0;
    return (value - *printed) / *printed;
}

const Constant* DerivedConstants::find(std::string_view name) const noexcept {
    for (const auto& c : constants)
        if (c.name == name) return &c;
    return nullptr;
}

double DerivedConstants::value(std::string_view name) const {
    if (const Constant* c = find(name)) return c->value;
    throw std::out_of_range("no derived constant named '" + std::string(name) + "'");
}

namespace {

class Builder {
public:
    double input(std::string name, double value, std::string unit, std::string provenance) {
        out_.constants.push_back({std::move(name), value, std::move(unit), std::move(provenance), {}});
        return value;
    }

    double derived(std::string name, double value, std::string unit, std::string provenance,
                   std::optional<double> printed = {}) {
        out_.constants.push_back(
            {std::move(name), value, std::move(unit), std::move(provenance), printed});
        return value;
    }

    // A value some printed model uses in place of the derived one.
    void alternate(std::string name, double printed, std::string note) {
        const Constant* c = out_.find(name);
        const double v = c->value;
        out_.deltas.push_back({std::move(name), v, printed, (v - printed) / printed, std::move(note)});
    }

    DerivedConstants finish() {
        std::vector<Delta> recomputed;
        for (const auto& c : out_.constants)
            if (c.printed && std::abs(c.delta()) > kDeltaReportThreshold)
                recomputed.push_back({c.name, c.value, *c.printed, c.delta(), "recomputed from inputs"});
        out_.deltas.insert(out_.deltas.begin(), recomputed.begin(), recomputed.end());
        return std::move(out_);
    }

private:
    DerivedConstants out_;
};

}  // namespace

DerivedConstants derive_all() {
    Builder b;

    // City demand.
    const double state_2010 = b.input("state_consumption_2010_mwh", 1'168'009'546.0, "MWh",
                                      "published: state energy consumption, 2010");
    const double elec = b.input("city_electricity_2010_mwh", 15'142'030.0, "MWh",
                                "published: reported city building electricity, 2010");
    const double elec_cov = b.input("city_electricity_coverage", 0.68, "1",
                                    "published: share of city electricity covered by the report");
    const double gas = b.input("city_gas_2010_mwh", 37'998'300.0, "MWh",
                               "published: reported city building gas, 2010");
    const double gas_cov = b.input("city_gas_coverage", 0.81, "1",
                                   "published: share of city gas covered by the report");
    b.derived("city_electricity_estimate_mwh", elec / elec_cov, "MWh",
              "recomputed: reported electricity / coverage", 22'267'691.0);
    b.derived("city_gas_estimate_mwh", gas / gas_cov, "MWh", "recomputed: reported gas / coverage",
              46'504'074.0);
    b.derived("city_share_2010", estimate_city_share(elec, elec_cov, gas, gas_cov, state_2010), "1",
              "recomputed: coverage-adjusted city use / state use", 0.0588);
    const double share = b.input("adjusted_city_share", 0.07, "1",
                                 "author judgment: 2010 share raised for population growth");
    const double state_2021 = b.input("state_consumption_2021_mwh", 1'091'285'298.314, "MWh",
                                      "published: state energy consumption, 2021");
    const double city_2021 = b.derived("city_consumption_2021_mwh", state_2021 * share, "MWh",
                                       "recomputed: 2021 state use x adjusted share", 76'389'561.0);
    const double nuclear_share = b.input("clean_share_nuclear", 0.5263, "1", "published: state generation mix");
    const double wind_share = b.input("clean_share_wind", 0.1227, "1", "published: state generation mix");
    const double solar_share = b.input("clean_share_solar", 0.0150, "1", "published: state generation mix");
    const double hydro_share = b.input("clean_share_hydro", 0.0006, "1", "published: state generation mix");
    const double non_clean = b.derived("non_clean_fraction",
                                       1.0 - (nuclear_share + wind_share + solar_share + hydro_share),
                                       "1", "recomputed: 1 - clean generation shares", 0.3354);
    const double need = b.derived("annual_need_mwh", annual_need(state_2021, share, non_clean), "MWh",
                                  "recomputed: 2021 state use x adjusted share x non-clean fraction",
                                  25'621'059.0);

    // Emissions baseline and cap.
    const std::vector<MixEntry> mix{{0.2099, 820'000.0}, {0.1231, 490'000.0},
                                    {0.0004, 1'106'765.0}, {0.0021, 230'000.0}};
    const std::vector<MixEntry> swapped{{0.2099, 820'000.0}, {0.1231, 490'000.0},
                                        {0.0021, 1'106'765.0}, {0.0004, 230'000.0}};
    const double baseline = b.derived("baseline_emissions_g", baseline_emissions(mix, city_2021), "gCO2",
                                      "recomputed: city use x fossil mix (coal, gas, oil 0.04%, "
                                      "biomass 0.21%) x emission rates",
                                      17.83e12);
    b.derived("baseline_emissions_swapped_g", baseline_emissions(swapped, city_2021), "gCO2",
              "recomputed with the oil/biomass shares exchanged (0.21% oil, 0.04% biomass) as the "
              "table's percentage labels read",
              17.83e12);
    const double reduction = b.input("emissions_reduction", 0.80, "1", "policy input: 80% reduction target");
    b.derived("emissions_cap_g", emissions_cap(baseline, reduction), "gCO2",
              "recomputed: baseline x (1 - reduction)", 3.578e12);

    b.input("budget_usd", 2e9, "USD", "policy input: construction budget");

    // Land.
    const double area = b.input("state_area_ft2", 1'614'570'000'000.0, "ft2", "published: state area");
    const double unoccupied = b.input("unoccupied_fraction", 0.47, "1", "published: unoccupied land share");
    const double dedication = b.input("wind_land_dedication", 1.0 / 15.0, "1",
                                      "policy input: 1/15 of unoccupied land for wind");
    const double land = b.derived("land_budget_ft2", land_budget(area, unoccupied, dedication), "ft2",
                                  "recomputed: area x unoccupied share x dedication", 50'589'860'000.0);
    const double wind_land = b.input("land_wind_ft2_per_mwh", 1065.6, "ft2/MWh", "published: wind site area per MWh");
    const double solar_land = b.input("land_solar_ft2_per_mwh", 204.5, "ft2/MWh", "published: solar area per MWh");
    b.input("land_nuclear_ft2_per_mwh", 3.23, "ft2/MWh", "published: nuclear area per MWh");
    b.input("land_geothermal_ft2_per_mwh", 9.6875, "ft2/MWh",
            "published: 900 m2 per GWh for a flash plant, in ft2 per MWh");
    const double roof = b.input("rooftop_area_ft2", 70'532'107.0, "ft2", "published: city building footprint");
    b.derived("wind_production_bound_mwh", production_bound(land, wind_land), "MWh",
              "recomputed: floor(land budget / wind area rate)", 47'475'469.0);
    b.derived("rooftop_production_mwh", production_bound(roof, solar_land), "MWh",
              "recomputed: floor(rooftop area / solar area rate)", 344'900.0);

    // Day periods.
    const double f_early = b.input("demand_fraction_early_morning", 0.2759, "1",
                                   "published: highest monthly share of daily demand, 12am-7am");
    const double f_day = b.input("demand_fraction_daytime", 0.5149, "1",
                                 "published: highest monthly share of daily demand, 7am-7pm");
    const double f_evening = b.input("demand_fraction_evening", 0.2344, "1",
                                     "published: highest monthly share of daily demand, 7pm-12am");
    b.derived("period_rhs_early_morning_mwh", period_rhs(need, f_early), "MWh",
              "recomputed: annual need x demand fraction", 7.069e6);
    b.derived("period_rhs_daytime_mwh", period_rhs(need, f_day), "MWh",
              "recomputed: annual need x demand fraction", 13.192e6);
    b.derived("period_rhs_evening_mwh", period_rhs(need, f_evening), "MWh",
              "recomputed: annual need x demand fraction", 6.006e6);

    // Nuclear.
    const double smr_mw = b.input("smr_capacity_mw", 300.0, "MW", "published: smallest modular reactor");
    b.derived("nuclear_min_output_mwh", smr_mw * 8760.0, "MWh",
              "recomputed: one reactor at full capacity for 8760 h", 2'628'000.0);
    const double mining = b.input("uranium_mining_g_per_mwh", 34'000.0, "gCO2/MWh", "published: uranium mining");
    const double own_use = b.input("nuclear_own_use", 0.2, "1", "published: 0.1-0.3 kWh used per kWh, midpoint");
    const double construction = b.input("nuclear_construction_g_per_mwh", 8'200.0, "gCO2/MWh",
                                        "published: plant construction and maintenance");
    b.derived("nuclear_model_emissions_g_per_mwh", mining * (1.0 + own_use) + construction, "gCO2/MWh",
              "recomputed: mining x (1 + own use) + construction", 49'000.0);

    // Per-source coefficients.
    b.input("lcoe_wind", 37.80, "USD/MWh", "published: levelized cost of energy, onshore wind, 2021");
    b.input("lcoe_solar", 58.62, "USD/MWh", "published: levelized cost of energy, hybrid solar, 2021");
    b.input("lcoe_nuclear", 96.2, "USD/MWh", "published: levelized cost of energy, nuclear, 2021");
    b.input("lcoe_geothermal", 39.61, "USD/MWh", "published: levelized cost of energy, geothermal, 2021");
    b.input("lcoe_gas_combined_cycle", 37.50, "USD/MWh", "published: levelized cost of energy, combined cycle, 2021");
    b.input("lcoe_hydro", 63.9, "USD/MWh", "published: levelized cost of energy, hydroelectric, 2021");
    b.input("capital_wind", 27.45, "USD/MWh", "published: levelized capital cost, onshore wind");
    b.input("capital_solar", 39.12, "USD/MWh", "published: levelized capital cost, hybrid solar");
    b.input("capital_nuclear", 70.8, "USD/MWh", "published: capital cost per additional nuclear MWh");
    b.input("capital_geothermal", 21.8, "USD/MWh",
            "as printed in the geothermal budget row; no published table value");
    b.input("om_wind", 10.35, "USD/MWh", "published: levelized O&M and transmission, onshore wind");
    b.input("om_solar", 19.51, "USD/MWh", "published: levelized O&M and transmission, hybrid solar");
    b.input("emissions_wind_g_per_mwh", 4'970.0, "gCO2/MWh", "published: life-cycle emissions, onshore wind");
    b.input("emissions_solar_g_per_mwh", 45'000.0, "gCO2/MWh", "published: life-cycle emissions, silicon PV");
    b.input("emissions_nuclear_g_per_mwh", 42'200.0, "gCO2/MWh", "published: emissions table, nuclear");
    b.input("emissions_geothermal_g_per_mwh", 38'000.0, "gCO2/MWh", "published: median geothermal emissions");
    b.input("emissions_gas_g_per_mwh", 490'000.0, "gCO2/MWh", "published: natural gas emissions");
    b.input("wind_fraction_early_morning", 0.3769, "1", "published: wind output share 12am-7am");
    b.input("wind_fraction_daytime", 0.3775, "1", "published: wind output share 7am-7pm");
    b.input("wind_fraction_evening", 0.2456, "1", "published: wind output share 7pm-12am");
    b.input("solar_fraction_early_morning", 0.0101, "1", "published: solar output share 12am-7am");
    b.input("solar_fraction_daytime", 0.9797, "1", "published: solar output share 7am-7pm");
    b.input("solar_fraction_evening", 0.0101, "1", "published: solar output share 7pm-12am");
    b.input("nuclear_fraction_early_morning", 0.29, "1", "published: constant output, 7 of 24 h");
    b.input("nuclear_fraction_daytime", 0.50, "1", "published: constant output, 12 of 24 h");
    b.input("nuclear_fraction_evening", 0.21, "1", "published: constant output, 5 of 24 h");
    b.input("geothermal_fraction_early_morning", 0.2916, "1", "published: 7 h x 4.167% per hour");
    b.input("geothermal_fraction_daytime", 0.5000, "1", "published: 12 h x 4.167% per hour");
    b.input("geothermal_fraction_evening", 0.2083, "1", "published: 5 h x 4.167% per hour");

    // Places where a printed model departs from the derived value.
    b.alternate("emissions_cap_g", 16'325e9, "emissions cap printed in the shared-space model");
    b.alternate("emissions_cap_g", 163'325e9, "emissions cap printed in the nuclear model");
    b.alternate("rooftop_production_mwh", 2'190'438.0, "rooftop offset printed in the shared-space model");
    b.alternate("rooftop_production_mwh", 10'279'088.0,
                "rooftop offset printed in the nuclear and geothermal models");
    b.alternate("wind_fraction_early_morning", 0.3760, "wind 12am-7am coefficient printed in the period models");
    b.alternate("geothermal_fraction_evening", 0.21, "geothermal 7pm-12am coefficient printed in the geothermal model");
    b.alternate("lcoe_wind", 73.7, "wind objective coefficient printed in the geothermal model");
    b.alternate("lcoe_solar", 55.8, "solar objective coefficient printed in the geothermal model");
    b.alternate("emissions_nuclear_g_per_mwh", 49'000.0, "nuclear emissions coefficient used by the nuclear model");
    return b.finish();
}

}  // namespace gridmix::derivation
