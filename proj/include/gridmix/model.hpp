#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gridmix/lp.hpp"

namespace gridmix::model {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kPeriodCount = 3;

struct EnergySource {
    std::string name;
    double lcoe{0.0};               // USD/MWh, construction + O&M
    double capital_cost{0.0};       // USD/MWh, used by the budget row
    double om_cost{0.0};            // USD/MWh
    double emissions{0.0};          // gCO2/MWh
    double land_use{0.0};           // ft2/MWh
    double rooftop_allowance{0.0};  // MWh/yr exempt from the land budget
    std::vector<double> period_fractions;  // early morning, daytime, evening
    double min_annual_output{0.0};  // MWh/yr

    bool operator==(const EnergySource&) const = default;
};

struct DayPeriod {
    std::string name;
    int hours{0};
    double demand_fraction{0.0};

    bool operator==(const DayPeriod&) const = default;
};

enum class DemandMode { FlatAnnual, PerPeriod };
enum class SpaceMode { SeparateBounds, SharedLand };
enum class ObjectiveMode { Lcoe, OmOnly, Emissions };
enum class CoefficientVariant { AsPrinted, TableDerived };

std::string_view to_string(DemandMode m) noexcept;
std::string_view to_string(SpaceMode m) noexcept;
std::string_view to_string(ObjectiveMode m) noexcept;
std::string_view to_string(CoefficientVariant v) noexcept;

// Parsers accept the spellings produced by to_string; they throw ConfigError otherwise.
DemandMode parse_demand_mode(std::string_view s);
SpaceMode parse_space_mode(std::string_view s);
ObjectiveMode parse_objective_mode(std::string_view s);
CoefficientVariant parse_variant(std::string_view s);

/// Absent caps emit no row.
struct Caps {
    std::optional<double> emissions_g;
    std::optional<double> budget_usd;
    std::optional<double> land_ft2;
    std::optional<double> rooftop_mwh;

    bool operator==(const Caps&) const = default;
};

inline constexpr std::string_view kCapNames[] = {"emissions_g", "budget_usd", "land_ft2",
                                                 "rooftop_mwh"};

/// Reference to one of the caps by its file-format name; throws ConfigError.
std::optional<double>& cap_by_name(Caps& caps, std::string_view name);

struct Scenario {
    std::string name;
    std::string description;
    std::vector<EnergySource> sources;
    double annual_need{0.0};  // MWh/yr
    DemandMode demand_mode{DemandMode::FlatAnnual};
    std::vector<DayPeriod> periods;
    Caps caps;
    SpaceMode space_mode{SpaceMode::SeparateBounds};
    ObjectiveMode objective_mode{ObjectiveMode::Lcoe};
    CoefficientVariant variant{CoefficientVariant::AsPrinted};

    bool operator==(const Scenario&) const = default;

    /// Index of the named source, if present.
    std::optional<std::size_t> source_index(std::string_view source) const noexcept;
};

/// Throws ConfigError describing the first violated invariant.
void validate(const Scenario& s);

/// Builds the LP: one variable per source in declaration order.
lp::LinearProgram compile(const Scenario& s);

/// Built-in catalog in both coefficient variants, as-printed entries first.
std::vector<Scenario> builtin_scenarios();

std::optional<Scenario> find_builtin(std::string_view name,
                                     CoefficientVariant variant = CoefficientVariant::AsPrinted);

/// Names of the built-in scenarios in catalog order (each appears once).
std::vector<std::string> builtin_names();

struct SourceReport {
    std::string name;
    std::vector<double> period_production;  // MWh per day period
    double annual_production{0.0};
    double land_ft2{0.0};
    double emissions_g{0.0};
    double capital_usd{0.0};
    double objective{0.0};  // contribution under the scenario's objective
};

struct ScenarioReport {
    std::string scenario;
    CoefficientVariant variant{CoefficientVariant::AsPrinted};
    ObjectiveMode objective_mode{ObjectiveMode::Lcoe};
    lp::Status status{lp::Status::Optimal};
    std::vector<std::string> period_names;
    std::vector<SourceReport> sources;
    SourceReport total;
    std::vector<std::string> binding;
};

/// Per-source table rows for an optimal solution. Non-optimal solutions
/// produce a report carrying only the status.
ScenarioReport report(const Scenario& s, const lp::Solution& solution);

/// Same table rows for an arbitrary production vector.
ScenarioReport report_point(const Scenario& s, const std::vector<double>& values);

}  // namespace gridmix::model
