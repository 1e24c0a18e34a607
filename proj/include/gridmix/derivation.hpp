#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

/// Recomputes the right-hand sides used by the scenario catalog from raw published
/// inputs. Every function here is pure.
namespace gridmix::derivation {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Share of the state's consumption attributable to the city, after scaling each
/// reported city figure up by its coverage fraction.
double estimate_city_share(double city_elec_mwh, double elec_coverage, double city_gas_mwh,
                           double gas_coverage, double state_total_mwh);

double annual_need(double state_total_mwh, double adjusted_share, double non_clean_fraction);

struct MixEntry {
    double fraction;         // share of total consumption
    double grams_per_mwh;
};

double baseline_emissions(const std::vector<MixEntry>& mix, double total_mwh);

double emissions_cap(double baseline_grams, double reduction);

double land_budget(double state_area_ft2, double unoccupied_fraction, double dedication);

/// Whole MWh producible on `area_ft2` at `land_rate` ft²/MWh (floored).
double production_bound(double area_ft2, double land_rate);

double period_rhs(double annual_need_mwh, double demand_fraction);

struct Constant {
    std::string name;
    double value{0.0};
    std::string unit;
    std::string provenance;
    std::optional<double> printed;  // the published figure, when one exists

    /// Relative difference to the published figure (0 when none).
    double delta() const noexcept;
};

struct Delta {
    std::string name;
    double derived{0.0};
    double printed{0.0};
    double relative{0.0};
    std::string note;
};

struct DerivedConstants {
    std::vector<Constant> constants;
    std::vector<Delta> deltas;

    const Constant* find(std::string_view name) const noexcept;
    /// Throws std::out_of_range for an unknown name.
    double value(std::string_view name) const;
};

/// Relative delta above which a recomputed constant is listed in the delta table.
inline constexpr double kDeltaReportThreshold = 5e-4;

DerivedConstants derive_all();

}  // namespace gridmix::derivation
