#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gridmix/analysis.hpp"
#include "gridmix/derivation.hpp"
#include "gridmix/lp.hpp"
#include "gridmix/model.hpp"

namespace gridmix::io {

enum class Format { Text, Json, Csv };

/// "text", "json" or "csv"; throws model::ConfigError otherwise.
Format parse_format(std::string_view s);

/// Rounds to `decimals` places and groups the integer part: 968476030.2 -> "968,476,030".
std::string group_thousands(double v, int decimals = 0);

/// Shortest representation that parses back to the same double.
std::string full_precision(double v);

/// RFC-4180 field: quoted when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view s);

struct CatalogEntry {
    std::string name;
    model::CoefficientVariant variant{model::CoefficientVariant::AsPrinted};
    model::ObjectiveMode objective{model::ObjectiveMode::Lcoe};
    std::string description;
    std::string origin;  // "builtin" or a file path
};

std::string render_catalog(const std::vector<CatalogEntry>& entries, Format f);

struct OracleCheck {
    lp::Status status{lp::Status::Optimal};
    double objective{0.0};
    std::size_t vertices{0};
    bool agrees{false};
};

std::string render_solution(const model::Scenario& s, const lp::LinearProgram& prog, const lp::Solution& sol,
                            const std::optional<OracleCheck>& oracle, Format f);

std::string render_sweep_csv(const model::Scenario& s, std::string_view parameter,
                             const std::vector<analysis::SweepPoint>& points);

std::string render_audit(const std::vector<analysis::AuditRow>& rows, bool strict, Format f);

std::string render_provenance(const derivation::DerivedConstants& dc, Format f);

std::string render_corners(const analysis::CornerReport& rep, Format f);

}  // namespace gridmix::io
