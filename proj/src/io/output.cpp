#include "gridmix/output.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "gridmix/scenario_io.hpp"

namespace gridmix::io {

namespace {

// Left-aligned first column, right-aligned rest.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    std::string str() const {
        std::vector<std::size_t> width(header_.size(), 0);
        auto measure = [&](const std::vector<std::string>& r) {
            for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
        };
        measure(header_);
        for (const auto& r : rows_) measure(r);
        std::string out;
        auto line = [&](const std::vector<std::string>& r) {
            std::string l;
            for (std::size_t i = 0; i < width.size(); ++i) {
                const std::string& cell = i < r.size() ? r[i] : std::string();
                if (i == 0)
                    l += fmt::format("{:<{}}", cell, width[i]);
                else
                    l += fmt::format("  {:>{}}", cell, width[i]);
            }
            while (!l.empty() && l.back() == ' ') l.pop_back();
            out += l + "\n";
        };
        line(header_);
        std::size_t total = 0;
        for (auto w : width) total += w + 2;
        out += std::string(total - 2, '-') + "\n";
        for (const auto& r : rows_) line(r);
        return out;
    }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    return out + "\r\n";
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string signed_percent(double v) {
    if (!std::isfinite(v)) return "n/a";
    return fmt::format("{:+.3f}%", 100.0 * v);
}

std::string objective_unit(model::ObjectiveMode m) {
    return m == model::ObjectiveMode::Emissions ? "g CO2" : "USD";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

Format parse_format(std::string_view s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw model::ConfigError("unknown format '" + std::string(s) + "' (expected text, json or csv)");
}

std::string group_thousands(double v, int decimals) {
    if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
    std::string s = fmt::format("{:.{}f}", v, decimals);
    if (s == "-0" || s.find_first_not_of("-0.") == std::string::npos) s.erase(0, s[0] == '-' ? 1 : 0);
    const bool negative = s[0] == '-';
    const std::size_t begin = negative ? 1 : 0;
    std::size_t end = s.find('.');
    if (end == std::string::npos) end = s.size();
    for (std::size_t i = end; i > begin + 3; i -= 3) s.insert(i - 3, ",");
    return s;
}

std::string full_precision(double v) { return fmt::format("{}", v); }

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render_catalog(const std::vector<CatalogEntry>& entries, Format f) {
    switch (f) {
        case Format::Json: {
            Json arr = Json::array();
            for (const auto& e : entries)
                arr.push_back({{"name", e.name},
                               {"variant", model::to_string(e.variant)},
                               {"objective_mode", model::to_string(e.objective)},
                               {"description", e.description},
                               {"origin", e.origin}});
            return dump(arr);
        }
        case Format::Csv: {
            std::string out = csv_line({"name", "variant", "objective_mode", "description", "origin"});
            for (const auto& e : entries)
                out += csv_line({e.name, std::string(model::to_string(e.variant)),
                                 std::string(model::to_string(e.objective)), e.description, e.origin});
            return out;
        }
        case Format::Text: break;
    }
    TextTable t({"name", "variant", "objective", "description"});
    for (const auto& e : entries)
        t.add({e.name, std::string(model::to_string(e.variant)), std::string(model::to_string(e.objective)),
               e.description});
    return t.str();
}

std::string render_solution(const model::Scenario& s, const lp::LinearProgram& prog, const lp::Solution& sol,
                            const std::optional<OracleCheck>& oracle, Format f) {
    const model::ScenarioReport rep = model::report(s, sol);
    const std::string unit = objective_unit(s.objective_mode);

    if (f == Format::Json) {
        Json doc;
        doc["scenario"] = s.name;
        doc["variant"] = model::to_string(s.variant);
        doc["objective_mode"] = model::to_string(s.objective_mode);
        doc["status"] = lp::to_string(sol.status);
        doc["iterations"] = sol.iterations;
        if (sol.optimal()) {
            doc["objective"] = sol.objective_value;
            doc["objective_unit"] = unit;
            Json values = Json::object();
            for (std::size_t j = 0; j < prog.names.size(); ++j) values[prog.names[j]] = sol.values[j];
            doc["values"] = values;
            Json sources = Json::array();
            auto source_json = [&](const model::SourceReport& r) {
                Json periods = Json::object();
                for (std::size_t p = 0; p < rep.period_names.size() && p < r.period_production.size(); ++p)
                    periods[rep.period_names[p]] = r.period_production[p];
                return Json{{"name", r.name},         {"period_production_mwh", periods},
                            {"annual_mwh", r.annual_production}, {"land_ft2", r.land_ft2},
                            {"emissions_g", r.emissions_g},      {"capital_usd", r.capital_usd},
                            {"objective", r.objective}};
            };
            for (const auto& r : rep.sources) sources.push_back(source_json(r));
            doc["sources"] = sources;
            doc["total"] = source_json(rep.total);
            Json rows = Json::array();
            for (std::size_t i = 0; i < prog.constraints.size(); ++i) {
                const auto& c = prog.constraints[i];
                rows.push_back({{"label", c.label},
                                {"relation", lp::to_string(c.relation)},
                                {"rhs", c.rhs},
                                {"activity", sol.activities[i]},
                                {"slack", sol.slacks[i]}});
            }
            doc["constraints"] = rows;
            doc["binding"] = sol.binding;
        }
        if (oracle) {
            doc["oracle"] = {{"status", lp::to_string(oracle->status)},
                             {"objective", oracle->objective},
                             {"vertices", oracle->vertices},
                             {"agrees", oracle->agrees}};
        }
        return dump(doc);
    }

    if (f == Format::Csv) {
        std::string out;
        std::vector<std::string> header{"source"};
        for (const auto& p : rep.period_names) header.push_back(p + "_mwh");
        for (const char* h : {"annual_mwh", "land_ft2", "emissions_g", "capital_usd", "objective"}) header.push_back(h);
        out += csv_line(header);
        if (!sol.optimal()) return out;
        auto row = [&](const model::SourceReport& r) {
            std::vector<std::string> fields{r.name};
            for (std::size_t p = 0; p < rep.period_names.size(); ++p)
                fields.push_back(full_precision(p < r.period_production.size() ? r.period_production[p] : 0.0));
            for (double v : {r.annual_production, r.land_ft2, r.emissions_g, r.capital_usd, r.objective})
                fields.push_back(full_precision(v));
            out += csv_line(fields);
        };
        for (const auto& r : rep.sources) row(r);
        row(rep.total);
        return out;
    }

    std::string out;
    out += fmt::format("scenario   {}\n", s.name);
    out += fmt::format("variant    {}\n", model::to_string(s.variant));
    out += fmt::format("objective  {}\n", model::to_string(s.objective_mode));
    out += fmt::format("status     {}\n", lp::to_string(sol.status));
    if (!sol.optimal()) {
        if (oracle) out += fmt::format("oracle     {}\n", lp::to_string(oracle->status));
        return out;
    }
    out += "\n";
    std::vector<std::string> header{""};
    for (const auto& r : rep.sources) header.push_back(r.name);
    header.push_back("total");
    TextTable t(header);
    auto add_row = [&](const std::string& label, auto get) {
        std::vector<std::string> cells{label};
        for (const auto& r : rep.sources) cells.push_back(group_thousands(get(r)));
        cells.push_back(group_thousands(get(rep.total)));
        t.add(cells);
    };
    for (std::size_t p = 0; p < rep.period_names.size(); ++p)
        add_row(rep.period_names[p] + " (MWh)", [p](const model::SourceReport& r) {
            return p < r.period_production.size() ? r.period_production[p] : 0.0;
        });
    add_row("annual (MWh)", [](const model::SourceReport& r) { return r.annual_production; });
    add_row("land (ft2)", [](const model::SourceReport& r) { return r.land_ft2; });
    add_row("emissions (g CO2)", [](const model::SourceReport& r) { return r.emissions_g; });
    add_row("capital (USD)", [](const model::SourceReport& r) { return r.capital_usd; });
    add_row("objective (" + unit + ")", [](const model::SourceReport& r) { return r.objective; });
    out += t.str();
    out += fmt::format("\nobjective value: {} {}\n", group_thousands(sol.objective_value), unit);
    out += fmt::format("binding: {}\n", sol.binding.empty() ? "none" : join(sol.binding, ", "));

    out += "\n";
    TextTable rows({"constraint", "relation", "rhs", "activity", "slack"});
    for (std::size_t i = 0; i < prog.constraints.size(); ++i) {
        const auto& c = prog.constraints[i];
        rows.add({c.label, std::string(lp::to_string(c.relation)), group_thousands(c.rhs),
                  group_thousands(sol.activities[i]), group_thousands(sol.slacks[i])});
    }
    out += rows.str();
    if (oracle)
        out += fmt::format("\noracle: {} over {} vertices, objective {} ({})\n", lp::to_string(oracle->status),
                           oracle->vertices, group_thousands(oracle->objective),
                           oracle->agrees ? "agrees" : "DISAGREES");
    return out;
}

std::string render_sweep_csv(const model::Scenario& s, std::string_view parameter,
                             const std::vector<analysis::SweepPoint>& points) {
    std::vector<std::string> header{std::string(parameter), "status", "objective"};
    for (const auto& src : s.sources) header.push_back(src.name + "_mwh");
    std::string out = csv_line(header);
    for (const auto& p : points) {
        std::vector<std::string> fields{full_precision(p.value), std::string(lp::to_string(p.solution.status))};
        const bool ok = p.solution.optimal();
        fields.push_back(ok ? full_precision(p.solution.objective_value) : "");
        for (std::size_t j = 0; j < s.sources.size(); ++j)
            fields.push_back(ok ? full_precision(p.solution.values[j]) : "");
        out += csv_line(fields);
    }
    return out;
}

std::string render_audit(const std::vector<analysis::AuditRow>& rows, bool strict, Format f) {
    auto point_text = [](const std::vector<double>& pt) {
        std::vector<std::string> parts;
        for (double v : pt) parts.push_back(group_thousands(v));
        return "(" + join(parts, ", ") + ")";
    };

    if (f == Format::Json) {
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json j{{"table", r.table},
                   {"title", r.title},
                   {"scenario", r.scenario},
                   {"objective_mode", r.objective},
                   {"variables", r.variables},
                   {"printed_point", r.printed_point},
                   {"printed_objective", r.printed_objective},
                   {"printed_point_feasible", r.printed_point_feasible},
                   {"printed_point_is_vertex", r.printed_point_is_vertex},
                   {"solver_status", lp::to_string(r.solver_status)},
                   {"solver_point", r.solver_point},
                   {"solver_objective", r.solver_objective},
                   {"table_derived_objective",
                    r.table_derived_objective ? Json(*r.table_derived_objective) : Json(nullptr)},
                   {"oracle_objective", r.oracle_objective},
                   {"oracle_agrees", r.oracle_agrees},
                   {"delta", std::isfinite(r.delta) ? Json(r.delta) : Json(nullptr)},
                   {"classification", analysis::to_string(r.classification)},
                   {"expected", analysis::to_string(r.expected)},
                   {"tolerance", r.tolerance},
                   {"passes", r.passes(strict)},
                   {"notes", r.notes}};
            arr.push_back(std::move(j));
        }
        return dump(Json{{"strict", strict}, {"rows", arr}});
    }

    if (f == Format::Csv) {
        std::string out = csv_line({"table", "title", "scenario", "objective_mode", "printed_objective",
                                    "solver_status", "solver_objective", "table_derived_objective", "delta",
                                    "classification", "expected", "oracle_agrees", "printed_point_feasible",
                                    "printed_point_is_vertex", "passes", "notes"});
        for (const auto& r : rows)
            out += csv_line({std::to_string(r.table), r.title, r.scenario, r.objective,
                             full_precision(r.printed_objective), std::string(lp::to_string(r.solver_status)),
                             full_precision(r.solver_objective),
                             r.table_derived_objective ? full_precision(*r.table_derived_objective) : "",
                             std::isfinite(r.delta) ? full_precision(r.delta) : "",
                             std::string(analysis::to_string(r.classification)),
                             std::string(analysis::to_string(r.expected)), r.oracle_agrees ? "true" : "false",
                             r.printed_point_feasible ? "true" : "false", r.printed_point_is_vertex ? "true" : "false",
                             r.passes(strict) ? "true" : "false", join(r.notes, "; ")});
        return out;
    }

    TextTable t({"table", "scenario", "printed", "solver", "delta", "class", "expected", "oracle", "result"});
    for (const auto& r : rows)
        t.add({std::to_string(r.table), r.scenario, group_thousands(r.printed_objective),
               r.solver_status == lp::Status::Optimal ? group_thousands(r.solver_objective)
                                                      : std::string(lp::to_string(r.solver_status)),
               signed_percent(r.delta), std::string(analysis::to_string(r.classification)),
               std::string(analysis::to_string(r.expected)), r.oracle_agrees ? "agrees" : "DISAGREES",
               r.passes(strict) ? "pass" : "FAIL"});
    std::string out = t.str();
    for (const auto& r : rows) {
        out += fmt::format("\ntable {}: {}\n", r.table, r.title);
        out += fmt::format("  printed point {}{}\n", point_text(r.printed_point),
                           r.printed_point_feasible ? (r.printed_point_is_vertex ? ", feasible vertex" : ", feasible")
                                                    : ", infeasible");
        if (r.solver_status == lp::Status::Optimal)
            out += fmt::format("  solver point  {}\n", point_text(r.solver_point));
        if (r.table_derived_objective)
            out += fmt::format("  table-derived objective {}\n", group_thousands(*r.table_derived_objective));
        for (const auto& n : r.notes) out += "  - " + n + "\n";
    }
    return out;
}

std::string render_provenance(const derivation::DerivedConstants& dc, Format f) {
    if (f == Format::Json) {
        Json constants = Json::array();
        for (const auto& c : dc.constants)
            constants.push_back({{"name", c.name},
                                 {"value", c.value},
                                 {"unit", c.unit},
                                 {"printed", c.printed ? Json(*c.printed) : Json(nullptr)},
                                 {"delta", c.printed ? Json(c.delta()) : Json(nullptr)},
                                 {"provenance", c.provenance}});
        Json deltas = Json::array();
        for (const auto& d : dc.deltas)
            deltas.push_back({{"name", d.name},
                              {"derived", d.derived},
                              {"printed", d.printed},
                              {"relative", d.relative},
                              {"note", d.note}});
        return dump(Json{{"constants", constants}, {"deltas", deltas}});
    }

    if (f == Format::Csv) {
        std::string out = csv_line({"name", "value", "unit", "printed", "delta", "provenance"});
        for (const auto& c : dc.constants)
            out += csv_line({c.name, full_precision(c.value), c.unit, c.printed ? full_precision(*c.printed) : "",
                             c.printed ? full_precision(c.delta()) : "", c.provenance});
        return out;
    }

    TextTable t({"name", "value", "unit", "printed", "delta"});
    for (const auto& c : dc.constants) {
        const bool small = std::abs(c.value) < 1000.0;
        const int decimals = small ? 4 : 0;
        t.add({c.name, group_thousands(c.value, decimals), c.unit,
               c.printed ? group_thousands(*c.printed, decimals) : "", c.printed ? signed_percent(c.delta()) : ""});
    }
    std::string out = t.str();
    out += "\ndeltas above " + signed_percent(derivation::kDeltaReportThreshold).substr(1) + "\n";
    TextTable d({"name", "derived", "printed", "delta", "note"});
    for (const auto& x : dc.deltas) {
        const int decimals = std::abs(x.derived) < 1000.0 ? 4 : 0;
        d.add({x.name, group_thousands(x.derived, decimals), group_thousands(x.printed, decimals),
               signed_percent(x.relative), x.note});
    }
    return out + d.str();
}

std::string render_corners(const analysis::CornerReport& rep, Format f) {
    if (f == Format::Json) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < rep.rows.size(); ++i) {
            const auto& r = rep.rows[i];
            Json values = Json::object();
            for (std::size_t k = 0; k < rep.objectives.size(); ++k) values[rep.objectives[k]] = r.values[k];
            rows.push_back({{"point", r.point}, {"binding", r.binding}, {"objectives", values}});
        }
        Json argmin = Json::object();
        for (std::size_t k = 0; k < rep.objectives.size(); ++k) argmin[rep.objectives[k]] = rep.argmin[k];
        return dump(Json{{"variables", rep.variables},
                         {"vertices", rows},
                         {"argmin", argmin},
                         {"shared_argmin", rep.shared_argmin}});
    }

    std::vector<std::string> header{"vertex"};
    for (const auto& v : rep.variables) header.push_back(v);
    for (const auto& o : rep.objectives) header.push_back(o);
    header.push_back("binding");

    if (f == Format::Csv) {
        std::string out = csv_line(header);
        for (std::size_t i = 0; i < rep.rows.size(); ++i) {
            std::vector<std::string> fields{std::to_string(i)};
            for (double v : rep.rows[i].point) fields.push_back(full_precision(v));
            for (double v : rep.rows[i].values) fields.push_back(full_precision(v));
            fields.push_back(join(rep.rows[i].binding, " "));
            out += csv_line(fields);
        }
        return out;
    }

    TextTable t(header);
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        std::vector<std::string> cells{std::to_string(i)};
        for (double v : rep.rows[i].point) cells.push_back(group_thousands(v));
        for (double v : rep.rows[i].values) cells.push_back(group_thousands(v));
        cells.push_back(join(rep.rows[i].binding, ", "));
        t.add(cells);
    }
    std::string out = t.str() + "\n";
    for (std::size_t k = 0; k < rep.objectives.size(); ++k)
        out += fmt::format("minimum {}: vertex {}\n", rep.objectives[k], rep.argmin[k]);
    out += fmt::format("shared minimizer: {}\n", rep.shared_argmin ? "yes" : "no");
    return out;
}

}  // namespace gridmix::io
