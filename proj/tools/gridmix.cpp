// gridmix command-line interface.
//
// Exit codes: 0 success, 1 input error, 2 infeasible, 3 unbounded,
// 4 a verification step failed (oracle disagreement, audit failure,
// iteration limit).

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gridmix/analysis.hpp"
#include "gridmix/derivation.hpp"
#include "gridmix/lp.hpp"
#include "gridmix/model.hpp"
#include "gridmix/output.hpp"
#include "gridmix/scenario_io.hpp"

namespace {

using namespace gridmix;

constexpr int kExitInput = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUnbounded = 3;
constexpr int kExitCheckFailed = 4;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Entry {
    model::Scenario scenario;
    std::string origin;
};

std::vector<Entry> load_catalog() {
    std::vector<Entry> out;
    for (auto& s : model::builtin_scenarios()) out.push_back({std::move(s), "builtin"});
    if (const char* dir = std::getenv("GRIDMIX_CATALOG_DIR"); dir && *dir) {
        const std::filesystem::path p(dir);
        if (!std::filesystem::is_directory(p))
            throw InputError("GRIDMIX_CATALOG_DIR is not a directory: " + p.string());
        for (auto& s : io::load_catalog_dir(p)) out.push_back({std::move(s), p.string()});
    }
    return out;
}

std::optional<model::Scenario> from_catalog(const std::vector<Entry>& catalog, const std::string& name,
                                            const std::optional<model::CoefficientVariant>& variant) {
    const Entry* fallback = nullptr;
    for (const auto& e : catalog) {
        if (e.scenario.name != name) continue;
        if (variant) {
            if (e.scenario.variant == *variant) return e.scenario;
        } else if (e.scenario.variant == model::CoefficientVariant::AsPrinted) {
            return e.scenario;
        } else if (!fallback) {
            fallback = &e;
        }
    }
    if (fallback) return fallback->scenario;
    return std::nullopt;
}

bool catalog_has(const std::vector<Entry>& catalog, const std::string& name) {
    for (const auto& e : catalog)
        if (e.scenario.name == name) return true;
    return false;
}

struct ScenarioArgs {
    std::string ref;
    std::string variant;
    std::string base;
};

void add_scenario_args(CLI::App* cmd, ScenarioArgs& a, bool ref_required = true) {
    auto* ref = cmd->add_option("scenario", a.ref, "catalog name or scenario file path");
    if (ref_required) ref->required();
    cmd->add_option("--variant", a.variant, "coefficient variant: as-printed or table-derived");
    cmd->add_option("--base", a.base, "catalog scenario the file is applied to key by key");
}

model::Scenario resolve(const ScenarioArgs& a) {
    const auto catalog = load_catalog();
    std::optional<model::CoefficientVariant> variant;
    if (!a.variant.empty()) variant = model::parse_variant(a.variant);

    if (catalog_has(catalog, a.ref)) {
        auto s = from_catalog(catalog, a.ref, variant);
        if (!s) throw InputError("scenario '" + a.ref + "' has no " + a.variant + " variant");
        return *s;
    }
    if (a.ref == "corner_points") return analysis::corner_point_scenario();

    const std::filesystem::path path(a.ref);
    if (!std::filesystem::exists(path))
        throw InputError("no catalog scenario or file named '" + a.ref + "'");
    if (a.base.empty()) return io::load_scenario_file(path);
    const auto base = from_catalog(catalog, a.base, variant);
    if (!base) throw InputError("unknown base scenario '" + a.base + "'");
    return io::load_scenario_file(path, &*base);
}

int status_exit(lp::Status s) {
    switch (s) {
        case lp::Status::Optimal: return 0;
        case lp::Status::Infeasible: return kExitInfeasible;
        case lp::Status::Unbounded: return kExitUnbounded;
        case lp::Status::IterationLimit: return kExitCheckFailed;
    }
    return kExitCheckFailed;
}

int cmd_list(const std::string& variant, const std::string& format) {
    std::optional<model::CoefficientVariant> filter;
    if (!variant.empty()) filter = model::parse_variant(variant);
    const auto fmt = io::parse_format(format);
    std::vector<io::CatalogEntry> entries;
    for (const auto& e : load_catalog()) {
        if (filter && e.scenario.variant != *filter) continue;
        entries.push_back(
            {e.scenario.name, e.scenario.variant, e.scenario.objective_mode, e.scenario.description, e.origin});
    }
    std::cout << io::render_catalog(entries, fmt);
    return 0;
}

int cmd_solve(const ScenarioArgs& a, const std::string& objective, bool oracle, const std::string& format) {
    const auto fmt = io::parse_format(format);
    model::Scenario s = resolve(a);
    if (!objective.empty()) s.objective_mode = model::parse_objective_mode(objective);
    const lp::LinearProgram prog = model::compile(s);
    const lp::Solution sol = lp::solve(prog);

    std::optional<io::OracleCheck> check;
    if (oracle) {
        const auto res = analysis::oracle_solve(prog);
        io::OracleCheck c;
        c.status = res.status;
        c.objective = res.objective;
        c.vertices = res.vertices.size();
        c.agrees = res.status == sol.status &&
                   (!sol.optimal() ||
                    std::abs(res.objective - sol.objective_value) <= 1e-6 * std::max(1.0, std::abs(res.objective)));
        check = c;
    }
    std::cout << io::render_solution(s, prog, sol, check, fmt);
    if (check && !check->agrees) {
        std::cerr << "error: simplex and vertex enumeration disagree\n";
        return kExitCheckFailed;
    }
    return status_exit(sol.status);
}

int cmd_sweep(const ScenarioArgs& a, const std::string& param, double from, double to, int steps) {
    if (!analysis::is_sweep_parameter(param)) throw InputError("unknown sweep parameter '" + param + "'");
    if (!(from <= to)) throw InputError("invalid range: --from must not exceed --to");
    if (steps < 1) throw InputError("--steps must be at least 1");
    const model::Scenario s = resolve(a);
    const auto values = analysis::linspace(from, to, static_cast<std::size_t>(steps));
    std::cout << io::render_sweep_csv(s, param, analysis::sweep(s, param, values));
    return 0;
}

int cmd_audit(const std::string& format, std::optional<int> table, bool strict) {
    const auto fmt = io::parse_format(format);
    const auto rep = analysis::reproduce_paper();
    std::vector<analysis::AuditRow> rows;
    for (const auto& r : rep.rows)
        if (!table || r.table == *table) rows.push_back(r);
    if (rows.empty()) throw InputError("no audit entry for table " + std::to_string(*table));
    std::cout << io::render_audit(rows, strict, fmt);
    for (const auto& r : rows)
        if (!r.passes(strict)) return kExitCheckFailed;
    return 0;
}

int cmd_derive(const std::string& format) {
    std::cout << io::render_provenance(derivation::derive_all(), io::parse_format(format));
    return 0;
}

int cmd_corners(const ScenarioArgs& a, const std::string& format) {
    const auto fmt = io::parse_format(format);
    const model::Scenario s = a.ref.empty() ? analysis::corner_point_scenario() : resolve(a);
    const lp::LinearProgram prog = model::compile(s);
    std::vector<analysis::NamedObjective> objectives{{"lcoe", {}}, {"om", {}}, {"emissions", {}}};
    for (const auto& src : s.sources) {
        objectives[0].coefficients.push_back(src.lcoe);
        objectives[1].coefficients.push_back(src.om_cost);
        objectives[2].coefficients.push_back(src.emissions);
    }
    std::cout << io::render_corners(analysis::corner_report(prog, objectives), fmt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Electricity generation mix planning by linear programming"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string list_variant;
    auto* list = app.add_subcommand("list", "list catalog scenarios");
    list->add_option("--variant", list_variant, "only show this coefficient variant");
    list->add_option("--format", format, "text, json or csv");

    ScenarioArgs solve_args;
    std::string objective;
    bool oracle = false;
    auto* solve = app.add_subcommand("solve", "solve one scenario and print the result tables");
    add_scenario_args(solve, solve_args);
    solve->add_option("--objective", objective, "override the objective: lcoe, om or emissions");
    solve->add_flag("--oracle", oracle, "also solve by vertex enumeration and require agreement");
    solve->add_option("--format", format, "text, json or csv");

    ScenarioArgs sweep_args;
    std::string param;
    double from = 0.0, to = 0.0;
    int steps = 0;
    auto* sweep = app.add_subcommand("sweep", "re-solve over a range of one parameter (CSV output)");
    add_scenario_args(sweep, sweep_args);
    sweep->add_option("--param", param, "emissions_g, budget_usd, land_ft2, rooftop_mwh or annual_need_mwh")
        ->required();
    sweep->add_option("--from", from, "first value")->required();
    sweep->add_option("--to", to, "last value")->required();
    sweep->add_option("--steps", steps, "number of values, endpoints included")->required();

    std::optional<int> table;
    bool strict = false;
    auto* audit = app.add_subcommand("audit", "compare solver results against the published tables");
    audit->add_option("--table", table, "only this table");
    audit->add_flag("--strict", strict, "also fail when a near row exceeds its tolerance");
    audit->add_option("--format", format, "text, json or csv");

    auto* derive = app.add_subcommand("derive", "print derived constants with provenance");
    derive->add_option("--format", format, "text, json or csv");

    ScenarioArgs corner_args;
    auto* corners = app.add_subcommand("corners", "enumerate vertices and evaluate cost and emissions objectives");
    add_scenario_args(corners, corner_args, false);
    corners->add_option("--format", format, "text, json or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*list) return cmd_list(list_variant, format);
        if (*solve) return cmd_solve(solve_args, objective, oracle, format);
        if (*sweep) return cmd_sweep(sweep_args, param, from, to, steps);
        if (*audit) return cmd_audit(format, table, strict);
        if (*derive) return cmd_derive(format);
        if (*corners) return cmd_corners(corner_args, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
