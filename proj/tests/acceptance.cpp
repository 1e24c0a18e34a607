// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include <fmt/format.h>

#include "gridmix/analysis.hpp"
#include "gridmix/derivation.hpp"
#include "gridmix/model.hpp"
#include "random_lp.hpp"

using namespace gridmix;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass{true};
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Exact up to floating-point round-off in MWh.
bool same_mwh(double a, double b) { return std::abs(a - b) <= 1e-6; }

model::Scenario builtin(const char* name, model::CoefficientVariant v = model::CoefficientVariant::AsPrinted) {
    auto s = model::find_builtin(name, v);
    if (!s) throw std::runtime_error(std::string("missing catalog entry ") + name);
    return *s;
}

const lp::Constraint* row(const lp::LinearProgram& p, const std::string& label) {
    for (const auto& c : p.constraints)
        if (c.label == label) return &c;
    return nullptr;
}

Outcome c1_flat_demand() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto sol = lp::solve(model::compile(builtin("m1_flat_demand")));
    const double ms = ms_since(t0);
    o.require(sol.optimal(), "not optimal");
    if (!sol.optimal()) return o;
    o.require(same_mwh(sol.values[0], 25'621'059.0) && same_mwh(sol.values[1], 0.0),
              fmt::format("point ({}, {})", sol.values[0], sol.values[1]));
    o.require(std::abs(sol.objective_value - 968'476'030.0) <= 1000.0,
              fmt::format("objective {:.2f}", sol.objective_value));
    o.require(ms < 10.0, fmt::format("{:.3f} ms", ms));
    o.detail = o.pass ? fmt::format("x = (25,621,059, 0), objective {:.0f}, {:.3f} ms", sol.objective_value, ms)
                      : o.detail;
    return o;
}

Outcome c2_cost_only() {
    Outcome o;
    const auto s = builtin("m0_cost_only");
    const auto t0 = Clock::now();
    const auto sol = lp::solve(model::compile(s));
    const double ms = ms_since(t0);
    o.require(sol.optimal(), "not optimal");
    if (!sol.optimal()) return o;
    double total = 0.0, on_cheapest = 0.0;
    for (std::size_t j = 0; j < s.sources.size(); ++j) {
        total += sol.values[j];
        if (s.sources[j].lcoe == 37.50) on_cheapest += sol.values[j];
    }
    o.require(total > 0.0 && on_cheapest == total, fmt::format("{} of {} MWh on the 37.50 source", on_cheapest, total));
    o.require(ms < 10.0, fmt::format("{:.3f} ms", ms));
    if (o.pass) o.detail = fmt::format("100% of {:.0f} MWh on the 37.50 USD/MWh source, {:.3f} ms", total, ms);
    return o;
}

Outcome c3_period_demand(const analysis::ReproductionReport& audit) {
    Outcome o;
    const auto p = model::compile(builtin("m2_period_demand"));
    const auto sol = lp::solve(p);
    o.require(sol.optimal(), "not optimal");
    if (!sol.optimal()) return o;
    o.require(lp::check_feasible(p, sol.values, 1e-6).feasible, "solution infeasible");
    o.require(rel(sol.values[1], 344'900.0) < 1e-9, fmt::format("solar {}", sol.values[1]));
    const bool roof_binding = std::find(sol.binding.begin(), sol.binding.end(), "roof_solar") != sol.binding.end();
    o.require(roof_binding, "rooftop row not binding");
    const double d = (sol.objective_value - 1'309'379'704.0) / 1'309'379'704.0;
    o.require(std::abs(d) <= 5e-3, fmt::format("delta {:+.4f}%", 100 * d));
    const auto* r = audit.find(7);
    o.require(r && r->delta != 0.0 && !r->notes.empty(), "delta missing from the audit ledger");
    if (o.pass) o.detail = fmt::format("solar 344,900 (binding), objective {:.0f} ({:+.3f}%), in audit", sol.objective_value, 100 * d);
    return o;
}

Outcome c4_shared_space() {
    Outcome o;
    const auto m2 = lp::solve(model::compile(builtin("m2_period_demand")));
    const auto m3 = lp::solve(model::compile(builtin("m3_shared_space")));
    o.require(m2.optimal() && m3.optimal(), "not optimal");
    if (!o.pass) return o;
    const double d = (m3.objective_value - 1'168'449'731.0) / 1'168'449'731.0;
    o.require(std::abs(d) <= 1e-2, fmt::format("delta {:+.4f}%", 100 * d));
    o.require(m3.objective_value < m2.objective_value, "no improvement over m2");
    if (o.pass)
        o.detail = fmt::format("objective {:.0f} ({:+.3f}%), {:.0f} below m2", m3.objective_value, 100 * d,
                               m2.objective_value - m3.objective_value);
    return o;
}

Outcome c5_nuclear() {
    Outcome o;
    auto relaxed = builtin("m4_nuclear");
    relaxed.sources[2].min_annual_output = 0.0;
    const auto a = lp::solve(model::compile(relaxed));
    o.require(a.optimal() && same_mwh(a.values[2], 0.0), "nuclear used under the default land cap");

    const auto tight = builtin("m4_tight_space");
    const auto p = model::compile(tight);
    const auto b = lp::solve(p);
    o.require(b.optimal(), "tight-space model not optimal");
    if (!b.optimal()) return o;
    o.require(b.values[2] > 0.0, "no nuclear under the tight land cap");
    const auto* land = row(p, "land");
    o.require(land != nullptr, "no land row");
    double usage = 0.0;
    if (land) {
        usage = lp::dot(land->coefficients, b.values);
        o.require(usage <= land->rhs * (1.0 + 1e-9), "land row violated");
    }

    const auto values = analysis::linspace(205'898'600.0, 50'589'860'000.0, 20);
    const auto pts = analysis::sweep(builtin("m4_nuclear"), "land_ft2", values);
    bool monotone = pts.size() == 20;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!pts[i].solution.optimal()) monotone = false;
        else if (i > 0 && pts[i].solution.values[2] > pts[i - 1].solution.values[2] * (1.0 + 1e-9) + 1e-6)
            monotone = false;
    }
    o.require(monotone, "nuclear production not nonincreasing across the sweep");
    if (o.pass)
        o.detail = fmt::format("x3 = 0 when unconstrained; tight cap x3 = {:.0f}, land row {:.0f} <= {:.0f}; "
                               "20-point sweep nonincreasing",
                               b.values[2], usage, land->rhs);
    return o;
}

Outcome c6_geothermal(const analysis::ReproductionReport& audit) {
    Outcome o;
    const auto sol = lp::solve(model::compile(builtin("m5_geothermal")));
    o.require(sol.optimal(), "not optimal");
    if (!sol.optimal()) return o;
    o.require(same_mwh(sol.values[1], 0.0), fmt::format("solar {}", sol.values[1]));
    o.require(sol.values[2] > sol.values[0], "geothermal does not exceed wind");
    const auto* r = audit.find(10);
    o.require(r && r->classification == analysis::Classification::Ledger && !r->printed_point_is_vertex,
              "printed point not ledger-flagged");
    if (o.pass)
        o.detail = fmt::format("x = ({:.0f}, 0, {:.0f}); printed point flagged in the audit", sol.values[0],
                               sol.values[2]);
    return o;
}

Outcome c7_corner_points() {
    Outcome o;
    const auto p = model::compile(analysis::corner_point_scenario());
    const auto rep = analysis::corner_report(p, {{"om", {10.35, 19.51}}, {"lcoe", {37.80, 58.62}}});
    o.require(rep.argmin.size() == 2, "no vertices");
    if (!o.pass) return o;
    const auto& om = rep.rows[rep.argmin[0]];
    const auto& lcoe = rep.rows[rep.argmin[1]];
    const bool is_b = std::abs(om.point[0] - 24'862'479.0) < 1.0 && std::abs(om.point[1] - 3'900'512.0) < 1.0;
    o.require(is_b, fmt::format("O&M argmin ({:.0f}, {:.0f})", om.point[0], om.point[1]));
    o.require(rep.argmin[0] == rep.argmin[1], "objectives select different vertices");
    const double d_om = rel(om.values[0], 333'464'655.0), d_lcoe = rel(lcoe.values[1], 1'168'449'731.0);
    o.require(d_om <= 1e-3, fmt::format("O&M delta {:.4f}%", 100 * d_om));
    o.require(d_lcoe <= 1e-3, fmt::format("LCOE delta {:.4f}%", 100 * d_lcoe));
    if (o.pass)
        o.detail = fmt::format("B = (24,862,479, 3,900,512) minimizes both; O&M {:.0f} ({:.3f}%), LCOE {:.0f} ({:.4f}%)",
                               om.values[0], 100 * d_om, lcoe.values[1], 100 * d_lcoe);
    return o;
}

Outcome c8_min_emissions() {
    Outcome o;
    for (auto v : {model::CoefficientVariant::AsPrinted, model::CoefficientVariant::TableDerived}) {
        const auto sol = lp::solve(model::compile(builtin("b1_min_emissions", v)));
        o.require(sol.optimal() && same_mwh(sol.values[1], 0.0),
                  fmt::format("{}: solar used", model::to_string(v)));
    }
    if (o.pass) o.detail = "x2 = 0 in both coefficient variants";
    return o;
}

Outcome c9_derivation() {
    Outcome o;
    const auto dc = derivation::derive_all();
    const std::pair<const char*, double> checks[] = {
        {"annual_need_mwh", 25'621'059.0},
        {"land_budget_ft2", 50'589'860'000.0},
        {"wind_production_bound_mwh", 47'475'469.0},
        {"rooftop_production_mwh", 344'900.0},
        {"period_rhs_early_morning_mwh", 7.069e6},
        {"period_rhs_daytime_mwh", 13.192e6},
        {"period_rhs_evening_mwh", 6.006e6},
        {"baseline_emissions_g", 17.83e12},
    };
    double worst = 0.0;
    for (const auto& [name, printed] : checks) {
        const double d = rel(dc.value(name), printed);
        worst = std::max(worst, d);
        o.require(d <= 5e-3, fmt::format("{} off by {:.3f}%", name, 100 * d));
    }
    const bool cap_listed = std::any_of(dc.deltas.begin(), dc.deltas.end(), [](const derivation::Delta& d) {
        return d.name == "emissions_cap_g" && d.printed == 3.578e12 && std::abs(d.derived - 3.565e12) < 1e9;
    });
    o.require(cap_listed, "emissions-cap delta missing");
    if (o.pass)
        o.detail = fmt::format("8 constants within {:.3f}%; emissions cap 3.565e12 vs 3.578e12 listed", 100 * worst);
    return o;
}

Outcome c10_oracle(Clock::time_point suite_start) {
    Outcome o;
    analysis::VertexOptions wide;
    wide.max_vars = 6;  // m0 has six sources
    auto agree = [](const lp::Solution& s, const analysis::OracleResult& r) {
        return s.status == r.status &&
               (!s.optimal() || std::abs(s.objective_value - r.objective) <= 1e-6 * std::max(1.0, std::abs(r.objective)));
    };
    std::size_t catalog = 0;
    for (const auto& s : model::builtin_scenarios()) {
        const auto p = model::compile(s);
        ++catalog;
        if (!agree(lp::solve(p), analysis::oracle_solve(p, wide)))
            o.require(false, fmt::format("{} ({})", s.name, model::to_string(s.variant)));
    }
    std::mt19937_64 rng(20240607);
    std::size_t mismatches = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto p = testing::random_lp(rng);
        if (!agree(lp::solve(p), analysis::oracle_solve(p))) ++mismatches;
    }
    o.require(mismatches == 0, fmt::format("{} fuzz mismatches", mismatches));
    const double seconds = ms_since(suite_start) / 1000.0;
    o.require(seconds < 60.0, fmt::format("suite took {:.1f} s", seconds));
    if (o.pass)
        o.detail = fmt::format("{} catalog scenarios and 1000 fuzzed LPs agree; suite {:.2f} s", catalog, seconds);
    return o;
}

}  // namespace

int main() {
    const auto start = Clock::now();
    const auto audit = analysis::reproduce_paper();

    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"m1 flat demand", c1_flat_demand},
        {"m0 cost only", c2_cost_only},
        {"m2 period demand", [&] { return c3_period_demand(audit); }},
        {"m3 shared space", c4_shared_space},
        {"m4 nuclear and land sweep", c5_nuclear},
        {"m5 geothermal structure", [&] { return c6_geothermal(audit); }},
        {"corner points", c7_corner_points},
        {"emissions objective", c8_min_emissions},
        {"derivation regression", c9_derivation},
        {"oracle equivalence", [&] { return c10_oracle(start); }},
    };

    int failures = 0, n = 0;
    for (const auto& [name, fn] : criteria) {
        ++n;
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s  %2d  %-26s %s\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str());
    }
    std::printf("%d/%d criteria passed\n", n - failures, n);
    return failures == 0 ? 0 : 1;
}
