#include <string>

#include "gridmix/analysis.hpp"

namespace gridmix::analysis {

bool is_sweep_parameter(std::string_view name) noexcept {
    if (name == "annual_need_mwh") return true;
    for (auto cap : model::kCapNames)
        if (name == cap) return true;
    return false;
}

std::vector<double> linspace(double from, double to, std::size_t steps) {
    if (steps == 0) return {};
    if (steps == 1) return {from};
    std::vector<double> v(steps);
    const double h = (to - from) / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) v[i] = from + h * static_cast<double>(i);
    v.back() = to;
    return v;
}

model::Scenario with_parameter(model::Scenario s, std::string_view parameter, double value) {
    if (parameter == "annual_need_mwh")
        s.annual_need = value;
    else
        model::cap_by_name(s.caps, parameter) = value;
    return s;
}

namespace {

SweepPoint solve_at(const model::Scenario& s, std::string_view parameter, double value,
                    const lp::SolverOptions& opts) {
    return {value, lp::solve(model::compile(with_parameter(s, parameter, value)), opts)};
}

void check_parameter(const model::Scenario& s, std::string_view parameter) {
    if (!is_sweep_parameter(parameter))
        throw model::ConfigError("unknown sweep parameter '" + std::string(parameter) + "'");
    if (parameter != "annual_need_mwh") {
        model::Caps caps = s.caps;
        if (!model::cap_by_name(caps, parameter))
            throw model::ConfigError("scenario '" + s.name + "' has no cap " + std::string(parameter));
    }
}

}  // namespace

std::vector<SweepPoint> sweep_serial(const model::Scenario& s, std::string_view parameter,
                                     const std::vector<double>& values, const lp::SolverOptions& opts) {
    check_parameter(s, parameter);
    std::vector<SweepPoint> out;
    out.reserve(values.size());
    for (double v : values) out.push_back(solve_at(s, parameter, v, opts));
    return out;
}

std::vector<SweepPoint> sweep(const model::Scenario& s, std::string_view parameter,
                              const std::vector<double>& values, const lp::SolverOptions& opts) {
    check_parameter(s, parameter);
    // Invalid values throw from compile; validate them before entering the parallel region.
    for (double v : values) model::validate(with_parameter(s, parameter, v));

    std::vector<SweepPoint> out(values.size());
    const auto count = static_cast<long long>(values.size());
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = solve_at(s, parameter, values[k], opts);
    }
    return out;
}

}  // namespace gridmix::analysis
