#pragma once

#include <cmath>
#include <random>
#include <string>

#include "gridmix/lp.hpp"

namespace gridmix::testing {

// Random dense LP: n in [1, max_n], m in [1, max_m], coefficients in [-10, 10]
// and right-hand sides in [-100, 100], both rounded to one decimal so that
// degenerate and parallel rows show up regularly.
inline lp::LinearProgram random_lp(std::mt19937_64& rng, std::size_t max_n = 4, std::size_t max_m = 8) {
    std::uniform_int_distribution<std::size_t> n_dist(1, max_n), m_dist(1, max_m);
    std::uniform_real_distribution<double> coef(-10.0, 10.0), rhs(-100.0, 100.0), unit(0.0, 1.0);
    auto round1 = [](double v) { return std::round(v * 10.0) / 10.0; };

    const std::size_t n = n_dist(rng), m = m_dist(rng);
    std::vector<std::string> names;
    for (std::size_t j = 0; j < n; ++j) names.push_back("x" + std::to_string(j + 1));
    auto prog = lp::LinearProgram::with_variables(names, unit(rng) < 0.5 ? lp::Sense::Minimize : lp::Sense::Maximize);
    for (std::size_t j = 0; j < n; ++j) prog.objective[j] = round1(coef(rng));
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> a(n);
        bool nonzero = false;
        while (!nonzero) {
            for (auto& v : a) {
                v = unit(rng) < 0.2 ? 0.0 : round1(coef(rng));
                nonzero = nonzero || v != 0.0;
            }
        }
        const double r = unit(rng);
        const lp::Relation rel = r < 0.45 ? lp::Relation::LessEqual
                                 : r < 0.9 ? lp::Relation::GreaterEqual
                                           : lp::Relation::Equal;
        prog.add(std::move(a), rel, round1(rhs(rng)), "r" + std::to_string(i + 1));
    }
    return prog;
}

}  // namespace gridmix::testing
