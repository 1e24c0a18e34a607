#include "gridmix/lp.hpp"

#include <algorithm>
#include <cmath>

namespace gridmix::lp {

void StandardForm::pivot(std::size_t row, std::size_t col) {
    const std::size_t width = cols + 1;
    double* prow = &cells[row * width];
    const double inv = 1.0 / prow[col];
    for (std::size_t c = 0; c < width; ++c) prow[c] *= inv;
    prow[col] = 1.0;
    for (std::size_t r = 0; r <= rows; ++r) {
        if (r == row) continue;
        double* target = &cells[r * width];
        const double factor = target[col];
        if (factor == 0.0) continue;
        for (std::size_t c = 0; c < width; ++c) target[c] -= factor * prow[c];
        target[col] = 0.0;
    }
    basis[row] = col;
}

StandardForm standardize(const LinearProgram& lp, bool equilibrate) {
    validate(lp);
    const std::size_t n = lp.var_count();
    const std::size_t m = lp.constraints.size();

    StandardForm t;
    t.rows = m;
    t.structural_count = n;
    t.shift = lp.lower_bounds;
    t.row_scale.assign(m, 1.0);
    t.row_flipped.assign(m, false);

    // Shift lower bounds into the rhs and orient every row so rhs >= 0.
    std::vector<Relation> rel(m);
    std::vector<std::vector<double>> a(m);
    std::vector<double> b(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& c = lp.constraints[i];
        a[i] = c.coefficients;
        b[i] = c.rhs - dot(c.coefficients, lp.lower_bounds);
        rel[i] = c.relation;
        if (b[i] < 0.0) {
            for (double& v : a[i]) v = -v;
            b[i] = -b[i];
            if (rel[i] == Relation::LessEqual)
                rel[i] = Relation::GreaterEqual;
            else if (rel[i] == Relation::GreaterEqual)
                rel[i] = Relation::LessEqual;
            t.row_flipped[i] = true;
        }
        if (equilibrate) {
            double s = 0.0;
            for (double v : a[i]) s = std::max(s, std::abs(v));
            for (double& v : a[i]) v /= s;
            b[i] /= s;
            t.row_scale[i] = s;
        }
        switch (rel[i]) {
            case Relation::LessEqual: ++t.slack_count; break;
            case Relation::GreaterEqual:
                ++t.surplus_count;
                ++t.artificial_count;
                break;
            case Relation::Equal: ++t.artificial_count; break;
        }
    }

    t.cols = n + t.slack_count + t.surplus_count + t.artificial_count;
    t.cells.assign((m + 1) * (t.cols + 1), 0.0);
    t.basis.assign(m, 0);
    t.kinds.assign(t.cols, ColumnKind::Structural);

    std::size_t next_logical = n;
    std::size_t next_artificial = n + t.slack_count + t.surplus_count;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t.at(i, j) = a[i][j];
        t.rhs(i) = b[i];
        switch (rel[i]) {
            case Relation::LessEqual:
                t.kinds[next_logical] = ColumnKind::Slack;
                t.at(i, next_logical) = 1.0;
                t.basis[i] = next_logical++;
                break;
            case Relation::GreaterEqual:
                t.kinds[next_logical] = ColumnKind::Surplus;
                t.at(i, next_logical++) = -1.0;
                [[fallthrough]];
            case Relation::Equal:
                t.kinds[next_artificial] = ColumnKind::Artificial;
                t.at(i, next_artificial) = 1.0;
                t.basis[i] = next_artificial++;
                break;
        }
    }
    return t;
}

}  // namespace gridmix::lp
