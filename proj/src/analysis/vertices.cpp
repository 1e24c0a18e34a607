#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "gridmix/analysis.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gridmix::analysis {

namespace {

// One hyperplane a·x (rel) b, normalized so max|a| = 1.
struct Plane {
    std::vector<double> a;
    double b{0.0};
    lp::Relation rel{lp::Relation::LessEqual};
};

struct Geometry {
    std::vector<Plane> planes;       // constraints first, then x_j >= lb_j
    std::vector<std::string> labels;
    std::size_t n{0};
    std::size_t rows{0};
};

Geometry build_geometry(const lp::LinearProgram& lp) {
    Geometry g;
    g.n = lp.var_count();
    g.rows = lp.constraints.size();
    for (const auto& c : lp.constraints) {
        double s = 0.0;
        for (double v : c.coefficients) s = std::max(s, std::abs(v));
        Plane p{c.coefficients, c.rhs / s, c.relation};
        for (double& v : p.a) v /= s;
        g.planes.push_back(std::move(p));
        g.labels.push_back(c.label);
    }
    for (std::size_t j = 0; j < g.n; ++j) {
        Plane p{std::vector<double>(g.n, 0.0), lp.lower_bounds[j], lp::Relation::GreaterEqual};
        p.a[j] = 1.0;
        g.planes.push_back(std::move(p));
        g.labels.push_back("lb:" + (lp.names.empty() ? "x" + std::to_string(j) : lp.names[j]));
    }
    return g;
}

double inner(const std::vector<double>& a, const std::vector<double>& x) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * x[j];
    return s;
}

double plane_scale(const Plane& p, const std::vector<double>& x) {
    double mag = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) mag += std::abs(p.a[j] * x[j]);
    return std::max({1.0, std::abs(p.b), mag});
}

bool satisfies(const Plane& p, const std::vector<double>& x, double tol) {
    const double lhs = inner(p.a, x);
    const double slack = tol * plane_scale(p, x);
    switch (p.rel) {
        case lp::Relation::LessEqual: return lhs <= p.b + slack;
        case lp::Relation::GreaterEqual: return lhs >= p.b - slack;
        case lp::Relation::Equal: return std::abs(lhs - p.b) <= slack;
    }
    return false;
}

bool tight(const Plane& p, const std::vector<double>& x, double tol) {
    return std::abs(inner(p.a, x) - p.b) <= tol * plane_scale(p, x);
}

// Gaussian elimination with partial pivoting on a k x (k+1) augmented matrix.
std::optional<std::vector<double>> solve_square(std::vector<std::vector<double>> m, double singular_tol) {
    const std::size_t k = m.size();
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) < singular_tol) return std::nullopt;
        std::swap(m[piv], m[col]);
        for (std::size_t r = col + 1; r < k; ++r) {
            const double f = m[r][col] / m[col][col];
            if (f == 0.0) continue;
            for (std::size_t c = col; c <= k; ++c) m[r][c] -= f * m[col][c];
        }
    }
    std::vector<double> x(k, 0.0);
    for (std::size_t i = k; i-- > 0;) {
        double s = m[i][k];
        for (std::size_t c = i + 1; c < k; ++c) s -= m[i][c] * x[c];
        x[i] = s / m[i][i];
    }
    return x;
}

double determinant(std::vector<std::vector<double>> m) {
    const std::size_t k = m.size();
    double det = 1.0;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < k; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (m[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < k; ++r) {
            const double f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < k; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Lexicographic combination with the given rank.
std::vector<std::size_t> unrank(std::size_t rank, std::size_t n, std::size_t k) {
    std::vector<std::size_t> combo;
    combo.reserve(k);
    std::size_t next = 0;
    for (std::size_t slot = 0; slot < k; ++slot) {
        for (std::size_t v = next;; ++v) {
            const std::size_t block = binomial(n - v - 1, k - slot - 1);
            if (rank < block) {
                combo.push_back(v);
                next = v + 1;
                break;
            }
            rank -= block;
        }
    }
    return combo;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::optional<std::vector<double>> intersect(const Geometry& g, const std::vector<std::size_t>& subset,
                                             const VertexOptions& opts) {
    std::vector<std::vector<double>> m;
    m.reserve(g.n);
    for (std::size_t idx : subset) {
        std::vector<double> row = g.planes[idx].a;
        row.push_back(g.planes[idx].b);
        m.push_back(std::move(row));
    }
    auto x = solve_square(std::move(m), opts.singular_tol);
    if (!x) return std::nullopt;
    for (const auto& p : g.planes)
        if (!satisfies(p, *x, opts.feas_tol)) return std::nullopt;
    return x;
}

void check_size(const lp::LinearProgram& lp, const VertexOptions& opts) {
    lp::validate(lp);
    if (lp.var_count() > opts.max_vars)
        throw UnsupportedSize("vertex enumeration supports at most " + std::to_string(opts.max_vars) +
                              " variables, got " + std::to_string(lp.var_count()));
}

bool same_point(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    double mag = 1.0;
    double diff = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        mag = std::max({mag, std::abs(a[j]), std::abs(b[j])});
        diff = std::max(diff, std::abs(a[j] - b[j]));
    }
    return diff <= tol * mag;
}

// Candidates arrive in subset order; keeps the first of each cluster.
std::vector<Vertex> finish(const lp::LinearProgram& lp, const Geometry& g,
                           const std::vector<std::vector<double>>& candidates, const VertexOptions& opts) {
    std::vector<Vertex> out;
    for (const auto& x : candidates) {
        bool dup = false;
        for (const auto& v : out)
            if (same_point(v.point, x, opts.dedup_tol)) {
                dup = true;
                break;
            }
        if (dup) continue;
        Vertex v;
        v.point = x;
        v.objective = inner(lp.objective, x);
        for (std::size_t i = 0; i < g.planes.size(); ++i)
            if (tight(g.planes[i], x, opts.feas_tol)) v.binding.push_back(g.labels[i]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::vector<Vertex> enumerate_vertices_serial(const lp::LinearProgram& lp, const VertexOptions& opts) {
    check_size(lp, opts);
    const Geometry g = build_geometry(lp);
    const std::size_t h = g.planes.size();
    std::vector<std::vector<double>> candidates;
    std::vector<std::size_t> subset(g.n);
    for (std::size_t i = 0; i < g.n; ++i) subset[i] = i;
    do {
        if (auto x = intersect(g, subset, opts)) candidates.push_back(std::move(*x));
    } while (next_combination(subset, h));
    return finish(lp, g, candidates, opts);
}

std::vector<Vertex> enumerate_vertices(const lp::LinearProgram& lp, const VertexOptions& opts) {
    check_size(lp, opts);
    const Geometry g = build_geometry(lp);
    const auto total = static_cast<long long>(binomial(g.planes.size(), g.n));
    std::vector<std::optional<std::vector<double>>> slots(static_cast<std::size_t>(total));

#pragma omp parallel for schedule(static)
    for (long long r = 0; r < total; ++r) {
        const auto subset = unrank(static_cast<std::size_t>(r), g.planes.size(), g.n);
        slots[static_cast<std::size_t>(r)] = intersect(g, subset, opts);
    }

    std::vector<std::vector<double>> candidates;
    for (auto& s : slots)
        if (s) candidates.push_back(std::move(*s));
    return finish(lp, g, candidates, opts);
}

namespace {

// Searches extreme rays of {r : rows hold homogeneously, r >= 0} for c·r < 0
// (minimize) or c·r > 0 (maximize).
bool has_improving_ray(const lp::LinearProgram& lp, const Geometry& g) {
    const std::size_t n = g.n;
    const std::size_t h = g.planes.size();
    const double sign = lp.sense == lp::Sense::Maximize ? -1.0 : 1.0;
    double cmax = 0.0;
    for (double c : lp.objective) cmax = std::max(cmax, std::abs(c));
    const double eps = 1e-9;

    const auto in_cone = [&](const std::vector<double>& r) {
        for (const auto& p : g.planes) {
            const double v = inner(p.a, r);
            switch (p.rel) {
                case lp::Relation::LessEqual:
                    if (v > eps) return false;
                    break;
                case lp::Relation::GreaterEqual:
                    if (v < -eps) return false;
                    break;
                case lp::Relation::Equal:
                    if (std::abs(v) > eps) return false;
                    break;
            }
        }
        return true;
    };

    std::vector<std::size_t> subset(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) subset[i] = i;
    do {
        // Null vector of the (n-1) x n system by signed cofactors.
        std::vector<double> ray(n);
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<std::vector<double>> minor;
            for (std::size_t idx : subset) {
                std::vector<double> row;
                for (std::size_t j = 0; j < n; ++j)
                    if (j != k) row.push_back(g.planes[idx].a[j]);
                minor.push_back(std::move(row));
            }
            const double d = determinant(std::move(minor));
            ray[k] = (k % 2 == 0) ? d : -d;
        }
        double norm = 0.0;
        for (double v : ray) norm = std::max(norm, std::abs(v));
        if (norm < 1e-12) continue;
        for (double& v : ray) v /= norm;
        for (int dir : {1, -1}) {
            std::vector<double> r = ray;
            if (dir < 0)
                for (double& v : r) v = -v;
            if (in_cone(r) && sign * inner(lp.objective, r) < -eps * std::max(1.0, cmax)) return true;
        }
    } while (n > 1 && next_combination(subset, h));
    return false;
}

}  // namespace

OracleResult oracle_solve(const lp::LinearProgram& lp, const VertexOptions& opts) {
    OracleResult res;
    res.vertices = enumerate_vertices(lp, opts);
    if (res.vertices.empty()) {
        res.status = lp::Status::Infeasible;
        return res;
    }
    if (has_improving_ray(lp, build_geometry(lp))) {
        res.status = lp::Status::Unbounded;
        return res;
    }
    const bool maximize = lp.sense == lp::Sense::Maximize;
    const Vertex* best = &res.vertices.front();
    for (const auto& v : res.vertices)
        if (maximize ? v.objective > best->objective : v.objective < best->objective) best = &v;
    res.status = lp::Status::Optimal;
    res.point = best->point;
    res.objective = best->objective;
    return res;
}

std::size_t active_rank(const lp::LinearProgram& lp, const std::vector<double>& x, double tol) {
    const Geometry g = build_geometry(lp);
    std::vector<std::vector<double>> rows;
    for (const auto& p : g.planes)
        if (tight(p, x, tol)) rows.push_back(p.a);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < g.n && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        for (std::size_t r = rank + 1; r < rows.size(); ++r)
            if (std::abs(rows[r][col]) > std::abs(rows[piv][col])) piv = r;
        if (std::abs(rows[piv][col]) < 1e-12) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const double f = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < g.n; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

}  // namespace gridmix::analysis
