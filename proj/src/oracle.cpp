#include "qcournot/oracle.hpp"

#include "qcournot/equilibria.hpp"

#include <algorithm>
#include <cmath>

namespace qcournot {

namespace {

constexpr double kConvergedResidual = 1e-10;
constexpr double kDedupTol = 1e-6;

struct Residuals {
    double r1, r2;
    double norm() const { return std::max(std::abs(r1), std::abs(r2)); }
};

Residuals residuals_at(const EntangledGame& game, double q1, double q2) {
    return {br_residual(game, q1, q2), br_residual(game, q2, q1)};
}

// Newton with step halving on residual increase; divergent seeds report
// converged = false and are discarded by the caller.
struct NewtonResult {
    QuantityPair point;
    bool converged = false;
};

NewtonResult damped_newton(const EntangledGame& game, double q1, double q2) {
    const double a = game.params().a;
    const double c = game.cosh_gamma();
    const double eg = c + game.sinh_gamma();
    for (int it = 0; it < 80; ++it) {
        const Residuals r = residuals_at(game, q1, q2);
        if (r.norm() < kConvergedResidual)
            return {{q1, q2}, true};
        const double s1 = q1 - a;
        const double s2 = q2 - a;
        const double j11 = (1.0 - 3.0 * s1 * s1) * c - eg;
        const double j12 = -c;
        const double j21 = -c;
        const double j22 = (1.0 - 3.0 * s2 * s2) * c - eg;
        const double det = j11 * j22 - j12 * j21;
        if (std::abs(det) < 1e-300)
            return {{q1, q2}, false};
        const double dq1 = (-r.r1 * j22 + r.r2 * j12) / det;
        const double dq2 = (-r.r2 * j11 + r.r1 * j21) / det;
        double t = 1.0;
        bool accepted = false;
        for (int h = 0; h < 30; ++h) {
            const double n1 = q1 + t * dq1;
            const double n2 = q2 + t * dq2;
            if (residuals_at(game, n1, n2).norm() < r.norm()) {
                q1 = n1;
                q2 = n2;
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted)
            return {{q1, q2}, false};
    }
    return {{q1, q2}, false};
}

bool straddles_zero(double a, double b, double c, double d) {
    const double lo = std::min(std::min(a, b), std::min(c, d));
    const double hi = std::max(std::max(a, b), std::max(c, d));
    return lo <= 0.0 && hi >= 0.0;
}

struct CornerTables {
    std::vector<double> r1, r2;
    int n = 0; // corners per axis
};

CornerTables make_corner_tables(const GridSpec& grid) {
    CornerTables t;
    t.n = grid.cells + 1;
    t.r1.resize(static_cast<std::size_t>(t.n) * t.n);
    t.r2.resize(static_cast<std::size_t>(t.n) * t.n);
    return t;
}

void fill_corner_row(CornerTables& t, const EntangledGame& game, const GridSpec& grid,
                     int i) {
    const double h = (grid.hi - grid.lo) / grid.cells;
    const double q1 = grid.lo + i * h;
    for (int j = 0; j < t.n; ++j) {
        const double q2 = grid.lo + j * h;
        const Residuals r = residuals_at(game, q1, q2);
        t.r1[static_cast<std::size_t>(i) * t.n + j] = r.r1;
        t.r2[static_cast<std::size_t>(i) * t.n + j] = r.r2;
    }
}

// Runs the cell's seed (center of any cell whose corners straddle zero in
// both residuals); returns converged = false for non-candidate cells too.
NewtonResult process_cell(const EntangledGame& game, const GridSpec& grid,
                          const CornerTables& t, int cell_index) {
    const int i = cell_index / grid.cells;
    const int j = cell_index % grid.cells;
    const std::size_t n = static_cast<std::size_t>(t.n);
    const std::size_t c00 = static_cast<std::size_t>(i) * n + j;
    const std::size_t c01 = c00 + 1;
    const std::size_t c10 = c00 + n;
    const std::size_t c11 = c10 + 1;
    if (!straddles_zero(t.r1[c00], t.r1[c01], t.r1[c10], t.r1[c11]) ||
        !straddles_zero(t.r2[c00], t.r2[c01], t.r2[c10], t.r2[c11]))
        return {};
    const double h = (grid.hi - grid.lo) / grid.cells;
    return damped_newton(game, grid.lo + (i + 0.5) * h, grid.lo + (j + 0.5) * h);
}

std::vector<QuantityPair> collect(std::vector<NewtonResult>& results) {
    std::vector<QuantityPair> points;
    for (const NewtonResult& r : results) {
        if (!r.converged)
            continue;
        bool duplicate = false;
        for (const QuantityPair& p : points) {
            if (std::abs(p.q1 - r.point.q1) <= kDedupTol &&
                std::abs(p.q2 - r.point.q2) <= kDedupTol) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate)
            points.push_back(r.point);
    }
    std::sort(points.begin(), points.end(), [](const QuantityPair& a, const QuantityPair& b) {
        if (a.q1 != b.q1)
            return a.q1 < b.q1;
        return a.q2 < b.q2;
    });
    return points;
}

void check_grid(const GridSpec& grid) {
    if (!(grid.lo < grid.hi) || grid.cells < 100)
        throw InvalidGrid("grid requires lo < hi and at least 100 cells per axis");
}

} // namespace

GridSpec default_grid(const ModelParams& params) {
    return {params.a - 3.0, params.a + 3.0, 400};
}

std::vector<QuantityPair> grid_equilibria(const EntangledGame& game,
                                          const GridSpec& grid) {
    check_grid(grid);
    CornerTables tables = make_corner_tables(grid);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < tables.n; ++i)
        fill_corner_row(tables, game, grid, i);
    const int total = grid.cells * grid.cells;
    std::vector<NewtonResult> results(total);
#pragma omp parallel for schedule(dynamic, 256)
    for (int idx = 0; idx < total; ++idx)
        results[idx] = process_cell(game, grid, tables, idx);
    return collect(results);
}

std::vector<QuantityPair> grid_equilibria_serial(const EntangledGame& game,
                                                 const GridSpec& grid) {
    check_grid(grid);
    CornerTables tables = make_corner_tables(grid);
    for (int i = 0; i < tables.n; ++i)
        fill_corner_row(tables, game, grid, i);
    const int total = grid.cells * grid.cells;
    std::vector<NewtonResult> results(total);
    for (int idx = 0; idx < total; ++idx)
        results[idx] = process_cell(game, grid, tables, idx);
    return collect(results);
}

} // namespace qcournot
