#include "qcournot/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace qcournot {

namespace {

void check_range(double lo, double hi, int steps) {
    if (!(lo >= 0.0) || !(hi <= kGammaMax) || !(lo < hi))
        throw InvalidRange("sweep range must satisfy 0 <= lo < hi <= 50");
    if (steps < 2)
        throw InvalidRange("sweep needs at least 2 grid points");
}

double grid_point(double lo, double hi, int steps, int i) {
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

SweepRecord record_at(const ModelParams& params, double gamma) {
    SweepRecord rec;
    rec.gamma = gamma;
    rec.equilibria = enumerate_equilibria(EntangledGame(params, gamma));
    rec.count = static_cast<int>(rec.equilibria.size());
    return rec;
}

int count_at(const ModelParams& params, double gamma) {
    return static_cast<int>(enumerate_equilibria(EntangledGame(params, gamma)).size());
}

// Bisects the gamma at which `above` first holds; the bracket must straddle
// the change. Returns {lo, hi} with hi - lo <= width.
std::pair<double, double> bisect_transition(const ModelParams& params, double lo,
                                            double hi, double width,
                                            bool (*above)(int)) {
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        if (above(count_at(params, mid)))
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

} // namespace

std::vector<SweepRecord> sweep(const ModelParams& params, double gamma_lo,
                               double gamma_hi, int steps) {
    check_range(gamma_lo, gamma_hi, steps);
    std::vector<SweepRecord> out(steps);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < steps; ++i)
        out[i] = record_at(params, grid_point(gamma_lo, gamma_hi, steps, i));
    return out;
}

std::vector<SweepRecord> sweep_serial(const ModelParams& params, double gamma_lo,
                                      double gamma_hi, int steps) {
    check_range(gamma_lo, gamma_hi, steps);
    std::vector<SweepRecord> out(steps);
    for (int i = 0; i < steps; ++i)
        out[i] = record_at(params, grid_point(gamma_lo, gamma_hi, steps, i));
    return out;
}

Thresholds find_thresholds(const ModelParams& params) {
    // 512 scan points on [0, 1]: the known 5-count window spans ~21 cells,
    // so a plateau cannot be stepped over.
    constexpr int kScanPoints = 512;
    constexpr double kBracketWidth = 1e-6;

    std::vector<int> counts(kScanPoints);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < kScanPoints; ++i)
        counts[i] = count_at(params, grid_point(0.0, 1.0, kScanPoints, i));

    std::vector<int> pattern;
    std::vector<int> first_index;
    for (int i = 0; i < kScanPoints; ++i) {
        if (pattern.empty() || counts[i] != pattern.back()) {
            pattern.push_back(counts[i]);
            first_index.push_back(i);
        }
    }

    if (pattern != std::vector<int>{3, 5, 1}) {
        std::ostringstream msg;
        msg << "equilibrium count pattern is not 3->5->1; observed";
        for (int c : pattern)
            msg << ' ' << c;
        throw PatternNotFound(msg.str(), pattern);
    }

    const auto at = [&](int i) { return grid_point(0.0, 1.0, kScanPoints, i); };
    const auto b1 = bisect_transition(params, at(first_index[1] - 1), at(first_index[1]),
                                      kBracketWidth, [](int c) { return c >= 5; });
    const auto b2 = bisect_transition(params, at(first_index[2] - 1), at(first_index[2]),
                                      kBracketWidth, [](int c) { return c == 1; });

    Thresholds t;
    t.gamma1 = 0.5 * (b1.first + b1.second);
    t.gamma2 = 0.5 * (b2.first + b2.second);
    t.bracket_width = std::max(b1.second - b1.first, b2.second - b2.first);
    return t;
}

std::vector<ProfitBranchRow> profit_branches(const ModelParams& params,
                                             double gamma_lo, double gamma_hi,
                                             int steps) {
    const std::vector<SweepRecord> records = sweep(params, gamma_lo, gamma_hi, steps);
    const double u_pareto = pareto_optimum(params).profit_each;
    const double u_classical_sym = params.d;

    std::vector<ProfitBranchRow> rows;
    struct BranchPoint {
        double q1, q2;
        int id;
    };
    std::vector<BranchPoint> prev;
    int next_id = 0;

    for (const SweepRecord& rec : records) {
        const std::size_t n = rec.equilibria.size();
        std::vector<int> ids(n, -1);

        // Nearest-neighbor matching against the previous grid point, closest
        // pairs first, each side claimed at most once.
        struct Cand {
            double dist2;
            std::size_t eq;
            std::size_t prev;
        };
        std::vector<Cand> cands;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < prev.size(); ++j) {
                const double dq1 = rec.equilibria[i].quantities.q1 - prev[j].q1;
                const double dq2 = rec.equilibria[i].quantities.q2 - prev[j].q2;
                cands.push_back({dq1 * dq1 + dq2 * dq2, i, j});
            }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.dist2 != b.dist2)
                return a.dist2 < b.dist2;
            return std::tie(a.eq, a.prev) < std::tie(b.eq, b.prev);
        });
        std::vector<bool> prev_claimed(prev.size(), false);
        for (const Cand& c : cands) {
            if (ids[c.eq] != -1 || prev_claimed[c.prev])
                continue;
            ids[c.eq] = prev[c.prev].id;
            prev_claimed[c.prev] = true;
        }
        for (std::size_t i = 0; i < n; ++i)
            if (ids[i] == -1)
                ids[i] = next_id++;

        prev.clear();
        for (std::size_t i = 0; i < n; ++i) {
            const Equilibrium& eq = rec.equilibria[i];
            prev.push_back({eq.quantities.q1, eq.quantities.q2, ids[i]});
            rows.push_back({rec.gamma, ids[i], eq.quantities.q1, eq.quantities.q2,
                            eq.profits.u1, eq.profits.u2, eq.symmetric, u_pareto,
                            u_classical_sym});
        }
    }
    return rows;
}

} // namespace qcournot
