#ifndef QCOURNOT_BIFURCATION_HPP
#define QCOURNOT_BIFURCATION_HPP

#include "qcournot/equilibria.hpp"

#include <vector>

namespace qcournot {

/// Equilibria at a single entanglement value (sorted by q1).
struct SweepRecord {
    double gamma = 0.0;
    std::vector<Equilibrium> equilibria;
    int count = 0;
};

/// The two entanglement values where the equilibrium count changes
/// (3 -> 5 at gamma1, down to 1 at gamma2), each bisected to bracket_width.
struct Thresholds {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double bracket_width = 0.0;
};

/// One plot-ready row of the profit-vs-entanglement table. branch_id is
/// stable across adjacent grid points (nearest-neighbor matching in
/// (q1, q2)); u_pareto and u_classical_sym are constant reference levels.
struct ProfitBranchRow {
    double gamma = 0.0;
    int branch_id = 0;
    double q1 = 0.0;
    double q2 = 0.0;
    double u1 = 0.0;
    double u2 = 0.0;
    bool symmetric = false;
    double u_pareto = 0.0;
    double u_classical_sym = 0.0;
};

/// Equilibria on a uniform gamma grid (inclusive endpoints, steps >= 2 grid
/// points). Grid points are independent and evaluated in parallel; output
/// order is canonical (gamma ascending). Throws InvalidRange.
std::vector<SweepRecord> sweep(const ModelParams& params, double gamma_lo,
                               double gamma_hi, int steps);

/// Single-thread reference implementation of sweep; must produce results
/// identical to the parallel kernel.
std::vector<SweepRecord> sweep_serial(const ModelParams& params, double gamma_lo,
                                      double gamma_hi, int steps);

/// Locates the count-change thresholds for parameter regimes with the
/// 3 -> 5 -> 1 pattern (coarse 512-point scan of [0, 1], then bisection to
/// bracket width <= 1e-6). Throws PatternNotFound otherwise, carrying the
/// observed count sequence.
Thresholds find_thresholds(const ModelParams& params);

/// The data behind the profit-transition diagram: one row per equilibrium
/// per grid point, with stable branch ids and the two reference levels.
std::vector<ProfitBranchRow> profit_branches(const ModelParams& params,
                                             double gamma_lo, double gamma_hi,
                                             int steps);

} // namespace qcournot

#endif
