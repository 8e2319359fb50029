#ifndef QCOURNOT_ORACLE_HPP
#define QCOURNOT_ORACLE_HPP

#include "qcournot/model.hpp"

#include <vector>

namespace qcournot {

/// Square scan box [lo, hi]^2 with `cells` cells per axis (at least 100).
struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int cells = 0;
};

/// Scan box that provably contains every equilibrium: the classical ones sit
/// within distance 1 of (a, a) and the asymmetry bound confines quantum
/// deviations, so [a - 3, a + 3]^2 leaves a wide margin.
GridSpec default_grid(const ModelParams& params);

/// Brute-force equilibrium finder, independent of the polynomial route: every
/// cell whose corners show sign changes in both best-response residuals seeds
/// a damped 2-D Newton iteration; converged points (residual < 1e-10) are
/// deduplicated at 1e-6 and returned sorted by (q1, q2). Deliberately simple
/// and slow; used by tests and the `verify` command. Throws InvalidGrid.
std::vector<QuantityPair> grid_equilibria(const EntangledGame& game,
                                          const GridSpec& grid);

/// Single-thread reference implementation; results identical to the parallel
/// kernel.
std::vector<QuantityPair> grid_equilibria_serial(const EntangledGame& game,
                                                 const GridSpec& grid);

} // namespace qcournot

#endif
