#ifndef QCOURNOT_EQUILIBRIA_HPP
#define QCOURNOT_EQUILIBRIA_HPP

#include "qcournot/model.hpp"
#include "qcournot/polynomial.hpp"

#include <vector>

namespace qcournot {

/// A solved Nash equilibrium: market quantities, the strategies that induce
/// them, per-firm profits, and solution-quality diagnostics.
struct Equilibrium {
    QuantityPair quantities;
    StrategyPair strategies;
    ProfitPair profits;
    bool symmetric = false;          // |q1 - q2| <= 1e-7
    bool negative_quantity = false;  // flagged, never discarded
    bool tangency = false;           // merged near-multiple root (threshold touch)
    double residual = 0.0;           // max |FOC| over the two firms
};

/// Joint-profit maximizer on the diagonal q1 = q2 = q*.
struct ParetoOptimum {
    double q_star;
    double alpha;  // (2/3)^(1/3)
    double beta;   // (9a + sqrt(96 + 81 a^2))^(1/3)
    double profit_each;
};

/// The closed-form symmetric equilibrium x*(gamma) and its market quantity
/// e^gamma x*(gamma).
struct SymmetricSolution {
    double x_star;
    double eta;
    double q_star_gamma;
};

/// Residual of the best-response condition of the firm producing q_own
/// against an opponent producing q_other:
///   (a + q_own - q_other - (q_own - a)^3) cosh g - e^g q_own.
/// Zero exactly on that firm's best-response locus.
double br_residual(const EntangledGame& game, double q_own, double q_other);

/// Residual of the strategy-space first-order condition
///   -x_own sinh 2g - x_other cosh 2g
///   - (x_own cosh g + x_other sinh g - a)^3 cosh g + a cosh g,
/// algebraically identical to br_residual under the quantity map.
double foc_x_residual(const EntangledGame& game, double x_own, double x_other);

/// The opponent quantity that puts (q_j, q_i) on firm j's best-response
/// locus; explicit cubic q_i = a + q_j - (q_j - a)^3 - e^g sech(g) q_j.
double br_conjugate(const EntangledGame& game, double q_j);

/// Firm j's profit-maximizing quantity against an opponent producing q_i.
/// The defining cubic is strictly monotone in q_j, so the reply is unique.
double best_response(const EntangledGame& game, double q_i);

/// Degree-9 polynomial p(q1) = phi(phi(q1)) - q1 with phi = br_conjugate;
/// its real roots are exactly the equilibrium q1 values.
Polynomial equilibrium_polynomial(const EntangledGame& game);

/// All Nash equilibria, sorted by q1 ascending.
std::vector<Equilibrium> enumerate_equilibria(const EntangledGame& game);

/// The symmetric equilibrium in closed form.
SymmetricSolution symmetric_closed_form(const EntangledGame& game);

/// Joint-profit optimum q* and the per-firm profit there.
ParetoOptimum pareto_optimum(const ModelParams& params);

/// Residual of delta^2 + 3 A delta + 3 A^2 - sech(g)/e^g at an asymmetric
/// equilibrium (A = q1 - a, delta = q2 - q1); vanishes for any genuine
/// asymmetric equilibrium. Throws SymmetricInput when |delta| <= 1e-7.
double asymmetry_identity(const EntangledGame& game, const Equilibrium& eq);

/// Largest |q1 - a| compatible with an asymmetric equilibrium:
/// sqrt((4/3) sech(g)/e^g), from the discriminant of the identity above.
double asymmetry_bound(const EntangledGame& game);

} // namespace qcournot

#endif
