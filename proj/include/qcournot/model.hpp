#ifndef QCOURNOT_MODEL_HPP
#define QCOURNOT_MODEL_HPP

#include "qcournot/errors.hpp"

namespace qcournot {

/// Largest accepted entanglement. Beyond this e^gamma dominates every
/// entanglement-dependent term to machine precision (sech(g)/e^g < 1e-43)
/// and exp() starts to flirt with overflow in intermediate products.
inline constexpr double kGammaMax = 50.0;

/// Economic constants of the duopoly: inverse demand P(Q) = a + b - Q and
/// cost C(q) = (1/4)(q-a)^4 - q^2 + b q - d. All three must be positive.
struct ModelParams {
    double a;
    double b;
    double d;

    ModelParams(double a_, double b_, double d_);
};

/// A market position (quantities put on the market by firm 1 and firm 2).
struct QuantityPair {
    double q1 = 0.0;
    double q2 = 0.0;
};

/// Displacement amplitudes, the firms' strategic variables.
struct StrategyPair {
    double x1 = 0.0;
    double x2 = 0.0;
};

struct ProfitPair {
    double u1 = 0.0;
    double u2 = 0.0;
};

/// The duopoly together with the entanglement measure gamma >= 0.
/// gamma = 0 reproduces the classical game. Immutable value; all member
/// computation is pure and thread-safe.
class EntangledGame {
public:
    EntangledGame(ModelParams params, double gamma);

    const ModelParams& params() const { return params_; }
    double gamma() const { return gamma_; }

    /// cosh(gamma), sinh(gamma) and e^gamma * sech(gamma), precomputed once.
    double cosh_gamma() const { return cosh_gamma_; }
    double sinh_gamma() const { return sinh_gamma_; }
    /// e^g sech(g) = 2 / (1 + e^{-2g}); monotone from 1 (classical) to 2.
    double exp_sech() const { return exp_sech_; }
    /// sech(g) / e^g = 2 / (e^{2g} + 1); the entanglement decay scale of the
    /// asymmetry analysis.
    double sech_over_exp() const { return sech_over_exp_; }

private:
    ModelParams params_;
    double gamma_;
    double cosh_gamma_;
    double sinh_gamma_;
    double exp_sech_;
    double sech_over_exp_;
};

/// P(Q) = a + b - Q. Negative prices are permitted; the model does not
/// truncate demand.
double inverse_demand(const ModelParams& params, double total_quantity);

/// C(q) = (1/4)(q - a)^4 - q^2 + b q - d.
double cost(const ModelParams& params, double q);

/// u_j = P(q1 + q2) q_j - C(q_j) for both firms.
ProfitPair profit_classical(const ModelParams& params, const QuantityPair& q);

/// Strategy-to-quantity map induced by the entangling operation:
///   q1 = x1 cosh g + x2 sinh g,  q2 = x2 cosh g + x1 sinh g.
/// At gamma = 0 this is the identity, exactly.
QuantityPair quantity_map(const EntangledGame& game, const StrategyPair& x);

/// Inverse of quantity_map (the map has unit determinant). Computed through
/// the sum/difference channels q1 +- q2 = e^{+-g} (x1 +- x2), which keeps the
/// symmetric component accurate at large gamma.
StrategyPair quantity_map_inverse(const EntangledGame& game, const QuantityPair& q);

/// Quantum profit: classical profit evaluated at the mapped quantities.
ProfitPair profit_quantum(const EntangledGame& game, const StrategyPair& x);

} // namespace qcournot

#endif
