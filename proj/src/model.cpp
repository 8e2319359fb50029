#include "qcournot/model.hpp"

#include <cmath>

namespace qcournot {

ModelParams::ModelParams(double a_, double b_, double d_) : a(a_), b(b_), d(d_) {
    if (!(a > 0.0) || !(b > 0.0) || !(d > 0.0))
        throw InvalidParams("model parameters require a > 0, b > 0, d > 0");
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(d))
        throw InvalidParams("model parameters must be finite");
}

EntangledGame::EntangledGame(ModelParams params, double gamma)
    : params_(params), gamma_(gamma) {
    if (!(gamma >= 0.0))
        throw InvalidParams("entanglement gamma must be >= 0");
    if (gamma > kGammaMax)
        throw InvalidParams("entanglement gamma exceeds the supported maximum of 50");
    cosh_gamma_ = std::cosh(gamma);
    sinh_gamma_ = std::sinh(gamma);
    const double em2g = std::exp(-2.0 * gamma);
    exp_sech_ = 2.0 / (1.0 + em2g);
    sech_over_exp_ = 2.0 * em2g / (1.0 + em2g);
}

double inverse_demand(const ModelParams& params, double total_quantity) {
    return params.a + params.b - total_quantity;
}

double cost(const ModelParams& params, double q) {
    const double s = q - params.a;
    const double s2 = s * s;
    return 0.25 * s2 * s2 - q * q + params.b * q - params.d;
}

ProfitPair profit_classical(const ModelParams& params, const QuantityPair& q) {
    const double price = inverse_demand(params, q.q1 + q.q2);
    return {price * q.q1 - cost(params, q.q1),
            price * q.q2 - cost(params, q.q2)};
}

QuantityPair quantity_map(const EntangledGame& game, const StrategyPair& x) {
    const double c = game.cosh_gamma();
    const double s = game.sinh_gamma();
    return {x.x1 * c + x.x2 * s, x.x2 * c + x.x1 * s};
}

StrategyPair quantity_map_inverse(const EntangledGame& game, const QuantityPair& q) {
    // x1 +- x2 = e^{-+g} (q1 +- q2); avoids the cosh^2 - sinh^2 cancellation
    // in the symmetric channel.
    const double sum = std::exp(-game.gamma()) * (q.q1 + q.q2);
    const double diff = std::exp(game.gamma()) * (q.q1 - q.q2);
    return {0.5 * (sum + diff), 0.5 * (sum - diff)};
}

ProfitPair profit_quantum(const EntangledGame& game, const StrategyPair& x) {
    return profit_classical(game.params(), quantity_map(game, x));
}

} // namespace qcournot
