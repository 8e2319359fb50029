#include "qcournot/equilibria.hpp"

#include "qcournot/realroots.hpp"

#include <cmath>

namespace qcournot {

namespace {

constexpr double kSymmetryTol = 1e-7;

// phi(q) = a + q - (q - a)^3 - e^g sech(g) q, expanded in ascending powers.
Polynomial br_conjugate_poly(const EntangledGame& game) {
    const double a = game.params().a;
    const double k = game.exp_sech();
    return Polynomial{a + a * a * a, 1.0 - 3.0 * a * a - k, 3.0 * a, -1.0};
}

// phi'(q) = 1 - 3 (q - a)^2 - e^g sech g.
double br_conjugate_slope(const EntangledGame& game, double q) {
    const double s = q - game.params().a;
    return 1.0 - 3.0 * s * s - game.exp_sech();
}

// A few Newton steps on f(q) = phi(phi(q)) - q with phi kept in factored
// form. The expanded degree-9 coefficients lose ~7 digits near the roots;
// this evaluation does not, so polished roots are accurate to ~1e-14.
double polish_equilibrium_root(const EntangledGame& game, double q) {
    auto f = [&](double x) { return br_conjugate(game, br_conjugate(game, x)) - x; };
    double best = q;
    double best_abs = std::abs(f(q));
    for (int it = 0; it < 8; ++it) {
        const double inner = br_conjugate(game, q);
        const double d =
            br_conjugate_slope(game, inner) * br_conjugate_slope(game, q) - 1.0;
        if (d == 0.0 || !std::isfinite(d))
            break;
        const double qn = q - f(q) / d;
        if (!std::isfinite(qn))
            break;
        const double fn = std::abs(f(qn));
        if (fn >= best_abs)
            break;
        best = qn;
        best_abs = fn;
        q = qn;
    }
    return best;
}

} // namespace

double br_residual(const EntangledGame& game, double q_own, double q_other) {
    const double a = game.params().a;
    const double s = q_own - a;
    return (a + q_own - q_other - s * s * s) * game.cosh_gamma() -
           (game.cosh_gamma() + game.sinh_gamma()) * q_own;
}

double foc_x_residual(const EntangledGame& game, double x_own, double x_other) {
    const double a = game.params().a;
    const double g = game.gamma();
    const double s = x_own * game.cosh_gamma() + x_other * game.sinh_gamma() - a;
    return -x_own * std::sinh(2.0 * g) - x_other * std::cosh(2.0 * g) -
           s * s * s * game.cosh_gamma() + a * game.cosh_gamma();
}

double br_conjugate(const EntangledGame& game, double q_j) {
    const double a = game.params().a;
    const double s = q_j - a;
    return a + q_j - s * s * s - game.exp_sech() * q_j;
}

double best_response(const EntangledGame& game, double q_i) {
    const double a = game.params().a;
    const double c = game.cosh_gamma();
    const double s = game.sinh_gamma();
    // cosh(g) (q_j - a)^3 + sinh(g) q_j + cosh(g) (q_i - a) = 0
    const Polynomial cubic{c * (q_i - a - a * a * a), 3.0 * a * a * c + s,
                           -3.0 * a * c, c};
    const RootSet roots = real_roots_cubic(cubic);
    // Strict monotonicity makes the reply unique; nothing to disambiguate.
    return roots.roots.front();
}

Polynomial equilibrium_polynomial(const EntangledGame& game) {
    const Polynomial phi = br_conjugate_poly(game);
    return phi.compose(phi) - Polynomial{0.0, 1.0};
}

std::vector<Equilibrium> enumerate_equilibria(const EntangledGame& game) {
    const RootSet roots = real_roots(equilibrium_polynomial(game));
    std::vector<Equilibrium> out;
    out.reserve(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const double q1 = polish_equilibrium_root(game, roots.roots[i]);
        const double q2 = br_conjugate(game, q1);
        Equilibrium eq;
        eq.quantities = {q1, q2};
        eq.strategies = quantity_map_inverse(game, eq.quantities);
        eq.profits = profit_classical(game.params(), eq.quantities);
        eq.symmetric = std::abs(q1 - q2) <= kSymmetryTol;
        eq.negative_quantity = q1 < 0.0 || q2 < 0.0;
        eq.tangency = roots.multiplicity_flags[i];
        eq.residual = std::max(std::abs(br_residual(game, q1, q2)),
                               std::abs(br_residual(game, q2, q1)));
        out.push_back(eq);
    }
    return out;
}

SymmetricSolution symmetric_closed_form(const EntangledGame& game) {
    const double a = game.params().a;
    const double g = game.gamma();
    const double alpha = std::cbrt(2.0 / 3.0);
    const double k = game.exp_sech(); // e^g sech g, stable at every gamma
    const double tanh_g = std::tanh(g);
    const double eta =
        std::cbrt(9.0 * a * tanh_g +
                  std::sqrt(12.0 * k * k * k + 81.0 * a * a * tanh_g * tanh_g));
    const double exp_mg = std::exp(-g);
    const double x_star = a * exp_mg + alpha / (game.cosh_gamma() * eta) -
                          0.5 * alpha * alpha * eta * exp_mg;
    return {x_star, eta, std::exp(g) * x_star};
}

ParetoOptimum pareto_optimum(const ModelParams& params) {
    const double a = params.a;
    const double alpha = std::cbrt(2.0 / 3.0);
    const double beta = std::cbrt(9.0 * a + std::sqrt(96.0 + 81.0 * a * a));
    const double q_star = a + 2.0 * alpha / beta - 0.5 * alpha * alpha * beta;
    const double profit =
        profit_classical(params, {q_star, q_star}).u1;
    return {q_star, alpha, beta, profit};
}

double asymmetry_identity(const EntangledGame& game, const Equilibrium& eq) {
    const double delta = eq.quantities.q2 - eq.quantities.q1;
    if (std::abs(delta) <= kSymmetryTol)
        throw SymmetricInput("asymmetry_identity requires q1 != q2");
    const double big_a = eq.quantities.q1 - game.params().a;
    return delta * delta + 3.0 * big_a * delta + 3.0 * big_a * big_a -
           game.sech_over_exp();
}

double asymmetry_bound(const EntangledGame& game) {
    return std::sqrt((4.0 / 3.0) * game.sech_over_exp());
}

} // namespace qcournot
