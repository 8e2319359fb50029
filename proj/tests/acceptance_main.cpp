// Acceptance suite: end-to-end checks of the published quantities at fixed
// tolerances, one pass/fail line per criterion. Exits nonzero if any fail.

#include "qcournot/bifurcation.hpp"
#include "qcournot/oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace qcournot;
using clock_type = std::chrono::steady_clock;

namespace {

int g_failures = 0;
bool g_current_ok = true;
std::string g_current_detail;

void expect(bool ok, const std::string& detail) {
    if (!ok && g_current_ok) {
        g_current_ok = false;
        g_current_detail = detail;
    }
}

template <typename F>
void criterion(int index, const std::string& name, F&& body) {
    g_current_ok = true;
    g_current_detail.clear();
    const auto t0 = clock_type::now();
    body();
    const double ms =
        std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
    if (g_current_ok) {
        std::printf("criterion %d: %-58s PASS (%.1f ms)\n", index, name.c_str(), ms);
    } else {
        std::printf("criterion %d: %-58s FAIL (%.1f ms): %s\n", index, name.c_str(),
                    ms, g_current_detail.c_str());
        ++g_failures;
    }
}

const ModelParams kParams(3, 5, 10);

} // namespace

int main() {
    criterion(1, "classical equilibria and profits, < 10 ms", [] {
        const auto t0 = clock_type::now();
        const auto eqs = enumerate_equilibria(EntangledGame(kParams, 0.0));
        const double ms =
            std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
        expect(eqs.size() == 3, "expected 3 equilibria");
        if (eqs.size() != 3)
            return;
        const double expected[3][4] = {{2, 4, 7.75, 13.75},
                                       {3, 3, 10.0, 10.0},
                                       {4, 2, 13.75, 7.75}};
        for (int i = 0; i < 3; ++i) {
            expect(std::abs(eqs[i].quantities.q1 - expected[i][0]) <= 1e-8 &&
                       std::abs(eqs[i].quantities.q2 - expected[i][1]) <= 1e-8,
                   "quantity mismatch");
            expect(std::abs(eqs[i].profits.u1 - expected[i][2]) <= 1e-8 &&
                       std::abs(eqs[i].profits.u2 - expected[i][3]) <= 1e-8,
                   "profit mismatch");
        }
        expect(ms < 10.0, "enumeration took " + std::to_string(ms) + " ms");
    });

    criterion(2, "Pareto optimum closed form and its first-order condition", [] {
        const ParetoOptimum po = pareto_optimum(kParams);
        expect(std::abs(po.q_star - 2.0) <= 1e-10, "q* != 2");
        expect(std::abs(po.profit_each - 11.75) <= 1e-10, "profit != 7/4 + d");
        std::mt19937 rng(101);
        std::uniform_real_distribution<double> da(1e-9, 10.0);
        for (int i = 0; i < 100; ++i) {
            const double a = da(rng);
            const double s = pareto_optimum(ModelParams(a, 5, 10)).q_star - a;
            expect(std::abs(s * s * s + 2.0 * s + a) < 1e-10,
                   "FOC residual at a=" + std::to_string(a));
        }
    });

    criterion(3, "equilibrium counts 3 / 5 / 1 at gamma 0, 0.285, 0.6, < 100 ms", [] {
        const auto t0 = clock_type::now();
        const std::size_t c0 = enumerate_equilibria(EntangledGame(kParams, 0.0)).size();
        const std::size_t c1 =
            enumerate_equilibria(EntangledGame(kParams, 0.285)).size();
        const std::size_t c2 = enumerate_equilibria(EntangledGame(kParams, 0.6)).size();
        const double ms =
            std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
        expect(c0 == 3, "count at 0 is " + std::to_string(c0));
        expect(c1 == 5, "count at 0.285 is " + std::to_string(c1));
        expect(c2 == 1, "count at 0.6 is " + std::to_string(c2));
        expect(ms < 100.0, "counting took " + std::to_string(ms) + " ms");
    });

    criterion(4, "thresholds bisected into the published windows, < 5 s", [] {
        const auto t0 = clock_type::now();
        const Thresholds th = find_thresholds(kParams);
        const double ms =
            std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
        expect(th.gamma1 >= 0.250 && th.gamma1 <= 0.260,
               "gamma1 = " + std::to_string(th.gamma1));
        expect(th.gamma2 >= 0.291 && th.gamma2 <= 0.301,
               "gamma2 = " + std::to_string(th.gamma2));
        expect(th.bracket_width <= 1e-6, "bracket width too wide");
        expect(ms < 5000.0, "threshold search took " + std::to_string(ms) + " ms");
    });

    criterion(5, "symmetric quantity converges monotonically to q*", [] {
        // The closed form moves from a down to q* (q* < a always); monotone
        // approach means a nonincreasing gap to the optimum.
        const double q_star = pareto_optimum(kParams).q_star;
        double prev_gap = 1e300;
        double prev_q = 1e300;
        for (int i = 0; i < 200; ++i) {
            const double g = 10.0 * i / 199.0;
            const double q =
                symmetric_closed_form(EntangledGame(kParams, g)).q_star_gamma;
            const double gap = std::abs(q - q_star);
            expect(gap <= prev_gap, "gap grew at gamma = " + std::to_string(g));
            expect(q <= prev_q, "quantity rose at gamma = " + std::to_string(g));
            prev_gap = gap;
            prev_q = q;
        }
        const double q10 = symmetric_closed_form(EntangledGame(kParams, 10.0)).q_star_gamma;
        expect(std::abs(q10 - q_star) < 1e-6, "limit gap at gamma = 10 too large");
    });

    criterion(6, "closed form equals the enumerated symmetric root (50 draws)", [] {
        std::mt19937 rng(12345);
        std::uniform_real_distribution<double> da(0.5, 5.0), dg(0.0, 5.0);
        for (int i = 0; i < 50; ++i) {
            const ModelParams mp(da(rng), 5, 10);
            const EntangledGame game(mp, dg(rng));
            const SymmetricSolution s = symmetric_closed_form(game);
            double best = 1e300;
            for (const auto& e : enumerate_equilibria(game))
                if (e.symmetric)
                    best = std::min(best, std::abs(e.quantities.q1 - s.q_star_gamma));
            expect(best <= 1e-8, "symmetric root mismatch " + std::to_string(best));
        }
    });

    static std::vector<std::pair<double, Equilibrium>> asymmetric_found;

    criterion(7, "grid oracle agrees with the enumeration at nine gammas, < 30 s", [] {
        const auto t0 = clock_type::now();
        for (double g : {0.0, 0.1, 0.255, 0.27, 0.285, 0.296, 0.3, 0.6, 1.0}) {
            const EntangledGame game(kParams, g);
            const auto enumerated = enumerate_equilibria(game);
            const auto scanned = grid_equilibria(game, default_grid(kParams));
            expect(scanned.size() == enumerated.size(),
                   "count mismatch at gamma = " + std::to_string(g));
            if (scanned.size() == enumerated.size()) {
                for (std::size_t i = 0; i < scanned.size(); ++i) {
                    expect(std::abs(scanned[i].q1 - enumerated[i].quantities.q1) <= 1e-5 &&
                               std::abs(scanned[i].q2 - enumerated[i].quantities.q2) <=
                                   1e-5,
                           "point mismatch at gamma = " + std::to_string(g));
                }
            }
            for (const auto& e : enumerated)
                if (!e.symmetric)
                    asymmetric_found.emplace_back(g, e);
        }
        const double ms =
            std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
        expect(ms < 30000.0, "oracle sweep took " + std::to_string(ms) + " ms");
    });

    criterion(8, "appendix identity and bound at every asymmetric equilibrium", [] {
        expect(!asymmetric_found.empty(), "criterion 7 produced no asymmetric equilibria");
        for (const auto& [g, e] : asymmetric_found) {
            const EntangledGame game(kParams, g);
            expect(std::abs(asymmetry_identity(game, e)) < 1e-8,
                   "identity residual at gamma = " + std::to_string(g));
            expect(std::abs(e.quantities.q1 - kParams.a) <=
                       asymmetry_bound(game) + 1e-8,
                   "bound violated at gamma = " + std::to_string(g));
        }
    });

    criterion(9, "property suites (b-invariance, round trip, FOC, concavity, swap)", [] {
        std::mt19937 rng(777);
        std::uniform_real_distribution<double> da(0.5, 5.0), dgamma(0.0, 3.0),
            dx(-3.0, 3.0), db(0.1, 10.0), dq(-3.0, 3.0);

        // b-invariance of profits, 1e-9 absolute
        for (int i = 0; i < 1000; ++i) {
            const double a = da(rng), g = dgamma(rng), x1 = dx(rng), x2 = dx(rng);
            const ProfitPair u1 =
                profit_quantum(EntangledGame(ModelParams(a, db(rng), 10), g), {x1, x2});
            const ProfitPair u2 =
                profit_quantum(EntangledGame(ModelParams(a, db(rng), 10), g), {x1, x2});
            expect(std::abs(u1.u1 - u2.u1) <= 1e-9 && std::abs(u1.u2 - u2.u2) <= 1e-9,
                   "b-invariance");
        }

        // quantity-map round trip, 1e-12 relative (gamma <= 4: the inverse
        // amplifies stored-quantity rounding by cosh^2, which crosses 1e-12
        // near gamma 4.5 in IEEE doubles)
        std::uniform_real_distribution<double> dg_rt(0.0, 4.0), dxw(-5.0, 5.0);
        for (int i = 0; i < 1000; ++i) {
            const EntangledGame game(kParams, dg_rt(rng));
            const StrategyPair x{dxw(rng), dxw(rng)};
            const StrategyPair r = quantity_map_inverse(game, quantity_map(game, x));
            const double scale = std::max({1.0, std::abs(x.x1), std::abs(x.x2)});
            expect(std::abs(r.x1 - x.x1) <= 1e-12 * scale &&
                       std::abs(r.x2 - x.x2) <= 1e-12 * scale,
                   "round trip");
        }

        // strategy-space and quantity-space first-order conditions agree, 1e-8
        std::uniform_real_distribution<double> dg_foc(0.0, 5.0);
        for (int i = 0; i < 1000; ++i) {
            const double a = da(rng);
            const EntangledGame game(ModelParams(a, 5, 10), dg_foc(rng));
            const double q_i = a + dq(rng);
            const StrategyPair x =
                quantity_map_inverse(game, {best_response(game, q_i), q_i});
            expect(std::abs(foc_x_residual(game, x.x1, x.x2)) <= 1e-8,
                   "FOC equivalence");
        }

        // own-payoff concavity via second finite differences, <= 1e-6
        std::uniform_real_distribution<double> dg_cc(0.0, 1.5);
        const double h = 1e-2;
        for (int i = 0; i < 1000; ++i) {
            const EntangledGame game(ModelParams(da(rng), db(rng), 10), dg_cc(rng));
            const double x1 = dx(rng), x2 = dx(rng);
            auto u = [&](double x) { return profit_quantum(game, {x, x2}).u1; };
            expect((u(x1 + h) - 2.0 * u(x1) + u(x1 - h)) / (h * h) <= 1e-6,
                   "concavity");
        }

        // the equilibrium set is invariant under swapping the two firms, 1e-8
        for (double g : {0.0, 0.1, 0.27, 0.285, 0.3, 0.6}) {
            const auto eqs = enumerate_equilibria(EntangledGame(kParams, g));
            for (const auto& e : eqs) {
                bool found = false;
                for (const auto& other : eqs)
                    if (std::abs(other.quantities.q1 - e.quantities.q2) <= 1e-8 &&
                        std::abs(other.quantities.q2 - e.quantities.q1) <= 1e-8)
                        found = true;
                expect(found, "swap symmetry");
            }
        }
    });

    if (g_failures == 0)
        std::printf("acceptance: all 9 criteria PASS\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return g_failures;
}
