#include "qcournot/oracle.hpp"

#include "qcournot/equilibria.hpp"

#include <doctest.h>

#include <cmath>

using namespace qcournot;

namespace {
const ModelParams kPaperParams(3, 5, 10);
}

TEST_CASE("grid scan finds the classical equilibria") {
    EntangledGame game(kPaperParams, 0.0);
    auto pts = grid_equilibria(game, {0.0, 6.0, 400});
    REQUIRE(pts.size() == 3);
    CHECK(pts[0].q1 == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(pts[0].q2 == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(pts[1].q1 == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(pts[1].q2 == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(pts[2].q1 == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(pts[2].q2 == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("grid scan counts in the other regimes") {
    auto pts6 = grid_equilibria(EntangledGame(kPaperParams, 0.6), default_grid(kPaperParams));
    REQUIRE(pts6.size() == 1);
    CHECK(std::abs(pts6[0].q1 - pts6[0].q2) <= 1e-8);
    CHECK(grid_equilibria(EntangledGame(kPaperParams, 0.285), default_grid(kPaperParams))
              .size() == 5);
}

TEST_CASE("oracle agreement with the polynomial enumeration") {
    for (double g : {0.0, 0.1, 0.255, 0.27, 0.285, 0.296, 0.3, 0.6, 1.0}) {
        EntangledGame game(kPaperParams, g);
        auto enumerated = enumerate_equilibria(game);
        auto scanned = grid_equilibria(game, default_grid(kPaperParams));
        REQUIRE(scanned.size() == enumerated.size());
        for (std::size_t i = 0; i < scanned.size(); ++i) {
            CHECK(std::abs(scanned[i].q1 - enumerated[i].quantities.q1) <= 1e-5);
            CHECK(std::abs(scanned[i].q2 - enumerated[i].quantities.q2) <= 1e-5);
        }
    }
}

TEST_CASE("no converged point sits near the box boundary") {
    for (double g : {0.0, 0.285, 0.6}) {
        const GridSpec grid = default_grid(kPaperParams);
        const double h = (grid.hi - grid.lo) / grid.cells;
        for (const auto& p : grid_equilibria(EntangledGame(kPaperParams, g), grid)) {
            CHECK(p.q1 >= grid.lo + 2.0 * h);
            CHECK(p.q1 <= grid.hi - 2.0 * h);
            CHECK(p.q2 >= grid.lo + 2.0 * h);
            CHECK(p.q2 <= grid.hi - 2.0 * h);
        }
    }
}

TEST_CASE("grid validation") {
    EntangledGame game(kPaperParams, 0.0);
    CHECK_THROWS_AS(grid_equilibria(game, {0.0, 6.0, 99}), InvalidGrid);
    CHECK_THROWS_AS(grid_equilibria(game, {6.0, 0.0, 400}), InvalidGrid);
    CHECK_THROWS_AS(grid_equilibria(game, {2.0, 2.0, 400}), InvalidGrid);
}

TEST_CASE("parallel scan equals the serial reference") {
    EntangledGame game(kPaperParams, 0.285);
    const GridSpec grid{0.0, 6.0, 250};
    auto a = grid_equilibria(game, grid);
    auto b = grid_equilibria_serial(game, grid);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].q1 == b[i].q1);
        CHECK(a[i].q2 == b[i].q2);
    }
}
