#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sfac/diagnostics.hpp"
#include "sfac/oracle.hpp"
#include "sfac/rng.hpp"

using namespace sfac;

namespace {
GridSpec grid2d(std::size_t m) { return GridSpec{2, 0.0, 1.0, {m, m, m}}; }
}

TEST_CASE("max_norm basics") {
    Field f = Field::zeros(grid2d(9));
    CHECK(max_norm(f) == 0.0);
    f[12] = -1.5;
    CHECK(max_norm(f) == 1.5);

    // brute-force scan oracle on random data
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = 2.0 * uniform01(3, i) - 1.0;
    double scan = 0.0;
    for (double v : f.data) scan = std::max(scan, std::abs(v));
    CHECK(max_norm(f) == scan);
}

TEST_CASE("error_inf basics") {
    Field a = Field::zeros(grid2d(9));
    Field b = a;
    CHECK(error_inf(a, b) == 0.0);
    b[5] = 1e-7;
    CHECK(error_inf(a, b) == 1e-7);
    Field c = Field::zeros(grid2d(17));
    CHECK_THROWS_AS(error_inf(a, c), std::invalid_argument);
}

TEST_CASE("discrete energy of the zero field") {
    const GridSpec grid = grid2d(9);
    SpectralCache cache(grid, FracOrders{{1.5, 1.5, 1.5}}, 0.5, 0.1);
    const Field z = Field::zeros(grid);
    const double h = grid.h(0);
    CHECK(discrete_energy(z, cache) ==
          doctest::Approx(h * h * 8.0 * 8.0 / 4.0).epsilon(1e-14));
}

TEST_CASE("discrete energy matches the dense-matrix evaluation") {
    const GridSpec grid = grid2d(9);
    const FracOrders orders{{1.2, 1.8, 1.5}};
    const double eps = 0.5;
    SpectralCache cache(grid, orders, eps, 0.1);
    const auto a = oracle::dense_A(grid, orders, eps);
    const double h2 = grid.h(0) * grid.h(1);

    for (std::uint64_t trial = 0; trial < 5; ++trial) {
        Field u = Field::zeros(grid);
        for (std::size_t i = 0; i < u.size(); ++i)
            u[i] = 2.0 * uniform01(60 + trial, i) - 1.0;
        const auto au = a.multiply(u.data);
        double bulk = 0.0, quad = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double w = u[i] * u[i] - 1.0;
            bulk += w * w;
            quad += u[i] * au[i];
        }
        const double ref = h2 * (0.25 * bulk - 0.5 * quad);
        CHECK(discrete_energy(u, cache) == doctest::Approx(ref).epsilon(1e-10));
        // A is negative semidefinite so the energy dominates the bulk term
        CHECK(discrete_energy(u, cache) >= h2 * 0.25 * bulk - 1e-12);
    }
}

TEST_CASE("order_from_errors") {
    const OrderTable exact = order_from_errors({4e-4, 1e-4});
    CHECK(!exact.rows[0].order.has_value());
    CHECK(*exact.rows[1].order == doctest::Approx(2.0).epsilon(1e-14));

    const OrderTable flat = order_from_errors({1e-3, 1e-3});
    CHECK(*flat.rows[1].order == doctest::Approx(0.0).epsilon(1e-14));

    CHECK_THROWS_AS(order_from_errors({1e-3}), std::invalid_argument);
    CHECK_THROWS_AS(order_from_errors({1e-3, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(order_from_errors({1e-3, -1e-4}), std::invalid_argument);
}

TEST_CASE("order_from_errors is scale invariant") {
    const std::vector<double> errors{3.1e-2, 8.3e-3, 2.0e-3, 5.2e-4};
    const OrderTable base = order_from_errors(errors);
    for (double scale : {1e-6, 1.0, 4.2e7}) {
        std::vector<double> scaled;
        for (double e : errors) scaled.push_back(scale * e);
        const OrderTable t = order_from_errors(scaled);
        for (std::size_t i = 1; i < t.rows.size(); ++i)
            CHECK(*t.rows[i].order == *base.rows[i].order);
    }
}

TEST_CASE("grid restriction picks coincident physical nodes") {
    GridSpec fine{2, 0.0, 1.0, {16, 16, 16}};
    GridSpec coarse{2, 0.0, 1.0, {8, 8, 8}};
    Field f = Field::zeros(fine);
    // encode the physical coordinates so coincidence is directly checkable
    for (std::size_t j = 0; j < 15; ++j)
        for (std::size_t i = 0; i < 15; ++i)
            f[i + 15 * j] = fine.node(0, i) + 100.0 * fine.node(1, j);
    const Field c = restrict_to_coarse(f, fine, coarse);
    for (std::size_t j = 0; j < 7; ++j)
        for (std::size_t i = 0; i < 7; ++i)
            CHECK(c[i + 7 * j] ==
                  doctest::Approx(coarse.node(0, i) + 100.0 * coarse.node(1, j)).epsilon(1e-15));

    GridSpec bad{2, 0.0, 1.0, {12, 12, 12}};
    CHECK_THROWS_AS(restrict_to_coarse(f, fine, bad), std::invalid_argument);
}
