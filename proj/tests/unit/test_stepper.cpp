#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sfac/diagnostics.hpp"
#include "sfac/oracle.hpp"
#include "sfac/rng.hpp"
#include "sfac/stepper.hpp"

using namespace sfac;

namespace {

GridSpec small_grid() { return GridSpec{2, 0.0, 1.0, {9, 9, 9}}; }

Field random_field(const GridSpec& grid, std::uint64_t seed, double scale = 1.0) {
    Field f = Field::zeros(grid);
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = scale * (2.0 * uniform01(seed, i) - 1.0);
    return f;
}

SolverConfig config_for(const GridSpec& grid, double eps, double tau, double t_end) {
    SolverConfig sc;
    sc.eps = eps;
    sc.tau = tau;
    sc.t_end = t_end;
    sc.grid = grid;
    sc.orders = FracOrders{{1.4, 1.6, 1.5}};
    return sc;
}

// High-accuracy RK4 oracle for v' = v - v^3.
double rk4_bernoulli(double v0, double t) {
    const int n = 20000;
    const double dt = t / n;
    double v = v0;
    auto f = [](double x) { return x - x * x * x; };
    for (int i = 0; i < n; ++i) {
        const double k1 = f(v);
        const double k2 = f(v + 0.5 * dt * k1);
        const double k3 = f(v + 0.5 * dt * k2);
        const double k4 = f(v + dt * k3);
        v += dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    return v;
}

Field scalar_field(const GridSpec& grid, double v) {
    Field f = Field::zeros(grid);
    for (double& x : f.data) x = v;
    return f;
}

}  // namespace

TEST_CASE("nonlinear flow fixed points") {
    const GridSpec grid = small_grid();
    for (double tau : {0.1, 5.0}) {
        for (double v : {0.0, 1.0, -1.0}) {
            Field f = scalar_field(grid, v);
            nonlinear_half_step(f, tau);
            for (double x : f.data) CHECK(x == doctest::Approx(v).epsilon(1e-15));
        }
    }
}

TEST_CASE("nonlinear flow closed form matches the RK4 oracle") {
    Field f = scalar_field(small_grid(), 0.6);
    nonlinear_half_step(f, 0.5);
    // frozen: 0.6 / sqrt(0.36 + 0.64 exp(-1)) = 0.77755...
    CHECK(f[0] == doctest::Approx(0.777556).epsilon(1e-6));
    CHECK(f[0] == doctest::Approx(rk4_bernoulli(0.6, 0.5)).epsilon(1e-10));
    CHECK(f[0] == doctest::Approx(0.6 / std::sqrt(0.36 + 0.64 * std::exp(-1.0))).epsilon(1e-15));
}

TEST_CASE("nonlinear flow keeps magnitudes at most one") {
    const GridSpec grid = small_grid();
    for (double tau : {0.01, 0.5, 10.0}) {
        Field f = random_field(grid, 31);
        nonlinear_half_step(f, tau);
        CHECK(max_norm(f) <= 1.0);
    }
}

TEST_CASE("guard clamps slight overshoot and rejects real violations") {
    Field f = scalar_field(small_grid(), 1.0 + 1e-13);
    nonlinear_half_step(f, 0.1, 1e-12);
    CHECK(max_norm(f) <= 1.0);

    Field bad = scalar_field(small_grid(), 1.5);
    bad[5] = 1.5;
    CHECK_THROWS_AS(nonlinear_half_step(bad, 0.1, 1e-12), MaxPrincipleError);
    try {
        Field b2 = scalar_field(small_grid(), 0.0);
        b2[7] = -1.1;
        nonlinear_half_step(b2, 0.1, 1e-12);
        FAIL("expected MaxPrincipleError");
    } catch (const MaxPrincipleError& e) {
        CHECK(e.index == 7);
        CHECK(e.value == -1.1);
    }
}

TEST_CASE("strang_step fixed point at zero and max principle") {
    const GridSpec grid = small_grid();
    SolverConfig sc = config_for(grid, 1.0, 0.3, 0.3);
    SpectralCache cache(grid, sc.orders, sc.eps, sc.tau);

    const Field z = strang_step(Field::zeros(grid), cache, sc);
    for (double v : z.data) CHECK(v == 0.0);

    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        const Field u = random_field(grid, 400 + trial);
        CHECK(max_norm(strang_step(u, cache, sc)) <= 1.0);
    }
}

TEST_CASE("strang_step rejects a cache built for another tau") {
    const GridSpec grid = small_grid();
    SolverConfig sc = config_for(grid, 1.0, 0.3, 0.3);
    SpectralCache cache(grid, sc.orders, sc.eps, 0.5);
    CHECK_THROWS_AS(strang_step(Field::zeros(grid), cache, sc), std::invalid_argument);
}

TEST_CASE("one step vs one-level oracle: order at least 2.7 in tau") {
    const GridSpec grid = small_grid();
    const Field u = random_field(grid, 55, 0.9);
    // eps small enough that tau = 0.2 is inside the asymptotic regime
    auto gap = [&](double tau) {
        SolverConfig sc = config_for(grid, 0.1, tau, tau);
        SpectralCache cache(grid, sc.orders, sc.eps, tau);
        const Field two = strang_step(u, cache, sc);
        const Field one = oracle::reference_strang_step(u, sc);
        return error_inf(two, one);
    };
    const double g1 = gap(0.2), g2 = gap(0.1), g3 = gap(0.05);
    CHECK(std::log2(g1 / g2) >= 2.7);
    CHECK(std::log2(g2 / g3) >= 2.7);
}

TEST_CASE("integrate respects t_end and the step contract") {
    const GridSpec grid = small_grid();
    const Field u0 = random_field(grid, 66, 0.9);

    SUBCASE("t_end = 0 returns u0 unchanged") {
        SolverConfig sc = config_for(grid, 1.0, 0.1, 0.0);
        const Field u = integrate(u0, sc);
        CHECK(error_inf(u, u0) == 0.0);
    }

    SUBCASE("t_end not a multiple of tau is rejected") {
        SolverConfig sc = config_for(grid, 1.0, 0.3, 1.0);
        CHECK_THROWS_AS(integrate(u0, sc), std::invalid_argument);
    }

    SUBCASE("N steps equal N explicit strang_step calls bitwise") {
        SolverConfig sc = config_for(grid, 1.0, 0.1, 0.5);
        SpectralCache cache(grid, sc.orders, sc.eps, sc.tau);
        Field manual = u0;
        for (int s = 0; s < 5; ++s) manual = strang_step(manual, cache, sc);
        const Field loop = integrate(u0, sc);
        CHECK(error_inf(loop, manual) == 0.0);
    }

    SUBCASE("observers fire once per step with increasing time") {
        SolverConfig sc = config_for(grid, 1.0, 0.1, 0.5);
        std::vector<long> steps;
        std::vector<double> times;
        integrate(u0, sc, {[&](long s, double t, const Field&) {
                      steps.push_back(s);
                      times.push_back(t);
                  }});
        CHECK(steps == std::vector<long>{1, 2, 3, 4, 5});
        CHECK(times.back() == doctest::Approx(0.5).epsilon(1e-14));
    }
}

TEST_CASE("unconditional max principle across step sizes") {
    const GridSpec grid = small_grid();
    for (double tau : {0.01, 0.1, 1.0, 10.0}) {
        SolverConfig sc = config_for(grid, 1.0, tau, 10 * tau);
        const Field u0 = random_field(grid, 314, 1.0);
        double worst = 0.0;
        integrate(u0, sc, {[&](long, double, const Field& u) {
                      worst = std::max(worst, max_norm(u));
                  }});
        CHECK(worst <= 1.0 + 1e-13);
    }
}

TEST_CASE("temporal self-convergence order is 2") {
    const GridSpec grid = small_grid();
    const Field u0 = random_field(grid, 42, 0.9);
    auto run = [&](double tau) {
        SolverConfig sc = config_for(grid, 0.1, tau, 1.0);
        return integrate(u0, sc);
    };
    std::vector<double> errors;
    Field prev = run(0.2);
    for (double tau : {0.1, 0.05, 0.025, 0.0125, 0.00625}) {
        Field cur = run(tau);
        errors.push_back(error_inf(prev, cur));
        prev = std::move(cur);
    }
    const OrderTable t = order_from_errors(errors);
    for (std::size_t i = 1; i < t.rows.size(); ++i)
        CHECK(*t.rows[i].order == doctest::Approx(2.0).epsilon(0.025));
}

TEST_CASE("eps = 0 reduces the integrator to the exact entrywise flow") {
    const GridSpec grid = small_grid();
    const Field u0 = random_field(grid, 27, 0.8);
    SolverConfig sc = config_for(grid, 0.0, 0.25, 1.0);
    const Field u = integrate(u0, sc);
    // composition of exact Bernoulli flows is the exact flow over t_end
    for (std::size_t i = 0; i < u0.size(); ++i) {
        const double v = u0[i];
        const double ref = v / std::sqrt(v * v + (1 - v * v) * std::exp(-2.0 * sc.t_end));
        CHECK(u[i] == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("degenerate substeps reduce to the identity") {
    const GridSpec grid = small_grid();
    const FracOrders orders{{1.4, 1.6, 1.5}};
    const Field u0 = random_field(grid, 91, 0.9);
    Field nonlinear_off = u0;
    nonlinear_half_step(nonlinear_off, 0.0);
    CHECK(error_inf(nonlinear_off, u0) == 0.0);  // identity at half_tau = 0
    SpectralCache cache(grid, orders, 1.0, 0.0);
    // identity at tau = 0 up to the FFT round-trip roundoff
    CHECK(error_inf(linear_step(u0, cache), u0) < 1e-14);
    // the split propagator is NOT a semigroup across tau: two steps at tau
    // differ from one step at 2 tau by an O(tau^3) commutator defect
    SpectralCache c1(grid, orders, 0.1, 0.1), c2(grid, orders, 0.1, 0.2);
    const double defect =
        error_inf(linear_step(linear_step(u0, c1), c1), linear_step(u0, c2));
    CHECK(defect > 0.0);
    CHECK(defect < 1e-3);
}
