#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sfac/oracle.hpp"
#include "sfac/rng.hpp"

using namespace sfac;
using oracle::DenseMatrix;

TEST_CASE("dense_D_alpha layout at n = 3, alpha = 1.5") {
    const CoeffTable t = make_coeff_table(1.5, 3);
    const DenseMatrix d = oracle::dense_D_alpha(1.5, 3, t);
    CHECK(d.at(0, 0) == doctest::Approx(-0.875).epsilon(1e-15));
    CHECK(d.at(0, 1) == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(d.at(1, 0) == doctest::Approx(-0.09375).epsilon(1e-15));
    CHECK(d.at(0, 2) == 0.0);

    // first column is omega_1..omega_n
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(d.at(i, 0) == t.omega[i + 1]);

    // D + D^T symmetric by construction
    const DenseMatrix sum = [&] {
        DenseMatrix s(3);
        const DenseMatrix dt = d.transpose();
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) s.at(i, j) = d.at(i, j) + dt.at(i, j);
        return s;
    }();
    CHECK(sum.is_symmetric());
}

TEST_CASE("dense_B is symmetric and splits into dense C + S exactly") {
    const std::size_t n = 9;
    const double alpha = 1.4, h = 0.125, eps = 0.7;
    const DenseMatrix b = oracle::dense_B(alpha, h, eps, n);
    CHECK(b.is_symmetric());

    const CoeffTable t = make_coeff_table(alpha, n);
    OperatorColumns cols = toeplitz_first_column(alpha, h, eps, n, t);
    split_circ_skew(cols);
    const DenseMatrix c = oracle::dense_circulant(cols.c_col);
    const DenseMatrix s = oracle::dense_skew_circulant(cols.s_col);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            CHECK(c.at(i, j) + s.at(i, j) == doctest::Approx(b.at(i, j)).epsilon(1e-14));
    // first column of B matches the fast-path assembly
    for (std::size_t i = 0; i < n; ++i)
        CHECK(b.at(i, 0) == doctest::Approx(cols.b_col[i]).epsilon(1e-14));
}

TEST_CASE("dense_expm basics") {
    const DenseMatrix zero(4);
    const DenseMatrix id = oracle::dense_expm(zero, 1.0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(id.at(i, j) == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-15));

    DenseMatrix diag(2);
    diag.at(0, 0) = -1.0;
    diag.at(1, 1) = -2.0;
    const DenseMatrix e = oracle::dense_expm(diag, 1.0);
    CHECK(e.at(0, 0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(e.at(1, 1) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    CHECK(std::abs(e.at(0, 1)) < 1e-15);
}

TEST_CASE("dense_expm semigroup on a random symmetric matrix") {
    DenseMatrix m(8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = uniform01(17, i * 8 + j) - 0.5;
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    const DenseMatrix a = oracle::dense_expm(m, 0.3);
    const DenseMatrix b = oracle::dense_expm(m, 0.7);
    const DenseMatrix ab = a.multiply(b);
    const DenseMatrix full = oracle::dense_expm(m, 1.0);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            CHECK(std::abs(ab.at(i, j) - full.at(i, j)) < 1e-12);
}

TEST_CASE("pade path agrees with the eigendecomposition path") {
    // a non-symmetric matrix with a known exponential: block rotation
    DenseMatrix r(2);
    r.at(0, 1) = -1.0;
    r.at(1, 0) = 1.0;
    const double t = 0.8;
    const DenseMatrix e = oracle::dense_expm(r, t);
    CHECK(e.at(0, 0) == doctest::Approx(std::cos(t)).epsilon(1e-13));
    CHECK(e.at(0, 1) == doctest::Approx(-std::sin(t)).epsilon(1e-13));
    CHECK(e.at(1, 0) == doctest::Approx(std::sin(t)).epsilon(1e-13));
}

TEST_CASE("size guard refuses oversized matrices") {
    CHECK_THROWS_AS(DenseMatrix(5000), std::invalid_argument);
    CHECK_THROWS_AS(oracle::dense_B(1.5, 0.1, 1.0, 4097), std::invalid_argument);
}

TEST_CASE("reference_strang_step basics") {
    GridSpec grid{2, 0.0, 1.0, {9, 9, 9}};
    SolverConfig sc;
    sc.eps = 1.0;
    sc.tau = 0.0;
    sc.t_end = 0.0;
    sc.grid = grid;
    sc.orders = FracOrders{{1.4, 1.6, 1.5}};

    Field u = Field::zeros(grid);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = 2.0 * uniform01(5, i) - 1.0;

    SUBCASE("tau = 0 is the identity") {
        const Field v = oracle::reference_strang_step(u, sc);
        for (std::size_t i = 0; i < u.size(); ++i)
            CHECK(v[i] == doctest::Approx(u[i]).epsilon(1e-13));
    }

    SUBCASE("max principle holds for the one-level scheme") {
        sc.tau = 0.5;
        const Field v = oracle::reference_strang_step(u, sc);
        double m = 0.0;
        for (double x : v.data) m = std::max(m, std::abs(x));
        CHECK(m <= 1.0 + 1e-13);
    }
}

TEST_CASE("dense A matches apply_A columnwise on a tiny grid") {
    GridSpec grid{2, 0.0, 1.0, {5, 5, 5}};  // 4x4 interior
    const FracOrders orders{{1.3, 1.7, 1.5}};
    const double eps = 0.8;
    const DenseMatrix a = oracle::dense_A(grid, orders, eps);
    SpectralCache cache(grid, orders, eps, 0.1);
    for (std::size_t col = 0; col < 16; ++col) {
        Field e = Field::zeros(grid);
        e[col] = 1.0;
        const Field ae = apply_A(e, cache);
        for (std::size_t row = 0; row < 16; ++row)
            CHECK(std::abs(ae[row] - a.at(row, col)) < 1e-12);
    }
}
