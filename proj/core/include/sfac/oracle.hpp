#pragma once

#include <cstddef>
#include <vector>

#include "sfac/coeffs.hpp"
#include "sfac/grid.hpp"
#include "sfac/stepper.hpp"

// Dense, slow reference implementations for verification at small sizes.
// Deliberately coded without the FFT fast path: assembly is literal
// entrywise, the exponential goes through eigendecomposition or Pade, and
// only the weight tables are shared with the production code.
namespace sfac::oracle {

/// Row-major square matrix.  Sizes above 4096 are refused.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n);

    std::size_t size() const { return n_; }
    double& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::vector<double> multiply(const std::vector<double>& x) const;
    DenseMatrix multiply(const DenseMatrix& other) const;
    DenseMatrix transpose() const;
    bool is_symmetric(double tol = 0.0) const;
    double norm_inf() const;  // max absolute row sum

    static DenseMatrix identity(std::size_t n);

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// Literal assembly of the lower-Hessenberg-like one-sided difference
/// matrix: D[i][j] = omega_{i-j+1} for i+1 >= j, with omega_0 on the
/// superdiagonal.
DenseMatrix dense_D_alpha(double alpha, std::size_t n, const CoeffTable& weights);

/// B = -eps^2 / (2 h^alpha cos(alpha pi/2)) (D + D^T).
DenseMatrix dense_B(double alpha, double h, double eps, std::size_t n);

/// Circulant / skew-circulant materialization from a first column.
DenseMatrix dense_circulant(const std::vector<double>& first_col);
DenseMatrix dense_skew_circulant(const std::vector<double>& first_col);

/// Kronecker-sum assembly of the full spatial operator on the grid.
DenseMatrix dense_A(const GridSpec& grid, const FracOrders& orders, double eps);

/// e^{tM}: symmetric eigendecomposition when M is symmetric, otherwise
/// scaling-and-squaring with the order-13 Pade approximant.
DenseMatrix dense_expm(const DenseMatrix& m, double t);

/// One-level Strang step: nonlinear half flow, dense e^{tau A}, nonlinear
/// half flow.  The linear part is the unsplit matrix exponential.
Field reference_strang_step(const Field& field, const SolverConfig& config);

/// Linear propagator e^{tau A} applied densely (no circulant split).
Field reference_linear_step(const Field& field, const SolverConfig& config);

}  // namespace sfac::oracle
