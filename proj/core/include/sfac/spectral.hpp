#pragma once

#include <memory>
#include <vector>

#include "sfac/fft.hpp"
#include "sfac/grid.hpp"
#include "sfac/operators.hpp"

namespace sfac {

/// Precomputed per-axis spectra and exponential multiplier arrays for a
/// fixed step size tau.  Spectra survive a tau change; only the
/// multipliers are rebuilt (see retune).
class SpectralCache {
public:
    SpectralCache(const GridSpec& grid, const FracOrders& orders, double eps, double tau);

    /// Rebuilds the exponential multipliers for a new step size,
    /// reusing the per-axis spectra.
    void retune(double tau);

    const GridSpec& grid() const { return grid_; }
    double tau() const { return tau_; }
    double eps() const { return eps_; }

    const AxisSpectrum& spectrum(int axis) const { return spectra_[axis]; }
    const std::vector<double>& exp_c_half(int axis) const { return exp_c_half_[axis]; }
    const std::vector<double>& exp_s_full(int axis) const { return exp_s_full_[axis]; }
    const Fft1d& fft(int axis) const { return *ffts_[axis]; }

private:
    GridSpec grid_;
    double eps_;
    double tau_;
    std::vector<AxisSpectrum> spectra_;
    std::vector<std::vector<double>> exp_c_half_;  // exp((tau/2) lam_c)
    std::vector<std::vector<double>> exp_s_full_;  // exp(tau lam_s)
    std::vector<std::shared_ptr<Fft1d>> ffts_;     // shared between equal-length axes
};

/// Applies exp((tau/2) C_axis) along one axis: per line, forward FFT,
/// multiply by the cached circulant exponentials, inverse FFT.
void apply_exp_circulant(Field& field, int axis, const SpectralCache& cache);

/// Skew-circulant analogue with the twist pre-multiply and conjugate-twist
/// post-multiply; applies exp(tau S_axis).
void apply_exp_skew(Field& field, int axis, const SpectralCache& cache);

/// The inner Strang propagator exp((tau/2)C) exp(tau S) exp((tau/2)C)
/// where each d-dimensional exponential factorizes into per-axis passes
/// (the Kronecker-sum terms commute).
Field linear_step(const Field& field, const SpectralCache& cache);

/// Action of the full spatial operator A = sum over axes of (C + S),
/// computed per line as lam_c and lam_s multipliers in Fourier space.
Field apply_A(const Field& field, const SpectralCache& cache);

}  // namespace sfac
