#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "sfac/coeffs.hpp"

namespace sfac {

/// First columns of the per-axis spatial operator B and of its circulant /
/// skew-circulant split B = C + S.  scale is the positive prefactor
/// -eps^2 / (2 h^alpha cos(alpha pi / 2)).
struct OperatorColumns {
    std::vector<double> b_col;
    std::vector<double> c_col;
    std::vector<double> s_col;
    double scale = 0.0;
};

/// Eigenvalues of the circulant and skew-circulant factors along one axis,
/// plus the twist phases that reduce the skew-circulant to a circulant.
///
/// Convention: the forward DFT uses the negative-exponent kernel with no
/// normalization; the inverse divides by n.  lam_c = DFT(c_col),
/// lam_s = DFT(twist * s_col), twist[j] = exp(-i pi j / n).  Both spectra
/// are real (symmetry) and nonpositive (diagonal dominance); tiny positive
/// real parts from roundoff are clamped to zero.
struct AxisSpectrum {
    std::vector<double> lam_c;
    std::vector<double> lam_s;
    std::vector<std::complex<double>> twist;
};

/// Fills b_col and scale from the weight table:
/// b_col[0] = scale*2*omega_1, b_col[1] = scale*(omega_0 + omega_2),
/// b_col[k] = scale*omega_{k+1} for k >= 2.  Needs weights up to omega_n.
OperatorColumns toeplitz_first_column(double alpha, double h, double eps,
                                      std::size_t n, const CoeffTable& weights);

/// Fills c_col and s_col from b_col using the symmetric-Toeplitz split:
/// c_0 = s_0 = b_0/2, c_k = (b_k + b_{n-k})/2, s_k = (b_k - b_{n-k})/2.
void split_circ_skew(OperatorColumns& cols);

/// Raw DFT of the first column; imaginary parts kept for inspection.
std::vector<std::complex<double>> spectrum_circulant(const std::vector<double>& c_col);

/// DFT of the twist-modulated first column.  Optionally hands back the
/// twist phases exp(-i pi j / n).
std::vector<std::complex<double>> spectrum_skew(
    const std::vector<double>& s_col,
    std::vector<std::complex<double>>* twist_out = nullptr);

/// Spectrum of the circulant / skew-circulant factors with reality and
/// nonpositivity enforced (asserted, then clamped).
AxisSpectrum axis_spectrum(const OperatorColumns& cols);

}  // namespace sfac
