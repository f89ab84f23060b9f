#include "sfac/operators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sfac/fft.hpp"

namespace sfac {

OperatorColumns toeplitz_first_column(double alpha, double h, double eps,
                                      std::size_t n, const CoeffTable& weights) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw std::domain_error("alpha must lie in (1,2)");
    if (n < 3) throw std::invalid_argument("need at least 3 interior unknowns");
    if (weights.omega.size() < n + 1)
        throw std::invalid_argument("weight table too short for requested column");

    OperatorColumns cols;
    // cos(alpha*pi/2) < 0 for alpha in (1,2), so scale >= 0.
    cols.scale = -eps * eps /
                 (2.0 * std::pow(h, alpha) * std::cos(alpha * std::numbers::pi / 2.0));
    const auto& w = weights.omega;
    cols.b_col.resize(n);
    cols.b_col[0] = cols.scale * 2.0 * w[1];
    cols.b_col[1] = cols.scale * (w[0] + w[2]);
    for (std::size_t k = 2; k < n; ++k) cols.b_col[k] = cols.scale * w[k + 1];
    return cols;
}

void split_circ_skew(OperatorColumns& cols) {
    const std::size_t n = cols.b_col.size();
    if (n == 0) throw std::invalid_argument("b_col not filled");
    cols.c_col.resize(n);
    cols.s_col.resize(n);
    cols.c_col[0] = 0.5 * cols.b_col[0];
    cols.s_col[0] = 0.5 * cols.b_col[0];
    for (std::size_t k = 1; k < n; ++k) {
        cols.c_col[k] = 0.5 * (cols.b_col[k] + cols.b_col[n - k]);
        cols.s_col[k] = 0.5 * (cols.b_col[k] - cols.b_col[n - k]);
    }
}

std::vector<std::complex<double>> spectrum_circulant(const std::vector<double>& c_col) {
    std::vector<std::complex<double>> buf(c_col.begin(), c_col.end());
    return dft_forward(buf);
}

std::vector<std::complex<double>> spectrum_skew(
    const std::vector<double>& s_col, std::vector<std::complex<double>>* twist_out) {
    const std::size_t n = s_col.size();
    std::vector<std::complex<double>> twist(n);
    std::vector<std::complex<double>> buf(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double phase = -std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        twist[j] = std::polar(1.0, phase);
        buf[j] = twist[j] * s_col[j];
    }
    auto lam = dft_forward(buf);
    if (twist_out) *twist_out = std::move(twist);
    return lam;
}

namespace {
// Symmetry makes both spectra real and diagonal dominance makes them
// nonpositive; residues beyond these bounds indicate a broken column.
std::vector<double> realize_nonpositive(const std::vector<std::complex<double>>& lam,
                                        double imag_tol, double real_tol) {
    double norm = 0.0;
    for (const auto& z : lam) norm = std::max(norm, std::abs(z));
    const double scale = std::max(norm, 1.0);
    std::vector<double> out(lam.size());
    for (std::size_t j = 0; j < lam.size(); ++j) {
        if (std::abs(lam[j].imag()) > imag_tol * scale)
            throw std::runtime_error("axis spectrum has unexpected imaginary part");
        if (lam[j].real() > real_tol * scale)
            throw std::runtime_error("axis spectrum has unexpected positive eigenvalue");
        out[j] = std::min(lam[j].real(), 0.0);
    }
    return out;
}
}  // namespace

AxisSpectrum axis_spectrum(const OperatorColumns& cols) {
    if (cols.c_col.empty() || cols.s_col.empty())
        throw std::invalid_argument("columns not split yet");
    AxisSpectrum spec;
    spec.lam_c = realize_nonpositive(spectrum_circulant(cols.c_col), 1e-10, 1e-12);
    auto lam_s = spectrum_skew(cols.s_col, &spec.twist);
    spec.lam_s = realize_nonpositive(lam_s, 1e-10, 1e-12);
    return spec;
}

}  // namespace sfac
