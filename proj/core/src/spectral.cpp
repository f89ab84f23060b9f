#include "sfac/spectral.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "sfac/parallel.hpp"

namespace sfac {

SpectralCache::SpectralCache(const GridSpec& grid, const FracOrders& orders,
                             double eps, double tau)
    : grid_(grid), eps_(eps), tau_(tau) {
    grid.validate();
    orders.validate(grid.dim);
    if (tau < 0.0) throw std::invalid_argument("tau must be nonnegative");

    spectra_.resize(grid.dim);
    ffts_.resize(grid.dim);
    for (int ax = 0; ax < grid.dim; ++ax) {
        const std::size_t n = grid.interior(ax);
        const CoeffTable table = make_coeff_table(orders.alpha[ax], n);
        OperatorColumns cols =
            toeplitz_first_column(orders.alpha[ax], grid.h(ax), eps, n, table);
        split_circ_skew(cols);
        spectra_[ax] = axis_spectrum(cols);
        for (int prev = 0; prev < ax; ++prev) {
            if (grid.interior(prev) == n) {
                ffts_[ax] = ffts_[prev];
                break;
            }
        }
        if (!ffts_[ax]) ffts_[ax] = std::make_shared<Fft1d>(n);
    }
    retune(tau);
}

void SpectralCache::retune(double tau) {
    if (tau < 0.0) throw std::invalid_argument("tau must be nonnegative");
    tau_ = tau;
    exp_c_half_.assign(grid_.dim, {});
    exp_s_full_.assign(grid_.dim, {});
    for (int ax = 0; ax < grid_.dim; ++ax) {
        const auto& spec = spectra_[ax];
        exp_c_half_[ax].resize(spec.lam_c.size());
        exp_s_full_[ax].resize(spec.lam_s.size());
        for (std::size_t j = 0; j < spec.lam_c.size(); ++j)
            exp_c_half_[ax][j] = std::exp(0.5 * tau * spec.lam_c[j]);
        for (std::size_t j = 0; j < spec.lam_s.size(); ++j)
            exp_s_full_[ax][j] = std::exp(tau * spec.lam_s[j]);
    }
}

namespace {

struct AxisLayout {
    std::size_t n;       // line length
    std::size_t stride;  // element stride within a line
    std::size_t lines;   // number of lines
};

AxisLayout axis_layout(const Field& field, int axis) {
    if (axis < 0 || axis >= field.dim) throw std::invalid_argument("axis out of range");
    AxisLayout lay;
    lay.n = field.shape[axis];
    lay.stride = 1;
    for (int k = 0; k < axis; ++k) lay.stride *= field.shape[k];
    lay.lines = field.size() / lay.n;
    return lay;
}

std::size_t line_base(const AxisLayout& lay, std::size_t line) {
    const std::size_t inner = line % lay.stride;
    const std::size_t outer = line / lay.stride;
    return inner + outer * lay.stride * lay.n;
}

// Shared line kernel: gather, optional twist, forward FFT, multiply,
// inverse FFT, optional conjugate twist, scatter the real part.  The
// imaginary residue must stay below 1e-10 of the line's sup norm.
void run_lines(const double* in, double* out, const AxisLayout& lay, const Fft1d& fft,
               const std::vector<double>& mult, const std::complex<double>* twist,
               bool accumulate) {
    const std::size_t n = lay.n;
    if (mult.size() != n) throw std::invalid_argument("multiplier length mismatch");

    double mult_norm = 0.0;
    for (double m : mult) mult_norm = std::max(mult_norm, std::abs(m));
    mult_norm = std::max(mult_norm, 1.0);

    std::vector<std::vector<std::complex<double>>> scratch(worker_count());
    parallel_for(lay.lines, [&](std::size_t line, std::size_t w) {
        auto& buf = scratch[w];
        buf.resize(n);
        const std::size_t base = line_base(lay, line);
        double line_norm = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double v = in[base + j * lay.stride];
            line_norm = std::max(line_norm, std::abs(v));
            buf[j] = twist ? twist[j] * v : std::complex<double>(v, 0.0);
        }
        fft.forward(buf.data());
        for (std::size_t j = 0; j < n; ++j) buf[j] *= mult[j];
        fft.inverse(buf.data());
        if (twist)
            for (std::size_t j = 0; j < n; ++j) buf[j] *= std::conj(twist[j]);
        const double imag_tol = 1e-10 * std::max(line_norm * mult_norm, 1e-300);
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(buf[j].imag()) > imag_tol)
                throw std::runtime_error("spectral line application left an imaginary residue");
            double* dst = out + base + j * lay.stride;
            if (accumulate)
                *dst += buf[j].real();
            else
                *dst = buf[j].real();
        }
    });
}

void check_field(const Field& field, const SpectralCache& cache) {
    if (field.dim != cache.grid().dim ||
        field.size() != cache.grid().total_interior())
        throw std::invalid_argument("field shape does not match cache grid");
}

}  // namespace

void apply_exp_circulant(Field& field, int axis, const SpectralCache& cache) {
    check_field(field, cache);
    const AxisLayout lay = axis_layout(field, axis);
    run_lines(field.data.data(), field.data.data(), lay, cache.fft(axis),
              cache.exp_c_half(axis), nullptr, false);
}

void apply_exp_skew(Field& field, int axis, const SpectralCache& cache) {
    check_field(field, cache);
    const AxisLayout lay = axis_layout(field, axis);
    run_lines(field.data.data(), field.data.data(), lay, cache.fft(axis),
              cache.exp_s_full(axis), cache.spectrum(axis).twist.data(), false);
}

Field linear_step(const Field& field, const SpectralCache& cache) {
    check_field(field, cache);
    Field out = field;
    for (int ax = 0; ax < field.dim; ++ax) apply_exp_circulant(out, ax, cache);
    for (int ax = 0; ax < field.dim; ++ax) apply_exp_skew(out, ax, cache);
    for (int ax = 0; ax < field.dim; ++ax) apply_exp_circulant(out, ax, cache);
    return out;
}

Field apply_A(const Field& field, const SpectralCache& cache) {
    check_field(field, cache);
    Field out = field;
    out.data.assign(field.size(), 0.0);
    for (int ax = 0; ax < field.dim; ++ax) {
        const AxisLayout lay = axis_layout(field, ax);
        const auto& spec = cache.spectrum(ax);
        run_lines(field.data.data(), out.data.data(), lay, cache.fft(ax),
                  spec.lam_c, nullptr, true);
        run_lines(field.data.data(), out.data.data(), lay, cache.fft(ax),
                  spec.lam_s, spec.twist.data(), true);
    }
    return out;
}

}  // namespace sfac
