#include "sfac/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace sfac {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

struct Fft1d::Impl {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

Fft1d::Fft1d(std::size_t n) : n_(n), impl_(std::make_unique<Impl>()) {
    if (n == 0) throw std::invalid_argument("FFT length must be positive");
    std::lock_guard<std::mutex> lock(planner_mutex());
    std::vector<std::complex<double>> scratch(n);
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    impl_->fwd = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_FORWARD, flags);
    impl_->bwd = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_BACKWARD, flags);
    if (!impl_->fwd || !impl_->bwd) throw std::runtime_error("FFTW planning failed");
}

Fft1d::~Fft1d() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (impl_->fwd) fftw_destroy_plan(impl_->fwd);
    if (impl_->bwd) fftw_destroy_plan(impl_->bwd);
}

void Fft1d::forward(std::complex<double>* buf) const {
    auto* p = reinterpret_cast<fftw_complex*>(buf);
    fftw_execute_dft(impl_->fwd, p, p);
}

void Fft1d::inverse(std::complex<double>* buf) const {
    auto* p = reinterpret_cast<fftw_complex*>(buf);
    fftw_execute_dft(impl_->bwd, p, p);
    const double inv = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) buf[i] *= inv;
}

std::vector<std::complex<double>> dft_forward(const std::vector<std::complex<double>>& x) {
    Fft1d fft(x.size());
    std::vector<std::complex<double>> y = x;
    fft.forward(y.data());
    return y;
}

std::vector<std::complex<double>> dft_inverse(const std::vector<std::complex<double>>& x) {
    Fft1d fft(x.size());
    std::vector<std::complex<double>> y = x;
    fft.inverse(y.data());
    return y;
}

}  // namespace sfac
