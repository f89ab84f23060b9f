#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

namespace sfac {

/// One-dimensional complex FFT of a fixed length.  Plans are created once
/// (under a global lock, FFTW planning is not thread-safe) and may then be
/// executed concurrently on independent caller buffers.
///
/// Convention: forward uses the negative-exponent kernel, unnormalized;
/// inverse applies the positive-exponent kernel and divides by n.
class Fft1d {
public:
    explicit Fft1d(std::size_t n);
    ~Fft1d();
    Fft1d(const Fft1d&) = delete;
    Fft1d& operator=(const Fft1d&) = delete;

    std::size_t size() const { return n_; }

    // In-place transforms on a caller buffer of length n.
    void forward(std::complex<double>* buf) const;
    void inverse(std::complex<double>* buf) const;

private:
    struct Impl;
    std::size_t n_;
    std::unique_ptr<Impl> impl_;
};

// Convenience out-of-place helpers for small one-off transforms.
std::vector<std::complex<double>> dft_forward(const std::vector<std::complex<double>>& x);
std::vector<std::complex<double>> dft_inverse(const std::vector<std::complex<double>>& x);

}  // namespace sfac
