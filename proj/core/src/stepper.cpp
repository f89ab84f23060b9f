#include "sfac/stepper.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>

#include "sfac/parallel.hpp"

namespace sfac {

MaxPrincipleError::MaxPrincipleError(std::size_t index_, double value_, long step_)
    : std::runtime_error("maximum principle violated at entry " + std::to_string(index_) +
                         " (value " + std::to_string(value_) + ", step " +
                         std::to_string(step_) + ")"),
      index(index_), value(value_), step(step_) {}

long SolverConfig::step_count() const {
    if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
    if (t_end < 0.0) throw std::invalid_argument("t_end must be nonnegative");
    const double ratio = t_end / tau;
    const long n = std::lround(ratio);
    if (std::abs(ratio - static_cast<double>(n)) > 1e-12 * std::max(ratio, 1.0))
        throw std::invalid_argument("t_end must be an integer multiple of tau");
    return n;
}

void SolverConfig::validate() const {
    grid.validate();
    orders.validate(grid.dim);
    if (!(eps >= 0.0)) throw std::invalid_argument("eps must be nonnegative");
    (void)step_count();
}

void nonlinear_half_step(Field& field, double half_tau, double guard) {
    const double decay = std::exp(-2.0 * half_tau);
    const std::size_t n = field.size();
    constexpr std::size_t kChunk = 4096;
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    std::atomic<bool> violated{false};
    std::atomic<std::size_t> bad_index{0};
    parallel_for(chunks, [&](std::size_t c, std::size_t) {
        const std::size_t lo = c * kChunk;
        const std::size_t hi = std::min(n, lo + kChunk);
        for (std::size_t i = lo; i < hi; ++i) {
            double v = field[i];
            const double av = std::abs(v);
            if (av > 1.0) {
                if (av > 1.0 + guard) {
                    bool expected = false;
                    if (violated.compare_exchange_strong(expected, true)) bad_index = i;
                    return;
                }
                v = std::copysign(1.0, v);
            }
            field[i] = v / std::sqrt(v * v + (1.0 - v * v) * decay);
        }
    });
    if (violated) throw MaxPrincipleError(bad_index, field[bad_index], -1);
}

Field strang_step(const Field& field, const SpectralCache& cache,
                  const SolverConfig& config) {
    if (cache.tau() != config.tau)
        throw std::invalid_argument("cache was built for a different tau");
    Field u = field;
    nonlinear_half_step(u, 0.5 * config.tau, config.max_norm_guard);
    u = linear_step(u, cache);
    nonlinear_half_step(u, 0.5 * config.tau, config.max_norm_guard);
    return u;
}

Field integrate(const Field& u0, const SolverConfig& config, SpectralCache& cache,
                const std::vector<StepObserver>& observers) {
    config.validate();
    const long steps = config.step_count();
    Field u = u0;
    for (long s = 1; s <= steps; ++s) {
        try {
            u = strang_step(u, cache, config);
        } catch (const MaxPrincipleError& e) {
            throw MaxPrincipleError(e.index, e.value, s);
        }
        const double t = static_cast<double>(s) * config.tau;
        for (const auto& obs : observers) obs(s, t, u);
    }
    return u;
}

Field integrate(const Field& u0, const SolverConfig& config,
                const std::vector<StepObserver>& observers) {
    config.validate();
    SpectralCache cache(config.grid, config.orders, config.eps, config.tau);
    return integrate(u0, config, cache, observers);
}

}  // namespace sfac
