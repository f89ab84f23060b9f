#pragma once

#include <functional>
#include <stdexcept>

#include "sfac/grid.hpp"
#include "sfac/spectral.hpp"

namespace sfac {

/// Thrown when a state escapes [-1,1] beyond the guard tolerance.
class MaxPrincipleError : public std::runtime_error {
public:
    MaxPrincipleError(std::size_t index, double value, long step);
    std::size_t index;
    double value;
    long step;  // -1 when raised outside the integration loop
};

struct SolverConfig {
    double eps = 0.0;
    double tau = 0.0;
    double t_end = 0.0;
    GridSpec grid;
    FracOrders orders;
    double max_norm_guard = 1e-12;

    /// Number of steps; t_end must be an integer multiple of tau
    /// (within 1e-12 relative), otherwise this throws.
    long step_count() const;
    void validate() const;
};

/// Exact flow of v' = v - v^3 over half_tau, applied entrywise:
/// v -> v / sqrt(v^2 + (1 - v^2) exp(-2 half_tau)).  Inputs within the
/// guard of [-1,1] are clamped; beyond it a MaxPrincipleError is raised.
void nonlinear_half_step(Field& field, double half_tau, double guard = 1e-12);

/// One step of the two-level scheme: nonlinear half step, inner-Strang
/// linear propagator, nonlinear half step.
Field strang_step(const Field& field, const SpectralCache& cache,
                  const SolverConfig& config);

/// Called after every full step with (step index starting at 1, time, state).
using StepObserver = std::function<void(long step, double t, const Field& u)>;

Field integrate(const Field& u0, const SolverConfig& config,
                const std::vector<StepObserver>& observers = {});

/// Variant reusing a prebuilt cache (cache tau must equal config tau).
Field integrate(const Field& u0, const SolverConfig& config, SpectralCache& cache,
                const std::vector<StepObserver>& observers);

}  // namespace sfac
