#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sfac/diagnostics.hpp"
#include "sfac/grid.hpp"
#include "sfac/stepper.hpp"

namespace sfac {

enum class IcKind { GaussianPair, UniformRandom, AffineRandom };

/// Sum of two Gaussians amplitude * exp(-width * |x - center|^2).
struct GaussianPairIc {
    double amplitude = 0.5;
    double width = 100.0;
    std::array<double, 3> center1{};
    std::array<double, 3> center2{};
};

/// A full experiment description: solver inputs, initial condition,
/// output location, and the refinement chains the convergence drivers use.
struct ExperimentConfig {
    std::string experiment = "custom";
    int dim = 2;
    double a = 0.0;
    double b = 1.0;
    double eps = 0.1;
    std::array<double, 3> alpha{1.5, 1.5, 1.5};
    std::array<std::size_t, 3> m{64, 64, 64};
    double tau = 0.01;
    double t_end = 1.0;
    long steps = -1;  // overrides t_end when positive

    IcKind ic = IcKind::GaussianPair;
    GaussianPairIc gauss;
    double ic_lo = -0.9, ic_hi = 0.9;       // uniform-random
    double ic_scale = 0.95, ic_offset = 0.05;  // affine-random

    std::uint64_t seed = 1;
    std::string out_dir = ".";
    std::vector<double> snapshot_times;

    std::vector<double> tau_chain;       // conv-time, halving
    std::vector<std::size_t> m_chain;    // conv-space, nested under m_ref
    std::size_t m_ref = 0;

    GridSpec grid() const;
    SolverConfig solver() const;  // uses steps override when set
};

/// Parses flat `key = value` text (# comments, comma-separated lists).
/// An `experiment = exampleN` line loads that example's defaults first;
/// later keys override.  Throws std::invalid_argument on bad input.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);
void apply_experiment_defaults(ExperimentConfig& cfg);

/// Samples the configured initial condition at the interior nodes.
/// Random kinds draw from the counter-based generator keyed by
/// (seed, flat node index); the result is order- and thread-independent.
Field build_initial_condition(const ExperimentConfig& cfg);

// CSV helpers: header row, comma separator, 17 significant digits.
std::string format_float(double v);
void write_order_table_csv(const OrderTable& table, const std::string& value_label,
                           std::ostream& out);

/// Runs the solver once per tau in {2*chain[0]} + chain and tabulates
/// E_t(tau) = ||u(2 tau) - u(tau)||_inf with log2 orders.
OrderTable run_temporal_convergence(const ExperimentConfig& cfg);

/// Coarse runs over m_chain against a reference run at m_ref, compared at
/// coincident physical nodes.
OrderTable run_spatial_convergence(const ExperimentConfig& cfg);

struct TraceRow {
    long step;
    double time;
    double value;
};

std::vector<TraceRow> run_maxnorm_trace(const ExperimentConfig& cfg);
std::vector<TraceRow> run_energy_trace(const ExperimentConfig& cfg);
void write_trace_csv(const std::vector<TraceRow>& rows, const std::string& value_label,
                     std::ostream& out);

/// Integrates and dumps the field at each configured snapshot time
/// (little-endian f64 payload + text sidecar).  Times must be integer
/// multiples of tau.
void run_snapshots(const ExperimentConfig& cfg);

/// Plain run to t_end; returns the final state.
Field run_solver(const ExperimentConfig& cfg);

void write_field_dump(const Field& field, const GridSpec& grid, double time,
                      const std::string& path_stem);

}  // namespace sfac
