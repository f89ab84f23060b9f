#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sfac/grid.hpp"
#include "sfac/spectral.hpp"

namespace sfac {

double max_norm(const Field& field);

/// Sup norm of the pointwise difference; shapes must match.
double error_inf(const Field& a, const Field& b);

/// Discrete Ginzburg-Landau energy
///   (prod h) * ( 1/4 sum (u^2 - 1)^2  -  1/2 u^T (A u) )
/// with A u computed spectrally through the cache.
double discrete_energy(const Field& field, const SpectralCache& cache);

struct OrderRow {
    std::string label;
    double error = 0.0;
    std::optional<double> order;  // empty on the first row
};

struct OrderTable {
    std::vector<OrderRow> rows;
};

/// orders[i] = log2(errors[i-1] / errors[i]); all errors must be positive.
OrderTable order_from_errors(const std::vector<double>& errors,
                             const std::vector<std::string>& labels = {});

/// Restricts a fine-grid solution onto the coarse grid at coincident
/// physical nodes.  Both grids must cover the same domain and every
/// coarse subdivision count must divide the fine one.
Field restrict_to_coarse(const Field& fine, const GridSpec& fine_grid,
                         const GridSpec& coarse_grid);

}  // namespace sfac
