#include "sfac/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace sfac {

double max_norm(const Field& field) {
    double m = 0.0;
    for (double v : field.data) m = std::max(m, std::abs(v));
    return m;
}

double error_inf(const Field& a, const Field& b) {
    if (a.shape != b.shape || a.dim != b.dim)
        throw std::invalid_argument("field shapes do not match");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double discrete_energy(const Field& field, const SpectralCache& cache) {
    const GridSpec& grid = cache.grid();
    double cell = 1.0;
    for (int ax = 0; ax < grid.dim; ++ax) cell *= grid.h(ax);

    double bulk = 0.0;
    for (double v : field.data) {
        const double w = v * v - 1.0;
        bulk += w * w;
    }

    const Field au = apply_A(field, cache);
    double quad = 0.0;
    for (std::size_t i = 0; i < field.size(); ++i) quad += field[i] * au[i];

    return cell * (0.25 * bulk - 0.5 * quad);
}

OrderTable order_from_errors(const std::vector<double>& errors,
                             const std::vector<std::string>& labels) {
    if (errors.size() < 2)
        throw std::invalid_argument("need at least two errors for an order table");
    if (!labels.empty() && labels.size() != errors.size())
        throw std::invalid_argument("label count mismatch");
    OrderTable table;
    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (!(errors[i] > 0.0))
            throw std::invalid_argument("errors must be positive");
        OrderRow row;
        row.label = labels.empty() ? std::to_string(i) : labels[i];
        row.error = errors[i];
        if (i > 0) row.order = std::log2(errors[i - 1] / errors[i]);
        table.rows.push_back(std::move(row));
    }
    return table;
}

Field restrict_to_coarse(const Field& fine, const GridSpec& fine_grid,
                         const GridSpec& coarse_grid) {
    if (fine_grid.dim != coarse_grid.dim || fine_grid.a != coarse_grid.a ||
        fine_grid.b != coarse_grid.b)
        throw std::invalid_argument("grids cover different domains");
    std::array<std::size_t, 3> ratio{1, 1, 1};
    for (int ax = 0; ax < fine_grid.dim; ++ax) {
        if (fine_grid.m[ax] % coarse_grid.m[ax] != 0)
            throw std::invalid_argument("grids are not nested");
        ratio[ax] = fine_grid.m[ax] / coarse_grid.m[ax];
    }
    Field coarse = Field::zeros(coarse_grid);
    const auto& fs = fine.shape;
    std::array<std::size_t, 3> ci{0, 0, 0};
    for (std::size_t flat = 0; flat < coarse.size(); ++flat) {
        // coarse interior node (i+1)*h_c sits at fine interior index
        // (i+1)*ratio - 1
        std::size_t fflat = 0;
        std::size_t mulf = 1;
        for (int ax = 0; ax < fine_grid.dim; ++ax) {
            const std::size_t fi = (ci[ax] + 1) * ratio[ax] - 1;
            fflat += fi * mulf;
            mulf *= fs[ax];
        }
        coarse[flat] = fine[fflat];
        for (int ax = 0; ax < coarse.dim; ++ax) {
            if (++ci[ax] < coarse.shape[ax]) break;
            ci[ax] = 0;
        }
    }
    return coarse;
}

}  // namespace sfac
