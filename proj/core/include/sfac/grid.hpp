#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace sfac {

/// Uniform tensor-product grid on the cube [a,b]^d with homogeneous
/// Dirichlet boundaries.  Per axis ell the mesh has m[ell] cells of width
/// h[ell] = (b-a)/m[ell] and m[ell]-1 interior unknowns.
struct GridSpec {
    int dim = 2;  // 2 or 3
    double a = 0.0;
    double b = 1.0;
    std::array<std::size_t, 3> m{};  // subdivision counts, m[ell] >= 4

    double h(int axis) const { return (b - a) / static_cast<double>(m[axis]); }
    std::size_t interior(int axis) const { return m[axis] - 1; }
    std::size_t total_interior() const {
        std::size_t t = 1;
        for (int ell = 0; ell < dim; ++ell) t *= interior(ell);
        return t;
    }
    /// Physical coordinate of interior node index i (0-based) along an axis.
    double node(int axis, std::size_t i) const {
        return a + static_cast<double>(i + 1) * h(axis);
    }

    void validate() const;  // throws std::invalid_argument
};

/// Per-axis fractional orders, each strictly inside (1,2).
struct FracOrders {
    std::array<double, 3> alpha{};
    void validate(int dim) const;
};

/// Flattened tensor of interior unknowns.  The first axis is fastest:
/// flat index = i0 + n0*(i1 + n1*i2).
struct Field {
    std::vector<double> data;
    std::array<std::size_t, 3> shape{1, 1, 1};
    int dim = 2;

    static Field zeros(const GridSpec& grid);
    std::size_t size() const { return data.size(); }
    double& operator[](std::size_t i) { return data[i]; }
    double operator[](std::size_t i) const { return data[i]; }
};

}  // namespace sfac
