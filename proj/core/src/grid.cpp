#include "sfac/grid.hpp"

#include <stdexcept>
#include <string>

namespace sfac {

void GridSpec::validate() const {
    if (dim != 2 && dim != 3)
        throw std::invalid_argument("grid dimension must be 2 or 3");
    if (!(b > a)) throw std::invalid_argument("grid needs b > a");
    for (int ell = 0; ell < dim; ++ell) {
        if (m[ell] < 4)
            throw std::invalid_argument("axis " + std::to_string(ell) +
                                        ": need at least 4 subdivisions");
    }
}

void FracOrders::validate(int dim) const {
    for (int ell = 0; ell < dim; ++ell) {
        if (!(alpha[ell] > 1.0 && alpha[ell] < 2.0))
            throw std::domain_error("fractional order on axis " + std::to_string(ell) +
                                    " must lie in (1,2)");
    }
}

Field Field::zeros(const GridSpec& grid) {
    grid.validate();
    Field f;
    f.dim = grid.dim;
    f.shape = {1, 1, 1};
    for (int ell = 0; ell < grid.dim; ++ell) f.shape[ell] = grid.interior(ell);
    f.data.assign(grid.total_interior(), 0.0);
    return f;
}

}  // namespace sfac
