#include "sfac/coeffs.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sfac {

namespace {
void require_alpha(double alpha) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw std::domain_error("fractional order alpha must lie in (1,2), got " +
                                std::to_string(alpha));
}
}  // namespace

std::vector<double> gen_g(double alpha, std::size_t n) {
    require_alpha(alpha);
    if (n == std::numeric_limits<std::size_t>::max())
        throw std::length_error("coefficient count overflow");
    std::vector<double> g(n + 1);
    g[0] = 1.0;
    for (std::size_t k = 0; k < n; ++k)
        g[k + 1] = (1.0 - (alpha + 1.0) / static_cast<double>(k + 1)) * g[k];
    return g;
}

std::vector<double> gen_omega(double alpha, std::size_t n) {
    require_alpha(alpha);
    if (n < 1) throw std::invalid_argument("gen_omega needs n >= 1");
    const std::vector<double> g = gen_g(alpha, n);
    std::vector<double> omega(n + 1);
    const double wa = alpha / 2.0;
    const double wb = (2.0 - alpha) / 2.0;
    omega[0] = wa * g[0];
    for (std::size_t k = 0; k < n; ++k)
        omega[k + 1] = wa * g[k + 1] + wb * g[k];
    return omega;
}

CoeffTable make_coeff_table(double alpha, std::size_t n) {
    CoeffTable t;
    t.alpha = alpha;
    t.g = gen_g(alpha, n);
    t.omega = gen_omega(alpha, n);
    return t;
}

bool PropertyReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

PropertyReport check_omega_properties(const CoeffTable& table) {
    const auto& w = table.omega;
    if (w.size() < 4)
        throw std::invalid_argument("property check needs at least omega_0..omega_3");

    PropertyReport rep;
    auto add = [&rep](std::string name, double margin) {
        rep.checks.push_back({std::move(name), margin >= 0.0, margin});
    };

    add("omega0 == alpha/2", -std::abs(w[0] - table.alpha / 2.0));
    if (w[0] == table.alpha / 2.0) rep.checks.back() = {"omega0 == alpha/2", true, 0.0};

    add("omega1 <= 0", -w[1]);
    add("omega0 + omega2 > 0", w[0] + w[2]);
    add("omega0 <= 1", 1.0 - w[0]);
    add("omega0 >= omega3", w[0] - w[3]);

    double worst_nonneg = std::numeric_limits<double>::infinity();
    double worst_mono = std::numeric_limits<double>::infinity();
    for (std::size_t k = 3; k < w.size(); ++k) {
        worst_nonneg = std::min(worst_nonneg, w[k]);
        if (k >= 4) worst_mono = std::min(worst_mono, w[k - 1] - w[k]);
    }
    add("omega_k >= 0 for k >= 3", worst_nonneg);
    if (w.size() >= 5) add("omega non-increasing for k >= 3", worst_mono);

    double partial = w[0] + w[1];
    double worst_partial = std::numeric_limits<double>::infinity();
    for (std::size_t m = 2; m < w.size(); ++m) {
        partial += w[m];
        worst_partial = std::min(worst_partial, -partial);
    }
    add("partial sums negative for m >= 2", worst_partial);

    rep.truncated_sum = partial;
    return rep;
}

}  // namespace sfac
