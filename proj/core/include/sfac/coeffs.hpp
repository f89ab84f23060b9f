#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sfac {

/// Fractional-difference weight tables for one order alpha in (1,2).
///
/// g holds the alternating fractional binomial coefficients
/// g_k = (-1)^k binom(alpha, k), built by the stable recurrence
/// g_{k+1} = (1 - (alpha+1)/(k+1)) g_k.  omega is the weighted-and-shifted
/// combination omega_0 = alpha/2, omega_{k+1} = (alpha/2) g_{k+1}
/// + ((2-alpha)/2) g_k, which gives second-order accuracy for the
/// Riemann-Liouville derivatives.
struct CoeffTable {
    double alpha = 0.0;
    std::vector<double> g;      // length n+1
    std::vector<double> omega;  // length n+1
};

// Recurrence-based generators. alpha must lie strictly in (1,2).
std::vector<double> gen_g(double alpha, std::size_t n);
std::vector<double> gen_omega(double alpha, std::size_t n);

CoeffTable make_coeff_table(double alpha, std::size_t n);

/// One structural property of the omega weights with its measured margin.
/// margin >= 0 means the property holds with that much slack.
struct PropertyCheck {
    std::string name;
    bool passed = false;
    double margin = 0.0;
};

struct PropertyReport {
    std::vector<PropertyCheck> checks;
    double truncated_sum = 0.0;  // sum_{k=0}^{n} omega_k, must be negative
    bool all_passed() const;
};

/// Evaluates every finitely-testable weight property: signs of omega_0,
/// omega_1, omega_0+omega_2, nonnegativity and monotone decay from omega_3
/// on, omega_0 <= 1, and negativity of every partial sum from m=2 up.
PropertyReport check_omega_properties(const CoeffTable& table);

}  // namespace sfac
