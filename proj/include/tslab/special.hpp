#pragma once

#include <cmath>
#include <stdexcept>

#include "tslab/multi_index.hpp"

namespace tslab::special {

/// log Gamma(z) for z > 0 via the Lanczos approximation (g = 7, 9 terms).
/// Relative error of the underlying Gamma is below 1e-13 on the range used here.
inline double lgamma_lanczos(double z) {
    if (z <= 0.0) throw std::invalid_argument("lgamma_lanczos: requires z > 0");
    static const double coef[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    const double half_log_two_pi = 0.91893853320467274178;
    double zm1 = z - 1.0;
    double x = coef[0];
    for (int i = 1; i < 9; ++i) x += coef[i] / (zm1 + i);
    double t = zm1 + 7.5;
    return half_log_two_pi + (zm1 + 0.5) * std::log(t) - t + std::log(x);
}

inline double gamma_fn(double z) { return std::exp(lgamma_lanczos(z)); }

/// Euler Beta B(a, b).
inline double beta_fn(double a, double b) {
    return std::exp(lgamma_lanczos(a) + lgamma_lanczos(b) - lgamma_lanczos(a + b));
}

/// Surface area of the unit sphere S^k embedded in R^{k+1}.
inline double sphere_area(int k) {
    double kp1 = k + 1;
    return 2.0 * std::exp(0.5 * kp1 * std::log(M_PI) - lgamma_lanczos(0.5 * kp1));
}

/// Exact monomial moment over the unit sphere S^{d-1} in R^d:
/// integral of w^gamma dsigma(w). Zero when any exponent is odd.
inline double sphere_monomial_moment(const MultiIndex& gamma) {
    int d = gamma.vars();
    double lg = 0.0;
    for (int i = 0; i < d; ++i) {
        if (gamma[i] % 2 != 0) return 0.0;
        lg += lgamma_lanczos(0.5 * (gamma[i] + 1));
    }
    lg -= lgamma_lanczos(0.5 * (gamma.order() + d));
    return 2.0 * std::exp(lg);
}

} // namespace tslab::special
