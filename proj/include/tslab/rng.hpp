#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace tslab {

/// Deterministic random stream. mt19937_64 output is specified by the
/// standard, and the transforms below avoid std::*_distribution whose
/// sequences may differ between standard libraries.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard normal via Box-Muller (one value per call, cached pair).
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = 0.0;
        do { u1 = uniform(); } while (u1 <= 0.0);
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

    /// Uniform direction on the unit sphere S^{n-1} in R^n.
    std::vector<double> sphere_direction(int n) {
        std::vector<double> w(static_cast<size_t>(n));
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (auto& c : w) {
                c = normal();
                norm2 += c * c;
            }
        } while (norm2 == 0.0);
        double inv = 1.0 / std::sqrt(norm2);
        for (auto& c : w) c *= inv;
        return w;
    }

    /// Uniform direction on the upper hemisphere {w_n >= 0}.
    std::vector<double> hemisphere_direction(int n) {
        auto w = sphere_direction(n);
        if (w.back() < 0.0) w.back() = -w.back();
        return w;
    }

private:
    std::mt19937_64 eng_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

} // namespace tslab
