#pragma once

#include <stdexcept>

namespace tslab {

/// Ambient dimension of the half-space model together with the derived
/// truncation order d = floor((n-2)/2) that bounds admissible monomials.
struct Dim {
    int n = 0;
    int d = 0;

    Dim() = default;
    explicit Dim(int n_) : n(n_), d((n_ - 2) / 2) {
        if (n_ < 3) throw std::invalid_argument("Dim: n must be >= 3");
    }

    int tangential() const { return n - 1; }

    friend bool operator==(const Dim& a, const Dim& b) { return a.n == b.n; }
    friend bool operator!=(const Dim& a, const Dim& b) { return a.n != b.n; }
};

} // namespace tslab
