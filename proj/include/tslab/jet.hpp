#pragma once

#include <cstddef>
#include <vector>

namespace tslab {

/// Second-order jet of a scalar field at one point: value, gradient and the
/// symmetric Hessian stored as an upper triangle.
struct JetValue {
    double value = 0.0;
    std::vector<double> grad;
    std::vector<double> hess_upper; // row-major upper triangle, n*(n+1)/2 entries

    JetValue() = default;
    explicit JetValue(int n)
        : grad(static_cast<size_t>(n), 0.0),
          hess_upper(static_cast<size_t>(n) * (n + 1) / 2, 0.0) {}

    int vars() const { return static_cast<int>(grad.size()); }

    static size_t tri_index(int n, int i, int k) {
        if (i > k) std::swap(i, k);
        return static_cast<size_t>(i) * n - static_cast<size_t>(i) * (i - 1) / 2 + (k - i);
    }

    double hess(int i, int k) const { return hess_upper[tri_index(vars(), i, k)]; }
    double& hess_at(int i, int k) { return hess_upper[tri_index(vars(), i, k)]; }

    double laplacian() const {
        double s = 0.0;
        for (int i = 0; i < vars(); ++i) s += hess(i, i);
        return s;
    }
};

} // namespace tslab
