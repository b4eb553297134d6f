#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "tslab/dim.hpp"
#include "tslab/dual.hpp"
#include "tslab/jet.hpp"
#include "tslab/special.hpp"

namespace tslab {

/// The half-space extremal v_eps(x) = eps^{(n-2)/2} |x + eps e_n|^{2-n}.
/// Writing y = x + eps e_n turns every derivative into an explicit rational
/// expression in y, which is what the closed-form jets below use.
struct BubbleParams {
    double epsilon = 1.0;
    Dim dim;

    BubbleParams(double eps, Dim d) : epsilon(eps), dim(d) {
        if (!(eps > 0.0)) throw std::invalid_argument("BubbleParams: epsilon must be > 0");
    }
};

namespace bubble {

/// D(x) = |x + eps e_n|^2, templated for dual-number evaluation.
template <class T>
T shifted_norm2(const BubbleParams& b, std::span<const T> x) {
    const int n = b.dim.n;
    T yn = x[static_cast<size_t>(n - 1)] + T(b.epsilon);
    T s = yn * yn;
    for (int a = 0; a + 1 < n; ++a) s = s + x[static_cast<size_t>(a)] * x[static_cast<size_t>(a)];
    return s;
}

template <class T>
T value(const BubbleParams& b, std::span<const T> x) {
    const double m = 0.5 * (b.dim.n - 2);
    return T(std::pow(b.epsilon, m)) * pow(shifted_norm2(b, x), -m);
}

/// d_i v = -2m eps^m y_i D^{-m-1}.
template <class T>
std::vector<T> gradient(const BubbleParams& b, std::span<const T> x) {
    const int n = b.dim.n;
    const double m = 0.5 * (n - 2);
    T D = shifted_norm2(b, x);
    T f = T(-2.0 * m * std::pow(b.epsilon, m)) * pow(D, -m - 1.0);
    std::vector<T> g(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        T yi = x[static_cast<size_t>(i)];
        if (i == n - 1) yi = yi + T(b.epsilon);
        g[static_cast<size_t>(i)] = f * yi;
    }
    return g;
}

/// d_i d_k v = -2m eps^m [delta_ik D^{-m-1} - 2(m+1) y_i y_k D^{-m-2}],
/// returned as a dense n x n symmetric matrix (row-major).
template <class T>
std::vector<T> hessian(const BubbleParams& b, std::span<const T> x) {
    const int n = b.dim.n;
    const double m = 0.5 * (n - 2);
    T D = shifted_norm2(b, x);
    T Dm1 = pow(D, -m - 1.0);
    T Dm2 = Dm1 / D;
    const double c = -2.0 * m * std::pow(b.epsilon, m);
    std::vector<T> y(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        y[static_cast<size_t>(i)] = x[static_cast<size_t>(i)];
        if (i == n - 1) y[static_cast<size_t>(i)] = y[static_cast<size_t>(i)] + T(b.epsilon);
    }
    std::vector<T> h(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            T t = T(-2.0 * (m + 1.0)) * y[static_cast<size_t>(i)] * y[static_cast<size_t>(k)] * Dm2;
            if (i == k) t = t + Dm1;
            h[static_cast<size_t>(i) * n + k] = T(c) * t;
        }
    return h;
}

} // namespace bubble

/// Closed-form second-order jet of v_eps; rejects points below the boundary.
inline JetValue bubble_jet(const BubbleParams& b, std::span<const double> x) {
    const int n = b.dim.n;
    if (x[static_cast<size_t>(n - 1)] < 0.0)
        throw std::invalid_argument("bubble_jet: point must satisfy x_n >= 0");
    JetValue j(n);
    j.value = bubble::value<double>(b, x);
    auto g = bubble::gradient<double>(b, x);
    auto h = bubble::hessian<double>(b, x);
    for (int i = 0; i < n; ++i) {
        j.grad[i] = g[static_cast<size_t>(i)];
        for (int k = i; k < n; ++k) j.hess_at(i, k) = h[static_cast<size_t>(i) * n + k];
    }
    return j;
}

/// Pointwise residuals of the defining identities of v_eps and of the
/// two-sided envelope, all reported relative to the size of the identity's
/// constituent terms.
struct BubbleResiduals {
    double laplacian = 0.0;         // |Delta v| / sum |d_ii v|
    double hessian_identity = 0.0;  // max-norm residual of the Hessian identity
    double boundary_identity = 0.0; // only meaningful at x_n = 0
    double envelope_violation = 0.0;
};

inline BubbleResiduals bubble_identity_residuals(const BubbleParams& b, std::span<const double> x) {
    const int n = b.dim.n;
    const double m = 0.5 * (n - 2);
    JetValue j = bubble_jet(b, x);
    BubbleResiduals r;

    double lap = 0.0, lap_scale = 0.0;
    for (int i = 0; i < n; ++i) {
        lap += j.hess(i, i);
        lap_scale += std::abs(j.hess(i, i));
    }
    r.laplacian = lap_scale > 0.0 ? std::abs(lap) / lap_scale : 0.0;

    double dv2 = 0.0;
    for (int i = 0; i < n; ++i) dv2 += j.grad[i] * j.grad[i];
    double worst = 0.0;
    const double scale = dv2 / (n - 2) + 1e-300;
    for (int i = 0; i < n; ++i)
        for (int k = i; k < n; ++k) {
            double lhs = j.value * j.hess(i, k) - (double(n) / (n - 2)) * j.grad[i] * j.grad[k];
            if (i == k) lhs += dv2 / (n - 2);
            worst = std::max(worst, std::abs(lhs));
        }
    r.hessian_identity = worst / scale;

    if (x[static_cast<size_t>(n - 1)] == 0.0) {
        double rhs = -(n - 2) * std::pow(j.value, double(n) / (n - 2));
        r.boundary_identity = std::abs(j.grad[n - 1] - rhs) / std::abs(rhs);
    }

    // lower envelope eps^m (eps+|x|)^{2-n} <= v; upper with C(n) = 2^{(n-2)/2}
    double rr = 0.0;
    for (int i = 0; i < n; ++i) rr += x[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
    double env = std::pow(b.epsilon, m) * std::pow(b.epsilon + std::sqrt(rr), 2.0 - n);
    double cup = std::pow(2.0, m);
    double viol = 0.0;
    if (j.value < env) viol = (env - j.value) / env;
    if (j.value > cup * env) viol = std::max(viol, (j.value - cup * env) / (cup * env));
    r.envelope_violation = viol;
    return r;
}

/// Closed-form boundary integral of v_1^{2(n-1)/(n-2)} over the whole
/// boundary hyperplane: omega_{n-2} * (1/2) B((n-1)/2, (n-1)/2).
inline double bubble_boundary_integral(const Dim& dim) {
    const int n = dim.n;
    return special::sphere_area(n - 2) * 0.5 *
           special::beta_fn(0.5 * (n - 1), 0.5 * (n - 1));
}

struct SharpConstant {
    double Q = 0.0;           // Q(B^n, dB^n)
    double trace_ratio = 0.0; // Dirichlet integral / boundary integral = n-2
};

/// Sharp constant from the Beta-function closed form:
/// Q = 4(n-1) * (boundary integral of v_1)^{1/(n-1)}.
inline SharpConstant sharp_constant_closed_form(const Dim& dim) {
    SharpConstant s;
    double I = bubble_boundary_integral(dim);
    s.Q = 4.0 * (dim.n - 1) * std::pow(I, 1.0 / (dim.n - 1));
    s.trace_ratio = dim.n - 2;
    return s;
}

} // namespace tslab
