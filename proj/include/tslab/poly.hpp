#pragma once

#include <cmath>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "tslab/jet.hpp"
#include "tslab/multi_index.hpp"

namespace tslab {

/// Exact multivariate polynomial over double coefficients.
/// Terms live in a sorted map keyed by the canonical multi-index encoding, so
/// equality is a coefficient-map comparison. Zero coefficients are never stored.
class PolyScalar {
public:
    using TermMap = std::map<MultiIndex, double>;

    PolyScalar() : nvars_(0) {}
    explicit PolyScalar(int nvars) : nvars_(nvars) {}

    static PolyScalar constant(int nvars, double c) {
        PolyScalar p(nvars);
        p.add_term(MultiIndex(nvars), c);
        return p;
    }
    static PolyScalar monomial(int nvars, const MultiIndex& a, double c) {
        PolyScalar p(nvars);
        p.add_term(a, c);
        return p;
    }
    /// The coordinate polynomial x_i (0-based).
    static PolyScalar coordinate(int nvars, int i) {
        return monomial(nvars, MultiIndex::unit(nvars, i), 1.0);
    }

    int vars() const { return nvars_; }
    bool empty() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    int degree() const {
        int d = 0;
        for (const auto& [a, c] : terms_) d = std::max(d, a.order());
        return terms_.empty() ? -1 : d;
    }

    void add_term(const MultiIndex& a, double c) {
        if (c == 0.0) return;
        if (a.vars() != nvars_) throw std::invalid_argument("PolyScalar: multi-index arity mismatch");
        auto it = terms_.find(a);
        if (it == terms_.end()) {
            terms_.emplace(a, c);
        } else {
            it->second += c;
            if (it->second == 0.0) terms_.erase(it);
        }
    }

    double coeff(const MultiIndex& a) const {
        auto it = terms_.find(a);
        return it == terms_.end() ? 0.0 : it->second;
    }

    PolyScalar& operator+=(const PolyScalar& o) {
        check_vars(o);
        for (const auto& [a, c] : o.terms_) add_term(a, c);
        return *this;
    }
    PolyScalar& operator-=(const PolyScalar& o) {
        check_vars(o);
        for (const auto& [a, c] : o.terms_) add_term(a, -c);
        return *this;
    }
    PolyScalar& operator*=(double s) {
        if (s == 0.0) { terms_.clear(); return *this; }
        for (auto& [a, c] : terms_) c *= s;
        return *this;
    }

    friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { a += b; return a; }
    friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { a -= b; return a; }
    friend PolyScalar operator*(PolyScalar a, double s) { a *= s; return a; }
    friend PolyScalar operator*(double s, PolyScalar a) { a *= s; return a; }
    friend PolyScalar operator-(PolyScalar a) { a *= -1.0; return a; }

    friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
        a.check_vars(b);
        PolyScalar r(a.nvars_);
        for (const auto& [ai, ac] : a.terms_)
            for (const auto& [bi, bc] : b.terms_)
                r.add_term(ai.plus(bi), ac * bc);
        return r;
    }

    /// Evaluate at a point whose components may be any arithmetic-like scalar
    /// (double, Dual<double>, nested duals).
    template <class T>
    T eval(std::span<const T> x) const {
        T acc = T(0.0);
        for (const auto& [a, c] : terms_) {
            T t = T(c);
            for (int i = 0; i < nvars_; ++i)
                for (int e = 0; e < a[i]; ++e) t = t * x[static_cast<size_t>(i)];
            acc = acc + t;
        }
        return acc;
    }
    double eval(std::span<const double> x) const { return eval<double>(x); }

    /// Exact partial derivative d/dx_i.
    PolyScalar derivative(int i) const {
        PolyScalar r(nvars_);
        for (const auto& [a, c] : terms_) {
            if (a[i] == 0) continue;
            MultiIndex b = a;
            b[i] -= 1;
            r.add_term(b, c * a[i]);
        }
        return r;
    }

    /// Exact mixed partial d^beta.
    PolyScalar derivative(const MultiIndex& beta) const {
        PolyScalar r = *this;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < beta[i]; ++k) r = r.derivative(i);
        return r;
    }

    /// Polynomial obtained by substituting x_i = value (used for symbolic
    /// boundary restrictions with value = 0).
    PolyScalar restrict_var(int i, double value) const {
        PolyScalar r(nvars_);
        for (const auto& [a, c] : terms_) {
            double f = 1.0;
            for (int e = 0; e < a[i]; ++e) f *= value;
            if (f == 0.0) continue;
            MultiIndex b = a;
            b[i] = 0;
            r.add_term(b, c * f);
        }
        return r;
    }

    /// Substitute x -> s*x; coefficients pick up s^|alpha|.
    PolyScalar scale_coordinates(double s) const {
        PolyScalar r(nvars_);
        for (const auto& [a, c] : terms_) r.add_term(a, c * std::pow(s, a.order()));
        return r;
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& [a, c] : terms_) m = std::max(m, std::abs(c));
        return m;
    }

    /// Coefficient-level zero test: every |coeff| <= tol.
    bool is_zero(double tol = 1e-14) const {
        for (const auto& [a, c] : terms_)
            if (std::abs(c) > tol) return false;
        return true;
    }

    bool approx_equal(const PolyScalar& o, double tol = 1e-14) const {
        return (*this - o).is_zero(tol);
    }

    /// Value, gradient and Hessian at x by term-wise differentiation.
    JetValue jet(std::span<const double> x) const {
        JetValue j(nvars_);
        std::vector<double> pw; // powers of x[i] up to needed exponent, per term
        for (const auto& [a, c] : terms_) {
            // f = c * prod x_i^{a_i}; log-derivative style accumulation
            double val = c;
            for (int i = 0; i < nvars_; ++i)
                for (int e = 0; e < a[i]; ++e) val *= x[static_cast<size_t>(i)];
            j.value += val;
            for (int i = 0; i < nvars_; ++i) {
                if (a[i] == 0) continue;
                double gi = c * a[i];
                for (int u = 0; u < nvars_; ++u) {
                    int e = a[u] - (u == i ? 1 : 0);
                    for (int q = 0; q < e; ++q) gi *= x[static_cast<size_t>(u)];
                }
                j.grad[i] += gi;
                for (int k = i; k < nvars_; ++k) {
                    int ak = a[k] - (k == i ? 1 : 0);
                    if (ak == 0) continue;
                    double hik = c * a[i] * ak;
                    for (int u = 0; u < nvars_; ++u) {
                        int e = a[u] - (u == i ? 1 : 0) - (u == k ? 1 : 0);
                        for (int q = 0; q < e; ++q) hik *= x[static_cast<size_t>(u)];
                    }
                    j.hess_at(i, k) += hik;
                }
            }
        }
        return j;
    }

private:
    void check_vars(const PolyScalar& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("PolyScalar: arity mismatch");
    }

    int nvars_;
    TermMap terms_;
};

} // namespace tslab
