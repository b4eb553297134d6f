#pragma once

#include <cmath>

namespace tslab {

/// First-order forward-mode dual number over an arbitrary scalar T.
/// Nesting (Dual<Dual<double>>) yields exact second derivatives; all the
/// closed-form bubble and metric expressions are templated so they can be
/// evaluated on these.
template <class T>
struct Dual {
    T v{};  // value
    T d{};  // directional derivative

    Dual() : v(0.0), d(0.0) {}
    Dual(double value) : v(value), d(0.0) {} // NOLINT: implicit by design
    Dual(T value, T deriv) : v(value), d(deriv) {}

    friend Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
    friend Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
    friend Dual operator-(const Dual& a) { return {-a.v, -a.d}; }
    friend Dual operator*(const Dual& a, const Dual& b) {
        return {a.v * b.v, a.d * b.v + a.v * b.d};
    }
    friend Dual operator/(const Dual& a, const Dual& b) {
        T q = a.v / b.v;
        return {q, (a.d - q * b.d) / b.v};
    }

    Dual& operator+=(const Dual& o) { *this = *this + o; return *this; }
    Dual& operator-=(const Dual& o) { *this = *this - o; return *this; }
    Dual& operator*=(const Dual& o) { *this = *this * o; return *this; }
    Dual& operator/=(const Dual& o) { *this = *this / o; return *this; }
};

inline double value_of(double x) { return x; }
template <class T>
double value_of(const Dual<T>& x) { return value_of(x.v); }

using std::exp;
using std::log;
using std::pow;
using std::sqrt;

template <class T>
Dual<T> exp(const Dual<T>& a) {
    T e = exp(a.v);
    return {e, e * a.d};
}
template <class T>
Dual<T> log(const Dual<T>& a) {
    return {log(a.v), a.d / a.v};
}
template <class T>
Dual<T> sqrt(const Dual<T>& a) {
    T s = sqrt(a.v);
    return {s, a.d / (T(2.0) * s)};
}
/// a^p for a real exponent (a > 0 assumed where the derivative is used).
template <class T>
Dual<T> pow(const Dual<T>& a, double p) {
    T w = pow(a.v, p);
    return {w, T(p) * pow(a.v, p - 1.0) * a.d};
}

} // namespace tslab
