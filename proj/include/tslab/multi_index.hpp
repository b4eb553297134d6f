#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace tslab {

/// Exponent vector of a monomial x^alpha in n variables.
/// Kept in a canonical dense form so that lexicographic comparison gives a
/// total order usable as a map key.
struct MultiIndex {
    std::vector<int> exp;

    MultiIndex() = default;
    explicit MultiIndex(int n) : exp(n, 0) {}
    MultiIndex(std::initializer_list<int> e) : exp(e) {}

    int vars() const { return static_cast<int>(exp.size()); }
    int order() const { return std::accumulate(exp.begin(), exp.end(), 0); }

    int operator[](int i) const { return exp[i]; }
    int& operator[](int i) { return exp[i]; }

    static MultiIndex unit(int n, int i, int power = 1) {
        MultiIndex a(n);
        a.exp[i] = power;
        return a;
    }

    MultiIndex plus(const MultiIndex& b) const {
        MultiIndex r = *this;
        for (int i = 0; i < vars(); ++i) r.exp[i] += b.exp[i];
        return r;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.exp == b.exp; }
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.exp < b.exp; }
};

/// All multi-indices in n variables with order in [lo, hi], in lexicographic order.
inline std::vector<MultiIndex> multi_indices_up_to(int n, int lo, int hi) {
    std::vector<MultiIndex> out;
    MultiIndex cur(n);
    // depth-first enumeration over positions
    auto rec = [&](auto&& self, int pos, int remaining_max) -> void {
        if (pos == n) {
            int o = cur.order();
            if (o >= lo && o <= hi) out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining_max; ++e) {
            cur.exp[pos] = e;
            self(self, pos + 1, remaining_max - e);
            cur.exp[pos] = 0;
        }
    };
    rec(rec, 0, hi);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace tslab
