#pragma once

#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <future>
#include <vector>

namespace tslab {

/// Neumaier compensated accumulator.
class KahanSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Sum of per-chunk partials combined pairwise in a fixed order, so the result
/// is independent of how many workers produced the partials.
inline double pairwise_combine(std::vector<double> parts) {
    if (parts.empty()) return 0.0;
    while (parts.size() > 1) {
        std::vector<double> next;
        next.reserve((parts.size() + 1) / 2);
        for (size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
        if (parts.size() % 2 == 1) next.push_back(parts.back());
        parts.swap(next);
    }
    return parts[0];
}

/// Number of worker threads requested via TSLAB_THREADS (default 1).
inline int configured_threads() {
    if (const char* s = std::getenv("TSLAB_THREADS")) {
        int t = std::atoi(s);
        if (t >= 1) return t;
    }
    return 1;
}

/// Runs body(chunk_index) for chunks [0, nchunks), possibly concurrently.
/// Chunk boundaries are caller-defined and fixed, so any per-chunk outputs are
/// identical regardless of thread count.
inline void for_each_chunk(std::size_t nchunks, const std::function<void(std::size_t)>& body) {
    int threads = configured_threads();
    if (threads <= 1 || nchunks <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c) body(c);
        return;
    }
    std::vector<std::future<void>> fut;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t c = next.fetch_add(1);
            if (c >= nchunks) break;
            body(c);
        }
    };
    for (int t = 0; t < threads; ++t) fut.push_back(std::async(std::launch::async, worker));
    for (auto& f : fut) f.get();
}

} // namespace tslab
