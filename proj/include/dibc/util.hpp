#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace dibc {

/// Thrown when an operation's mathematical hypothesis does not hold for the
/// given input (e.g. a routine that only applies to bipartite digraphs with
/// minimum degree 2). Distinct from std::invalid_argument, which signals a
/// malformed input rather than an unsatisfied hypothesis.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline uint64_t mix64(uint64_t a, uint64_t b) {
    // splitmix64 finalizer; used to derive independent per-instance seeds
    uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 0x632be59bd9b4e019ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic RNG. All bounded draws go through below(), so identical
/// seeds give identical streams independent of the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    /// Uniform integer in [0, n), n >= 1.
    int below(int n) {
        if (n <= 0) throw std::invalid_argument("Rng::below requires n >= 1");
        const uint64_t bound = static_cast<uint64_t>(n);
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t r;
        do { r = eng_(); } while (r >= limit);
        return static_cast<int>(r % bound);
    }

    bool coin() { return (eng_() & 1) != 0; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[i], v[static_cast<size_t>(below(i + 1))]);
    }

private:
    std::mt19937_64 eng_;
};

/// Worker count for corpus-level parallelism. DIB_WORKERS overrides; output
/// of any harness run must not depend on this value.
inline int worker_count() {
    if (const char* env = std::getenv("DIB_WORKERS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v > 64 ? 64 : v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs body(i) for i in [0, count). Iterations must be independent; callers
/// store results indexed by i so aggregation order never depends on workers.
template <class F>
void parallel_for(std::size_t count, F&& body, int workers = 0) {
    if (workers <= 0) workers = worker_count();
    if (static_cast<std::size_t>(workers) > count) workers = static_cast<int>(count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace dibc
