#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dibc/digraph.hpp"

namespace dibc {

/// Labeled loopless digraphs on n vertices are encoded as base-4 numbers over
/// the C(n,2) unordered vertex pairs: 0 = no arc, 1 = low->high, 2 =
/// high->low, 3 = digon. n=2 gives 4 digraphs, n=3 gives 64, n=4 gives 4096.
inline uint64_t enumeration_size(int n) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    const int pairs = n * (n - 1) / 2;
    if (pairs > 31) throw std::invalid_argument("enumeration space too large for n = " + std::to_string(n));
    return 1ULL << (2 * pairs);
}

inline Digraph enumerated_digraph(int n, uint64_t index) {
    std::vector<Arc> arcs;
    uint64_t code = index;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            switch (code & 3ULL) {
                case 1: arcs.emplace_back(u, v); break;
                case 2: arcs.emplace_back(v, u); break;
                case 3: arcs.emplace_back(u, v); arcs.emplace_back(v, u); break;
                default: break;
            }
            code >>= 2;
        }
    }
    return Digraph::build(n, std::move(arcs));
}

/// Streams every loopless digraph on n labeled vertices exactly once. The
/// cap guards against accidentally huge sweeps; n=5 is feasible but slow
/// under full solving, anything beyond that needs an explicit opt-in.
template <class F>
void enumerate_all(int n, F&& f, int cap = 4) {
    if (n > cap)
        throw std::invalid_argument("enumeration of n = " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(cap) +
                                    " (raise the cap explicitly to allow this)");
    const uint64_t total = enumeration_size(n);
    for (uint64_t i = 0; i < total; ++i) f(enumerated_digraph(n, i));
}

}  // namespace dibc
