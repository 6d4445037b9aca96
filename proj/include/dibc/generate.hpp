#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dibc/digraph.hpp"
#include "dibc/util.hpp"

namespace dibc {

// Bipartite generators lay out side A as vertices 0..na-1 and side B as
// na..na+nb-1, which matches the canonical bipartition (smallest vertex of
// each component lands in A).

inline Bipartition layout_bipartition(int na, int nb) {
    std::vector<int> a(static_cast<size_t>(na)), b(static_cast<size_t>(nb));
    for (int i = 0; i < na; ++i) a[static_cast<size_t>(i)] = i;
    for (int i = 0; i < nb; ++i) b[static_cast<size_t>(i)] = na + i;
    return Bipartition::from_sides(std::move(a), std::move(b), na + nb);
}

inline Digraph complete_symmetric_bipartite(int na, int nb) {
    if (na < 1 || nb < 1) throw std::invalid_argument("both sides need at least one vertex");
    std::vector<Arc> arcs;
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) {
            arcs.emplace_back(u, na + v);
            arcs.emplace_back(na + v, u);
        }
    return Digraph::build(na + nb, std::move(arcs));
}

/// Orientation of K_{na,nb} with every arc from A to B.
inline Digraph one_directional_knm(int na, int nb) {
    if (na < 1 || nb < 1) throw std::invalid_argument("both sides need at least one vertex");
    std::vector<Arc> arcs;
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) arcs.emplace_back(u, na + v);
    return Digraph::build(na + nb, std::move(arcs));
}

/// Orientation of K_{na,nb}: each cross pair gets one arc, direction by coin.
inline Digraph random_orientation_knm(int na, int nb, uint64_t seed) {
    if (na < 1 || nb < 1) throw std::invalid_argument("both sides need at least one vertex");
    Rng rng(seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) {
            if (rng.coin()) arcs.emplace_back(u, na + v);
            else arcs.emplace_back(na + v, u);
        }
    return Digraph::build(na + nb, std::move(arcs));
}

/// Orientation of K_{na,nb} where every A-vertex has out- and in-degree
/// floor(nb/2) or ceil(nb/2), so the A-side minimum degree is floor(nb/2).
inline Digraph balanced_orientation_knm(int na, int nb, uint64_t seed) {
    if (na < 1 || nb < 2) throw std::invalid_argument("balanced orientation needs nb >= 2");
    Rng rng(seed);
    std::vector<Arc> arcs;
    std::vector<int> cols(static_cast<size_t>(nb));
    for (int i = 0; i < nb; ++i) cols[static_cast<size_t>(i)] = i;
    for (int u = 0; u < na; ++u) {
        rng.shuffle(cols);
        const int out_count = nb / 2 + ((nb % 2 != 0 && rng.coin()) ? 1 : 0);
        for (int i = 0; i < nb; ++i) {
            const int v = na + cols[static_cast<size_t>(i)];
            if (i < out_count) arcs.emplace_back(u, v);
            else arcs.emplace_back(v, u);
        }
    }
    return Digraph::build(na + nb, std::move(arcs));
}

inline Digraph random_tournament(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("tournament needs at least one vertex");
    Rng rng(seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng.coin()) arcs.emplace_back(u, v);
            else arcs.emplace_back(v, u);
        }
    return Digraph::build(n, std::move(arcs));
}

inline Digraph transitive_tournament(int n) {
    if (n < 1) throw std::invalid_argument("tournament needs at least one vertex");
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) arcs.emplace_back(u, v);
    return Digraph::build(n, std::move(arcs));
}

inline Digraph directed_cycle(int n) {
    if (n < 2) throw std::invalid_argument("directed cycle needs at least two vertices");
    std::vector<Arc> arcs;
    for (int v = 0; v < n; ++v) arcs.emplace_back(v, (v + 1) % n);
    return Digraph::build(n, std::move(arcs));
}

/// Uniform random bipartite digraph: each cross pair independently gets one
/// of {none, a->b, b->a, digon}.
inline Digraph random_bipartite(int na, int nb, uint64_t seed) {
    if (na < 1 || nb < 1) throw std::invalid_argument("both sides need at least one vertex");
    Rng rng(seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) {
            switch (rng.below(4)) {
                case 1: arcs.emplace_back(u, na + v); break;
                case 2: arcs.emplace_back(na + v, u); break;
                case 3: arcs.emplace_back(u, na + v); arcs.emplace_back(na + v, u); break;
                default: break;
            }
        }
    return Digraph::build(na + nb, std::move(arcs));
}

/// Random bipartite digraph (digons allowed) with minimum degree at least
/// min_deg: starts complete symmetric and removes random arcs while the
/// degree floor holds. Density varies with the seed.
inline Digraph random_bipartite_min_degree(int na, int nb, int min_deg, uint64_t seed) {
    if (na < min_deg || nb < min_deg)
        throw std::invalid_argument("sides too small for the requested minimum degree");
    Rng rng(seed);
    Digraph full = complete_symmetric_bipartite(na, nb);
    std::vector<Arc> arcs = full.arcs();
    std::vector<int> outd(static_cast<size_t>(na + nb)), ind(static_cast<size_t>(na + nb));
    for (const auto& [u, v] : arcs) { ++outd[static_cast<size_t>(u)]; ++ind[static_cast<size_t>(v)]; }
    std::vector<int> order(arcs.size());
    for (size_t i = 0; i < arcs.size(); ++i) order[i] = static_cast<int>(i);
    rng.shuffle(order);
    const int max_removable = static_cast<int>(arcs.size()) - min_deg * (na + nb) / 2;
    const int target = max_removable > 0 ? rng.below(max_removable + 1) : 0;
    std::vector<char> removed(arcs.size(), 0);
    int removed_count = 0;
    for (int idx : order) {
        if (removed_count >= target) break;
        const auto& [u, v] = arcs[static_cast<size_t>(idx)];
        if (outd[static_cast<size_t>(u)] > min_deg && ind[static_cast<size_t>(v)] > min_deg) {
            removed[static_cast<size_t>(idx)] = 1;
            --outd[static_cast<size_t>(u)];
            --ind[static_cast<size_t>(v)];
            ++removed_count;
        }
    }
    std::vector<Arc> kept;
    for (size_t i = 0; i < arcs.size(); ++i)
        if (!removed[i]) kept.push_back(arcs[i]);
    Digraph d = Digraph::build(na + nb, std::move(kept));
    if (degree_summary(d).delta < min_deg)
        throw std::logic_error("generator produced a digraph below the degree target");
    return d;
}

/// Random simple bipartite digraph (no digons) with minimum degree at least
/// min_deg. Per-vertex quotas are placed first, then B-side deficits are
/// repaired on still-unoriented pairs.
inline Digraph random_simple_bipartite_min_degree(int na, int nb, int min_deg, uint64_t seed) {
    if (min_deg < 0) throw std::invalid_argument("minimum degree must be nonnegative");
    if (nb < 2 * min_deg || na < 2 * min_deg)
        throw std::invalid_argument("no simple bipartite digraph with min degree " +
                                    std::to_string(min_deg) + " exists unless both sides have at least " +
                                    std::to_string(2 * min_deg) + " vertices");
    Rng rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        // state per cross pair, from A's point of view: 0 none, 1 a->b, 2 b->a
        std::vector<int> state(static_cast<size_t>(na) * static_cast<size_t>(nb), 0);
        auto st = [&](int a, int b) -> int& { return state[static_cast<size_t>(a) * static_cast<size_t>(nb) + static_cast<size_t>(b)]; };
        std::vector<int> cols(static_cast<size_t>(nb));
        for (int i = 0; i < nb; ++i) cols[static_cast<size_t>(i)] = i;
        for (int a = 0; a < na; ++a) {
            rng.shuffle(cols);
            for (int i = 0; i < nb; ++i) {
                if (i < min_deg) st(a, cols[static_cast<size_t>(i)]) = 1;
                else if (i < 2 * min_deg) st(a, cols[static_cast<size_t>(i)]) = 2;
                else st(a, cols[static_cast<size_t>(i)]) = rng.below(3);
            }
        }
        auto repair_b = [&](int want_state) -> bool {
            // want_state 2 fixes B out-degrees, 1 fixes B in-degrees
            for (int b = 0; b < nb; ++b) {
                int have = 0;
                for (int a = 0; a < na; ++a)
                    if (st(a, b) == want_state) ++have;
                while (have < min_deg) {
                    std::vector<int> free;
                    for (int a = 0; a < na; ++a)
                        if (st(a, b) == 0) free.push_back(a);
                    if (free.empty()) return false;
                    st(free[static_cast<size_t>(rng.below(static_cast<int>(free.size())))], b) = want_state;
                    ++have;
                }
            }
            return true;
        };
        if (!repair_b(2) || !repair_b(1)) continue;
        std::vector<Arc> arcs;
        for (int a = 0; a < na; ++a)
            for (int b = 0; b < nb; ++b) {
                if (st(a, b) == 1) arcs.emplace_back(a, na + b);
                else if (st(a, b) == 2) arcs.emplace_back(na + b, a);
            }
        Digraph d = Digraph::build(na + nb, std::move(arcs));
        if (degree_summary(d).delta >= min_deg && d.is_simple()) return d;
    }
    throw std::runtime_error("could not generate a simple bipartite digraph with the requested degrees");
}

/// Simple bipartite 2-regular circulant: parts of size `part`, A-vertex i
/// points to B at offsets S_ab, B-vertex i points to A at offsets S_ba, with
/// the offset sets chosen (seed-deterministically) so no digon appears.
/// No such digraph exists for part < 4: a vertex needs two out- and two
/// in-partners and, without digons, those four must be distinct.
inline Digraph circulant_2regular_bipartite(int part, uint64_t seed) {
    if (part < 4)
        throw std::invalid_argument("no simple 2-regular bipartite digraph exists with part size " +
                                    std::to_string(part) + " (need at least 4)");
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> valid;
    for (int s1 = 0; s1 < part; ++s1)
        for (int s2 = s1 + 1; s2 < part; ++s2)
            for (int t1 = 0; t1 < part; ++t1)
                for (int t2 = t1 + 1; t2 < part; ++t2) {
                    const int f1 = (part - s1) % part, f2 = (part - s2) % part;  // forbidden b->a offsets
                    if (t1 != f1 && t1 != f2 && t2 != f1 && t2 != f2)
                        valid.push_back({{s1, s2}, {t1, t2}});
                }
    if (valid.empty()) throw std::logic_error("no digon-free offset choice found");
    Rng rng(seed);
    const auto& [sab, sba] = valid[static_cast<size_t>(rng.below(static_cast<int>(valid.size())))];
    std::vector<Arc> arcs;
    for (int i = 0; i < part; ++i) {
        arcs.emplace_back(i, part + (i + sab.first) % part);
        arcs.emplace_back(i, part + (i + sab.second) % part);
        arcs.emplace_back(part + i, (i + sba.first) % part);
        arcs.emplace_back(part + i, (i + sba.second) % part);
    }
    Digraph d = Digraph::build(2 * part, std::move(arcs));
    const DegreeSummary deg = degree_summary(d);
    if (deg.delta != 2 || deg.delta_plus != 2 || deg.delta_minus != 2 || !d.is_simple() ||
        d.arc_count() != 4 * part)
        throw std::logic_error("circulant generator violated its own invariants");
    return d;
}

/// Uniform random loopless digraph: every unordered pair independently gets
/// one of {none, u->v, v->u, digon}.
inline Digraph random_digraph(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("digraph needs at least one vertex");
    Rng rng(seed);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            switch (rng.below(4)) {
                case 1: arcs.emplace_back(u, v); break;
                case 2: arcs.emplace_back(v, u); break;
                case 3: arcs.emplace_back(u, v); arcs.emplace_back(v, u); break;
                default: break;
            }
        }
    return Digraph::build(n, std::move(arcs));
}

/// CLI-facing family dispatch.
struct GenSpec {
    std::string family;
    int na = 0, nb = 0, n = 0, part = 0, min_degree = 2;
    uint64_t seed = 0;
};

inline Digraph generate(const GenSpec& g) {
    if (g.family == "complete-symmetric-bipartite") return complete_symmetric_bipartite(g.na, g.nb);
    if (g.family == "one-directional-knm") return one_directional_knm(g.na, g.nb);
    if (g.family == "orientation-knm") return random_orientation_knm(g.na, g.nb, g.seed);
    if (g.family == "balanced-orientation-knm") return balanced_orientation_knm(g.na, g.nb, g.seed);
    if (g.family == "tournament") return random_tournament(g.n, g.seed);
    if (g.family == "transitive-tournament") return transitive_tournament(g.n);
    if (g.family == "directed-cycle") return directed_cycle(g.n);
    if (g.family == "random-bipartite") return random_bipartite(g.na, g.nb, g.seed);
    if (g.family == "random-bipartite-min-degree")
        return random_bipartite_min_degree(g.na, g.nb, g.min_degree, g.seed);
    if (g.family == "random-simple-bipartite")
        return random_simple_bipartite_min_degree(g.na, g.nb, g.min_degree, g.seed);
    if (g.family == "circulant-2-regular-bipartite") return circulant_2regular_bipartite(g.part, g.seed);
    if (g.family == "random-digraph") return random_digraph(g.n, g.seed);
    throw std::invalid_argument("unknown family '" + g.family + "'");
}

inline std::vector<std::string> known_families() {
    return {"complete-symmetric-bipartite", "one-directional-knm",      "orientation-knm",
            "balanced-orientation-knm",     "tournament",               "transitive-tournament",
            "directed-cycle",               "random-bipartite",         "random-bipartite-min-degree",
            "random-simple-bipartite",      "circulant-2-regular-bipartite", "random-digraph"};
}

}  // namespace dibc
