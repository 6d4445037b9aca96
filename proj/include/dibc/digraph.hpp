#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dibc/util.hpp"

namespace dibc {

using Arc = std::pair<int, int>;

/// Loopless digraph on vertices 0..n-1. Digons (both u->v and v->u) are
/// allowed; loops and parallel arcs are not. Immutable after build(), so
/// instances can be shared freely across threads.
class Digraph {
public:
    Digraph() = default;

    static Digraph build(int n, std::vector<Arc> arc_list) {
        if (n <= 0) throw std::invalid_argument("digraph must have at least one vertex");
        for (const auto& [u, v] : arc_list) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("arc endpoint out of range: (" + std::to_string(u) +
                                            ", " + std::to_string(v) + ") with n = " + std::to_string(n));
            if (u == v)
                throw std::invalid_argument("loop at vertex " + std::to_string(u) + " is not allowed");
        }
        std::sort(arc_list.begin(), arc_list.end());
        arc_list.erase(std::unique(arc_list.begin(), arc_list.end()), arc_list.end());

        Digraph d;
        d.n_ = n;
        d.words_ = static_cast<size_t>((n + 63) / 64);
        d.bits_.assign(static_cast<size_t>(n) * d.words_, 0);
        d.out_.assign(static_cast<size_t>(n), {});
        d.in_.assign(static_cast<size_t>(n), {});
        d.arcs_ = std::move(arc_list);
        for (const auto& [u, v] : d.arcs_) {
            d.out_[static_cast<size_t>(u)].push_back(v);
            d.in_[static_cast<size_t>(v)].push_back(u);  // arcs are (u,v)-sorted, so these stay ascending
            d.bits_[static_cast<size_t>(u) * d.words_ + static_cast<size_t>(v) / 64] |=
                1ULL << (v % 64);
        }
        return d;
    }

    int order() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<int>& out(int v) const { return out_[static_cast<size_t>(v)]; }
    const std::vector<int>& in(int v) const { return in_[static_cast<size_t>(v)]; }
    int out_degree(int v) const { return static_cast<int>(out(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in(v).size()); }

    bool has_arc(int u, int v) const {
        return (bits_[static_cast<size_t>(u) * words_ + static_cast<size_t>(v) / 64] >> (v % 64)) & 1ULL;
    }
    bool has_digon(int u, int v) const { return has_arc(u, v) && has_arc(v, u); }
    bool adjacent(int u, int v) const { return has_arc(u, v) || has_arc(v, u); }

    /// True when the digraph has no digons (i.e. it is an oriented graph).
    bool is_simple() const {
        for (const auto& [u, v] : arcs_)
            if (u < v && has_arc(v, u)) return false;
        return true;
    }

    Digraph reversed() const {
        std::vector<Arc> rev;
        rev.reserve(arcs_.size());
        for (const auto& [u, v] : arcs_) rev.emplace_back(v, u);
        return build(n_, std::move(rev));
    }

    /// Subdigraph induced by `verts` (ascending, distinct). Vertex i of the
    /// result corresponds to verts[i].
    Digraph induced(const std::vector<int>& verts) const {
        if (verts.empty()) throw std::invalid_argument("induced subdigraph needs at least one vertex");
        std::vector<int> local(static_cast<size_t>(n_), -1);
        for (size_t i = 0; i < verts.size(); ++i) {
            const int v = verts[i];
            if (v < 0 || v >= n_) throw std::invalid_argument("induced: vertex out of range");
            if (local[static_cast<size_t>(v)] != -1) throw std::invalid_argument("induced: duplicate vertex");
            if (i > 0 && verts[i] <= verts[i - 1]) throw std::invalid_argument("induced: vertices must be ascending");
            local[static_cast<size_t>(v)] = static_cast<int>(i);
        }
        std::vector<Arc> sub;
        for (const auto& [u, v] : arcs_) {
            const int lu = local[static_cast<size_t>(u)], lv = local[static_cast<size_t>(v)];
            if (lu != -1 && lv != -1) sub.emplace_back(lu, lv);
        }
        return build(static_cast<int>(verts.size()), std::move(sub));
    }

private:
    int n_ = 0;
    size_t words_ = 0;
    std::vector<uint64_t> bits_;  // row-major adjacency bits
    std::vector<std::vector<int>> out_, in_;
    std::vector<Arc> arcs_;  // lexicographically sorted
};

inline bool operator==(const Digraph& a, const Digraph& b) {
    return a.order() == b.order() && a.arcs() == b.arcs();
}

struct DegreeSummary {
    int delta_plus = 0;   // minimum out-degree
    int delta_minus = 0;  // minimum in-degree
    int delta = 0;        // min of the two
    std::vector<int> out_degrees, in_degrees;
};

inline DegreeSummary degree_summary(const Digraph& d) {
    DegreeSummary s;
    s.out_degrees.resize(static_cast<size_t>(d.order()));
    s.in_degrees.resize(static_cast<size_t>(d.order()));
    s.delta_plus = d.order();
    s.delta_minus = d.order();
    for (int v = 0; v < d.order(); ++v) {
        s.out_degrees[static_cast<size_t>(v)] = d.out_degree(v);
        s.in_degrees[static_cast<size_t>(v)] = d.in_degree(v);
        s.delta_plus = std::min(s.delta_plus, d.out_degree(v));
        s.delta_minus = std::min(s.delta_minus, d.in_degree(v));
    }
    s.delta = std::min(s.delta_plus, s.delta_minus);
    return s;
}

/// Two-sided vertex partition of a bipartite digraph. Both sides are
/// ascending; side[v] is 0 for A and 1 for B.
struct Bipartition {
    std::vector<int> a, b;
    std::vector<signed char> side;

    int size_a() const { return static_cast<int>(a.size()); }
    int size_b() const { return static_cast<int>(b.size()); }
    bool in_a(int v) const { return side[static_cast<size_t>(v)] == 0; }

    static Bipartition from_sides(std::vector<int> a_side, std::vector<int> b_side, int n) {
        Bipartition bp;
        bp.a = std::move(a_side);
        bp.b = std::move(b_side);
        bp.side.assign(static_cast<size_t>(n), -1);
        for (int v : bp.a) bp.side[static_cast<size_t>(v)] = 0;
        for (int v : bp.b) bp.side[static_cast<size_t>(v)] = 1;
        for (signed char s : bp.side)
            if (s == -1) throw std::invalid_argument("bipartition does not cover all vertices");
        return bp;
    }
};

/// 2-colors the underlying undirected graph if possible. Within each weak
/// component the side containing the smallest vertex id goes to A, which
/// makes the output canonical for disconnected digraphs too.
inline std::optional<Bipartition> bipartition_of(const Digraph& d) {
    const int n = d.order();
    std::vector<signed char> side(static_cast<size_t>(n), -1);
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (side[static_cast<size_t>(start)] != -1) continue;
        side[static_cast<size_t>(start)] = 0;
        stack.push_back(start);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            auto visit = [&](int u) -> bool {
                if (side[static_cast<size_t>(u)] == -1) {
                    side[static_cast<size_t>(u)] = static_cast<signed char>(1 - side[static_cast<size_t>(v)]);
                    stack.push_back(u);
                    return true;
                }
                return side[static_cast<size_t>(u)] != side[static_cast<size_t>(v)];
            };
            for (int u : d.out(v))
                if (!visit(u)) return std::nullopt;
            for (int u : d.in(v))
                if (!visit(u)) return std::nullopt;
        }
    }
    Bipartition bp;
    bp.side = std::move(side);
    for (int v = 0; v < n; ++v)
        (bp.side[static_cast<size_t>(v)] == 0 ? bp.a : bp.b).push_back(v);
    return bp;
}

/// True iff the subdigraph induced by `s` contains a directed cycle; a digon
/// inside `s` counts as a 2-cycle. Iterative sink-free reduction (Kahn).
inline bool has_cycle_within(const Digraph& d, const std::vector<int>& s) {
    const int n = d.order();
    std::vector<char> in_set(static_cast<size_t>(n), 0);
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (int v : s) {
        if (v < 0 || v >= n) throw std::invalid_argument("has_cycle_within: vertex out of range");
        in_set[static_cast<size_t>(v)] = 1;
    }
    int members = 0;
    for (int v = 0; v < n; ++v)
        if (in_set[static_cast<size_t>(v)]) ++members;
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        if (!in_set[static_cast<size_t>(v)]) continue;
        for (int u : d.in(v))
            if (in_set[static_cast<size_t>(u)]) ++indeg[static_cast<size_t>(v)];
        if (indeg[static_cast<size_t>(v)] == 0) queue.push_back(v);
    }
    int removed = 0;
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        ++removed;
        for (int u : d.out(v)) {
            if (!in_set[static_cast<size_t>(u)]) continue;
            if (--indeg[static_cast<size_t>(u)] == 0) queue.push_back(u);
        }
    }
    return removed < members;
}

inline bool is_acyclic(const Digraph& d) {
    std::vector<int> all(static_cast<size_t>(d.order()));
    for (int v = 0; v < d.order(); ++v) all[static_cast<size_t>(v)] = v;
    return !has_cycle_within(d, all);
}

/// Weak components as ascending vertex lists, ordered by smallest member.
inline std::vector<std::vector<int>> weak_components(const Digraph& d) {
    const int n = d.order();
    std::vector<int> parent(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) parent[static_cast<size_t>(v)] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    for (const auto& [u, v] : d.arcs()) {
        const int ru = find(u), rv = find(v);
        if (ru != rv) parent[static_cast<size_t>(std::max(ru, rv))] = std::min(ru, rv);
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> comp_index(static_cast<size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const int r = find(v);
        if (comp_index[static_cast<size_t>(r)] == -1) {
            comp_index[static_cast<size_t>(r)] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<size_t>(comp_index[static_cast<size_t>(r)])].push_back(v);
    }
    return comps;
}

inline bool is_weakly_connected(const Digraph& d) { return weak_components(d).size() == 1; }

inline Digraph disjoint_union(const Digraph& a, const Digraph& b) {
    std::vector<Arc> arcs = a.arcs();
    for (const auto& [u, v] : b.arcs()) arcs.emplace_back(u + a.order(), v + a.order());
    return Digraph::build(a.order() + b.order(), std::move(arcs));
}

struct IndependenceResult {
    int value = 0;
    std::vector<int> witness;  // ascending
};

/// Exact maximum independent set of the underlying undirected graph (an arc
/// in either direction blocks independence). Branch and bound seeded with a
/// greedy solution.
inline IndependenceResult independence_number(const Digraph& d) {
    const int n = d.order();
    std::vector<std::vector<int>> und(static_cast<size_t>(n));
    for (const auto& [u, v] : d.arcs()) {
        if (u < v || !d.has_arc(v, u)) {
            und[static_cast<size_t>(u)].push_back(v);
            und[static_cast<size_t>(v)].push_back(u);
        }
    }
    for (auto& nb : und) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }

    // greedy lower bound: repeatedly take the min-degree remaining vertex
    std::vector<int> best;
    {
        std::vector<char> alive(static_cast<size_t>(n), 1);
        int remaining = n;
        while (remaining > 0) {
            int pick = -1, pick_deg = n + 1;
            for (int v = 0; v < n; ++v) {
                if (!alive[static_cast<size_t>(v)]) continue;
                int deg = 0;
                for (int u : und[static_cast<size_t>(v)])
                    if (alive[static_cast<size_t>(u)]) ++deg;
                if (deg < pick_deg) { pick_deg = deg; pick = v; }
            }
            best.push_back(pick);
            alive[static_cast<size_t>(pick)] = 0;
            --remaining;
            for (int u : und[static_cast<size_t>(pick)])
                if (alive[static_cast<size_t>(u)]) { alive[static_cast<size_t>(u)] = 0; --remaining; }
        }
        std::sort(best.begin(), best.end());
    }

    std::vector<int> current;
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& cand) {
        if (current.size() + cand.size() <= best.size()) return;
        if (cand.empty()) {
            best = current;
            std::sort(best.begin(), best.end());
            return;
        }
        std::vector<char> in_cand(static_cast<size_t>(n), 0);
        for (int v : cand) in_cand[static_cast<size_t>(v)] = 1;
        int pivot = -1, pivot_deg = -1;
        for (int v : cand) {
            int deg = 0;
            for (int u : und[static_cast<size_t>(v)])
                if (in_cand[static_cast<size_t>(u)]) ++deg;
            if (deg > pivot_deg) { pivot_deg = deg; pivot = v; }
        }
        if (pivot_deg <= 1) {
            // every candidate has at most one candidate neighbour: solve greedily
            std::vector<char> used(static_cast<size_t>(n), 0);
            const size_t base = current.size();
            for (int v : cand) {
                if (used[static_cast<size_t>(v)]) continue;
                current.push_back(v);
                used[static_cast<size_t>(v)] = 1;
                for (int u : und[static_cast<size_t>(v)])
                    if (in_cand[static_cast<size_t>(u)]) used[static_cast<size_t>(u)] = 1;
            }
            if (current.size() > best.size()) {
                best = current;
                std::sort(best.begin(), best.end());
            }
            current.resize(base);
            return;
        }
        // include pivot
        std::vector<int> next;
        next.reserve(cand.size());
        for (int v : cand)
            if (v != pivot && !d.adjacent(pivot, v)) next.push_back(v);
        current.push_back(pivot);
        rec(next);
        current.pop_back();
        // exclude pivot
        next.clear();
        for (int v : cand)
            if (v != pivot) next.push_back(v);
        rec(next);
    };
    std::vector<int> cand(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) cand[static_cast<size_t>(v)] = v;
    rec(cand);
    return {static_cast<int>(best.size()), best};
}

/// delta_A-style side minimum: min over `verts` of min(d+, d-).
inline int min_side_degree(const Digraph& d, const std::vector<int>& verts) {
    int m = d.order();
    for (int v : verts) m = std::min({m, d.out_degree(v), d.in_degree(v)});
    return m;
}

/// True when every cross pair between va and vb carries both arcs.
inline bool all_cross_digons(const Digraph& d, const std::vector<int>& va, const std::vector<int>& vb) {
    for (int u : va)
        for (int v : vb)
            if (!d.has_digon(u, v)) return false;
    return true;
}

/// Complete symmetric bipartite test for one weak component of d.
inline bool component_is_complete_symmetric(const Digraph& d, const std::vector<int>& comp,
                                            const Bipartition& bp) {
    std::vector<int> ca, cb;
    for (int v : comp) (bp.in_a(v) ? ca : cb).push_back(v);
    return all_cross_digons(d, ca, cb);
}

/// Exactly one arc per cross pair and none inside a side.
inline bool is_orientation_of_complete_bipartite(const Digraph& d, const Bipartition& bp) {
    for (int u : bp.a)
        for (int v : bp.a)
            if (u != v && d.has_arc(u, v)) return false;
    for (int u : bp.b)
        for (int v : bp.b)
            if (u != v && d.has_arc(u, v)) return false;
    for (int u : bp.a)
        for (int v : bp.b)
            if (d.has_arc(u, v) == d.has_arc(v, u)) return false;
    return true;
}

}  // namespace dibc
