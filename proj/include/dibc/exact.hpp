#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dibc/coloring.hpp"
#include "dibc/digraph.hpp"
#include "dibc/util.hpp"

namespace dibc {

struct SolveResult {
    int value = 0;
    Coloring witness;
    uint64_t nodes_expanded = 0;
    double elapsed_seconds = 0.0;
};

namespace detail {

struct MaskGraph {
    int n = 0;
    std::vector<uint64_t> out, in;
    explicit MaskGraph(const Digraph& d) : n(d.order()) {
        if (n > 64) throw std::invalid_argument("exact search supports at most 64 vertices");
        out.assign(static_cast<size_t>(n), 0);
        in.assign(static_cast<size_t>(n), 0);
        for (const auto& [u, v] : d.arcs()) {
            out[static_cast<size_t>(u)] |= 1ULL << v;
            in[static_cast<size_t>(v)] |= 1ULL << u;
        }
    }
};

inline bool mask_acyclic(const MaskGraph& g, uint64_t members) {
    uint64_t rem = members;
    while (rem) {
        uint64_t removable = 0;
        for (uint64_t m = rem; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            if ((g.in[static_cast<size_t>(v)] & rem) == 0) removable |= 1ULL << v;
        }
        if (!removable) return false;
        rem &= ~removable;
    }
    return true;
}

/// Backtracking feasibility test for an acyclic b-coloring with exactly k
/// colors. Vertices are assigned in index order; a vertex may open color c
/// only when colors below c are already open, which makes the least vertex
/// of class i ascending in i and prunes color permutations. Two prunes:
/// every partial class must stay acyclic, and a class that can no longer
/// obtain a b+ or b- vertex (even if all uncolored vertices land favorably)
/// kills the branch. With no uncolored vertices left the optimistic check is
/// exact, so accepted leaves are verified b-colorings by construction.
class BColoringSearch {
public:
    BColoringSearch(const Digraph& d, int k)
        : g_(d), n_(d.order()), k_(k),
          color_(static_cast<size_t>(n_), 0),
          cls_(static_cast<size_t>(k + 1), 0),
          ocnt_(static_cast<size_t>(n_) * static_cast<size_t>(k + 1), 0),
          icnt_(static_cast<size_t>(n_) * static_cast<size_t>(k + 1), 0),
          ohits_(static_cast<size_t>(n_), 0),
          ihits_(static_cast<size_t>(n_), 0) {}

    bool search(Coloring* witness) {
        if (k_ < 1 || k_ > n_) return false;
        if (!rec(0, 0)) return false;
        if (witness) {
            std::vector<int> assign(color_.begin(), color_.end());
            *witness = Coloring::from_assignment(std::move(assign));
        }
        return true;
    }

    uint64_t nodes() const { return nodes_; }

private:
    uint64_t suffix_from(int v) const {
        if (v >= 64) return 0;
        const uint64_t all = (n_ == 64) ? ~0ULL : ((1ULL << n_) - 1);
        return all & ~((1ULL << v) - 1);
    }

    void place(int v, int c) {
        color_[static_cast<size_t>(v)] = c;
        cls_[static_cast<size_t>(c)] |= 1ULL << v;
        for (uint64_t m = g_.in[static_cast<size_t>(v)]; m;) {
            const int u = std::countr_zero(m);
            m &= m - 1;
            if (ocnt(u, c)++ == 0) ++ohits_[static_cast<size_t>(u)];
        }
        for (uint64_t m = g_.out[static_cast<size_t>(v)]; m;) {
            const int u = std::countr_zero(m);
            m &= m - 1;
            if (icnt(u, c)++ == 0) ++ihits_[static_cast<size_t>(u)];
        }
    }

    void unplace(int v, int c) {
        color_[static_cast<size_t>(v)] = 0;
        cls_[static_cast<size_t>(c)] &= ~(1ULL << v);
        for (uint64_t m = g_.in[static_cast<size_t>(v)]; m;) {
            const int u = std::countr_zero(m);
            m &= m - 1;
            if (--ocnt(u, c) == 0) --ohits_[static_cast<size_t>(u)];
        }
        for (uint64_t m = g_.out[static_cast<size_t>(v)]; m;) {
            const int u = std::countr_zero(m);
            m &= m - 1;
            if (--icnt(u, c) == 0) --ihits_[static_cast<size_t>(u)];
        }
    }

    uint8_t& ocnt(int v, int c) { return ocnt_[static_cast<size_t>(v) * static_cast<size_t>(k_ + 1) + static_cast<size_t>(c)]; }
    uint8_t& icnt(int v, int c) { return icnt_[static_cast<size_t>(v) * static_cast<size_t>(k_ + 1) + static_cast<size_t>(c)]; }

    /// Can some current-or-future member of class i still become a b+ vertex
    /// (out = true) or b- vertex (out = false)?
    bool side_possible(int i, uint64_t uncolored, bool out_side) {
        const uint64_t candidates = cls_[static_cast<size_t>(i)] | uncolored;
        for (uint64_t m = candidates; m;) {
            const int x = std::countr_zero(m);
            m &= m - 1;
            const uint64_t nbrs = out_side ? g_.out[static_cast<size_t>(x)] : g_.in[static_cast<size_t>(x)];
            if (nbrs & (uncolored & ~(1ULL << x))) return true;  // an uncolored neighbor can fill any gap
            const int own = out_side ? ocnt(x, i) : icnt(x, i);
            const int hits = (out_side ? ohits_[static_cast<size_t>(x)] : ihits_[static_cast<size_t>(x)]) - (own > 0 ? 1 : 0);
            if (hits == k_ - 1) return true;
        }
        return false;
    }

    bool hopeless(int next_vertex, int /*used*/) {
        const uint64_t uncolored = suffix_from(next_vertex);
        for (int i = 1; i <= k_; ++i) {
            if (!side_possible(i, uncolored, true)) return true;
            if (!side_possible(i, uncolored, false)) return true;
        }
        return false;
    }

    bool rec(int v, int used) {
        if (v == n_) return used == k_;
        ++nodes_;
        if (k_ - used > n_ - v) return false;  // cannot open the remaining colors
        const int cmax = std::min(k_, used + 1);
        for (int c = 1; c <= cmax; ++c) {
            if (!mask_acyclic(g_, cls_[static_cast<size_t>(c)] | (1ULL << v))) continue;
            place(v, c);
            const int used2 = std::max(used, c);
            if (!hopeless(v + 1, used2) && rec(v + 1, used2)) return true;
            unplace(v, c);
        }
        return false;
    }

    MaskGraph g_;
    int n_, k_;
    std::vector<int> color_;
    std::vector<uint64_t> cls_;
    std::vector<uint8_t> ocnt_, icnt_;
    std::vector<int> ohits_, ihits_;
    uint64_t nodes_ = 0;
};

/// Feasibility of an acyclic coloring with at most k colors, assigning
/// vertices along a degeneracy order.
class AcyclicColoringSearch {
public:
    AcyclicColoringSearch(const Digraph& d, int k, std::vector<int> order)
        : g_(d), n_(d.order()), k_(k), order_(std::move(order)),
          color_(static_cast<size_t>(n_), 0), cls_(static_cast<size_t>(k + 1), 0) {}

    bool search(std::vector<int>* assignment) {
        if (k_ < 1) return false;
        if (!rec(0, 0)) return false;
        if (assignment) assignment->assign(color_.begin(), color_.end());
        return true;
    }

    uint64_t nodes() const { return nodes_; }

private:
    bool rec(int pos, int used) {
        if (pos == n_) return true;
        ++nodes_;
        const int v = order_[static_cast<size_t>(pos)];
        const int cmax = std::min(k_, used + 1);
        for (int c = 1; c <= cmax; ++c) {
            if (!mask_acyclic(g_, cls_[static_cast<size_t>(c)] | (1ULL << v))) continue;
            color_[static_cast<size_t>(v)] = c;
            cls_[static_cast<size_t>(c)] |= 1ULL << v;
            if (rec(pos + 1, std::max(used, c))) return true;
            color_[static_cast<size_t>(v)] = 0;
            cls_[static_cast<size_t>(c)] &= ~(1ULL << v);
        }
        return false;
    }

    MaskGraph g_;
    int n_, k_;
    std::vector<int> order_;
    std::vector<int> color_;
    std::vector<uint64_t> cls_;
    uint64_t nodes_ = 0;
};

inline std::vector<int> degeneracy_order(const Digraph& d) {
    const int n = d.order();
    std::vector<char> alive(static_cast<size_t>(n), 1);
    std::vector<int> removal;
    for (int round = 0; round < n; ++round) {
        int pick = -1, pick_deg = 4 * n;
        for (int v = 0; v < n; ++v) {
            if (!alive[static_cast<size_t>(v)]) continue;
            int deg = 0;
            for (int u : d.out(v)) deg += alive[static_cast<size_t>(u)];
            for (int u : d.in(v)) deg += alive[static_cast<size_t>(u)];
            if (deg < pick_deg) { pick_deg = deg; pick = v; }
        }
        removal.push_back(pick);
        alive[static_cast<size_t>(pick)] = 0;
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
}

}  // namespace detail

/// Exposed feasibility test: does d admit an acyclic b-coloring with exactly
/// k colors? (Feasibility need not be monotone in k.)
inline bool dib_feasible(const Digraph& d, int k, Coloring* witness = nullptr,
                         uint64_t* nodes = nullptr) {
    detail::BColoringSearch search(d, k);
    const bool ok = search.search(witness);
    if (nodes) *nodes += search.nodes();
    return ok;
}

/// Largest k with at least k vertices of out-degree >= k-1 and at least k
/// vertices of in-degree >= k-1; every class of a b-coloring needs a b+ and
/// a b- vertex, so dib cannot exceed this.
inline int degree_bound(const Digraph& d) {
    const DegreeSummary deg = degree_summary(d);
    std::vector<int> od = deg.out_degrees, id = deg.in_degrees;
    std::sort(od.rbegin(), od.rend());
    std::sort(id.rbegin(), id.rend());
    int best = 1;
    for (int k = 1; k <= d.order(); ++k)
        if (od[static_cast<size_t>(k - 1)] >= k - 1 && id[static_cast<size_t>(k - 1)] >= k - 1) best = k;
    return best;
}

/// Exact dib: tests each candidate k independently from an upper bound
/// downward (feasibility is not assumed monotone in k) and returns the first
/// feasible value, which is therefore the maximum. Only definitionally
/// immediate caps seed the scan (the order, and the degree bound above); the
/// structural bounds this toolkit checks are kept out of the solver so the
/// checks stay non-circular.
inline SolveResult exact_dib(const Digraph& d) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = d.order();
    static std::atomic<bool> warned{false};
    if (n > 10 && !warned.exchange(true))
        std::fprintf(stderr, "advisory: exact dib search past 10 vertices may be slow (n = %d)\n", n);
    const int upper = std::min(n, degree_bound(d));
    SolveResult res;
    for (int k = upper; k >= 1; --k) {
        Coloring witness;
        if (dib_feasible(d, k, &witness, &res.nodes_expanded)) {
            res.value = k;
            res.witness = std::move(witness);
            res.elapsed_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (!verify(d, res.witness).is_b_coloring)
                throw std::logic_error("dib witness failed verification; solver bug");
            return res;
        }
    }
    throw std::logic_error("no feasible k found for dib; solver bug (k = dc is always feasible)");
}

/// Exact dichromatic number: smallest k admitting an acyclic coloring.
inline SolveResult exact_dc(const Digraph& d) {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = d.order();
    static std::atomic<bool> warned{false};
    if (n > 12 && !warned.exchange(true))
        std::fprintf(stderr, "advisory: exact dc search past 12 vertices may be slow (n = %d)\n", n);
    SolveResult res;
    if (is_acyclic(d)) {
        res.value = 1;
        res.witness = Coloring::from_assignment(std::vector<int>(static_cast<size_t>(n), 1));
        res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return res;
    }
    const std::vector<int> order = detail::degeneracy_order(d);
    for (int k = 2; k <= n; ++k) {
        detail::AcyclicColoringSearch search(d, k, order);
        std::vector<int> assignment;
        const bool ok = search.search(&assignment);
        res.nodes_expanded += search.nodes();
        if (ok) {
            res.value = k;
            res.witness = Coloring::from_assignment(std::move(assignment));
            res.elapsed_seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (res.witness.num_colors() != k)
                throw std::logic_error("dc witness uses fewer colors than the proven minimum");
            if (!is_acyclic_coloring(d, res.witness))
                throw std::logic_error("dc witness is not acyclic; solver bug");
            return res;
        }
    }
    throw std::logic_error("no acyclic coloring found with n colors; solver bug");
}

struct Bound {
    std::string name;
    int value = 0;
};

struct BoundsReport {
    std::vector<Bound> lowers, uppers;

    int best_lower() const {
        int b = 1;
        for (const auto& x : lowers) b = std::max(b, x.value);
        return b;
    }
    int best_upper() const {
        int b = INT32_MAX;
        for (const auto& x : uppers) b = std::min(b, x.value);
        return b;
    }
};

/// All applicable dib bounds with provenance labels. The dichromatic number
/// (exact) is always a lower bound; bipartite-only bounds are emitted only
/// when a bipartition exists.
inline BoundsReport bounds(const Digraph& d) {
    BoundsReport rep;
    const int n = d.order();
    const int beta = independence_number(d).value;
    rep.uppers.push_back({"independence", n - beta + 1});
    rep.uppers.push_back({"degree", degree_bound(d)});
    const auto bp = bipartition_of(d);
    if (bp) {
        if (is_weakly_connected(d))
            rep.uppers.push_back({"connected-bipartite", std::min(bp->size_a(), bp->size_b()) + 1});
        if (degree_summary(d).delta >= 2) rep.lowers.push_back({"min-degree", 2});
        if (d.is_simple()) {
            int best = INT32_MAX;
            auto check = [&](const std::vector<int>& small, const std::vector<int>& large) {
                if (small.size() > large.size()) return;
                bool has_source = false, has_sink = false;
                for (int v : large) {
                    if (d.in_degree(v) == 0) has_source = true;
                    if (d.out_degree(v) == 0) has_sink = true;
                }
                if (!has_source || !has_sink) best = std::min(best, static_cast<int>(small.size()));
            };
            check(bp->a, bp->b);
            check(bp->b, bp->a);
            if (best != INT32_MAX) rep.uppers.push_back({"no-source-sink", best});
        }
    }
    rep.lowers.push_back({"dichromatic", exact_dc(d).value});
    return rep;
}

/// Disconnected bipartite digraphs with min degree >= 2 have dib > 2 exactly
/// when there are at least three weak components, or two of which at least
/// one is not complete symmetric bipartite.
inline bool theorem7_predicate(const Digraph& d) {
    const auto bp = bipartition_of(d);
    if (!bp) throw PreconditionError("digraph is not bipartite");
    if (degree_summary(d).delta < 2) throw PreconditionError("minimum degree below 2");
    const auto comps = weak_components(d);
    if (comps.size() < 2) throw PreconditionError("digraph is weakly connected");
    if (comps.size() >= 3) return true;
    for (const auto& comp : comps)
        if (!component_is_complete_symmetric(d, comp, *bp)) return true;
    return false;
}

struct NonNeighborhoodCover {
    bool union_cover = false;         // A covered by union non-neighborhoods of B, or vice versa
    bool intersection_cover = false;  // same with intersection non-neighborhoods
    bool inter_b_covered_by_a = false;  // every w in B has an arc-free partner in A
    bool inter_a_covered_by_b = false;  // every u in A has an arc-free partner in B
};

/// Non-neighborhood side conditions for weakly connected bipartite digraphs
/// with min degree >= 2, restricted to cross-side vertices: a vertex u lies
/// in the union non-neighborhood of v when the pair (u,v) is not a digon,
/// and in the intersection non-neighborhood when the pair has no arc at all.
inline NonNeighborhoodCover theorem8_predicates(const Digraph& d, const Bipartition& bp) {
    if (static_cast<int>(bp.side.size()) != d.order())
        throw std::invalid_argument("bipartition does not match digraph");
    for (const auto& [u, v] : d.arcs())
        if (bp.side[static_cast<size_t>(u)] == bp.side[static_cast<size_t>(v)])
            throw PreconditionError("bipartition sides are not independent");
    if (!is_weakly_connected(d)) throw PreconditionError("digraph is not weakly connected");
    if (degree_summary(d).delta < 2) throw PreconditionError("minimum degree below 2");

    auto covered_union = [&](const std::vector<int>& covered, const std::vector<int>& by) {
        for (int u : covered) {
            bool ok = false;
            for (int v : by)
                if (!d.has_digon(u, v)) { ok = true; break; }
            if (!ok) return false;
        }
        return true;
    };
    auto covered_inter = [&](const std::vector<int>& covered, const std::vector<int>& by) {
        for (int u : covered) {
            bool ok = false;
            for (int v : by)
                if (!d.adjacent(u, v)) { ok = true; break; }
            if (!ok) return false;
        }
        return true;
    };
    NonNeighborhoodCover cover;
    cover.union_cover = covered_union(bp.a, bp.b) || covered_union(bp.b, bp.a);
    cover.inter_a_covered_by_b = covered_inter(bp.a, bp.b);
    cover.inter_b_covered_by_a = covered_inter(bp.b, bp.a);
    cover.intersection_cover = cover.inter_a_covered_by_b || cover.inter_b_covered_by_a;
    return cover;
}

}  // namespace dibc
