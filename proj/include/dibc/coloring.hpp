#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dibc/digraph.hpp"

namespace dibc {

/// Total, surjective vertex coloring with colors 1..k. Surjectivity is
/// enforced at construction so every color class is nonempty.
class Coloring {
public:
    Coloring() = default;

    static Coloring from_assignment(std::vector<int> assign) {
        if (assign.empty()) throw std::invalid_argument("coloring must cover at least one vertex");
        int k = 0;
        for (int c : assign) {
            if (c < 1) throw std::invalid_argument("colors are 1-based, got " + std::to_string(c));
            k = std::max(k, c);
        }
        std::vector<std::vector<int>> classes(static_cast<size_t>(k));
        for (size_t v = 0; v < assign.size(); ++v)
            classes[static_cast<size_t>(assign[v] - 1)].push_back(static_cast<int>(v));
        for (int c = 0; c < k; ++c)
            if (classes[static_cast<size_t>(c)].empty())
                throw std::invalid_argument("color " + std::to_string(c + 1) +
                                            " is unused; a coloring must be surjective");
        Coloring col;
        col.assign_ = std::move(assign);
        col.classes_ = std::move(classes);
        col.k_ = k;
        return col;
    }

    int size() const { return static_cast<int>(assign_.size()); }
    int num_colors() const { return k_; }
    int color_of(int v) const { return assign_[static_cast<size_t>(v)]; }
    const std::vector<int>& assignment() const { return assign_; }
    const std::vector<int>& color_class(int c) const { return classes_[static_cast<size_t>(c - 1)]; }

    Coloring with_swapped_colors(int c1, int c2) const {
        std::vector<int> a = assign_;
        for (int& c : a) {
            if (c == c1) c = c2;
            else if (c == c2) c = c1;
        }
        return from_assignment(std::move(a));
    }

    friend bool operator==(const Coloring& x, const Coloring& y) { return x.assign_ == y.assign_; }

private:
    std::vector<int> assign_;
    std::vector<std::vector<int>> classes_;
    int k_ = 0;
};

inline void require_matching(const Digraph& d, const Coloring& c) {
    if (c.size() != d.order())
        throw std::invalid_argument("coloring covers " + std::to_string(c.size()) +
                                    " vertices but digraph has " + std::to_string(d.order()));
}

/// True iff every color class induces an acyclic subdigraph (a digon inside
/// a class is a 2-cycle).
inline bool is_acyclic_coloring(const Digraph& d, const Coloring& c) {
    require_matching(d, c);
    for (int i = 1; i <= c.num_colors(); ++i)
        if (has_cycle_within(d, c.color_class(i))) return false;
    return true;
}

/// Vertices of class i whose out-neighborhood meets every other class.
inline std::vector<int> b_plus_vertices(const Digraph& d, const Coloring& c, int i) {
    require_matching(d, c);
    if (i < 1 || i > c.num_colors()) throw std::invalid_argument("color out of range");
    std::vector<int> result;
    std::vector<char> seen(static_cast<size_t>(c.num_colors() + 1), 0);
    for (int x : c.color_class(i)) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int y : d.out(x)) seen[static_cast<size_t>(c.color_of(y))] = 1;
        bool ok = true;
        for (int j = 1; j <= c.num_colors() && ok; ++j)
            if (j != i && !seen[static_cast<size_t>(j)]) ok = false;
        if (ok) result.push_back(x);
    }
    return result;
}

/// Mirror of b_plus_vertices with in-neighborhoods.
inline std::vector<int> b_minus_vertices(const Digraph& d, const Coloring& c, int i) {
    require_matching(d, c);
    if (i < 1 || i > c.num_colors()) throw std::invalid_argument("color out of range");
    std::vector<int> result;
    std::vector<char> seen(static_cast<size_t>(c.num_colors() + 1), 0);
    for (int x : c.color_class(i)) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int y : d.in(x)) seen[static_cast<size_t>(c.color_of(y))] = 1;
        bool ok = true;
        for (int j = 1; j <= c.num_colors() && ok; ++j)
            if (j != i && !seen[static_cast<size_t>(j)]) ok = false;
        if (ok) result.push_back(x);
    }
    return result;
}

struct ClassReport {
    int color = 0;
    bool acyclic = false;
    std::vector<int> b_plus, b_minus, b_vertices;
    bool has_b_pair = false;                          // distinct (b+, b-) pair exists
    std::optional<std::pair<int, int>> b_pair_witness;  // lexicographically least
    bool good = false;  // has a b+ vertex and a b- vertex (possibly equal)
};

struct VerificationReport {
    std::vector<ClassReport> classes;
    bool is_acyclic = false;
    bool is_b_coloring = false;

    const ClassReport& class_report(int color) const { return classes[static_cast<size_t>(color - 1)]; }

    /// First class lacking b-structure, or 0 when all classes are good.
    int first_bad_class() const {
        for (const auto& cr : classes)
            if (!cr.good) return cr.color;
        return 0;
    }
};

inline VerificationReport verify(const Digraph& d, const Coloring& c) {
    require_matching(d, c);
    VerificationReport rep;
    rep.is_acyclic = true;
    bool all_good = true;
    for (int i = 1; i <= c.num_colors(); ++i) {
        ClassReport cr;
        cr.color = i;
        cr.acyclic = !has_cycle_within(d, c.color_class(i));
        cr.b_plus = b_plus_vertices(d, c, i);
        cr.b_minus = b_minus_vertices(d, c, i);
        std::set_intersection(cr.b_plus.begin(), cr.b_plus.end(), cr.b_minus.begin(),
                              cr.b_minus.end(), std::back_inserter(cr.b_vertices));
        for (int x : cr.b_plus) {
            for (int y : cr.b_minus) {
                if (x != y) {
                    cr.has_b_pair = true;
                    cr.b_pair_witness = {x, y};
                    break;
                }
            }
            if (cr.has_b_pair) break;
        }
        cr.good = !cr.b_plus.empty() && !cr.b_minus.empty();
        rep.is_acyclic = rep.is_acyclic && cr.acyclic;
        all_good = all_good && cr.good;
        rep.classes.push_back(std::move(cr));
    }
    rep.is_b_coloring = rep.is_acyclic && all_good;
    return rep;
}

/// Distinct colors present in each side of a bipartition.
inline std::pair<int, int> class_color_spread(const Digraph& d, const Bipartition& bp,
                                              const Coloring& c) {
    require_matching(d, c);
    if (static_cast<int>(bp.side.size()) != d.order())
        throw std::invalid_argument("bipartition does not match digraph");
    std::vector<char> in_a(static_cast<size_t>(c.num_colors() + 1), 0);
    std::vector<char> in_b(static_cast<size_t>(c.num_colors() + 1), 0);
    for (int v = 0; v < d.order(); ++v)
        (bp.in_a(v) ? in_a : in_b)[static_cast<size_t>(c.color_of(v))] = 1;
    int ca = 0, cb = 0;
    for (int j = 1; j <= c.num_colors(); ++j) {
        ca += in_a[static_cast<size_t>(j)];
        cb += in_b[static_cast<size_t>(j)];
    }
    return {ca, cb};
}

}  // namespace dibc
