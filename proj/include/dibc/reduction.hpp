#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dibc/coloring.hpp"
#include "dibc/digraph.hpp"

namespace dibc {

enum class Side { plus, minus };

inline const char* side_name(Side s) { return s == Side::plus ? "plus" : "minus"; }

/// One elimination of a color class that has neither a b-vertex nor a
/// b-pair. `buckets` maps each surviving color to the vertices it absorbed;
/// together the buckets partition the eliminated class.
struct ReductionStep {
    int eliminated_color = 0;  // label in the coloring the step was applied to
    Side side = Side::plus;
    std::vector<std::pair<int, std::vector<int>>> buckets;  // surviving color -> absorbed vertices
    int resulting_k = 0;
};

struct ReductionTrace {
    Coloring initial;
    std::vector<ReductionStep> steps;
    Coloring final;
};

struct VertexVSets {
    int vertex = 0;
    std::vector<int> v_plus;   // colors j != target with no out-neighbor in class j
    std::vector<int> v_minus;  // colors j != target with no in-neighbor in class j
};

/// Missing-color sets for every vertex of the target class: v_plus(x) lists
/// the other colors whose class contains no out-neighbor of x, v_minus(x)
/// the same for in-neighbors. A vertex is a b-vertex of its class exactly
/// when both sets are empty.
inline std::vector<VertexVSets> v_sets(const Digraph& d, const Coloring& c, int target) {
    require_matching(d, c);
    if (target < 1 || target > c.num_colors()) throw std::invalid_argument("target color out of range");
    const int k = c.num_colors();
    std::vector<VertexVSets> result;
    std::vector<char> out_seen(static_cast<size_t>(k + 1), 0), in_seen(static_cast<size_t>(k + 1), 0);
    for (int x : c.color_class(target)) {
        std::fill(out_seen.begin(), out_seen.end(), 0);
        std::fill(in_seen.begin(), in_seen.end(), 0);
        for (int y : d.out(x)) out_seen[static_cast<size_t>(c.color_of(y))] = 1;
        for (int y : d.in(x)) in_seen[static_cast<size_t>(c.color_of(y))] = 1;
        VertexVSets vs;
        vs.vertex = x;
        for (int j = 1; j <= k; ++j) {
            if (j == target) continue;
            if (!out_seen[static_cast<size_t>(j)]) vs.v_plus.push_back(j);
            if (!in_seen[static_cast<size_t>(j)]) vs.v_minus.push_back(j);
        }
        result.push_back(std::move(vs));
    }
    return result;
}

/// Eliminates the target class by redistributing its vertices into classes
/// they cannot harm: bucket B_j takes the not-yet-bucketed vertices whose
/// missing-color set contains j, scanning colors ascending. Returns nullopt
/// when the target class already has a b-vertex or b-pair (not reducible).
inline std::optional<std::pair<Coloring, ReductionStep>> reduce_once(const Digraph& d,
                                                                     const Coloring& c, int target) {
    require_matching(d, c);
    if (target < 1 || target > c.num_colors()) throw std::invalid_argument("target color out of range");
    if (c.num_colors() < 2) throw std::invalid_argument("reduction needs at least two colors");
    if (!is_acyclic_coloring(d, c)) throw std::invalid_argument("reduction requires an acyclic coloring");

    const bool has_plus = !b_plus_vertices(d, c, target).empty();
    const bool has_minus = !b_minus_vertices(d, c, target).empty();
    if (has_plus && has_minus) return std::nullopt;  // b-vertex or b-pair present

    const int k = c.num_colors();
    const Coloring swapped = (target == k) ? c : c.with_swapped_colors(target, k);
    const std::vector<VertexVSets> sets = v_sets(d, swapped, k);

    // When the class has no b+ vertex every member misses some out-color, and
    // symmetrically for b-. At least one side must be usable for all members.
    bool all_plus = true, all_minus = true;
    for (const auto& vs : sets) {
        all_plus = all_plus && !vs.v_plus.empty();
        all_minus = all_minus && !vs.v_minus.empty();
    }
    if (!all_plus && !all_minus)
        throw std::logic_error("reduction dichotomy failed on a class without b-structure; "
                               "this contradicts the elimination argument and means a bug");
    const Side side = all_plus ? Side::plus : Side::minus;

    std::vector<std::vector<int>> buckets(static_cast<size_t>(k));  // index j-1
    std::vector<int> assign = swapped.assignment();
    for (const auto& vs : sets) {
        const std::vector<int>& missing = (side == Side::plus) ? vs.v_plus : vs.v_minus;
        const int j = missing.front();  // ascending, so front is the greedy bucket
        buckets[static_cast<size_t>(j - 1)].push_back(vs.vertex);
        assign[static_cast<size_t>(vs.vertex)] = j;
    }

    Coloring next = Coloring::from_assignment(std::move(assign));
    if (!is_acyclic_coloring(d, next))
        throw std::logic_error("reduction produced a cyclic class; this means a bug");

    ReductionStep step;
    step.eliminated_color = target;
    step.side = side;
    step.resulting_k = next.num_colors();
    for (int j = 1; j < k; ++j)
        if (!buckets[static_cast<size_t>(j - 1)].empty())
            step.buckets.emplace_back(j, std::move(buckets[static_cast<size_t>(j - 1)]));
    return std::make_pair(std::move(next), std::move(step));
}

/// Repeatedly eliminates the lowest color class lacking b-structure until
/// every class has a b+ and a b- vertex. Terminates because k strictly
/// decreases and a 1-coloring is vacuously a b-coloring.
inline ReductionTrace reduce_to_b_coloring(const Digraph& d, const Coloring& c) {
    require_matching(d, c);
    if (!is_acyclic_coloring(d, c)) throw std::invalid_argument("reduction requires an acyclic coloring");
    ReductionTrace trace;
    trace.initial = c;
    Coloring cur = c;
    for (;;) {
        const VerificationReport rep = verify(d, cur);
        const int bad = rep.first_bad_class();
        if (bad == 0) break;
        auto step = reduce_once(d, cur, bad);
        if (!step) throw std::logic_error("class flagged as lacking b-structure was not reducible");
        cur = std::move(step->first);
        trace.steps.push_back(std::move(step->second));
    }
    trace.final = std::move(cur);
    return trace;
}

}  // namespace dibc
