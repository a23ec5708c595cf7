#pragma once

// Brute-force reference implementations used only by tests. Everything here
// enumerates subsets directly and must stay independent of the library's
// algorithmic paths (branch and bound, pivoting enumeration, blossom, ...).

#include <cstdint>
#include <optional>
#include <vector>

#include "twomis/graph.hpp"

namespace oracles {

inline bool subset_independent(const twomis::Graph& g, std::uint64_t mask) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((mask >> v & 1) && (g.adjacency_bits(v) & mask)) return false;
    return true;
}

inline int brute_alpha(const twomis::Graph& g) {
    int best = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << g.vertex_count()); ++mask)
        if (subset_independent(g, mask)) best = std::max(best, std::popcount(mask));
    return best;
}

/// All maximum independent sets as bitmasks, ascending.
inline std::vector<std::uint64_t> brute_omega(const twomis::Graph& g) {
    int alpha = brute_alpha(g);
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (1ULL << g.vertex_count()); ++mask)
        if (std::popcount(mask) == alpha && subset_independent(g, mask)) out.push_back(mask);
    return out;
}

/// All maximal independent sets as bitmasks, ascending.
inline std::vector<std::uint64_t> brute_maximal_independent_sets(const twomis::Graph& g) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (1ULL << g.vertex_count()); ++mask) {
        if (!subset_independent(g, mask)) continue;
        bool maximal = true;
        for (int v = 0; v < g.vertex_count() && maximal; ++v)
            if (!(mask >> v & 1) && subset_independent(g, mask | (1ULL << v))) maximal = false;
        if (maximal) out.push_back(mask);
    }
    return out;
}

inline int brute_matching_number_rec(const twomis::Graph& g,
                                     const std::vector<twomis::Edge>& edges, std::size_t idx,
                                     std::uint64_t used) {
    if (idx == edges.size()) return 0;
    int best = brute_matching_number_rec(g, edges, idx + 1, used);
    const twomis::Edge& e = edges[idx];
    if (!(used >> e.u & 1) && !(used >> e.v & 1)) {
        best = std::max(best, 1 + brute_matching_number_rec(
                                  g, edges, idx + 1, used | (1ULL << e.u) | (1ULL << e.v)));
    }
    return best;
}

inline int brute_matching_number(const twomis::Graph& g) {
    return brute_matching_number_rec(g, g.edges(), 0, 0);
}

inline int brute_min_vertex_cover(const twomis::Graph& g) {
    int best = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (1ULL << g.vertex_count()); ++mask) {
        bool covers = true;
        for (const twomis::Edge& e : g.edges())
            if (!(mask >> e.u & 1) && !(mask >> e.v & 1)) {
                covers = false;
                break;
            }
        if (covers) best = std::min(best, std::popcount(mask));
    }
    return best;
}

inline bool brute_two_colorable(const twomis::Graph& g) {
    const int n = g.vertex_count();
    for (std::uint64_t colors = 0; colors < (1ULL << n); ++colors) {
        bool ok = true;
        for (const twomis::Edge& e : g.edges())
            if (((colors >> e.u) & 1) == ((colors >> e.v) & 1)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return g.vertex_count() == 0;
}

/// Shortest cycle length by trying every vertex sequence as a cycle.
inline std::optional<int> brute_girth(const twomis::Graph& g) {
    const int n = g.vertex_count();
    std::optional<int> best;
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    // permutations of every subset, taken as cyclic vertex orders
    std::vector<int> seq;
    auto extend = [&](auto&& self, std::uint64_t used) -> void {
        int k = static_cast<int>(seq.size());
        if (best && k >= *best) return;
        if (k >= 3 && g.has_edge(seq.back(), seq.front())) {
            if (!best || k < *best) best = k;
        }
        for (int v = 0; v < n; ++v) {
            if (used >> v & 1) continue;
            if (!seq.empty() && !g.has_edge(seq.back(), v)) continue;
            if (!seq.empty() && v < seq.front()) continue;  // canonical start
            seq.push_back(v);
            self(self, used | (1ULL << v));
            seq.pop_back();
        }
    };
    extend(extend, 0);
    return best;
}

/// Hall's condition on the a-b bipartite subgraph: every subset of a has
/// enough distinct b-neighbors.
inline bool brute_hall(const twomis::Graph& g, const twomis::VertexSet& a,
                       const twomis::VertexSet& b) {
    std::vector<int> members = a.to_vector();
    for (std::uint64_t mask = 0; mask < (1ULL << members.size()); ++mask) {
        std::uint64_t reach = 0;
        int size = 0;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (mask >> i & 1) {
                ++size;
                reach |= g.adjacency_bits(members[i]) & b.bits();
            }
        if (std::popcount(reach) < size) return false;
    }
    return true;
}

}  // namespace oracles
