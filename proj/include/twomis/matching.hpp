#pragma once

#include <optional>

#include "twomis/graph.hpp"

namespace twomis {

/// Pairwise non-incident edges with cached saturated vertex set.
class Matching {
public:
    Matching() = default;
    static Matching from_edges(const EdgeSet& edges);  // throws on incident edges

    const EdgeSet& edges() const { return edges_; }
    const VertexSet& saturated() const { return saturated_; }
    std::size_t size() const { return edges_.size(); }
    bool saturates(const VertexSet& a) const { return a.is_subset_of(saturated_); }
    std::optional<int> partner(int v) const;
    bool operator==(const Matching&) const = default;

private:
    EdgeSet edges_;
    VertexSet saturated_;
};

/// True when every edge of m exists in g and no two edges share a vertex.
bool is_valid_matching(const Graph& g, const Matching& m);

/// Maximum matching size via augmenting paths with blossom contraction.
int matching_number(const Graph& g);

/// The lexicographically smallest maximum matching under canonical edge order.
Matching max_matching_general(const Graph& g);

/// Hopcroft-Karp on an explicit bipartition. Throws if the bipartition is
/// not a valid 2-coloring of g.
Matching max_matching_bipartite(const Graph& g, const VertexSet& left, const VertexSet& right);

struct PerfectMatchingResult {
    bool exists = false;
    Matching matching;  // meaningful only when exists
};
PerfectMatchingResult has_perfect_matching(const Graph& g);

struct ForestMatchingResult {
    std::optional<Matching> matching;
    int stranded_vertex = -1;  // a vertex no perfect matching can cover, when absent
};
/// Greedy leaf rule; exact on forests. Throws if g has a cycle.
ForestMatchingResult forest_perfect_matching(const Graph& g);

/// A matching saturating every vertex of a, using only a-b edges of g.
/// nullopt when none exists (Hall violation). Throws if a and b overlap.
std::optional<Matching> match_into(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace twomis
