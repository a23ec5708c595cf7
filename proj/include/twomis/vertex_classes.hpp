#pragma once

#include <optional>
#include <vector>

#include "twomis/graph.hpp"
#include "twomis/independence.hpp"
#include "twomis/matching.hpp"

namespace twomis {

VertexSet leaves(const Graph& g);

/// Vertices whose closed neighborhood induces a clique.
VertexSet simplicial_vertices(const Graph& g);

struct CodominatedResult {
    VertexSet members;
    std::vector<int> witness;  // witness[v] = smallest u != v with N[u] subseteq N[v], else -1
};
CodominatedResult codominated_vertices(const Graph& g);

/// v is shedding when every independent set of g - N[v] still leaves some
/// neighbor of v available. Checked over maximal independent sets only: a
/// blocking set stays blocking under enlargement.
VertexSet shedding_vertices(const Graph& g, const Limits& limits = {});
bool is_shedding_vertex(const Graph& g, int v, const Limits& limits = {});

/// The swap construction: starting from independent s (all shedding), replace
/// the members of a one by one with fresh neighbors. Result keeps |s| vertices,
/// avoids a entirely, and carries the matching from a into the replacements.
/// Selection is smallest-id with backtracking, so the output is deterministic.
struct SheddingExpansion {
    VertexSet independent_set;  // (s - a) plus the replacement vertices
    Matching matching;          // matches a into the replacements
};
SheddingExpansion expand_shedding_subset(const Graph& g, const VertexSet& s, const VertexSet& a,
                                         const Limits& limits = {});

/// All 2^|s| expansions, one per subset of s, in subset-mask order. Every set
/// is independent of size |s| and they are pairwise distinct.
std::vector<SheddingExpansion> shedding_powerset_witnesses(const Graph& g, const VertexSet& s,
                                                           const Limits& limits = {});

/// A maximal independent set disjoint from s, plus a matching from s into it.
struct DisjointMaximalResult {
    VertexSet maximal_set;
    Matching matching;
};
DisjointMaximalResult disjoint_maximal_from_shedding(const Graph& g, const VertexSet& s,
                                                     const Limits& limits = {});

}  // namespace twomis
