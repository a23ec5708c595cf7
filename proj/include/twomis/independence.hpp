#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "twomis/graph.hpp"
#include "twomis/matching.hpp"

namespace twomis {

/// Enumeration budgets. Exact algorithms here are exponential by nature; when
/// a budget is exceeded the operation throws CapExceeded instead of silently
/// truncating.
struct Limits {
    int max_n = 30;                         // cap for alpha / omega / maximal-set enumeration
    int equivalence_max_n = 16;             // subset searches of the equivalence report
    std::size_t max_sets = 1u << 20;        // maximal-set count guard
    std::size_t pairing_threshold = 10000;  // |Omega| beyond which pairwise scan is skipped
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Throws CapExceeded("time budget exceeded") once the deadline passed.
void check_deadline(const Limits& limits);

bool is_independent(const Graph& g, const VertexSet& s);

/// All maximal independent sets, canonically ordered.
std::vector<VertexSet> maximal_independent_sets(const Graph& g, const Limits& limits = {});

/// Independence number by branch and bound with leaf reductions (exact;
/// polynomial on forests and unicyclic inputs).
int independence_number(const Graph& g, const Limits& limits = {});

/// One maximum independent set (deterministic).
VertexSet maximum_independent_set(const Graph& g, const Limits& limits = {});

struct OmegaFamily {
    int alpha = 0;
    std::vector<VertexSet> sets;  // every maximum independent set, canonical order
    VertexSet core;               // intersection of all of them
};
OmegaFamily omega_family(const Graph& g, const Limits& limits = {});

/// True iff every independent set of g disjoint from s can be matched into s,
/// decided through the maximal independent sets of g - s. Agrees with
/// |s| == alpha(g). Throws if s is not independent.
bool berge_verify(const Graph& g, const VertexSet& s, const Limits& limits = {});

bool is_well_covered(const Graph& g, const Limits& limits = {});
bool is_very_well_covered(const Graph& g, const Limits& limits = {});

/// alpha(g) + mu(g) == n(g).
bool is_konig_egervary(const Graph& g, const Limits& limits = {});

enum class CertificateKind {
    DisjointPair,
    AlphaMatchingBipartite,
    InducedBipartite2Alpha,
    UnicyclicCycleVertex,
    Exhaustion,
};
const char* to_string(CertificateKind kind);

/// Machine-checkable witness for a disjoint maximum-independent-set decision.
struct Certificate {
    bool yes = false;
    CertificateKind kind = CertificateKind::Exhaustion;
    std::string strategy;        // omega-pairs | condition-ii | bipartite-pm | unicyclic
    int alpha = -1;              // independence number when the strategy computed it
    VertexSet set_a, set_b;      // the disjoint pair (yes verdicts)
    Matching matching;           // matching payload (perfect matching witnesses)
    int cycle_vertex = -1;       // unicyclic witness vertex
    std::size_t omega_count = 0; // |Omega| when enumerated
};

enum class PairStrategy {
    Auto,        // pairwise scan unless |Omega| exceeds the pairing threshold
    OmegaPairs,  // always pairwise scan over Omega
    ConditionII, // per-set test alpha(g - s) == alpha(g)
};

/// Exact decision with certificate over the Omega enumeration.
Certificate has_two_disjoint_mis(const Graph& g, const Limits& limits = {},
                                 PairStrategy strategy = PairStrategy::Auto);

/// A disjoint pair of maximal (not necessarily maximum) independent sets, or
/// nullopt after exhausting all pairs.
std::optional<std::pair<VertexSet, VertexSet>> has_two_disjoint_maximal_is(
    const Graph& g, const Limits& limits = {});

/// The five equivalent formulations of the disjoint-MIS property, each
/// evaluated by its own literal search, with witnesses for the true ones.
struct EquivalenceReport {
    int alpha = 0;
    bool disjoint_pair = false;             // (i)  two disjoint maximum independent sets
    bool removal_preserves_alpha = false;   // (ii) some S in Omega with alpha(g-S) = alpha
    bool alpha_matching_bipartite = false;  // (iii) matching of size alpha inducing bipartite
    bool induced_bipartite_2alpha = false;  // (iv) induced bipartite subgraph of order 2 alpha
    bool bipartite_remainder_pm = false;    // (v)  A with g-A bipartite + perfect matching
    std::optional<std::pair<VertexSet, VertexSet>> pair_witness;
    std::optional<VertexSet> removal_witness;
    std::optional<Matching> matching_witness;
    std::optional<VertexSet> subgraph_witness;
    std::optional<VertexSet> deleted_witness;
    bool all_agree() const {
        return disjoint_pair == removal_preserves_alpha &&
               disjoint_pair == alpha_matching_bipartite &&
               disjoint_pair == induced_bipartite_2alpha &&
               disjoint_pair == bipartite_remainder_pm;
    }
};
EquivalenceReport equivalence_suite(const Graph& g, const Limits& limits = {});

/// Disjoint MIS pair implies mu >= alpha.
bool mu_ge_alpha_check(const Graph& g, const Limits& limits = {});

struct CoronaEmbedding {
    int k = 0;                         // the embedded pattern is C_{2k+1} with a pendant per vertex
    std::vector<int> cycle_vertices;   // images of the cycle, in cycle order
    std::vector<int> pendant_vertices; // pendant_vertices[i] hangs off cycle_vertices[i]
};
/// Induced occurrence of the pendant odd cycle C_{2k+1} plus one leaf per
/// cycle vertex, for some 1 <= k <= k_max. Host capped at n <= 20, k_max <= 3.
std::optional<CoronaEmbedding> contains_induced_corona_odd_cycle(const Graph& g, int k_max);

/// Re-derives a certificate's claim against the graph it was issued for.
bool validate_certificate(const Graph& g, const Certificate& cert, const Limits& limits = {});

}  // namespace twomis
