#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "twomis/graph.hpp"
#include "twomis/independence.hpp"
#include "twomis/matching.hpp"

namespace twomis {

// ---- unicyclic graphs ----

struct UnicyclicDecomposition {
    std::vector<int> cycle;       // the unique cycle, in walk order
    VertexSet attachment_set;     // vertices off the cycle adjacent to it
    std::map<int, Subgraph> subtrees;  // x in attachment_set -> the tree hanging at x
};
/// Throws std::invalid_argument unless g is connected with m == n.
UnicyclicDecomposition unicyclic_decompose(const Graph& g);

/// Polynomial decision for unicyclic graphs. For König–Egerváry inputs the
/// answer is bipartite + perfect matching; otherwise some cycle vertex must
/// leave a forest with a perfect matching.
Certificate unicyclic_two_disjoint_mis(const Graph& g);

/// core(g) must equal the union of the subtree cores. Requires g unicyclic
/// and not König–Egerváry; throws otherwise.
bool unicyclic_core_union_check(const Graph& g, const Limits& limits = {});

/// n - 1 <= alpha + mu <= n on unicyclic graphs.
bool unicyclic_alpha_mu_range_check(const Graph& g, const Limits& limits = {});

// ---- trees ----

/// (a) maximal independent s is inside Shed(t) iff it equals Shed(t) (t != K_2);
/// (b) a maximum independent set inside Shed(t) exists iff t = K_2;
/// (c) shedding vertices of a tree are exactly the neighbors of its leaves.
bool tree_shed_structure_check(const Graph& t, const Limits& limits = {});

/// |Shed(t)| <= alpha(t); and <= alpha(t) - 1 when Shed(t) is independent.
/// Requires a tree other than K_2.
bool tree_shed_bounds_check(const Graph& t, const Limits& limits = {});

// ---- König–Egerváry graphs ----

/// Disjoint MIS pair iff bipartite with a perfect matching; a yes pair must
/// partition the whole vertex set. Requires a KE graph.
bool ke_two_disjoint_check(const Graph& g, const Limits& limits = {});

/// |Omega| <= 2^alpha with equality exactly for disjoint unions of edges.
bool ke_omega_bound_check(const Graph& g, const Limits& limits = {});

/// The six equivalent statements for KE graphs (shedding sets, |Omega| = 2^alpha,
/// Shed = V, ..., alpha K_2) must agree.
bool ke_shed_equivalence_check(const Graph& g, const Limits& limits = {});

/// Every component is a single edge.
bool is_alpha_k2(const Graph& g);

// ---- well-covered graphs of large girth ----

/// Pendant/support pairing: g = h (on the supports) with one private leaf each.
std::optional<Subgraph> corona_by_k1_base(const Graph& g);

/// For connected well-covered graphs of girth >= 6 (excluding K_1 and C_7), or
/// very well-covered of girth >= 5: disjoint MIS pair iff bipartite, and the
/// graph must decompose as h with a pendant per vertex. Throws if g is outside
/// the class.
bool girth_corollary_check(const Graph& g, const Limits& limits = {});

// ---- conjecture harness ----

/// Removing any single edge increases alpha.
bool edge_alpha_critical(const Graph& g, const Limits& limits = {});

struct SearchConfig {
    std::string family;  // catalog | gnp | trees | unicyclic | odd-cycles
    std::string catalog_path;
    std::string output_path;  // empty = stdout only
    int nmax = 7;
    double edge_probability = 0.5;
    std::uint64_t budget = 10000;
    std::uint64_t seed = 1;
    int workers = 0;  // 0 = hardware concurrency
};

struct SearchReport {
    std::string family;
    std::uint64_t examined = 0;   // graphs drawn from the family
    std::uint64_t critical = 0;   // edge-alpha-critical without isolated vertices
    std::vector<std::string> counterexamples;  // graph6 of critical graphs lacking a pair
};
/// Sweeps the family and tests the disjoint-MIS property on every
/// edge-alpha-critical graph without isolated vertices.
SearchReport conjecture_search(const SearchConfig& config, const Limits& limits = {});

// ---- deterministic generation ----

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound);
Graph random_gnp(int n, double p, std::mt19937_64& rng);
Graph prufer_decode(const std::vector<int>& seq, int n);
Graph random_tree(int n, std::mt19937_64& rng);
/// Uniform labeled tree plus one uniformly chosen non-edge closed into a cycle.
Graph random_unicyclic(int n, std::mt19937_64& rng);

/// Every labeled tree on n vertices, by enumerating all length-(n-2) sequences.
void for_all_labeled_trees(int n, const std::function<void(const Graph&)>& fn);

/// Stable per-task seed derivation for parallel fan-out.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace twomis
