#include "twomis/families.hpp"

#include <algorithm>
#include <set>

#include "twomis/graph_io.hpp"
#include "twomis/parallel.hpp"
#include "twomis/vertex_classes.hpp"

namespace twomis {

UnicyclicDecomposition unicyclic_decompose(const Graph& g) {
    std::optional<std::vector<int>> cyc = unique_cycle(g);
    if (!cyc) throw std::invalid_argument("unicyclic_decompose: graph is not unicyclic");
    UnicyclicDecomposition out;
    out.cycle = *cyc;
    VertexSet on_cycle;
    for (int v : *cyc) on_cycle.insert(v);
    out.attachment_set = neighborhood(g, on_cycle) - on_cycle;
    for (int x : out.attachment_set) {
        // x has exactly one cycle neighbor; cutting that edge frees the subtree at x
        int y = (g.neighbors(x) & on_cycle).min();
        VertexSet tree_vertices{x};
        std::vector<int> stack{x};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (v == x && w == y) continue;
                if (!tree_vertices.contains(w)) {
                    tree_vertices.insert(w);
                    stack.push_back(w);
                }
            }
        }
        out.subtrees.emplace(x, induced_subgraph(g, tree_vertices));
    }
    return out;
}

Certificate unicyclic_two_disjoint_mis(const Graph& g) {
    std::optional<std::vector<int>> cyc = unique_cycle(g);
    if (!cyc) throw std::invalid_argument("unicyclic_two_disjoint_mis: graph is not unicyclic");
    // everything below is polynomial: the solver's leaf reductions flatten
    // unicyclic inputs, matchings are blossom/greedy
    Limits wide;
    wide.max_n = std::max(wide.max_n, g.vertex_count());
    Certificate cert;
    cert.strategy = "unicyclic";
    const int n = g.vertex_count();
    int alpha = independence_number(g, wide);
    int mu = matching_number(g);
    cert.alpha = alpha;
    if (alpha + mu == n) {
        // König–Egerváry: a pair exists exactly for bipartite + perfect matching,
        // and then the bipartition itself is the pair
        BipartiteResult bp = find_bipartition(g);
        if (bp.ok()) {
            Matching m = max_matching_bipartite(g, bp.sides->first, bp.sides->second);
            if (static_cast<int>(m.size()) * 2 == n) {
                cert.yes = true;
                cert.kind = CertificateKind::AlphaMatchingBipartite;
                cert.matching = m;
                cert.set_a = bp.sides->first;
                cert.set_b = bp.sides->second;
                return cert;
            }
        }
        cert.kind = CertificateKind::Exhaustion;
        return cert;
    }
    // otherwise a pair exists exactly when some cycle vertex leaves a forest
    // with a perfect matching; the forest's bipartition is the pair
    for (int v : *cyc) {
        Subgraph rest = delete_vertices(g, VertexSet{v});
        ForestMatchingResult fm = forest_perfect_matching(rest.graph);
        if (!fm.matching) continue;
        cert.yes = true;
        cert.kind = CertificateKind::UnicyclicCycleVertex;
        cert.cycle_vertex = v;
        EdgeSet back;
        for (const Edge& e : fm.matching->edges())
            back.insert(rest.to_original[static_cast<std::size_t>(e.u)],
                        rest.to_original[static_cast<std::size_t>(e.v)]);
        cert.matching = Matching::from_edges(back);
        BipartiteResult bp = find_bipartition(rest.graph);
        for (int w : bp.sides->first)
            cert.set_a.insert(rest.to_original[static_cast<std::size_t>(w)]);
        for (int w : bp.sides->second)
            cert.set_b.insert(rest.to_original[static_cast<std::size_t>(w)]);
        return cert;
    }
    cert.kind = CertificateKind::Exhaustion;
    return cert;
}

bool unicyclic_core_union_check(const Graph& g, const Limits& limits) {
    UnicyclicDecomposition dec = unicyclic_decompose(g);
    if (is_konig_egervary(g, limits))
        throw std::invalid_argument("unicyclic_core_union_check: graph is König–Egerváry");
    VertexSet expected;
    for (const auto& [x, sub] : dec.subtrees) {
        for (int v : omega_family(sub.graph, limits).core)
            expected.insert(sub.to_original[static_cast<std::size_t>(v)]);
    }
    return omega_family(g, limits).core == expected;
}

bool unicyclic_alpha_mu_range_check(const Graph& g, const Limits& limits) {
    if (!unique_cycle(g))
        throw std::invalid_argument("unicyclic_alpha_mu_range_check: graph is not unicyclic");
    int total = independence_number(g, limits) + matching_number(g);
    return g.vertex_count() - 1 <= total && total <= g.vertex_count();
}

bool tree_shed_structure_check(const Graph& t, const Limits& limits) {
    if (!is_tree(t)) throw std::invalid_argument("tree_shed_structure_check: not a tree");
    VertexSet shed = shedding_vertices(t, limits);
    if (shed != neighborhood(t, leaves(t))) return false;  // (c)

    const bool k2 = t.vertex_count() == 2 && t.edge_count() == 1;
    std::vector<VertexSet> maximal = maximal_independent_sets(t, limits);
    int alpha = 0;
    for (const VertexSet& s : maximal) alpha = std::max(alpha, s.size());
    bool maximum_inside_shed = false;
    for (const VertexSet& s : maximal) {
        if (!k2 && s.is_subset_of(shed) != (s == shed)) return false;  // (a)
        if (s.size() == alpha && s.is_subset_of(shed)) maximum_inside_shed = true;
    }
    return maximum_inside_shed == k2;  // (b)
}

bool tree_shed_bounds_check(const Graph& t, const Limits& limits) {
    if (!is_tree(t)) throw std::invalid_argument("tree_shed_bounds_check: not a tree");
    if (t.vertex_count() == 2) throw std::invalid_argument("tree_shed_bounds_check: t is K_2");
    VertexSet shed = shedding_vertices(t, limits);
    int alpha = independence_number(t, limits);
    if (shed.size() > alpha) return false;
    if (is_independent(t, shed) && shed.size() > alpha - 1) return false;
    return true;
}

bool ke_two_disjoint_check(const Graph& g, const Limits& limits) {
    if (!is_konig_egervary(g, limits))
        throw std::invalid_argument("ke_two_disjoint_check: graph is not König–Egerváry");
    Certificate cert = has_two_disjoint_mis(g, limits);
    BipartiteResult bp = find_bipartition(g);
    bool rhs = false;
    if (bp.ok()) {
        Matching m = max_matching_bipartite(g, bp.sides->first, bp.sides->second);
        rhs = static_cast<int>(m.size()) * 2 == g.vertex_count();
    }
    if (cert.yes != rhs) return false;
    if (cert.yes && (cert.set_a | cert.set_b) != g.vertices()) return false;
    return true;
}

bool is_alpha_k2(const Graph& g) {
    for (const auto& comp : connected_components(g))
        if (comp.size() != 2) return false;
    return g.edge_count() * 2 == g.vertex_count();
}

bool ke_omega_bound_check(const Graph& g, const Limits& limits) {
    if (!is_konig_egervary(g, limits))
        throw std::invalid_argument("ke_omega_bound_check: graph is not König–Egerváry");
    OmegaFamily om = omega_family(g, limits);
    std::uint64_t bound = 1ULL << om.alpha;
    if (om.sets.size() > bound) return false;
    return (om.sets.size() == bound) == is_alpha_k2(g);
}

bool ke_shed_equivalence_check(const Graph& g, const Limits& limits) {
    if (!is_konig_egervary(g, limits))
        throw std::invalid_argument("ke_shed_equivalence_check: graph is not König–Egerváry");
    OmegaFamily om = omega_family(g, limits);
    VertexSet shed = shedding_vertices(g, limits);

    bool some_inside = false, all_inside = true;
    for (const VertexSet& s : om.sets) {
        if (s.is_subset_of(shed)) some_inside = true;
        else all_inside = false;
    }
    bool disjoint_inside = om.alpha == 0;
    for (std::size_t i = 0; i < om.sets.size() && !disjoint_inside; ++i)
        for (std::size_t j = i + 1; j < om.sets.size() && !disjoint_inside; ++j)
            disjoint_inside = !om.sets[i].intersects(om.sets[j]) &&
                              om.sets[i].is_subset_of(shed) && om.sets[j].is_subset_of(shed);

    bool conds[6] = {
        some_inside,
        om.sets.size() == (1ULL << om.alpha),
        shed == g.vertices(),
        all_inside,
        disjoint_inside,
        is_alpha_k2(g),
    };
    for (int i = 1; i < 6; ++i)
        if (conds[i] != conds[0]) return false;
    return true;
}

std::optional<Subgraph> corona_by_k1_base(const Graph& g) {
    VertexSet supports, pendants;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 2) return std::nullopt;
        if (comp.size() == 2) {  // a bare edge: lower id plays the base vertex
            supports.insert(comp[0]);
            pendants.insert(comp[1]);
            continue;
        }
        for (int v : comp) {
            if (g.degree(v) == 1) pendants.insert(v);
            else supports.insert(v);
        }
    }
    // exactly one private pendant per support, nothing left over
    if (pendants.size() != supports.size()) return std::nullopt;
    for (int s : supports) {
        if ((g.neighbors(s) & pendants).size() != 1) return std::nullopt;
    }
    for (int p : pendants) {
        if (!(g.neighbors(p) - pendants).is_subset_of(supports)) return std::nullopt;
        if (g.degree(p) != 1) return std::nullopt;
    }
    return induced_subgraph(g, supports);
}

namespace {

bool is_cycle_graph(const Graph& g, int length) {
    if (g.vertex_count() != length || !is_connected(g)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

}  // namespace

bool girth_corollary_check(const Graph& g, const Limits& limits) {
    if (!is_connected(g)) throw std::invalid_argument("girth_corollary_check: not connected");
    std::optional<int> gi = girth(g);
    int girth_value = gi.value_or(1 << 20);  // forests behave as infinite girth
    bool class_a = girth_value >= 6 && is_well_covered(g, limits) && g.vertex_count() != 1 &&
                   !is_cycle_graph(g, 7);
    bool class_b = girth_value >= 5 && is_very_well_covered(g, limits);
    if (!class_a && !class_b)
        throw std::invalid_argument("girth_corollary_check: graph outside the covered classes");
    if (!corona_by_k1_base(g)) return false;
    return has_two_disjoint_mis(g, limits).yes == is_bipartite(g);
}

bool edge_alpha_critical(const Graph& g, const Limits& limits) {
    int alpha = independence_number(g, limits);
    for (const Edge& e : g.edges()) {
        EdgeSet one;
        one.insert(e.u, e.v);
        if (independence_number(delete_edges(g, one), limits) <= alpha) return false;
    }
    return true;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("rng_below: empty range");
    std::uint64_t limit = ~0ULL - ~0ULL % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

Graph random_gnp(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    std::uint64_t threshold;
    if (p <= 0.0) threshold = 0;
    else if (p >= 1.0) threshold = ~0ULL;
    else threshold = static_cast<std::uint64_t>(p * 18446744073709551616.0L);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (p >= 1.0 || rng() < threshold) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

Graph prufer_decode(const std::vector<int>& seq, int n) {
    if (n < 1) throw std::invalid_argument("prufer_decode: n must be >= 1");
    if (static_cast<int>(seq.size()) != std::max(0, n - 2))
        throw std::invalid_argument("prufer_decode: sequence length must be n - 2");
    if (n == 1) return Graph(1);
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int s : seq) {
        if (s < 0 || s >= n) throw std::invalid_argument("prufer_decode: value out of range");
        ++deg[static_cast<std::size_t>(s)];
    }
    std::set<int> leaves_now;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1) leaves_now.insert(v);
    std::vector<std::pair<int, int>> edges;
    for (int s : seq) {
        int leaf = *leaves_now.begin();
        leaves_now.erase(leaves_now.begin());
        edges.emplace_back(leaf, s);
        if (--deg[static_cast<std::size_t>(s)] == 1) leaves_now.insert(s);
    }
    int a = *leaves_now.begin();
    int b = *std::next(leaves_now.begin());
    edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

Graph random_tree(int n, std::mt19937_64& rng) {
    if (n <= 2) return prufer_decode({}, n);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& s : seq) s = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n)));
    return prufer_decode(seq, n);
}

Graph random_unicyclic(int n, std::mt19937_64& rng) {
    if (n < 3) throw std::invalid_argument("random_unicyclic: n must be >= 3");
    Graph tree = random_tree(n, rng);
    std::vector<std::pair<int, int>> non_edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!tree.has_edge(i, j)) non_edges.emplace_back(i, j);
    auto [u, v] = non_edges[rng_below(rng, non_edges.size())];
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : tree.edges()) edges.emplace_back(e.u, e.v);
    edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

void for_all_labeled_trees(int n, const std::function<void(const Graph&)>& fn) {
    if (n <= 2) {
        fn(prufer_decode({}, n));
        return;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        fn(prufer_decode(seq, n));
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1)
            seq[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++seq[static_cast<std::size_t>(i)];
    }
}

SearchReport conjecture_search(const SearchConfig& config, const Limits& limits) {
    SearchReport report;
    report.family = config.family;

    std::vector<Graph> batch;
    if (config.family == "catalog") {
        for (Graph& g : read_graph6_file(config.catalog_path)) {
            if (g.vertex_count() <= config.nmax) batch.push_back(std::move(g));
            if (batch.size() >= config.budget) break;
        }
    } else if (config.family == "gnp") {
        for (std::uint64_t i = 0; i < config.budget; ++i) {
            std::mt19937_64 rng(mix_seed(config.seed, i));
            batch.push_back(random_gnp(config.nmax, config.edge_probability, rng));
        }
    } else if (config.family == "trees") {
        for (std::uint64_t i = 0; i < config.budget; ++i) {
            std::mt19937_64 rng(mix_seed(config.seed, i));
            batch.push_back(random_tree(config.nmax, rng));
        }
    } else if (config.family == "unicyclic") {
        for (std::uint64_t i = 0; i < config.budget; ++i) {
            std::mt19937_64 rng(mix_seed(config.seed, i));
            batch.push_back(random_unicyclic(std::max(3, config.nmax), rng));
        }
    } else if (config.family == "odd-cycles") {
        for (int k = 5; k <= config.nmax; k += 2) {
            if (batch.size() >= config.budget) break;
            batch.push_back(cycle_graph(k));
        }
    } else {
        throw std::invalid_argument("conjecture_search: unknown family '" + config.family + "'");
    }

    report.examined = batch.size();
    std::vector<std::uint8_t> critical(batch.size(), 0);
    std::vector<std::uint8_t> failed(batch.size(), 0);
    parallel_for(batch.size(), config.workers, [&](std::size_t i) {
        const Graph& g = batch[i];
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 0) return;
        if (g.edge_count() == 0) return;
        if (!edge_alpha_critical(g, limits)) return;
        critical[i] = 1;
        if (!has_two_disjoint_mis(g, limits).yes) failed[i] = 1;
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
        if (critical[i]) ++report.critical;
        if (failed[i]) report.counterexamples.push_back(encode_graph6(batch[i]));
    }
    return report;
}

}  // namespace twomis
