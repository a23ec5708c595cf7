#include "twomis/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>

#include "twomis/graph_io.hpp"
#include "twomis/parallel.hpp"

namespace twomis {

namespace {

// thread-safe failure collector; output order is by task index, so results
// do not depend on scheduling
class Sink {
public:
    explicit Sink(std::string name) { result_.suite = std::move(name); }

    void check(std::size_t idx, bool ok, const std::string& subject, const std::string& what) {
        checks_.fetch_add(1, std::memory_order_relaxed);
        if (!ok) {
            std::lock_guard<std::mutex> lock(mutex_);
            failures_.emplace_back(idx, subject + ": " + what);
        }
    }
    void check(std::size_t idx, bool ok, const Graph& g, const std::string& what) {
        check(idx, ok, encode_graph6(g), what);
    }
    void note(std::size_t idx, const std::string& text) {
        std::lock_guard<std::mutex> lock(mutex_);
        notes_.emplace_back(idx, text);
    }

    SuiteResult finish() {
        std::sort(failures_.begin(), failures_.end());
        std::sort(notes_.begin(), notes_.end());
        result_.checks = checks_.load();
        for (auto& [idx, text] : failures_) result_.failures.push_back(std::move(text));
        for (auto& [idx, text] : notes_) result_.notes.push_back(std::move(text));
        return std::move(result_);
    }

private:
    SuiteResult result_;
    std::atomic<std::uint64_t> checks_{0};
    std::mutex mutex_;
    std::vector<std::pair<std::size_t, std::string>> failures_;
    std::vector<std::pair<std::size_t, std::string>> notes_;
};

std::vector<Graph> load_catalog(const VerifyOptions& opt, int nmax) {
    std::vector<Graph> out;
    for (Graph& g : read_graph6_file(opt.catalog_path))
        if (g.vertex_count() <= nmax) out.push_back(std::move(g));
    return out;
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

bool lies_on_5cycle(const Graph& g, int v) {
    for (int a : g.neighbors(v))
        for (int b : g.neighbors(a)) {
            if (b == v) continue;
            for (int c : g.neighbors(b)) {
                if (c == v || c == a) continue;
                for (int d : VertexSet::from_bits(g.adjacency_bits(c) & g.adjacency_bits(v))) {
                    if (d != v && d != a && d != b) return true;
                }
            }
        }
    return false;
}

std::uint64_t count_independent_sets_of_size(const Graph& g, int k) {
    const int n = g.vertex_count();
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        bool ok = true;
        for (int v : VertexSet::from_bits(mask))
            if (g.adjacency_bits(v) & mask) {
                ok = false;
                break;
            }
        if (ok) ++count;
    }
    return count;
}

// all independent vertex subsets of g, as bitmasks (n small)
std::vector<std::uint64_t> independent_subsets(const Graph& g) {
    std::vector<std::uint64_t> out;
    const int n = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        bool ok = true;
        for (int v : VertexSet::from_bits(mask))
            if (g.adjacency_bits(v) & mask) {
                ok = false;
                break;
            }
        if (ok) out.push_back(mask);
    }
    return out;
}

// ---------------------------------------------------------------- suites

SuiteResult suite_berge(const VerifyOptions& opt) {
    Sink sink("berge");
    const int nmax = opt.nmax > 0 ? opt.nmax : 7;
    std::vector<Graph> graphs = load_catalog(opt, nmax);
    parallel_for(graphs.size(), opt.workers, [&](std::size_t i) {
        const Graph& g = graphs[i];
        int alpha = independence_number(g, opt.limits);
        for (std::uint64_t mask : independent_subsets(g)) {
            VertexSet s = VertexSet::from_bits(mask);
            bool verified = berge_verify(g, s, opt.limits);
            sink.check(i, verified == (s.size() == alpha), g,
                       "matched-into-S test disagrees with |S| == alpha");
        }
    });
    return sink.finish();
}

SuiteResult suite_five_equivalences(const VerifyOptions& opt) {
    Sink sink("five-equivalences");
    const int nmax = opt.nmax > 0 ? opt.nmax : 7;
    std::vector<Graph> graphs = load_catalog(opt, nmax);
    for (std::uint64_t i = 0; i < opt.samples; ++i) {
        std::mt19937_64 rng(mix_seed(opt.seed, i));
        graphs.push_back(random_gnp(8, 0.5, rng));
    }
    parallel_for(graphs.size(), opt.workers, [&](std::size_t i) {
        const Graph& g = graphs[i];
        EquivalenceReport rep = equivalence_suite(g, opt.limits);
        sink.check(i, rep.all_agree(), g, "the five formulations disagree");
        Certificate cert = has_two_disjoint_mis(g, opt.limits);
        sink.check(i, cert.yes == rep.disjoint_pair, g,
                   "decision disagrees with the pairwise scan");
        sink.check(i, !cert.yes || validate_certificate(g, cert, opt.limits), g,
                   "certificate failed validation");
        sink.check(i, mu_ge_alpha_check(g, opt.limits), g,
                   "disjoint pair without mu >= alpha");
        if (rep.disjoint_pair && rep.pair_witness) {
            auto [a, b] = *rep.pair_witness;
            sink.check(i,
                       !a.intersects(b) && is_independent(g, a) && is_independent(g, b) &&
                           a.size() == rep.alpha && b.size() == rep.alpha,
                       g, "pair witness does not re-validate");
        }
        if (rep.matching_witness) {
            sink.check(i,
                       is_valid_matching(g, *rep.matching_witness) &&
                           static_cast<int>(rep.matching_witness->size()) == rep.alpha &&
                           is_bipartite(
                               induced_subgraph(g, rep.matching_witness->saturated()).graph),
                       g, "matching witness does not re-validate");
        }
    });
    return sink.finish();
}

SuiteResult suite_shedding(const VerifyOptions& opt) {
    Sink sink("shedding");
    const int nmax = opt.nmax > 0 ? opt.nmax : 7;

    // pinned facts
    sink.check(0, shedding_vertices(complete_graph(1)).empty(), complete_graph(1),
               "Shed(K_1) must be empty");
    for (int n = 2; n <= 6; ++n) {
        Graph kn = complete_graph(n);
        sink.check(0, shedding_vertices(kn) == kn.vertices(), kn, "Shed(K_n) must be all of V");
    }
    sink.check(0, shedding_vertices(cycle_graph(5)) == cycle_graph(5).vertices(), cycle_graph(5),
               "Shed(C_5) must be all of V");
    sink.check(0, shedding_vertices(path_graph(4)) == VertexSet{1, 2}, path_graph(4),
               "Shed(P_4) must be the degree-2 vertices");

    std::vector<Graph> graphs = load_catalog(opt, nmax);
    parallel_for(graphs.size(), opt.workers, [&](std::size_t i) {
        const Graph& g = graphs[i];
        VertexSet shed = shedding_vertices(g, opt.limits);
        CodominatedResult cod = codominated_vertices(g);
        sink.check(i, cod.members.is_subset_of(shed), g, "codominated vertex not shedding");
        if (is_bipartite(g)) {
            sink.check(i, shed == cod.members, g, "bipartite: shedding != codominated");
            for (int x = 0; x < g.vertex_count(); ++x)
                for (int y : g.neighbors(x)) {
                    std::uint64_t cy = g.adjacency_bits(y) | (1ULL << y);
                    std::uint64_t cx = g.adjacency_bits(x) | (1ULL << x);
                    if ((cy & ~cx) == 0)
                        sink.check(i, g.degree(y) == 1, g,
                                   "bipartite: codomination witness is not a leaf");
                }
        }
        for (int v : shed)
            sink.check(i, cod.members.contains(v) || lies_on_5cycle(g, v), g,
                       "shedding vertex neither codominated nor on a 5-cycle");
        for (int v : simplicial_vertices(g))
            sink.check(i, g.neighbors(v).is_subset_of(shed), g,
                       "neighbor of a simplicial vertex not shedding");

        // the swap construction over every small independent set of shedding vertices
        std::vector<int> shed_ids = shed.to_vector();
        for (std::uint64_t pick = 0; pick < (1ULL << shed_ids.size()); ++pick) {
            VertexSet s;
            for (std::size_t b = 0; b < shed_ids.size(); ++b)
                if (pick >> b & 1) s.insert(shed_ids[b]);
            if (s.size() > 5 || !is_independent(g, s)) continue;
            std::vector<SheddingExpansion> family = shedding_powerset_witnesses(g, s, opt.limits);
            bool ok = family.size() == (1ULL << s.size());
            std::set<std::uint64_t> distinct;
            for (const SheddingExpansion& e : family) {
                ok = ok && e.independent_set.size() == s.size() &&
                     is_independent(g, e.independent_set);
                distinct.insert(e.independent_set.bits());
            }
            ok = ok && distinct.size() == family.size();
            sink.check(i, ok, g, "powerset witnesses not 2^|S| distinct independent sets");
            sink.check(i, count_independent_sets_of_size(g, s.size()) >= (1ULL << s.size()), g,
                       "fewer than 2^|S| independent sets of size |S|");
            DisjointMaximalResult dm = disjoint_maximal_from_shedding(g, s, opt.limits);
            bool dm_ok = !dm.maximal_set.intersects(s) && is_independent(g, dm.maximal_set) &&
                         dm.maximal_set.size() >= s.size();
            for (int v = 0; v < g.vertex_count() && dm_ok; ++v)
                if (!dm.maximal_set.contains(v) && !(g.adjacency_bits(v) & dm.maximal_set.bits()))
                    dm_ok = false;  // not maximal
            dm_ok = dm_ok && is_valid_matching(g, dm.matching) && dm.matching.saturates(s) &&
                    (dm.matching.saturated() - s).is_subset_of(dm.maximal_set);
            sink.check(i, dm_ok, g, "disjoint maximal construction broke its contract");
        }

        // a maximum set of shedding vertices forces 2^alpha sets and a pair
        OmegaFamily om = omega_family(g, opt.limits);
        bool omega_in_shed = false;
        for (const VertexSet& s : om.sets) omega_in_shed = omega_in_shed || s.is_subset_of(shed);
        if (omega_in_shed && om.alpha > 0) {
            sink.check(i, om.sets.size() >= (1ULL << om.alpha), g,
                       "maximum shedding set without 2^alpha maximum sets");
            sink.check(i, has_two_disjoint_mis(g, opt.limits).yes, g,
                       "maximum shedding set without a disjoint pair");
        }
    });

    // tightness of the friendship bound, and coronas by K_2
    for (int q : {2, 3}) {
        Graph fq = friendship_graph(q);
        OmegaFamily om = omega_family(fq, opt.limits);
        sink.check(graphs.size(), om.alpha == q && om.sets.size() == (1ULL << q), fq,
                   "friendship graph must have exactly 2^alpha maximum sets");
    }
    std::vector<Graph> small = load_catalog(opt, 4);
    parallel_for(small.size(), opt.workers, [&](std::size_t i) {
        Graph big = corona(small[i], complete_graph(2));
        sink.check(graphs.size() + 1 + i, shedding_vertices(big, opt.limits) == big.vertices(),
                   big, "corona by K_2 must shed everywhere");
        sink.check(graphs.size() + 1 + i, has_two_disjoint_mis(big, opt.limits).yes, big,
                   "corona by K_2 must have a disjoint pair");
    });
    return sink.finish();
}

SuiteResult suite_trees(const VerifyOptions& opt) {
    Sink sink("trees");
    const int nmax = opt.nmax > 0 ? opt.nmax : 8;
    std::size_t base = 0;
    for (int n = 1; n <= nmax; ++n) {
        if (n <= 2) {
            Graph t = prufer_decode({}, n);
            sink.check(base++, tree_shed_structure_check(t, opt.limits), t,
                       "tree shedding structure violated");
            continue;
        }
        std::uint64_t total = 1;
        for (int i = 0; i < n - 2; ++i) total *= static_cast<std::uint64_t>(n);
        parallel_for(total, opt.workers, [&, n](std::size_t idx) {
            std::vector<int> seq(static_cast<std::size_t>(n - 2));
            std::size_t rest = idx;
            for (int i = 0; i < n - 2; ++i) {
                seq[static_cast<std::size_t>(i)] = static_cast<int>(rest % n);
                rest /= static_cast<std::size_t>(n);
            }
            Graph t = prufer_decode(seq, n);
            sink.check(base + idx, tree_shed_structure_check(t, opt.limits), t,
                       "tree shedding structure violated");
            sink.check(base + idx, tree_shed_bounds_check(t, opt.limits), t,
                       "tree shedding bounds violated");
        });
        base += total;
    }

    // tightness witnesses
    for (int n : {2, 3}) {
        Graph t = corona(path_graph(n), complete_graph(1));
        VertexSet shed = shedding_vertices(t, opt.limits);
        sink.check(base, shed.size() == independence_number(t, opt.limits), t,
                   "pendant path must meet |Shed| = alpha");
    }
    for (int p : {2, 3}) {
        // star K_{1,p} with one extra pendant per leaf
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= p; ++i) {
            edges.emplace_back(0, i);
            edges.emplace_back(i, p + i);
        }
        Graph spider = Graph::from_edges(2 * p + 1, edges, "spider");
        VertexSet shed = shedding_vertices(spider, opt.limits);
        int alpha = independence_number(spider, opt.limits);
        sink.check(base, static_cast<int>(shed.size()) == p && shed.size() == alpha - 1, spider,
                   "spider must meet |Shed| = alpha - 1");
    }
    sink.check(base, shedding_vertices(complete_graph(1)).size() == 0, complete_graph(1),
               "Shed(K_1) must be empty");
    sink.check(base,
               shedding_vertices(path_graph(2)).size() ==
                   independence_number(path_graph(2)) + 1,
               path_graph(2), "|Shed(K_2)| must be alpha + 1");
    return sink.finish();
}

SuiteResult suite_unicyclic(const VerifyOptions& opt) {
    Sink sink("unicyclic");
    const int nmax = opt.nmax > 0 ? opt.nmax : 12;
    parallel_for(opt.samples, opt.workers, [&](std::size_t i) {
        std::mt19937_64 rng(mix_seed(opt.seed, i));
        int n = 3 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(nmax - 2)));
        Graph g = random_unicyclic(n, rng);

        Certificate fast = unicyclic_two_disjoint_mis(g);
        Certificate slow = has_two_disjoint_mis(g, opt.limits);
        sink.check(i, fast.yes == slow.yes, g, "cycle-vertex route disagrees with enumeration");
        sink.check(i, validate_decision(g, fast, opt.limits), g,
                   "unicyclic certificate failed validation");
        sink.check(i, unicyclic_alpha_mu_range_check(g, opt.limits), g,
                   "alpha + mu outside [n-1, n]");

        if (!is_konig_egervary(g, opt.limits)) {
            sink.check(i, unicyclic_core_union_check(g, opt.limits), g,
                       "core is not the union of subtree cores");
            UnicyclicDecomposition dec = unicyclic_decompose(g);
            OmegaFamily om = omega_family(g, opt.limits);
            for (const auto& [x, sub] : dec.subtrees) {
                VertexSet vx;
                for (int v : sub.to_original) vx.insert(v);
                std::set<std::uint64_t> from_subtree, from_whole;
                for (const VertexSet& w : omega_family(sub.graph, opt.limits).sets) {
                    VertexSet back;
                    for (int v : w) back.insert(sub.to_original[static_cast<std::size_t>(v)]);
                    from_subtree.insert(back.bits());
                }
                for (const VertexSet& s : om.sets) from_whole.insert((s & vx).bits());
                sink.check(i, from_subtree == from_whole, g,
                           "subtree maximum sets are not the traces of whole-graph ones");
            }
            VertexSet on_cycle;
            for (int v : dec.cycle) on_cycle.insert(v);
            int half = (static_cast<int>(dec.cycle.size()) - 1) / 2;
            for (std::size_t a = 0; a < om.sets.size(); ++a)
                for (std::size_t b = a + 1; b < om.sets.size(); ++b) {
                    if (om.sets[a].intersects(om.sets[b])) continue;
                    sink.check(i,
                               (om.sets[a] & on_cycle).size() == half &&
                                   (om.sets[b] & on_cycle).size() == half,
                               g, "disjoint pair does not split the cycle (|C|-1)/2 each");
                }
        }
    });
    return sink.finish();
}

SuiteResult suite_ke(const VerifyOptions& opt) {
    Sink sink("ke");
    const int nmax = opt.nmax > 0 ? opt.nmax : 8;
    std::vector<Graph> graphs = load_catalog(opt, nmax);
    parallel_for(graphs.size(), opt.workers, [&](std::size_t i) {
        const Graph& g = graphs[i];
        bool ke = is_konig_egervary(g, opt.limits);
        if (ke) {
            sink.check(i, ke_two_disjoint_check(g, opt.limits), g,
                       "pair exists but not (bipartite and perfectly matchable)");
            sink.check(i, ke_omega_bound_check(g, opt.limits), g,
                       "|Omega| <= 2^alpha bound or its equality case failed");
            sink.check(i, ke_shed_equivalence_check(g, opt.limits), g,
                       "the six shedding equivalences disagree");
        }
        if (!has_isolated_vertex(g)) {
            bool vwc = is_very_well_covered(g, opt.limits);
            bool wc = is_well_covered(g, opt.limits);
            sink.check(i, vwc == (wc && ke), g,
                       "very-well-covered != well-covered + König–Egerváry");
        }
        if (is_connected(g) && is_bipartite(g)) {
            bool pm = has_perfect_matching(g).exists;
            bool core_empty = omega_family(g, opt.limits).core.empty();
            sink.check(i, pm == core_empty, g,
                       "perfect matching does not match empty core");
        }
    });
    // random connected bipartite instances push the core test past the catalog
    std::size_t extra = opt.samples / 5;
    parallel_for(extra, opt.workers, [&](std::size_t i) {
        std::mt19937_64 rng(mix_seed(opt.seed ^ 0x5ca1ab1eULL, i));
        int n = 9 + static_cast<int>(i % 2);
        std::uint64_t sides = rng();
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (((sides >> u) & 1) != ((sides >> v) & 1) && (rng() & 1))
                    edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        if (!is_connected(g)) return;
        bool pm = has_perfect_matching(g).exists;
        bool core_empty = omega_family(g, opt.limits).core.empty();
        sink.check(graphs.size() + i, pm == core_empty, g,
                   "perfect matching does not match empty core");
    });
    for (int q : {2, 3}) {
        Graph fq = friendship_graph(q);
        sink.check(graphs.size() + extra, !is_konig_egervary(fq, opt.limits), fq,
                   "friendship graph must not be König–Egerváry");
    }
    return sink.finish();
}

SuiteResult suite_corona(const VerifyOptions& opt) {
    Sink sink("corona");
    const int nmax = opt.nmax > 0 ? opt.nmax : 5;
    std::vector<Graph> graphs = load_catalog(opt, nmax);
    parallel_for(graphs.size(), opt.workers, [&](std::size_t i) {
        const Graph& h = graphs[i];
        Graph g = corona(h, complete_graph(1));
        sink.check(i, has_two_disjoint_mis(g, opt.limits).yes == is_bipartite(h), g,
                   "pendant corona pair must match bipartiteness of the base");
        if (h.vertex_count() <= 4) {
            Graph g2 = corona(h, complete_graph(2));
            sink.check(i, has_two_disjoint_mis(g2, opt.limits).yes, g2,
                       "corona by K_2 must have a disjoint pair");
        }
    });
    std::size_t base = graphs.size();

    // well-covered graphs of girth >= 5/6 are pendant coronas; pair iff bipartite
    std::vector<Graph> class_instances = {
        corona(path_graph(2), complete_graph(1)),
        corona(path_graph(3), complete_graph(1)),
        corona(cycle_graph(5), complete_graph(1)),
        corona(cycle_graph(7), complete_graph(1)),
        corona(star_graph(3), complete_graph(1)),
    };
    for (std::size_t i = 0; i < class_instances.size(); ++i)
        sink.check(base + i, girth_corollary_check(class_instances[i], opt.limits),
                   class_instances[i], "girth corollary failed");
    base += class_instances.size();

    // mixed-attachment coronas keep disjoint pairs when every vertex sheds
    std::vector<Graph> mixed = {
        corona(path_graph(2), {complete_graph(1), complete_graph(2)}),
        corona(path_graph(2), complete_graph(2)),
        corona(path_graph(3), {complete_graph(2), complete_graph(1), complete_graph(2)}),
    };
    for (std::size_t i = 0; i < mixed.size(); ++i)
        sink.check(base + i, has_two_disjoint_mis(mixed[i], opt.limits).yes, mixed[i],
                   "complete-attachment corona lost its disjoint pair");
    return sink.finish();
}

SuiteResult suite_schaudt(const VerifyOptions& opt) {
    Sink sink("schaudt");
    // well-covered cycles are pinned
    for (int n = 3; n <= 12; ++n) {
        Graph c = cycle_graph(n);
        bool expect_wc = n == 3 || n == 4 || n == 5 || n == 7;
        sink.check(0, is_well_covered(c, opt.limits) == expect_wc, c,
                   "well-covered cycle list is {C_3, C_4, C_5, C_7}");
        sink.check(0, is_very_well_covered(c, opt.limits) == (n == 4), c,
                   "the only very-well-covered cycle is C_4");
    }
    Graph c5k1 = corona(cycle_graph(5), complete_graph(1));
    sink.check(1, !has_two_disjoint_maximal_is(c5k1, opt.limits).has_value(), c5k1,
               "pendant C_5 must have no disjoint maximal pair");
    auto self5 = contains_induced_corona_odd_cycle(c5k1, 3);
    sink.check(1, self5 && self5->k == 2, c5k1, "pendant C_5 must embed itself (k = 2)");
    Graph c3k1 = corona(cycle_graph(3), complete_graph(1));
    auto self3 = contains_induced_corona_odd_cycle(c3k1, 3);
    sink.check(1, self3 && self3->k == 1, c3k1, "pendant C_3 must embed itself (k = 1)");
    sink.check(1, !contains_induced_corona_odd_cycle(cycle_graph(4), 3).has_value(),
               cycle_graph(4), "C_4 embeds no pendant odd cycle");
    sink.check(1, has_two_disjoint_maximal_is(path_graph(3), opt.limits).has_value(),
               path_graph(3), "P_3 must have a disjoint maximal pair");

    const int nmax = opt.nmax > 0 ? opt.nmax : 8;
    std::vector<Graph> graphs = load_catalog(opt, nmax);
    auto implication = [&](std::size_t idx, const Graph& g) {
        if (has_isolated_vertex(g) || !is_well_covered(g, opt.limits)) return;
        if (contains_induced_corona_odd_cycle(g, 3)) return;
        sink.check(idx, has_two_disjoint_mis(g, opt.limits).yes, g,
                   "well-covered, no pendant odd cycle, but no disjoint pair");
    };
    parallel_for(graphs.size(), opt.workers, [&](std::size_t i) { implication(2 + i, graphs[i]); });
    parallel_for(opt.samples, opt.workers, [&](std::size_t i) {
        std::mt19937_64 rng(mix_seed(opt.seed ^ 0x5eedULL, i));
        int n = 9 + static_cast<int>(i % 4);
        implication(2 + graphs.size() + i, random_gnp(n, 0.5, rng));
    });
    return sink.finish();
}

SuiteResult suite_conjecture(const VerifyOptions& opt) {
    Sink sink("conjecture");
    const int nmax = opt.nmax > 0 ? opt.nmax : 7;

    SearchConfig catalog_cfg;
    catalog_cfg.family = "catalog";
    catalog_cfg.catalog_path = opt.catalog_path;
    catalog_cfg.nmax = nmax;
    catalog_cfg.budget = ~0ULL >> 1;
    catalog_cfg.workers = opt.workers;
    SearchReport catalog_report = conjecture_search(catalog_cfg, opt.limits);
    sink.check(0, catalog_report.counterexamples.empty(), "catalog",
               "edge-alpha-critical graph without a disjoint pair found");

    std::size_t idx = 1;
    for (int n = 5; n <= 11; n += 2) {
        Graph odd = cycle_graph(n);
        Graph co = complement(odd);
        sink.check(idx, edge_alpha_critical(odd, opt.limits), odd,
                   "odd cycle must be edge-alpha-critical");
        sink.check(idx, has_two_disjoint_mis(odd, opt.limits).yes, odd,
                   "odd cycle must have a disjoint pair");
        ++idx;
        // complements of odd cycles keep the disjoint pair; criticality holds
        // only for n = 5 (for n >= 7 a distance-3 chord can go without raising alpha)
        sink.check(idx, has_two_disjoint_mis(co, opt.limits).yes, co,
                   "odd cycle complement must have a disjoint pair");
        sink.check(idx, edge_alpha_critical(co, opt.limits) == (n == 5), co,
                   "odd cycle complement criticality profile changed");
        ++idx;
    }

    SearchConfig gnp_cfg;
    gnp_cfg.family = "gnp";
    gnp_cfg.nmax = 9;
    gnp_cfg.budget = opt.samples;
    gnp_cfg.seed = opt.seed;
    gnp_cfg.workers = opt.workers;
    SearchReport gnp_report = conjecture_search(gnp_cfg, opt.limits);
    sink.check(idx, gnp_report.counterexamples.empty(), "gnp-9",
               "edge-alpha-critical graph without a disjoint pair found");
    sink.note(idx, "catalog sweep examined " + std::to_string(catalog_report.examined) +
                       " graphs, " + std::to_string(catalog_report.critical) +
                       " edge-alpha-critical");

    // exploratory, non-normative: equality |Omega| = 2^alpha outside the KE world
    std::vector<Graph> graphs = load_catalog(opt, nmax);
    std::mutex eq_mutex;
    std::vector<std::pair<std::size_t, std::string>> equality_cases;
    parallel_for(graphs.size(), opt.workers, [&](std::size_t i) {
        const Graph& g = graphs[i];
        if (has_isolated_vertex(g) || is_konig_egervary(g, opt.limits)) return;
        OmegaFamily om = omega_family(g, opt.limits);
        if (om.sets.size() == (1ULL << om.alpha)) {
            std::lock_guard<std::mutex> lock(eq_mutex);
            equality_cases.emplace_back(i, encode_graph6(g));
        }
    });
    std::sort(equality_cases.begin(), equality_cases.end());
    for (auto& [i, g6] : equality_cases)
        sink.note(idx + 1 + i, "non-KE graph with |Omega| = 2^alpha: " + g6);
    return sink.finish();
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "berge",     "five-equivalences", "shedding", "trees",     "unicyclic",
        "ke",        "corona",            "schaudt",  "conjecture"};
    return names;
}

std::vector<SuiteResult> run_verify(const std::string& name, const VerifyOptions& options) {
    auto run_one = [&](const std::string& suite) -> SuiteResult {
        if (suite == "berge") return suite_berge(options);
        if (suite == "five-equivalences") return suite_five_equivalences(options);
        if (suite == "shedding") return suite_shedding(options);
        if (suite == "trees") return suite_trees(options);
        if (suite == "unicyclic") return suite_unicyclic(options);
        if (suite == "ke") return suite_ke(options);
        if (suite == "corona") return suite_corona(options);
        if (suite == "schaudt") return suite_schaudt(options);
        if (suite == "conjecture") return suite_conjecture(options);
        throw std::invalid_argument("unknown verify suite: " + suite);
    };
    std::vector<SuiteResult> results;
    if (name == "all") {
        for (const std::string& suite : verify_suite_names()) results.push_back(run_one(suite));
    } else {
        results.push_back(run_one(name));
    }
    return results;
}

Json verify_json(const std::vector<SuiteResult>& results, const VerifyOptions& options) {
    Json j;
    j["command"] = "verify";
    j["seed"] = options.seed;
    j["samples"] = options.samples;
    j["nmax"] = options.nmax;
    bool pass = true;
    Json suites = Json::array();
    for (const SuiteResult& r : results) {
        pass = pass && r.pass();
        suites.push_back({{"suite", r.suite},
                          {"checks", r.checks},
                          {"failures", r.failures},
                          {"notes", r.notes},
                          {"pass", r.pass()}});
    }
    j["suites"] = suites;
    j["pass"] = pass;
    return j;
}

}  // namespace twomis
