// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Expected values come from the subset-enumeration oracles in
// support/oracles.hpp, which share no code with the library's solvers.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>

#include "support/oracles.hpp"
#include "twomis/families.hpp"
#include "twomis/graph_io.hpp"
#include "twomis/parallel.hpp"
#include "twomis/report.hpp"
#include "twomis/verify.hpp"

using namespace twomis;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 20260810;
int g_workers = 0;

std::vector<Graph> catalog_upto(int nmax) {
    static std::vector<Graph> all =
        read_graph6_file(std::string(TWOMIS_DATA_DIR) + "/graphs_upto8.g6");
    std::vector<Graph> out;
    for (const Graph& g : all)
        if (g.vertex_count() <= nmax) out.push_back(g);
    return out;
}

// every labeled graph on exactly n vertices (n <= 6 keeps this tractable)
template <typename Fn>
void for_all_labeled_graphs(int n, Fn fn) {
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
        std::vector<std::pair<int, int>> edges;
        int b = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++b)
                if (mask >> b & 1) edges.emplace_back(i, j);
        fn(Graph::from_edges(n, edges));
    }
}

std::uint64_t failures_seen = 0;

template <typename Fn>
std::uint64_t count_failures(std::size_t count, Fn fn) {
    std::atomic<std::uint64_t> bad{0};
    parallel_for(count, g_workers, [&](std::size_t i) {
        if (!fn(i)) bad.fetch_add(1);
    });
    return bad.load();
}

bool report(int number, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] %2d %s%s%s\n", pass ? "PASS" : "FAIL", number, name,
                detail.empty() ? "" : " — ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures_seen;
    return pass;
}

bool oracle_matches(const Graph& g) {
    OmegaFamily om = omega_family(g);
    if (om.alpha != oracles::brute_alpha(g)) return false;
    std::vector<std::uint64_t> got;
    for (const VertexSet& s : om.sets) got.push_back(s.bits());
    if (got != oracles::brute_omega(g)) return false;
    std::uint64_t core = g.vertices().bits();
    for (std::uint64_t s : got) core &= s;
    return om.core.bits() == core;
}

// ------------------------------------------------------------ criteria

bool criterion_1() {
    auto start = Clock::now();
    std::uint64_t bad = 0;
    for (int n = 0; n <= 6; ++n)
        for_all_labeled_graphs(n, [&](const Graph& g) { bad += !oracle_matches(g); });
    std::vector<Graph> cat = catalog_upto(7);
    bad += count_failures(cat.size(), [&](std::size_t i) { return oracle_matches(cat[i]); });
    bad += count_failures(10000, [&](std::size_t i) {
        std::mt19937_64 rng(mix_seed(kSeed, i));
        return oracle_matches(random_gnp(8, 0.5, rng));
    });
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    char detail[128];
    std::snprintf(detail, sizeof(detail), "%llu mismatches, %.1fs (budget 300s)",
                  static_cast<unsigned long long>(bad), secs);
    return report(1, "alpha/Omega/core equal the all-subsets oracle", bad == 0 && secs <= 300.0,
                  detail);
}

bool criterion_2() {
    std::vector<Graph> cat = catalog_upto(7);
    std::uint64_t bad = count_failures(cat.size() + 10000, [&](std::size_t i) {
        Graph g = i < cat.size() ? cat[i] : [&] {
            std::mt19937_64 rng(mix_seed(kSeed + 1, i - cat.size()));
            return random_gnp(8, 0.5, rng);
        }();
        return equivalence_suite(g).all_agree();
    });
    return report(2, "five formulations of the disjoint-pair property agree", bad == 0,
                  std::to_string(bad) + " disagreements");
}

bool criterion_3() {
    std::uint64_t bad = 0;
    auto graph_ok = [](const Graph& g) {
        int alpha = oracles::brute_alpha(g);
        for (std::uint64_t mask = 0; mask < (1ULL << g.vertex_count()); ++mask) {
            if (!oracles::subset_independent(g, mask)) continue;
            VertexSet s = VertexSet::from_bits(mask);
            if (berge_verify(g, s) != (s.size() == alpha)) return false;
        }
        return true;
    };
    for (int n = 0; n <= 6; ++n)
        for_all_labeled_graphs(n, [&](const Graph& g) { bad += !graph_ok(g); });
    std::vector<Graph> cat = catalog_upto(7);
    bad += count_failures(cat.size(), [&](std::size_t i) { return graph_ok(cat[i]); });
    return report(3, "matched-into-S holds exactly for maximum sets", bad == 0,
                  std::to_string(bad) + " mismatches");
}

bool criterion_4() {
    std::uint64_t bad = count_failures(10000, [&](std::size_t i) {
        std::mt19937_64 rng(mix_seed(kSeed + 2, i));
        int n = 1 + static_cast<int>(rng_below(rng, 10));
        double p = 0.15 + 0.08 * static_cast<double>(i % 10);
        Graph g = random_gnp(n, p, rng);
        if (matching_number(g) != oracles::brute_matching_number(g)) return false;
        Matching m = max_matching_general(g);
        return is_valid_matching(g, m) &&
               static_cast<int>(m.size()) == oracles::brute_matching_number(g);
    });
    return report(4, "blossom matching equals brute-force maximum", bad == 0,
                  std::to_string(bad) + " mismatches on 10000 random graphs");
}

bool criterion_5() {
    std::atomic<std::uint64_t> bad{0};
    std::atomic<std::int64_t> worst_ns{0};
    parallel_for(10000, g_workers, [&](std::size_t i) {
        std::mt19937_64 rng(mix_seed(kSeed + 3, i));
        int n = 3 + static_cast<int>(rng_below(rng, 10));  // 3..12
        Graph g = random_unicyclic(n, rng);

        auto t0 = Clock::now();
        Certificate fast = unicyclic_two_disjoint_mis(g);
        auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0);
        if (n == 12) {
            std::int64_t prev = worst_ns.load();
            while (elapsed.count() > prev &&
                   !worst_ns.compare_exchange_weak(prev, elapsed.count())) {
            }
        }

        // oracle: pairwise scan over the subset-enumerated Omega
        auto omega = oracles::brute_omega(g);
        bool expect = false;
        for (std::size_t a = 0; a < omega.size() && !expect; ++a)
            for (std::size_t b = a + 1; b < omega.size(); ++b)
                if (!(omega[a] & omega[b])) {
                    expect = true;
                    break;
                }
        if (fast.yes != expect || !validate_decision(g, fast)) bad.fetch_add(1);
    });
    double worst_ms = static_cast<double>(worst_ns.load()) / 1e6;
    char detail[128];
    std::snprintf(detail, sizeof(detail), "%llu mismatches, slowest n=12 decision %.3fms",
                  static_cast<unsigned long long>(bad.load()), worst_ms);
    return report(5, "unicyclic decision equals brute force within 10ms",
                  bad.load() == 0 && worst_ms <= 10.0, detail);
}

bool criterion_6() {
    std::vector<Graph> cat = catalog_upto(8);
    std::atomic<std::uint64_t> ke_count{0};
    std::uint64_t bad = count_failures(cat.size(), [&](std::size_t i) {
        const Graph& g = cat[i];
        if (independence_number(g) + matching_number(g) != g.vertex_count()) return true;
        ke_count.fetch_add(1);
        return ke_two_disjoint_check(g);
    });
    return report(6, "KE graphs: pair iff bipartite with a perfect matching", bad == 0,
                  std::to_string(bad) + " mismatches over " + std::to_string(ke_count.load()) +
                      " KE graphs");
}

bool criterion_7() {
    std::vector<Graph> cat = catalog_upto(8);
    std::uint64_t bad = count_failures(cat.size(), [&](std::size_t i) {
        const Graph& g = cat[i];
        if (independence_number(g) + matching_number(g) != g.vertex_count()) return true;
        return ke_omega_bound_check(g);
    });
    bool friendship_ok = true;
    for (int q : {2, 3, 4}) {
        OmegaFamily om = omega_family(friendship_graph(q));
        friendship_ok = friendship_ok && om.alpha == q && om.sets.size() == (1ULL << q);
    }
    return report(7, "KE bound |Omega| <= 2^alpha with alpha*K_2 equality; friendship tightness",
                  bad == 0 && friendship_ok,
                  std::to_string(bad) + " bound failures, friendship " +
                      (friendship_ok ? "tight" : "NOT tight"));
}

bool criterion_8() {
    bool facts = shedding_vertices(complete_graph(1)).empty() &&
                 shedding_vertices(cycle_graph(5)) == cycle_graph(5).vertices() &&
                 shedding_vertices(path_graph(4)) == VertexSet{1, 2};
    for (int n = 2; n <= 6; ++n)
        facts = facts && shedding_vertices(complete_graph(n)) == complete_graph(n).vertices();

    auto on_5cycle = [](const Graph& g, int v) {
        for (int a : g.neighbors(v))
            for (int b : g.neighbors(a)) {
                if (b == v) continue;
                for (int c : g.neighbors(b)) {
                    if (c == v || c == a) continue;
                    for (int d : VertexSet::from_bits(g.adjacency_bits(c) & g.adjacency_bits(v)))
                        if (d != v && d != a && d != b) return true;
                }
            }
        return false;
    };
    std::vector<Graph> cat = catalog_upto(7);
    std::uint64_t bad = count_failures(cat.size(), [&](std::size_t i) {
        const Graph& g = cat[i];
        VertexSet shed = shedding_vertices(g);
        CodominatedResult cod = codominated_vertices(g);
        if (!cod.members.is_subset_of(shed)) return false;
        for (int v : shed)
            if (!cod.members.contains(v) && !on_5cycle(g, v)) return false;
        for (int v : simplicial_vertices(g))
            if (!g.neighbors(v).is_subset_of(shed)) return false;

        std::vector<int> ids = shed.to_vector();
        for (std::uint64_t pick = 0; pick < (1ULL << ids.size()); ++pick) {
            VertexSet s;
            for (std::size_t b = 0; b < ids.size(); ++b)
                if (pick >> b & 1) s.insert(ids[b]);
            if (s.size() > 5 || !is_independent(g, s)) continue;
            std::vector<SheddingExpansion> family = shedding_powerset_witnesses(g, s);
            if (family.size() != (1ULL << s.size())) return false;
            std::set<std::uint64_t> distinct;
            for (const SheddingExpansion& e : family) {
                if (e.independent_set.size() != s.size()) return false;
                if (!is_independent(g, e.independent_set)) return false;
                distinct.insert(e.independent_set.bits());
            }
            if (distinct.size() != family.size()) return false;
        }
        return true;
    });
    return report(8, "shedding facts, class containments and the 2^|S| witness family",
                  facts && bad == 0, std::to_string(bad) + " graph failures");
}

bool criterion_9() {
    std::atomic<std::uint64_t> bad{0};
    std::uint64_t trees_checked = 0;
    for (int n = 1; n <= 8; ++n) {
        if (n <= 2) {
            Graph t = prufer_decode({}, n);
            if (!tree_shed_structure_check(t)) bad.fetch_add(1);
            ++trees_checked;
            continue;
        }
        std::uint64_t total = 1;
        for (int i = 0; i < n - 2; ++i) total *= static_cast<std::uint64_t>(n);
        trees_checked += total;
        parallel_for(total, g_workers, [&, n](std::size_t idx) {
            std::vector<int> seq(static_cast<std::size_t>(n - 2));
            std::size_t rest = idx;
            for (int i = 0; i < n - 2; ++i) {
                seq[static_cast<std::size_t>(i)] = static_cast<int>(rest % n);
                rest /= static_cast<std::size_t>(n);
            }
            Graph t = prufer_decode(seq, n);
            if (!tree_shed_structure_check(t) || !tree_shed_bounds_check(t)) bad.fetch_add(1);
        });
    }
    Graph pendant_path = corona(path_graph(3), complete_graph(1));
    bool tight = shedding_vertices(pendant_path).size() == independence_number(pendant_path);
    Graph spider = Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
    tight = tight && shedding_vertices(spider).size() == 3 && independence_number(spider) == 4;
    return report(9, "tree shedding structure and both tight bounds over all labeled trees",
                  bad.load() == 0 && tight,
                  std::to_string(trees_checked) + " trees, " + std::to_string(bad.load()) +
                      " failures");
}

bool criterion_10() {
    Graph c5k1 = corona(cycle_graph(5), complete_graph(1));
    bool ok = !has_two_disjoint_maximal_is(c5k1).has_value();
    for (int n = 3; n <= 12; ++n) {
        bool expect_wc = n == 3 || n == 4 || n == 5 || n == 7;
        ok = ok && is_well_covered(cycle_graph(n)) == expect_wc;
        ok = ok && is_very_well_covered(cycle_graph(n)) == (n == 4);
    }
    std::vector<Graph> small = catalog_upto(5);
    std::uint64_t bad = count_failures(small.size(), [&](std::size_t i) {
        Graph g = corona(small[i], complete_graph(1));
        return has_two_disjoint_mis(g).yes == is_bipartite(small[i]);
    });
    return report(10, "named facts: pendant C_5, well-covered cycles, pendant coronas",
                  ok && bad == 0, std::to_string(bad) + " corona mismatches");
}

bool criterion_11() {
    SearchConfig cfg;
    cfg.family = "catalog";
    cfg.catalog_path = std::string(TWOMIS_DATA_DIR) + "/graphs_upto8.g6";
    cfg.nmax = 7;
    cfg.budget = ~0ULL >> 1;
    cfg.workers = g_workers;
    SearchReport rep = conjecture_search(cfg);
    char detail[128];
    std::snprintf(detail, sizeof(detail),
                  "%llu graphs, %llu edge-alpha-critical, %zu counterexamples",
                  static_cast<unsigned long long>(rep.examined),
                  static_cast<unsigned long long>(rep.critical), rep.counterexamples.size());
    return report(11, "every edge-alpha-critical graph without isolated vertices has a pair",
                  rep.counterexamples.empty() && rep.critical > 0, detail);
}

bool criterion_12() {
    VerifyOptions opt;
    opt.seed = kSeed;
    opt.workers = g_workers;
    opt.catalog_path = std::string(TWOMIS_DATA_DIR) + "/graphs_upto8.g6";

    auto t0 = Clock::now();
    std::string first = verify_json(run_verify("all", opt), opt).dump();
    double secs_first = std::chrono::duration<double>(Clock::now() - t0).count();
    std::string second = verify_json(run_verify("all", opt), opt).dump();

    bool pass_flag = first.find("\"pass\":true") != std::string::npos;
    char detail[160];
    std::snprintf(detail, sizeof(detail), "run %.1fs (budget 900s), summaries %s, all suites %s",
                  secs_first, first == second ? "bit-identical" : "DIFFER",
                  pass_flag ? "pass" : "FAIL");
    return report(12, "verify-all: deterministic summary within the time budget",
                  first == second && secs_first <= 900.0 && pass_flag, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_workers = std::atoi(argv[1]);
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    if (failures_seen == 0) {
        std::printf("acceptance: all 12 criteria PASS\n");
        return 0;
    }
    std::printf("acceptance: %llu criteria FAILED\n",
                static_cast<unsigned long long>(failures_seen));
    return 1;
}
