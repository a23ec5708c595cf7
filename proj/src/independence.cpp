#include "twomis/independence.hpp"

#include <algorithm>
#include <functional>

namespace twomis {

void check_deadline(const Limits& limits) {
    if (limits.deadline && std::chrono::steady_clock::now() > *limits.deadline)
        throw CapExceeded("time budget exceeded");
}

namespace {

void check_cap(const Graph& g, const Limits& limits) {
    if (g.vertex_count() > limits.max_n)
        throw CapExceeded("graph has " + std::to_string(g.vertex_count()) +
                          " vertices, enumeration cap is " + std::to_string(limits.max_n));
    check_deadline(limits);
}

// Maximal independent sets = maximal cliques of the complement; pivoting on
// the vertex that knocks out the most candidates.
class MaximalSetEnumerator {
public:
    MaximalSetEnumerator(const Graph& g, const Limits& limits) : limits_(limits) {
        const int n = g.vertex_count();
        full_ = n == 0 ? 0 : ~0ULL >> (64 - n);
        co_adj_.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            co_adj_[static_cast<std::size_t>(v)] =
                full_ & ~g.adjacency_bits(v) & ~(1ULL << v);
    }

    std::vector<VertexSet> run() {
        expand(0, full_, 0);
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    void expand(std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if ((p | x) == 0) {
            if (out_.size() >= limits_.max_sets)
                throw CapExceeded("maximal independent set count exceeds cap");
            if ((++emitted_ & 0x3ff) == 0) check_deadline(limits_);
            out_.push_back(VertexSet::from_bits(r));
            return;
        }
        int pivot = -1, best = -1;
        for (int u : VertexSet::from_bits(p | x)) {
            int score = std::popcount(p & co_adj_[static_cast<std::size_t>(u)]);
            if (score > best) {
                best = score;
                pivot = u;
            }
        }
        std::uint64_t candidates = p & ~co_adj_[static_cast<std::size_t>(pivot)];
        for (int v : VertexSet::from_bits(candidates)) {
            std::uint64_t cv = co_adj_[static_cast<std::size_t>(v)];
            expand(r | (1ULL << v), p & cv, x & cv);
            p &= ~(1ULL << v);
            x |= 1ULL << v;
        }
    }

    const Limits& limits_;
    std::uint64_t full_;
    std::vector<std::uint64_t> co_adj_;
    std::vector<VertexSet> out_;
    std::size_t emitted_ = 0;
};

// Branch and bound for one maximum independent set. Vertices of live degree
// <= 1 are taken greedily (a maximum set always exists that contains them),
// so forests collapse without branching.
class AlphaSolver {
public:
    explicit AlphaSolver(const Graph& g) : g_(&g) {}

    VertexSet best_set(const Limits& limits) {
        limits_ = &limits;
        best_ = 0;
        best_bits_ = 0;
        recurse(g_->vertices().bits(), 0, 0);
        return VertexSet::from_bits(best_bits_);
    }

private:
    void recurse(std::uint64_t live, std::uint64_t chosen, int count) {
        if ((++steps_ & 0xfff) == 0) check_deadline(*limits_);
        // reductions
        bool again = true;
        while (again) {
            again = false;
            for (int v : VertexSet::from_bits(live)) {
                std::uint64_t nb = g_->adjacency_bits(v) & live;
                int d = std::popcount(nb);
                if (d <= 1) {
                    chosen |= 1ULL << v;
                    ++count;
                    live &= ~(nb | (1ULL << v));
                    again = true;
                    break;
                }
            }
        }
        if (live == 0) {
            if (count > best_) {
                best_ = count;
                best_bits_ = chosen;
            }
            return;
        }
        if (count + std::popcount(live) <= best_) return;
        int pick = -1, deg = -1;
        for (int v : VertexSet::from_bits(live)) {
            int d = std::popcount(g_->adjacency_bits(v) & live);
            if (d > deg) {
                deg = d;
                pick = v;
            }
        }
        std::uint64_t nb = g_->adjacency_bits(pick) & live;
        recurse(live & ~(nb | (1ULL << pick)), chosen | (1ULL << pick), count + 1);
        recurse(live & ~(1ULL << pick), chosen, count);
    }

    const Graph* g_;
    const Limits* limits_ = nullptr;
    int best_ = 0;
    std::uint64_t best_bits_ = 0;
    std::size_t steps_ = 0;
};

}  // namespace

bool is_independent(const Graph& g, const VertexSet& s) {
    if (!s.is_subset_of(g.vertices()))
        throw std::invalid_argument("is_independent: vertex out of range");
    for (int v : s)
        if (g.adjacency_bits(v) & s.bits()) return false;
    return true;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g, const Limits& limits) {
    check_cap(g, limits);
    return MaximalSetEnumerator(g, limits).run();
}

int independence_number(const Graph& g, const Limits& limits) {
    check_cap(g, limits);
    return AlphaSolver(g).best_set(limits).size();
}

VertexSet maximum_independent_set(const Graph& g, const Limits& limits) {
    check_cap(g, limits);
    return AlphaSolver(g).best_set(limits);
}

OmegaFamily omega_family(const Graph& g, const Limits& limits) {
    OmegaFamily out;
    std::vector<VertexSet> maximal = maximal_independent_sets(g, limits);
    for (const VertexSet& s : maximal) out.alpha = std::max(out.alpha, s.size());
    std::uint64_t core = g.vertices().bits();
    for (const VertexSet& s : maximal) {
        if (s.size() == out.alpha) {
            out.sets.push_back(s);
            core &= s.bits();
        }
    }
    out.core = VertexSet::from_bits(core);
    return out;
}

bool berge_verify(const Graph& g, const VertexSet& s, const Limits& limits) {
    if (!is_independent(g, s)) throw std::invalid_argument("berge_verify: set not independent");
    Subgraph rest = delete_vertices(g, s);
    // matching into s only gets harder for supersets, so maximal sets suffice
    for (const VertexSet& t : maximal_independent_sets(rest.graph, limits)) {
        VertexSet back;
        for (int v : t) back.insert(rest.to_original[static_cast<std::size_t>(v)]);
        if (!match_into(g, back, s)) return false;
    }
    return true;
}

bool is_well_covered(const Graph& g, const Limits& limits) {
    std::vector<VertexSet> maximal = maximal_independent_sets(g, limits);
    for (const VertexSet& s : maximal)
        if (s.size() != maximal.front().size()) return false;
    return true;
}

bool is_very_well_covered(const Graph& g, const Limits& limits) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) return false;
    if (!is_well_covered(g, limits)) return false;
    return g.vertex_count() == 2 * independence_number(g, limits);
}

bool is_konig_egervary(const Graph& g, const Limits& limits) {
    return independence_number(g, limits) + matching_number(g) == g.vertex_count();
}

const char* to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::DisjointPair: return "disjoint-pair";
        case CertificateKind::AlphaMatchingBipartite: return "alpha-matching-bipartite";
        case CertificateKind::InducedBipartite2Alpha: return "induced-bipartite-2alpha";
        case CertificateKind::UnicyclicCycleVertex: return "unicyclic-cycle-vertex";
        case CertificateKind::Exhaustion: return "exhaustion";
    }
    return "unknown";
}

Certificate has_two_disjoint_mis(const Graph& g, const Limits& limits, PairStrategy strategy) {
    OmegaFamily om = omega_family(g, limits);
    Certificate cert;
    cert.alpha = om.alpha;
    cert.omega_count = om.sets.size();
    if (om.alpha == 0) {
        // only the empty graph: the empty set is disjoint from itself
        cert.yes = true;
        cert.kind = CertificateKind::DisjointPair;
        cert.strategy = "omega-pairs";
        return cert;
    }
    bool pairwise = strategy == PairStrategy::OmegaPairs ||
                    (strategy == PairStrategy::Auto &&
                     om.sets.size() <= limits.pairing_threshold);
    if (pairwise) {
        cert.strategy = "omega-pairs";
        for (std::size_t i = 0; i < om.sets.size(); ++i) {
            check_deadline(limits);
            for (std::size_t j = i + 1; j < om.sets.size(); ++j) {
                if (!om.sets[i].intersects(om.sets[j])) {
                    cert.yes = true;
                    cert.kind = CertificateKind::DisjointPair;
                    cert.set_a = om.sets[i];
                    cert.set_b = om.sets[j];
                    return cert;
                }
            }
        }
        return cert;  // exhaustion over all pairs
    }
    cert.strategy = "condition-ii";
    for (const VertexSet& s : om.sets) {
        check_deadline(limits);
        Subgraph rest = delete_vertices(g, s);
        if (independence_number(rest.graph, limits) == om.alpha) {
            VertexSet other;
            for (int v : maximum_independent_set(rest.graph, limits))
                other.insert(rest.to_original[static_cast<std::size_t>(v)]);
            cert.yes = true;
            cert.kind = CertificateKind::DisjointPair;
            cert.set_a = s;
            cert.set_b = other;
            return cert;
        }
    }
    return cert;  // exhaustion over condition (ii)
}

std::optional<std::pair<VertexSet, VertexSet>> has_two_disjoint_maximal_is(const Graph& g,
                                                                           const Limits& limits) {
    std::vector<VertexSet> maximal = maximal_independent_sets(g, limits);
    for (std::size_t i = 0; i < maximal.size(); ++i) {
        check_deadline(limits);
        for (std::size_t j = i + 1; j < maximal.size(); ++j)
            if (!maximal[i].intersects(maximal[j])) return std::pair{maximal[i], maximal[j]};
    }
    if (g.vertex_count() == 0) return std::pair{VertexSet{}, VertexSet{}};
    return std::nullopt;
}

namespace {

// next subset of the same popcount (Gosper); masks enumerated ascending
std::uint64_t next_same_popcount(std::uint64_t x) {
    std::uint64_t c = x & (~x + 1);
    std::uint64_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

template <typename Fn>
void for_each_subset_of_size(int n, int k, Fn fn) {
    if (k == 0) {
        fn(0ULL);
        return;
    }
    if (k < 0 || k > n) return;
    std::uint64_t limit = 1ULL << n;
    std::uint64_t x = (1ULL << k) - 1;
    while (x < limit) {
        if (!fn(x)) return;
        std::uint64_t nx = next_same_popcount(x);
        if (nx <= x) break;
        x = nx;
    }
}

// every matching of target size over canonical edges, stopping on first hit
bool find_alpha_matching_bipartite(const Graph& g, const std::vector<Edge>& edges,
                                   std::size_t idx, VertexSet used, std::vector<Edge>& stack,
                                   int target, EdgeSet& out) {
    if (static_cast<int>(stack.size()) == target) {
        Subgraph sub = induced_subgraph(g, used);
        if (!is_bipartite(sub.graph)) return false;
        for (const Edge& e : stack) out.insert(e.u, e.v);
        return true;
    }
    if (idx >= edges.size()) return false;
    int deficit = target - static_cast<int>(stack.size());
    if (static_cast<int>(edges.size() - idx) < deficit) return false;
    const Edge& e = edges[idx];
    if (!used.contains(e.u) && !used.contains(e.v)) {
        VertexSet used2 = used;
        used2.insert(e.u);
        used2.insert(e.v);
        stack.push_back(e);
        if (find_alpha_matching_bipartite(g, edges, idx + 1, used2, stack, target, out))
            return true;
        stack.pop_back();
    }
    return find_alpha_matching_bipartite(g, edges, idx + 1, used, stack, target, out);
}

}  // namespace

EquivalenceReport equivalence_suite(const Graph& g, const Limits& limits) {
    if (g.vertex_count() > limits.equivalence_max_n)
        throw CapExceeded("equivalence suite cap is " + std::to_string(limits.equivalence_max_n) +
                          " vertices");
    EquivalenceReport rep;
    OmegaFamily om = omega_family(g, limits);
    rep.alpha = om.alpha;
    const int n = g.vertex_count();

    // (i) pairwise scan over Omega
    if (om.alpha == 0) {
        rep.disjoint_pair = true;
        rep.pair_witness = {VertexSet{}, VertexSet{}};
    }
    for (std::size_t i = 0; i < om.sets.size() && !rep.disjoint_pair; ++i)
        for (std::size_t j = i + 1; j < om.sets.size(); ++j)
            if (!om.sets[i].intersects(om.sets[j])) {
                rep.disjoint_pair = true;
                rep.pair_witness = {om.sets[i], om.sets[j]};
                break;
            }

    // (ii) some maximum set whose removal preserves alpha
    for (const VertexSet& s : om.sets) {
        check_deadline(limits);
        if (independence_number(delete_vertices(g, s).graph, limits) == om.alpha) {
            rep.removal_preserves_alpha = true;
            rep.removal_witness = s;
            break;
        }
    }

    // (iii) matching of size alpha with bipartite induced subgraph
    {
        std::vector<Edge> edges = g.edges();
        std::vector<Edge> stack;
        EdgeSet found;
        if (find_alpha_matching_bipartite(g, edges, 0, VertexSet{}, stack, om.alpha, found)) {
            rep.alpha_matching_bipartite = true;
            rep.matching_witness = Matching::from_edges(found);
        }
    }

    // (iv) induced bipartite subgraph of order 2*alpha
    for_each_subset_of_size(n, 2 * om.alpha, [&](std::uint64_t w) {
        check_deadline(limits);
        VertexSet vs = VertexSet::from_bits(w);
        if (is_bipartite(induced_subgraph(g, vs).graph)) {
            rep.induced_bipartite_2alpha = true;
            rep.subgraph_witness = vs;
            return false;
        }
        return true;
    });

    // (v) a deleted set leaving a bipartite graph with a perfect matching of size alpha
    for_each_subset_of_size(n, n - 2 * om.alpha, [&](std::uint64_t a) {
        check_deadline(limits);
        VertexSet vs = VertexSet::from_bits(a);
        Subgraph rest = delete_vertices(g, vs);
        BipartiteResult bp = find_bipartition(rest.graph);
        if (!bp.ok()) return true;
        Matching m = max_matching_bipartite(rest.graph, bp.sides->first, bp.sides->second);
        if (static_cast<int>(m.size()) == om.alpha &&
            2 * om.alpha == rest.graph.vertex_count()) {
            rep.bipartite_remainder_pm = true;
            rep.deleted_witness = vs;
            return false;
        }
        return true;
    });

    return rep;
}

bool mu_ge_alpha_check(const Graph& g, const Limits& limits) {
    Certificate cert = has_two_disjoint_mis(g, limits);
    if (!cert.yes) return true;  // vacuous
    return matching_number(g) >= cert.alpha;
}

std::optional<CoronaEmbedding> contains_induced_corona_odd_cycle(const Graph& g, int k_max) {
    if (g.vertex_count() > 20) throw CapExceeded("induced pattern search capped at n <= 20");
    if (k_max < 1 || k_max > 3) throw CapExceeded("pendant odd cycle search capped at k <= 3");
    const int n = g.vertex_count();
    for (int k = 1; k <= k_max; ++k) {
        const int c = 2 * k + 1;
        if (2 * c > n) break;
        Graph pattern = corona(cycle_graph(c), complete_graph(1));
        const int pn = pattern.vertex_count();
        // map cycle vertices 0..c-1 first, then pendant of i is c+i
        std::vector<int> order;
        for (int i = 0; i < c; ++i) order.push_back(i);
        for (int i = 0; i < c; ++i) order.push_back(c + i);
        std::vector<int> image(static_cast<std::size_t>(pn), -1);
        VertexSet used;
        std::vector<int> host_degree(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) host_degree[static_cast<std::size_t>(v)] = g.degree(v);

        std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
            if (depth == order.size()) return true;
            int pv = order[depth];
            int need = pattern.degree(pv);
            for (int hv = 0; hv < n; ++hv) {
                if (used.contains(hv) || host_degree[static_cast<std::size_t>(hv)] < need)
                    continue;
                bool ok = true;
                for (std::size_t d = 0; d < depth && ok; ++d) {
                    int qv = order[d];
                    ok = pattern.has_edge(pv, qv) ==
                         g.has_edge(hv, image[static_cast<std::size_t>(qv)]);
                }
                if (!ok) continue;
                image[static_cast<std::size_t>(pv)] = hv;
                used.insert(hv);
                if (place(depth + 1)) return true;
                used.erase(hv);
                image[static_cast<std::size_t>(pv)] = -1;
            }
            return false;
        };
        if (place(0)) {
            CoronaEmbedding out;
            out.k = k;
            for (int i = 0; i < c; ++i) {
                out.cycle_vertices.push_back(image[static_cast<std::size_t>(i)]);
                out.pendant_vertices.push_back(image[static_cast<std::size_t>(c + i)]);
            }
            return out;
        }
    }
    return std::nullopt;
}

bool validate_certificate(const Graph& g, const Certificate& cert, const Limits& limits) {
    auto expected_alpha = [&]() -> int {
        // poly routes first: bipartite graphs go through the matching number,
        // forests and unicyclic inputs collapse inside the solver uncapped
        BipartiteResult bp = find_bipartition(g);
        if (bp.ok() && g.vertex_count() > limits.max_n)
            return g.vertex_count() - matching_number(g);
        Limits local = limits;
        if (is_forest(g) || unique_cycle(g))
            local.max_n = std::max(local.max_n, g.vertex_count());
        return independence_number(g, local);
    };
    switch (cert.kind) {
        case CertificateKind::DisjointPair: {
            if (!cert.yes) return false;
            if (cert.set_a.intersects(cert.set_b)) return false;
            if (!is_independent(g, cert.set_a) || !is_independent(g, cert.set_b)) return false;
            int a = expected_alpha();
            return cert.set_a.size() == a && cert.set_b.size() == a;
        }
        case CertificateKind::AlphaMatchingBipartite: {
            if (!cert.yes || !is_valid_matching(g, cert.matching)) return false;
            if (static_cast<int>(cert.matching.size()) != expected_alpha()) return false;
            return is_bipartite(induced_subgraph(g, cert.matching.saturated()).graph);
        }
        case CertificateKind::InducedBipartite2Alpha: {
            if (!cert.yes) return false;
            if (cert.set_a.size() != 2 * expected_alpha()) return false;
            return is_bipartite(induced_subgraph(g, cert.set_a).graph);
        }
        case CertificateKind::UnicyclicCycleVertex: {
            if (!cert.yes) return false;
            std::optional<std::vector<int>> cyc = unique_cycle(g);
            if (!cyc || std::find(cyc->begin(), cyc->end(), cert.cycle_vertex) == cyc->end())
                return false;
            // stored matching must perfectly cover everything but the cycle vertex
            VertexSet rest = g.vertices();
            rest.erase(cert.cycle_vertex);
            if (!is_valid_matching(g, cert.matching) || cert.matching.saturated() != rest)
                return false;
            if (cert.set_a.intersects(cert.set_b)) return false;
            if (!is_independent(g, cert.set_a) || !is_independent(g, cert.set_b)) return false;
            int a = expected_alpha();
            return cert.set_a.size() == a && cert.set_b.size() == a;
        }
        case CertificateKind::Exhaustion: {
            if (cert.yes) return false;
            return !has_two_disjoint_mis(g, limits).yes;
        }
    }
    return false;
}

}  // namespace twomis
