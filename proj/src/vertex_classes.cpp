#include "twomis/vertex_classes.hpp"

#include <functional>

namespace twomis {

VertexSet leaves(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 1) out.insert(v);
    return out;
}

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t closed = g.adjacency_bits(v) | (1ULL << v);
        bool clique = true;
        for (int u : g.neighbors(v)) {
            if (closed & ~(g.adjacency_bits(u) | (1ULL << u))) {
                clique = false;
                break;
            }
        }
        if (clique) out.insert(v);
    }
    return out;
}

CodominatedResult codominated_vertices(const Graph& g) {
    CodominatedResult out;
    out.witness.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::uint64_t closed_v = g.adjacency_bits(v) | (1ULL << v);
        for (int u : g.neighbors(v)) {  // N[u] subseteq N[v] forces u in N[v]
            std::uint64_t closed_u = g.adjacency_bits(u) | (1ULL << u);
            if ((closed_u & ~closed_v) == 0) {
                out.members.insert(v);
                out.witness[static_cast<std::size_t>(v)] = u;
                break;
            }
        }
    }
    return out;
}

bool is_shedding_vertex(const Graph& g, int v, const Limits& limits) {
    if (g.degree(v) == 0) return false;
    Subgraph rest = delete_vertices(g, g.closed_neighbors(v));
    // v fails exactly when some independent set of the remainder dominates
    // every neighbor of v; maximal sets are the worst case
    for (const VertexSet& s : maximal_independent_sets(rest.graph, limits)) {
        VertexSet back;
        for (int w : s) back.insert(rest.to_original[static_cast<std::size_t>(w)]);
        bool blocks_all = true;
        for (int u : g.neighbors(v)) {
            if (!(g.adjacency_bits(u) & back.bits())) {
                blocks_all = false;
                break;
            }
        }
        if (blocks_all) return false;
    }
    return true;
}

VertexSet shedding_vertices(const Graph& g, const Limits& limits) {
    VertexSet out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (is_shedding_vertex(g, v, limits)) out.insert(v);
    return out;
}

SheddingExpansion expand_shedding_subset(const Graph& g, const VertexSet& s, const VertexSet& a,
                                         const Limits& limits) {
    if (!is_independent(g, s))
        throw std::invalid_argument("expand_shedding_subset: set not independent");
    if (!a.is_subset_of(s)) throw std::invalid_argument("expand_shedding_subset: a not in s");
    for (int v : s) {
        if (!is_shedding_vertex(g, v, limits))
            throw std::invalid_argument("expand_shedding_subset: vertex " + std::to_string(v) +
                                        " is not shedding");
    }
    const std::vector<int> order = a.to_vector();
    VertexSet current = s - a;
    std::vector<int> replacement(order.size(), -1);

    // smallest-id greedy with backtracking over replacement choices
    std::function<bool(std::size_t, VertexSet)> place = [&](std::size_t i,
                                                            VertexSet held) -> bool {
        if (i == order.size()) return true;
        int x = order[i];
        for (int y : g.neighbors(x)) {
            if (held.contains(y) || s.contains(y)) continue;
            if (g.adjacency_bits(y) & held.bits()) continue;  // held must stay independent
            VertexSet next = held;
            next.insert(y);
            if (place(i + 1, next)) {
                replacement[i] = y;
                return true;
            }
        }
        return false;
    };
    if (!place(0, current))
        throw std::logic_error("expand_shedding_subset: no admissible replacement family");

    SheddingExpansion out;
    out.independent_set = current;
    EdgeSet pairs;
    for (std::size_t i = 0; i < order.size(); ++i) {
        out.independent_set.insert(replacement[i]);
        pairs.insert(order[i], replacement[i]);
    }
    out.matching = Matching::from_edges(pairs);
    return out;
}

std::vector<SheddingExpansion> shedding_powerset_witnesses(const Graph& g, const VertexSet& s,
                                                           const Limits& limits) {
    if (s.size() > 20) throw CapExceeded("powerset witnesses capped at |s| <= 20");
    std::vector<int> members = s.to_vector();
    std::vector<SheddingExpansion> out;
    for (std::uint64_t mask = 0; mask < (1ULL << members.size()); ++mask) {
        VertexSet a;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (mask >> i & 1) a.insert(members[i]);
        out.push_back(expand_shedding_subset(g, s, a, limits));
    }
    return out;
}

DisjointMaximalResult disjoint_maximal_from_shedding(const Graph& g, const VertexSet& s,
                                                     const Limits& limits) {
    SheddingExpansion full = expand_shedding_subset(g, s, s, limits);
    VertexSet u = full.independent_set;
    // grow to maximal, ascending ids; members of s stay excluded because each
    // one is matched to a neighbor already inside u
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (u.contains(v)) continue;
        if (g.adjacency_bits(v) & u.bits()) continue;
        u.insert(v);
    }
    return {u, full.matching};
}

}  // namespace twomis
