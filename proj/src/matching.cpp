#include "twomis/matching.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace twomis {

Matching Matching::from_edges(const EdgeSet& edges) {
    Matching m;
    for (const Edge& e : edges) {
        if (m.saturated_.contains(e.u) || m.saturated_.contains(e.v))
            throw std::invalid_argument("matching: incident edges");
        m.saturated_.insert(e.u);
        m.saturated_.insert(e.v);
    }
    m.edges_ = edges;
    return m;
}

std::optional<int> Matching::partner(int v) const {
    for (const Edge& e : edges_) {
        if (e.u == v) return e.v;
        if (e.v == v) return e.u;
    }
    return std::nullopt;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
    VertexSet seen;
    for (const Edge& e : m.edges()) {
        if (e.u < 0 || e.v >= g.vertex_count() || !g.has_edge(e.u, e.v)) return false;
        if (seen.contains(e.u) || seen.contains(e.v)) return false;
        seen.insert(e.u);
        seen.insert(e.v);
    }
    return true;
}

namespace {

// Augmenting-path search with on-the-fly blossom contraction (base array).
class BlossomSolver {
public:
    explicit BlossomSolver(const Graph& g) : g_(&g), n_(g.vertex_count()) {
        match_.assign(static_cast<std::size_t>(n_), -1);
    }

    int solve() {
        // greedy boot matching keeps the augmenting phase short
        for (int v = 0; v < n_; ++v) {
            if (match_[static_cast<std::size_t>(v)] != -1) continue;
            for (int w : g_->neighbors(v)) {
                if (match_[static_cast<std::size_t>(w)] == -1) {
                    match_[static_cast<std::size_t>(v)] = w;
                    match_[static_cast<std::size_t>(w)] = v;
                    break;
                }
            }
        }
        int size = 0;
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<std::size_t>(v)] != -1) ++size;
        size /= 2;
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<std::size_t>(v)] == -1 && augment(v)) ++size;
        return size;
    }

private:
    bool augment(int root) {
        parent_.assign(static_cast<std::size_t>(n_), -1);
        base_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) base_[static_cast<std::size_t>(v)] = v;
        in_queue_.assign(static_cast<std::size_t>(n_), false);
        std::deque<int> queue{root};
        in_queue_[static_cast<std::size_t>(root)] = true;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g_->neighbors(v)) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(w)] ||
                    match_[static_cast<std::size_t>(v)] == w)
                    continue;
                if (w == root ||
                    (match_[static_cast<std::size_t>(w)] != -1 &&
                     parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(w)])] !=
                         -1)) {
                    // odd cycle: contract the blossom around its base
                    int b = lowest_common_base(v, w);
                    blossom_.assign(static_cast<std::size_t>(n_), false);
                    mark_path(v, b, w);
                    mark_path(w, b, v);
                    for (int u = 0; u < n_; ++u) {
                        if (blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(
                                u)])]) {
                            base_[static_cast<std::size_t>(u)] = b;
                            if (!in_queue_[static_cast<std::size_t>(u)]) {
                                in_queue_[static_cast<std::size_t>(u)] = true;
                                queue.push_back(u);
                            }
                        }
                    }
                } else if (parent_[static_cast<std::size_t>(w)] == -1) {
                    parent_[static_cast<std::size_t>(w)] = v;
                    int mw = match_[static_cast<std::size_t>(w)];
                    if (mw == -1) {
                        flip_path(w);
                        return true;
                    }
                    if (!in_queue_[static_cast<std::size_t>(mw)]) {
                        in_queue_[static_cast<std::size_t>(mw)] = true;
                        queue.push_back(mw);
                    }
                }
            }
        }
        return false;
    }

    int lowest_common_base(int v, int w) {
        std::vector<bool> used(static_cast<std::size_t>(n_), false);
        int x = v;
        while (true) {
            x = base_[static_cast<std::size_t>(x)];
            used[static_cast<std::size_t>(x)] = true;
            if (match_[static_cast<std::size_t>(x)] == -1) break;
            x = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(x)])];
        }
        int y = w;
        while (true) {
            y = base_[static_cast<std::size_t>(y)];
            if (used[static_cast<std::size_t>(y)]) return y;
            y = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(y)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[static_cast<std::size_t>(v)] != b) {
            int mv = match_[static_cast<std::size_t>(v)];
            blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = true;
            blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = true;
            parent_[static_cast<std::size_t>(v)] = child;
            child = mv;
            v = parent_[static_cast<std::size_t>(mv)];
        }
    }

    void flip_path(int w) {
        while (w != -1) {
            int pw = parent_[static_cast<std::size_t>(w)];
            int next = match_[static_cast<std::size_t>(pw)];
            match_[static_cast<std::size_t>(w)] = pw;
            match_[static_cast<std::size_t>(pw)] = w;
            w = next;
        }
    }

    const Graph* g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> blossom_, in_queue_;
};

int matching_number_within(const Graph& g, const VertexSet& live) {
    if (live.size() == g.vertex_count()) return BlossomSolver(g).solve();
    return BlossomSolver(induced_subgraph(g, live).graph).solve();
}

}  // namespace

int matching_number(const Graph& g) { return BlossomSolver(g).solve(); }

Matching max_matching_general(const Graph& g) {
    // lexicographic refinement: keep an edge exactly when some maximum
    // matching extends the kept set through it
    const int total = matching_number(g);
    EdgeSet chosen;
    VertexSet used;
    int remaining = total;
    VertexSet live = g.vertices();
    for (const Edge& e : g.edges()) {
        if (remaining == 0) break;
        if (used.contains(e.u) || used.contains(e.v)) continue;
        VertexSet rest = live;
        rest.erase(e.u);
        rest.erase(e.v);
        if (matching_number_within(g, rest) == remaining - 1) {
            chosen.insert(e.u, e.v);
            used.insert(e.u);
            used.insert(e.v);
            live = rest;
            --remaining;
        }
    }
    return Matching::from_edges(chosen);
}

Matching max_matching_bipartite(const Graph& g, const VertexSet& left, const VertexSet& right) {
    if (left.intersects(right) || (left | right) != g.vertices())
        throw std::invalid_argument("max_matching_bipartite: not a partition of V");
    for (const Edge& e : g.edges()) {
        if (left.contains(e.u) == left.contains(e.v))
            throw std::invalid_argument("max_matching_bipartite: edge inside one side");
    }

    // Hopcroft-Karp over the given sides
    const int n = g.vertex_count();
    std::vector<int> match(static_cast<std::size_t>(n), -1);
    std::vector<int> dist(static_cast<std::size_t>(n));
    const std::vector<int> ls = left.to_vector();
    constexpr int kInf = 1 << 29;

    auto bfs = [&]() {
        std::deque<int> queue;
        int free_dist = kInf;
        for (int u : ls) {
            if (match[static_cast<std::size_t>(u)] == -1) {
                dist[static_cast<std::size_t>(u)] = 0;
                queue.push_back(u);
            } else {
                dist[static_cast<std::size_t>(u)] = kInf;
            }
        }
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (dist[static_cast<std::size_t>(u)] >= free_dist) continue;
            for (int v : g.neighbors(u)) {
                int next = match[static_cast<std::size_t>(v)];
                if (next == -1) {
                    free_dist = std::min(free_dist, dist[static_cast<std::size_t>(u)] + 1);
                } else if (dist[static_cast<std::size_t>(next)] == kInf) {
                    dist[static_cast<std::size_t>(next)] = dist[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(next);
                }
            }
        }
        return free_dist != kInf;
    };
    std::function<bool(int)> dfs = [&](int u) {
        for (int v : g.neighbors(u)) {
            int next = match[static_cast<std::size_t>(v)];
            if (next == -1 ||
                (dist[static_cast<std::size_t>(next)] == dist[static_cast<std::size_t>(u)] + 1 &&
                 dfs(next))) {
                match[static_cast<std::size_t>(u)] = v;
                match[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        dist[static_cast<std::size_t>(u)] = kInf;
        return false;
    };

    while (bfs()) {
        for (int u : ls)
            if (match[static_cast<std::size_t>(u)] == -1) dfs(u);
    }
    EdgeSet edges;
    for (int u : ls)
        if (match[static_cast<std::size_t>(u)] != -1)
            edges.insert(u, match[static_cast<std::size_t>(u)]);
    return Matching::from_edges(edges);
}

PerfectMatchingResult has_perfect_matching(const Graph& g) {
    PerfectMatchingResult out;
    if (g.vertex_count() % 2 != 0) return out;
    if (matching_number(g) * 2 != g.vertex_count()) return out;
    out.exists = true;
    out.matching = max_matching_general(g);
    return out;
}

ForestMatchingResult forest_perfect_matching(const Graph& g) {
    if (!is_forest(g)) throw std::invalid_argument("forest_perfect_matching: input has a cycle");
    ForestMatchingResult out;
    const int n = g.vertex_count();
    if (n % 2 != 0) {
        // some vertex in an odd component stays exposed
        for (const auto& comp : connected_components(g)) {
            if (comp.size() % 2 != 0) {
                out.stranded_vertex = comp.front();
                return out;
            }
        }
    }
    std::vector<int> deg(static_cast<std::size_t>(n));
    VertexSet live = g.vertices();
    std::deque<int> leaves;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        if (g.degree(v) <= 1) leaves.push_back(v);
    }
    EdgeSet edges;
    auto drop = [&](int v) {
        live.erase(v);
        for (int w : g.neighbors(v)) {
            if (live.contains(w) && --deg[static_cast<std::size_t>(w)] == 1) leaves.push_back(w);
        }
    };
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop_front();
        if (!live.contains(v)) continue;
        if (deg[static_cast<std::size_t>(v)] == 0) {
            out.stranded_vertex = v;  // isolated and unmatched
            return out;
        }
        int u = (g.neighbors(v) & live).min();
        edges.insert(v, u);
        drop(v);
        drop(u);
    }
    if (!live.empty()) {
        out.stranded_vertex = live.min();
        return out;
    }
    out.matching = Matching::from_edges(edges);
    return out;
}

std::optional<Matching> match_into(const Graph& g, const VertexSet& a, const VertexSet& b) {
    if (a.intersects(b)) throw std::invalid_argument("match_into: sets overlap");
    // bipartite subgraph on the a-b edges only
    Subgraph sub = induced_subgraph(g, a | b);
    std::vector<std::pair<int, int>> mapped;
    for (int u : a)
        for (int v : VertexSet::from_bits(g.adjacency_bits(u)) & b)
            mapped.emplace_back(sub.from_original[static_cast<std::size_t>(u)],
                                sub.from_original[static_cast<std::size_t>(v)]);
    Graph ab = Graph::from_edges(sub.graph.vertex_count(), mapped);
    VertexSet left, right;
    for (int v : a) left.insert(sub.from_original[static_cast<std::size_t>(v)]);
    for (int v : b) right.insert(sub.from_original[static_cast<std::size_t>(v)]);
    Matching m = max_matching_bipartite(ab, left, right);
    if (static_cast<int>(m.size()) != a.size()) return std::nullopt;
    EdgeSet back;
    for (const Edge& e : m.edges())
        back.insert(sub.to_original[static_cast<std::size_t>(e.u)],
                    sub.to_original[static_cast<std::size_t>(e.v)]);
    return Matching::from_edges(back);
}

}  // namespace twomis
