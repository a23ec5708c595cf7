#include "twomis/graph.hpp"

#include <algorithm>
#include <deque>

namespace twomis {

void EdgeSet::insert(int u, int v) {
    if (u == v) throw std::invalid_argument("edge endpoints must be distinct");
    if (u > v) std::swap(u, v);
    Edge e{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return;
    edges_.insert(it, e);
}

bool EdgeSet::contains(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Graph::Graph(int n, std::string label) : n_(n), label_(std::move(label)) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::string label) {
    Graph g(n, std::move(label));
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.add_edge_unchecked(u, v);
    }
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint64_t row : adj_) twice += std::popcount(row);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t higher = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
        for (int v : VertexSet::from_bits(higher)) out.push_back({u, v});
    }
    return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& a) {
    std::uint64_t out = 0;
    for (int v : a) out |= g.adjacency_bits(v);
    return VertexSet::from_bits(out);
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& a) {
    return neighborhood(g, a) | a;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (!keep.is_subset_of(g.vertices()))
        throw std::invalid_argument("induced subgraph: vertex out of range");
    Subgraph out;
    out.from_original.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int v : keep) {
        out.from_original[static_cast<std::size_t>(v)] = static_cast<int>(out.to_original.size());
        out.to_original.push_back(v);
    }
    Graph h(keep.size(), g.label());
    for (int v : keep) {
        int nv = out.from_original[static_cast<std::size_t>(v)];
        for (int w : VertexSet::from_bits(g.adjacency_bits(v)) & keep) {
            if (w > v) h.add_edge_unchecked(nv, out.from_original[static_cast<std::size_t>(w)]);
        }
    }
    out.graph = std::move(h);
    return out;
}

Subgraph delete_vertices(const Graph& g, const VertexSet& drop) {
    if (!drop.is_subset_of(g.vertices()))
        throw std::invalid_argument("delete_vertices: vertex out of range");
    return induced_subgraph(g, g.vertices() - drop);
}

Graph delete_edges(const Graph& g, const EdgeSet& f) {
    Graph h = g;
    for (const Edge& e : f) {
        if (!g.has_edge(e.u, e.v))
            throw std::invalid_argument("delete_edges: not an edge: " + std::to_string(e.u) +
                                        "-" + std::to_string(e.v));
        h.adj_[static_cast<std::size_t>(e.u)] &= ~(1ULL << e.v);
        h.adj_[static_cast<std::size_t>(e.v)] &= ~(1ULL << e.u);
    }
    return h;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : a.edges()) edges.emplace_back(e.u, e.v);
    int off = a.vertex_count();
    for (const Edge& e : b.edges()) edges.emplace_back(e.u + off, e.v + off);
    return Graph::from_edges(a.vertex_count() + b.vertex_count(), edges);
}

Graph copies(const Graph& g, int q) {
    if (q < 1) throw std::invalid_argument("copies: q must be >= 1");
    Graph out = g;
    for (int i = 1; i < q; ++i) out = disjoint_union(out, g);
    return out;
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (!g.has_edge(i, j)) edges.emplace_back(i, j);
    return Graph::from_edges(g.vertex_count(), edges);
}

Graph corona(const Graph& g, const std::vector<Graph>& attachments) {
    if (static_cast<int>(attachments.size()) != g.vertex_count())
        throw std::invalid_argument("corona: need one attachment graph per vertex");
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    int next = g.vertex_count();
    for (int v = 0; v < g.vertex_count(); ++v) {
        const Graph& h = attachments[static_cast<std::size_t>(v)];
        for (const Edge& e : h.edges()) edges.emplace_back(next + e.u, next + e.v);
        for (int w = 0; w < h.vertex_count(); ++w) edges.emplace_back(v, next + w);
        next += h.vertex_count();
    }
    return Graph::from_edges(next, edges);
}

Graph corona(const Graph& g, const Graph& h) {
    return corona(g, std::vector<Graph>(static_cast<std::size_t>(g.vertex_count()), h));
}

Graph empty_graph(int n) { return Graph(n, std::to_string(n) + "K1"); }

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges, "P" + std::to_string(n));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges, "C" + std::to_string(n));
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges, "K" + std::to_string(n));
}

Graph complete_bipartite(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("complete_bipartite: sides must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) edges.emplace_back(i, p + j);
    return Graph::from_edges(p + q, edges, "K" + std::to_string(p) + "," + std::to_string(q));
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star_graph: need at least one leaf");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, edges, "K1," + std::to_string(leaves));
}

Graph friendship_graph(int q) {
    if (q < 1) throw std::invalid_argument("friendship_graph: q must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < q; ++i) {
        int a = 1 + 2 * i, b = 2 + 2 * i;
        edges.emplace_back(0, a);
        edges.emplace_back(0, b);
        edges.emplace_back(a, b);
    }
    return Graph::from_edges(1 + 2 * q, edges, "F" + std::to_string(q));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    VertexSet seen;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen.contains(s)) continue;
        std::vector<int> comp;
        std::deque<int> queue{s};
        seen.insert(s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen.contains(w)) {
                    seen.insert(w);
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_forest(const Graph& g) {
    // cycle space rank: m - n + #components
    int c = static_cast<int>(connected_components(g).size());
    return g.edge_count() - g.vertex_count() + c == 0;
}

bool is_tree(const Graph& g) { return g.vertex_count() >= 1 && is_connected(g) && is_forest(g); }

BipartiteResult find_bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    BipartiteResult out;
    for (int s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = color[static_cast<std::size_t>(v)] ^ 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    queue.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] ==
                           color[static_cast<std::size_t>(v)]) {
                    // same-color edge closes an odd cycle through the BFS tree
                    std::vector<int> pv{v}, pw{w};
                    for (int x = v; parent[static_cast<std::size_t>(x)] != -1;)
                        pv.push_back(x = parent[static_cast<std::size_t>(x)]);
                    for (int x = w; parent[static_cast<std::size_t>(x)] != -1;)
                        pw.push_back(x = parent[static_cast<std::size_t>(x)]);
                    // trim the shared root path so both end at the meeting vertex
                    while (pv.size() >= 2 && pw.size() >= 2 &&
                           pv[pv.size() - 1] == pw[pw.size() - 1] &&
                           pv[pv.size() - 2] == pw[pw.size() - 2]) {
                        pv.pop_back();
                        pw.pop_back();
                    }
                    out.odd_cycle.assign(pv.begin(), pv.end());  // v .. lca
                    for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it)
                        out.odd_cycle.push_back(*it);  // lca-child .. w; edge wv closes it
                    return out;
                }
            }
        }
    }
    VertexSet a, b;
    for (int v = 0; v < n; ++v) (color[static_cast<std::size_t>(v)] == 0 ? a : b).insert(v);
    out.sides = {a, b};
    return out;
}

bool is_bipartite(const Graph& g) { return find_bipartition(g).ok(); }

std::optional<int> girth(const Graph& g) {
    // shortest cycle through edge uv = 1 + shortest u-v path avoiding uv
    std::optional<int> best;
    const int n = g.vertex_count();
    for (const Edge& e : g.edges()) {
        std::vector<int> dist(static_cast<std::size_t>(n), -1);
        dist[static_cast<std::size_t>(e.u)] = 0;
        std::deque<int> queue{e.u};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (v == e.v) break;
            for (int w : g.neighbors(v)) {
                if (v == e.u && w == e.v) continue;
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    queue.push_back(w);
                }
            }
        }
        int d = dist[static_cast<std::size_t>(e.v)];
        if (d >= 0 && (!best || d + 1 < *best)) best = d + 1;
    }
    return best;
}

std::optional<std::vector<int>> unique_cycle(const Graph& g) {
    if (g.vertex_count() == 0 || g.edge_count() != g.vertex_count() || !is_connected(g))
        return std::nullopt;
    // peel leaves; what survives is the cycle
    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()));
    VertexSet live = g.vertices();
    for (int v = 0; v < g.vertex_count(); ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : live) {
            if (deg[static_cast<std::size_t>(v)] == 1) {
                live.erase(v);
                for (int w : g.neighbors(v))
                    if (live.contains(w)) --deg[static_cast<std::size_t>(w)];
                changed = true;
            }
        }
    }
    std::vector<int> cycle;
    int start = live.min();
    int prev = -1, cur = start;
    do {
        cycle.push_back(cur);
        VertexSet next = g.neighbors(cur) & live;
        int chosen = -1;
        for (int w : next) {
            if (w != prev) {
                chosen = w;
                break;
            }
        }
        prev = cur;
        cur = chosen;
    } while (cur != start && cur != -1);
    return cycle;
}

}  // namespace twomis
