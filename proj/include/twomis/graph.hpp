#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twomis {

// Everything in this library is desk-scale exact computation. Vertex ids are
// dense 0..n-1 and a vertex set or an adjacency row fits in one 64-bit word,
// which keeps independence tests and neighborhood algebra at one AND each.
inline constexpr int kMaxVertices = 62;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sorted set of vertex ids backed by a bitmask. Iteration yields ascending ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> ids) {
        for (int v : ids) insert(v);
    }
    explicit VertexSet(const std::vector<int>& ids) {
        for (int v : ids) insert(v);
    }

    static VertexSet from_bits(std::uint64_t bits) {
        VertexSet s;
        s.bits_ = bits;
        return s;
    }
    static VertexSet full(int n) {
        check_id(n == 0 ? 0 : n - 1);
        return from_bits(n == 0 ? 0 : (~0ULL >> (64 - n)));
    }

    void insert(int v) {
        check_id(v);
        bits_ |= 1ULL << v;
    }
    void erase(int v) {
        check_id(v);
        bits_ &= ~(1ULL << v);
    }
    bool contains(int v) const { return v >= 0 && v < 64 && (bits_ >> v & 1); }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }
    int min() const { return std::countr_zero(bits_); }  // undefined on empty

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    VertexSet operator|(VertexSet o) const { return from_bits(bits_ | o.bits_); }
    VertexSet operator&(VertexSet o) const { return from_bits(bits_ & o.bits_); }
    VertexSet operator-(VertexSet o) const { return from_bits(bits_ & ~o.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    bool operator==(const VertexSet&) const = default;
    // Canonical order for deterministic reports: compare as integers.
    bool operator<(VertexSet o) const { return bits_ < o.bits_; }

    bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

    class iterator {
    public:
        explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
    private:
        std::uint64_t rest_;
    };
    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    static void check_id(int v) {
        if (v < 0 || v >= kMaxVertices)
            throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
    }
    std::uint64_t bits_ = 0;
};

struct Edge {
    int u, v;  // u < v
    bool operator==(const Edge&) const = default;
    bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }
};

/// Canonically ordered list of undirected edges (u < v, sorted, no duplicates).
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<std::pair<int, int>> pairs) {
        for (auto [u, v] : pairs) insert(u, v);
    }

    void insert(int u, int v);
    bool contains(int u, int v) const;
    std::size_t size() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }
    const std::vector<Edge>& edges() const { return edges_; }
    auto begin() const { return edges_.begin(); }
    auto end() const { return edges_.end(); }
    bool operator==(const EdgeSet&) const = default;

private:
    std::vector<Edge> edges_;
};

struct Subgraph;

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, std::string label = "");
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::string label = "");

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
    }
    int degree(int v) const {
        check_vertex(v);
        return std::popcount(adj_[static_cast<std::size_t>(v)]);
    }
    std::uint64_t adjacency_bits(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }
    VertexSet neighbors(int v) const { return VertexSet::from_bits(adjacency_bits(v)); }
    VertexSet closed_neighbors(int v) const {
        return VertexSet::from_bits(adjacency_bits(v) | (1ULL << v));
    }
    VertexSet vertices() const { return VertexSet::full(n_); }
    std::vector<Edge> edges() const;

    const std::string& label() const { return label_; }
    Graph with_label(std::string label) const {
        Graph g = *this;
        g.label_ = std::move(label);
        return g;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    void add_edge_unchecked(int u, int v) {
        adj_[static_cast<std::size_t>(u)] |= 1ULL << v;
        adj_[static_cast<std::size_t>(v)] |= 1ULL << u;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::string label_;

    friend Graph delete_edges(const Graph&, const EdgeSet&);
    friend Subgraph induced_subgraph(const Graph&, const VertexSet&);
};

// ---- neighborhoods over sets ----

/// N(A): vertices having at least one neighbor in A (members of A included when
/// they have a neighbor inside A).
VertexSet neighborhood(const Graph& g, const VertexSet& a);
/// N[A] = N(A) ∪ A.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& a);

// ---- subgraph operations; ids are remapped, the maps are part of the result ----

struct Subgraph {
    Graph graph;
    std::vector<int> to_original;    // new id -> original id
    std::vector<int> from_original;  // original id -> new id, -1 when removed
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
Subgraph delete_vertices(const Graph& g, const VertexSet& drop);
/// Same vertex set, edges of f removed. Throws if f contains a non-edge.
Graph delete_edges(const Graph& g, const EdgeSet& f);

Graph disjoint_union(const Graph& a, const Graph& b);
/// q >= 1 disjoint copies of g.
Graph copies(const Graph& g, int q);
Graph complement(const Graph& g);

/// Corona: g plus one private copy of attachments[v] fully joined to v.
Graph corona(const Graph& g, const std::vector<Graph>& attachments);
Graph corona(const Graph& g, const Graph& h);

// ---- generators ----

Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph complete_graph(int n);
Graph complete_bipartite(int p, int q);
Graph star_graph(int leaves);  // K_{1,p}: center 0
Graph friendship_graph(int q);  // q triangles sharing vertex 0

// ---- structure probes ----

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

struct BipartiteResult {
    std::optional<std::pair<VertexSet, VertexSet>> sides;  // isolated vertices on the left
    std::vector<int> odd_cycle;                            // witness when not bipartite
    bool ok() const { return sides.has_value(); }
};
BipartiteResult find_bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// The unique cycle, in walk order starting at its smallest vertex, when g is
/// connected with exactly one cycle (m = n). nullopt otherwise.
std::optional<std::vector<int>> unique_cycle(const Graph& g);

}  // namespace twomis
