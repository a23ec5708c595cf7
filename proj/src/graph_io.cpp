#include "twomis/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace twomis {

namespace {
constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'
}  // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (!text.empty() && text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
    if (text.empty()) throw ParseError("graph6: empty line");
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < kG6Lo || c > kG6Hi)
            throw ParseError("graph6: byte out of range at position " + std::to_string(i));
    }
    if (text[0] == '~')
        throw ParseError("graph6: long form (n >= 63) is not supported");
    int n = text[0] - kG6Lo;
    if (n > kMaxVertices) throw ParseError("graph6: vertex count exceeds 62");
    std::size_t need_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t need_bytes = 1 + (need_bits + 5) / 6;
    if (text.size() != need_bytes)
        throw ParseError("graph6: expected " + std::to_string(need_bytes) + " bytes, got " +
                         std::to_string(text.size()));

    Graph g(n);
    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int group = text[1 + bit / 6] - kG6Lo;
            if ((group >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // padding bits must be zero
    for (; bit < (need_bytes - 1) * 6; ++bit) {
        int group = text[1 + bit / 6] - kG6Lo;
        if ((group >> (5 - bit % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
    }
    return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out(1, static_cast<char>(n + kG6Lo));
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = group << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kG6Lo));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kG6Lo));
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank line
        if (n < 0) {
            int count;
            if (first != "n" || !(ls >> count) || count < 0)
                throw ParseError("edge list: expected header 'n <count>' on line 1");
            n = count;
            if (n > kMaxVertices) throw ParseError("edge list: vertex count exceeds 62");
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            throw ParseError("edge list: bad token '" + first + "' on line " +
                             std::to_string(lineno));
        }
        if (!(ls >> v))
            throw ParseError("edge list: missing second endpoint on line " +
                             std::to_string(lineno));
        if (u == v)
            throw ParseError("edge list: self-loop on line " + std::to_string(lineno));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge list: vertex out of range on line " + std::to_string(lineno));
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("edge list: missing 'n <count>' header");
    return Graph::from_edges(n, edges);
}

std::vector<Graph> parse_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view sv = line;
        while (!sv.empty() && (sv.back() == '\r' || sv.back() == ' ')) sv.remove_suffix(1);
        if (sv.empty()) continue;
        out.push_back(parse_graph6(sv));
    }
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph6 file: " + path);
    return parse_graph6_lines(in);
}

std::string to_dot(const Graph& g, const std::vector<VertexSet>& highlights) {
    static const char* palette[] = {"lightblue", "lightsalmon", "palegreen", "plum",
                                    "khaki",     "lightpink",   "lightgray"};
    std::ostringstream out;
    out << "graph G {\n";
    if (!g.label().empty()) out << "  label=\"" << g.label() << "\";\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        for (std::size_t i = 0; i < highlights.size(); ++i) {
            if (highlights[i].contains(v)) {
                out << " [style=filled, fillcolor=" << palette[i % 7] << "]";
                break;
            }
        }
        out << ";\n";
    }
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace twomis
