#include "graph.hpp"

#include <sstream>

namespace sepscope {

namespace {
constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;
const std::string kG6Header = ">>graph6<<";
} // namespace

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw capability_error("graph6 single-byte size form supports n <= 62, got n = " + std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + kG6Lo));
    int acc = 0, nbits = 0;
    // upper triangle in column order: (0,1),(0,2),(1,2),(0,3),...
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kG6Lo));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kG6Lo));
    return out;
}

Graph parse_graph6(const std::string& text) {
    std::size_t pos = 0;
    if (text.compare(0, kG6Header.size(), kG6Header) == 0) pos = kG6Header.size();
    if (pos >= text.size()) throw parse_error("empty graph6 string", pos);
    const unsigned char first = static_cast<unsigned char>(text[pos]);
    if (first == 126) throw parse_error("multi-byte graph6 size form not supported", pos);
    if (first < kG6Lo || first > kG6Hi) throw parse_error("invalid graph6 size byte", pos);
    const int n = first - kG6Lo;
    ++pos;
    const long long nbits = static_cast<long long>(n) * (n - 1) / 2;
    const long long nbytes = (nbits + 5) / 6;
    std::vector<Edge> edges;
    int acc = 0, have = 0;
    long long bit = 0;
    int i = 0, j = 1;
    for (long long k = 0; k < nbytes; ++k, ++pos) {
        if (pos >= text.size()) throw parse_error("truncated graph6 bit field", pos);
        const unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < kG6Lo || c > kG6Hi) throw parse_error("invalid graph6 data byte", pos);
        acc = c - kG6Lo;
        have = 6;
        while (have > 0) {
            const int b = (acc >> (have - 1)) & 1;
            --have;
            if (bit < nbits) {
                if (b) edges.emplace_back(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
                ++bit;
            } else if (b) {
                throw parse_error("nonzero padding bit in graph6 encoding", pos);
            }
        }
    }
    // tolerate one trailing newline, nothing else
    if (pos < text.size() && text[pos] == '\r') ++pos;
    if (pos < text.size() && text[pos] == '\n') ++pos;
    if (pos != text.size()) throw parse_error("trailing bytes after graph6 encoding", pos);
    return Graph(n, edges);
}

std::string encode_edge_list_text(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph parse_edge_list_text(const std::string& text) {
    std::istringstream is(text);
    long long n = 0, m = 0;
    if (!(is >> n >> m)) throw parse_error("expected header line \"n m\"", 0);
    if (n < 0 || m < 0) throw parse_error("negative count in header", 0);
    std::vector<Edge> edges;
    for (long long k = 0; k < m; ++k) {
        long long u, v;
        if (!(is >> u >> v))
            throw parse_error("expected " + std::to_string(m) + " edge lines, got " + std::to_string(k),
                              text.size());
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (is >> rest) throw parse_error("trailing tokens after edge list", text.size());
    return Graph(static_cast<int>(n), edges); // range/loop checks happen in the constructor
}

Graph parse_graph(const std::string& text, const std::string& format) {
    if (format == "graph6") return parse_graph6(text);
    if (format == "edgelist") return parse_edge_list_text(text);
    if (format == "auto") {
        // edge-list files start with two decimal numbers; graph6 bytes are
        // all >= 63, so the formats cannot be confused
        std::istringstream is(text);
        long long a, b;
        if (is >> a >> b) {
            try {
                return parse_edge_list_text(text);
            } catch (const std::exception&) {
            }
        }
        return parse_graph6(text);
    }
    throw input_error("unknown graph format: " + format);
}

std::string to_dot(const Graph& g, const VertexSet& highlight) {
    std::vector<char> hi(g.order(), 0);
    for (int v : highlight)
        if (v >= 0 && v < g.order()) hi[v] = 1;
    std::ostringstream os;
    os << "graph sepscope {\n";
    os << "  node [shape=circle fontsize=10];\n";
    for (int v = 0; v < g.order(); ++v) {
        os << "  " << v;
        if (hi[v]) os << " [style=filled fillcolor=gold]";
        os << ";\n";
    }
    for (const auto& [u, v] : g.edges()) {
        os << "  " << u << " -- " << v;
        if (hi[u] && hi[v]) os << " [penwidth=2 color=red]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace sepscope
