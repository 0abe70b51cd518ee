#include "graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace sepscope {

Graph::Graph(int n, const std::vector<Edge>& edge_list) {
    if (n < 0) throw input_error("vertex count must be non-negative");
    n_ = n;
    words_ = n == 0 ? 1 : (n + 63) / 64;
    adj_.assign(n, {});
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
    std::vector<Edge> norm;
    norm.reserve(edge_list.size());
    for (const auto& [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw input_error("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw input_error("loop edge (" + std::to_string(u) + "," + std::to_string(u) + ") not allowed");
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
    edges_ = std::move(norm);
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
        bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph from_edge_list(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

void check_vertex_set(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (v < 0 || v >= g.order())
            throw input_error("vertex " + std::to_string(v) + " out of range");
}

static VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s_in, std::vector<int>* old_ids) {
    check_vertex_set(g, s_in);
    VertexSet s = normalized(s_in);
    std::vector<int> pos(g.order(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (pos[u] >= 0 && pos[v] >= 0) edges.emplace_back(pos[u], pos[v]);
    if (old_ids) *old_ids = s;
    return Graph(static_cast<int>(s.size()), edges);
}

Graph contract_edge(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v || !g.has_edge(u, v))
        throw input_error("contract_edge: (" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    const int lo = std::min(u, v), hi = std::max(u, v);
    auto remap = [&](int x) {
        if (x == lo || x == hi) return lo;
        return x < hi ? x : x - 1;
    };
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges()) {
        int a2 = remap(a), b2 = remap(b);
        if (a2 != b2) edges.emplace_back(a2, b2);
    }
    return Graph(g.order() - 1, edges);
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<int> comp(g.order(), -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < g.order(); ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.push_back({});
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            out[id].push_back(x);
            for (int y : g.neighbors(x))
                if (comp[y] < 0) {
                    comp[y] = id;
                    q.push(y);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

VertexSet neighborhood(const Graph& g, const VertexSet& s_in, bool closed) {
    check_vertex_set(g, s_in);
    VertexSet s = normalized(s_in);
    std::vector<char> in_s(g.order(), 0), in_n(g.order(), 0);
    for (int v : s) in_s[v] = 1;
    for (int v : s)
        for (int w : g.neighbors(v)) in_n[w] = 1;
    VertexSet out;
    for (int v = 0; v < g.order(); ++v) {
        if (closed ? (in_s[v] || in_n[v]) : (in_n[v] && !in_s[v])) out.push_back(v);
    }
    return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw input_error("relabel: permutation size mismatch");
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.order(), edges);
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.order(), edges);
}

bool is_connected(const Graph& g) {
    if (g.order() <= 1) return true;
    return components(g).size() == 1;
}

bool is_acyclic(const Graph& g) {
    // union-find over the edge list
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : g.edges()) {
        int a = find(u), b = find(v);
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

} // namespace sepscope
