#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace sepscope {

/// A subset of {0..n-1}, kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// adjacency is stored both as sorted neighbor lists and as packed bit rows,
/// plus a lexicographically sorted edge list.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edge_list);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> bits_;
};

/// Build a graph from an explicit edge list; duplicate edges collapse,
/// loops and out-of-range endpoints are input errors.
Graph from_edge_list(int n, const std::vector<Edge>& edges);

void check_vertex_set(const Graph& g, const VertexSet& s);

/// Subgraph induced by s. If old_ids is non-null, receives the map
/// new id -> old id (ascending in the old labels).
Graph induced_subgraph(const Graph& g, const VertexSet& s, std::vector<int>* old_ids = nullptr);

/// Contract the edge uv. The merged vertex takes the smaller of the two
/// freed identifiers; every identifier above the larger one shifts down by one.
Graph contract_edge(const Graph& g, int u, int v);

/// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

VertexSet neighborhood(const Graph& g, const VertexSet& s, bool closed);

/// Graph with vertex x renamed to perm[x].
Graph relabel(const Graph& g, const std::vector<int>& perm);

Graph complement(const Graph& g);

bool is_connected(const Graph& g);
bool is_acyclic(const Graph& g);

// ---- serialization ----

/// Strict graph6, single-byte size form only (n <= 62). Decoding rejects the
/// multi-byte forms, non-printable bytes, nonzero padding, and trailing bytes
/// (one trailing newline is tolerated); errors carry the byte offset.
Graph parse_graph6(const std::string& text);
std::string encode_graph6(const Graph& g);

/// Plain edge-list text: first line "n m", then m lines "u v" (0-based).
Graph parse_edge_list_text(const std::string& text);
std::string encode_edge_list_text(const Graph& g);

/// "graph6" | "edgelist" | "auto" (auto sniffs an "n m" first line).
Graph parse_graph(const std::string& text, const std::string& format);

/// DOT export; vertices in `highlight` are filled, edges with both ends
/// highlighted are drawn bold.
std::string to_dot(const Graph& g, const VertexSet& highlight = {});

// ---- isomorphism ----

inline constexpr int kIsoCap = 12;

/// Exact isomorphism test, hard-capped at kIsoCap vertices (capability_error
/// above the cap). On success returns the bijection a -> b.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
bool is_isomorphic(const Graph& a, const Graph& b);

// ---- named small graphs ----

Graph path_graph(int k);
Graph cycle_graph(int k);
Graph complete_graph(int k);
Graph complete_bipartite(int p, int q);
Graph diamond_graph();
Graph house_graph();
Graph butterfly_graph();
Graph gem_graph();
Graph paw_graph();
Graph claw_graph();
Graph two_p2_graph();

/// Lookup by name: fixed names (diamond, house, butterfly, gem, paw, claw,
/// 2p2) and parameterized ones (p4, c5, k4, k2,3).
std::optional<Graph> make_named(const std::string& name);

} // namespace sepscope
