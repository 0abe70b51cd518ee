#include "oracle.hpp"

#include "generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <queue>
#include <set>
#include <sstream>

namespace sepscope {

// ---------------------------------------------------------------- validators

std::string check_model(const Graph& host, const Graph& pattern, const InducedMinorModel& model) {
    if (static_cast<int>(model.branch_sets.size()) != pattern.order())
        return "model must have one branch set per pattern vertex";
    std::vector<int> owner(host.order(), -1);
    for (int v = 0; v < pattern.order(); ++v) {
        const auto& bs = model.branch_sets[v];
        if (bs.empty()) return "branch set of pattern vertex " + std::to_string(v) + " is empty";
        for (int x : bs) {
            if (x < 0 || x >= host.order()) return "branch set member out of range";
            if (owner[x] >= 0) return "branch sets are not pairwise disjoint";
            owner[x] = v;
        }
        if (!is_connected(induced_subgraph(host, bs)))
            return "branch set of pattern vertex " + std::to_string(v) + " is not connected";
    }
    std::vector<std::vector<char>> touched(pattern.order(), std::vector<char>(pattern.order(), 0));
    for (const auto& [x, y] : host.edges()) {
        int u = owner[x], v = owner[y];
        if (u < 0 || v < 0 || u == v) continue;
        if (!pattern.has_edge(u, v))
            return "edge between branch sets of nonadjacent pattern vertices " + std::to_string(u) + "," +
                   std::to_string(v);
        touched[u][v] = touched[v][u] = 1;
    }
    for (const auto& [u, v] : pattern.edges())
        if (!touched[u][v])
            return "pattern edge " + std::to_string(u) + "-" + std::to_string(v) + " has no realizing host edge";
    return {};
}

std::string check_embedding(const Graph& host, const Graph& pattern, const Embedding& e) {
    if (static_cast<int>(e.map.size()) != pattern.order()) return "embedding size mismatch";
    std::vector<char> used(host.order(), 0);
    for (int x : e.map) {
        if (x < 0 || x >= host.order()) return "embedding image out of range";
        if (used[x]) return "embedding is not injective";
        used[x] = 1;
    }
    for (int u = 0; u < pattern.order(); ++u)
        for (int v = u + 1; v < pattern.order(); ++v)
            if (pattern.has_edge(u, v) != host.has_edge(e.map[u], e.map[v]))
                return "adjacency not preserved on pair " + std::to_string(u) + "," + std::to_string(v);
    return {};
}

std::string model_to_text(const InducedMinorModel& m) {
    std::ostringstream os;
    for (std::size_t v = 0; v < m.branch_sets.size(); ++v) {
        os << v << ": {";
        for (std::size_t i = 0; i < m.branch_sets[v].size(); ++i) {
            if (i) os << ", ";
            os << m.branch_sets[v][i];
        }
        os << "}\n";
    }
    return os.str();
}

std::string embedding_to_text(const Embedding& e) {
    std::ostringstream os;
    for (std::size_t v = 0; v < e.map.size(); ++v) os << v << ": {" << e.map[v] << "}\n";
    return os.str();
}

// ------------------------------------------------- induced subgraph search

namespace {

// pattern vertex order: seed with the max-degree vertex, then repeatedly the
// vertex with most ordered neighbors (ties: higher degree, lower id)
std::vector<int> embed_order(const Graph& pattern) {
    const int k = pattern.order();
    std::vector<int> order;
    std::vector<char> placed(k, 0);
    for (int step = 0; step < k; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < k; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int w : pattern.neighbors(v)) links += placed[w];
            if (links > best_links || (links == best_links && pattern.degree(v) > best_deg)) {
                best = v;
                best_links = links;
                best_deg = pattern.degree(v);
            }
        }
        order.push_back(best);
        placed[best] = 1;
    }
    return order;
}

struct EmbedSearch {
    const Graph& host;
    const Graph& pattern;
    std::vector<int> order;
    std::vector<int> image;        // pattern vertex -> host vertex
    std::vector<char> used;

    bool extend(std::size_t step) {
        if (step == order.size()) return true;
        const int v = order[step];
        for (int x = 0; x < host.order(); ++x) {
            if (used[x] || host.degree(x) < pattern.degree(v)) continue;
            bool ok = true;
            for (std::size_t s = 0; s < step && ok; ++s) {
                const int u = order[s];
                if (pattern.has_edge(u, v) != host.has_edge(image[u], x)) ok = false;
            }
            if (!ok) continue;
            image[v] = x;
            used[x] = 1;
            if (extend(step + 1)) return true;
            used[x] = 0;
            image[v] = -1;
        }
        return false;
    }
};

std::optional<Embedding> embed_induced(const Graph& host, const Graph& pattern) {
    if (pattern.order() > host.order() || pattern.size() > host.size()) return std::nullopt;
    EmbedSearch s{host, pattern, embed_order(pattern), std::vector<int>(pattern.order(), -1),
                  std::vector<char>(host.order(), 0)};
    if (!s.extend(0)) return std::nullopt;
    return Embedding{s.image};
}

} // namespace

std::optional<Embedding> contains_induced_subgraph(const Graph& host, const Graph& pattern, int pattern_cap) {
    if (pattern.order() > pattern_cap)
        throw capability_error("induced-subgraph oracle capped at pattern order " + std::to_string(pattern_cap));
    return embed_induced(host, pattern);
}

// ---------------------------------------------------- induced minor search

namespace {

struct MinorSearch {
    const Graph& host;
    const Graph& pattern;
    int n, k;
    std::vector<std::uint64_t> adj;           // single-word rows
    std::vector<std::pair<int, int>> pedges;  // pattern edges
    std::vector<std::uint64_t> class_mask;
    std::uint64_t remaining;                   // unprocessed host vertices
    unsigned realized;                         // bitmask over pedges
    int empty_classes;

    explicit MinorSearch(const Graph& g, const Graph& h)
        : host(g), pattern(h), n(g.order()), k(h.order()), adj(n, 0), pedges(h.edges().begin(), h.edges().end()),
          class_mask(k, 0), remaining(n == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1)),
          realized(0), empty_classes(k) {
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) adj[v] |= std::uint64_t(1) << w;
    }

    std::uint64_t nbhd(std::uint64_t set) const {
        std::uint64_t out = 0;
        while (set) {
            const int v = std::countr_zero(set);
            set &= set - 1;
            out |= adj[v];
        }
        return out;
    }

    bool edge_between(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a;
        while (s) {
            const int v = std::countr_zero(s);
            s &= s - 1;
            if (adj[v] & b) return true;
        }
        return false;
    }

    // every unrealized pattern edge must still be realizable; every class with
    // several pieces must be mendable through remaining vertices
    bool feasible() const {
        if (std::popcount(remaining) < empty_classes) return false;
        for (std::size_t e = 0; e < pedges.size(); ++e) {
            if (realized & (1u << e)) continue;
            const auto [c, d] = pedges[e];
            if (!edge_between(class_mask[c] | remaining, class_mask[d] | remaining)) return false;
        }
        for (int c = 0; c < k; ++c) {
            std::uint64_t left = class_mask[c];
            if (!left) continue;
            while (left) {
                std::uint64_t comp = left & (~left + 1);
                for (;;) {
                    const std::uint64_t grown = (comp | nbhd(comp)) & class_mask[c];
                    if (grown == comp) break;
                    comp = grown;
                }
                left &= ~comp;
                if ((left || comp != class_mask[c]) && !(nbhd(comp) & remaining)) return false;
            }
        }
        return true;
    }

    bool connected(std::uint64_t set) const {
        if (!set) return false;
        std::uint64_t comp = set & (~set + 1);
        for (;;) {
            const std::uint64_t grown = (comp | nbhd(comp)) & set;
            if (grown == comp) break;
            comp = grown;
        }
        return comp == set;
    }

    bool search(int v, InducedMinorModel& out) {
        if (v == n) {
            if (empty_classes > 0 || realized != (1u << pedges.size()) - 1) return false;
            for (int c = 0; c < k; ++c)
                if (!connected(class_mask[c])) return false;
            out.branch_sets.assign(k, {});
            for (int c = 0; c < k; ++c) {
                std::uint64_t s = class_mask[c];
                while (s) {
                    out.branch_sets[c].push_back(std::countr_zero(s));
                    s &= s - 1;
                }
            }
            return true;
        }
        const std::uint64_t bit = std::uint64_t(1) << v;
        remaining &= ~bit;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            unsigned gained = 0;
            for (int d = 0; d < k && ok; ++d) {
                if (!(adj[v] & class_mask[d]) || d == c) continue;
                bool allowed = false;
                for (std::size_t e = 0; e < pedges.size(); ++e) {
                    if ((pedges[e].first == c && pedges[e].second == d) ||
                        (pedges[e].first == d && pedges[e].second == c)) {
                        allowed = true;
                        gained |= 1u << e;
                        break;
                    }
                }
                if (!allowed) ok = false;
            }
            if (!ok) continue;
            const bool was_empty = class_mask[c] == 0;
            class_mask[c] |= bit;
            empty_classes -= was_empty;
            const unsigned saved = realized;
            realized |= gained;
            if (feasible() && search(v + 1, out)) return true;
            realized = saved;
            class_mask[c] &= ~bit;
            empty_classes += was_empty;
        }
        // leave v unused
        if (feasible() && search(v + 1, out)) return true;
        remaining |= bit;
        return false;
    }
};

} // namespace

std::optional<InducedMinorModel> contains_induced_minor(const Graph& host, const Graph& pattern, int pattern_cap,
                                                        int host_cap) {
    if (pattern.order() > pattern_cap)
        throw capability_error("induced-minor oracle capped at pattern order " + std::to_string(pattern_cap));
    if (host.order() > host_cap || host.order() > 64)
        throw capability_error("induced-minor oracle capped at host order " + std::to_string(std::min(host_cap, 64)));
    if (pattern.order() == 0) return InducedMinorModel{};
    if (pattern.order() > host.order()) return std::nullopt;
    MinorSearch s(host, pattern);
    InducedMinorModel out;
    if (!s.search(0, out)) return std::nullopt;
    return out;
}

// ---------------------------------------- induced topological minor search

namespace {

// lexicographic enumeration of count vectors with a fixed total
bool next_composition(std::vector<int>& c, int total) {
    // odometer over positions, keeping the sum constant
    const int m = static_cast<int>(c.size());
    for (int i = m - 2; i >= 0; --i) {
        int tail = 0;
        for (int j = i + 1; j < m; ++j) tail += c[j];
        if (tail > 0) {
            ++c[i];
            int rest = tail - 1;
            for (int j = i + 1; j < m; ++j) c[j] = 0;
            c[m - 1] = rest;
            return true;
        }
    }
    (void)total;
    return false;
}

} // namespace

std::optional<SubdivisionWitness> contains_induced_topological_minor(const Graph& host, const Graph& pattern,
                                                                     int pattern_cap, int host_cap) {
    if (pattern.order() > pattern_cap)
        throw capability_error("induced-topological-minor oracle capped at pattern order " +
                               std::to_string(pattern_cap));
    if (host.order() > host_cap)
        throw capability_error("induced-topological-minor oracle capped at host order " + std::to_string(host_cap));
    if (pattern.order() > host.order()) return std::nullopt;
    const int m = pattern.size();
    const int max_extra = host.order() - pattern.order();
    for (int t = 0; t <= max_extra; ++t) {
        if (m == 0 && t > 0) break;
        std::vector<Graph> seen; // isomorphism dedup within one size class
        std::vector<int> counts(std::max(m, 1), 0);
        counts[std::max(m, 1) - 1] = t;
        if (m == 0) counts.clear();
        for (;;) {
            Graph sub = m == 0 ? pattern : subdivide(pattern, counts);
            bool skip = false;
            if (sub.order() <= kIsoCap) {
                for (const auto& prev : seen)
                    if (is_isomorphic(prev, sub)) {
                        skip = true;
                        break;
                    }
                if (!skip) seen.push_back(sub);
            }
            if (!skip) {
                if (auto emb = embed_induced(host, sub))
                    return SubdivisionWitness{std::move(sub), counts, std::move(*emb)};
            }
            if (m == 0 || !next_composition(counts, t)) break;
        }
    }
    return std::nullopt;
}

// ------------------------------------------------------------- thin walks

std::vector<ThinWalk> thin_walks(const Graph& h) {
    std::vector<ThinWalk> walks;
    std::set<Edge> used;
    auto mark = [&](int a, int b) { used.insert({std::min(a, b), std::max(a, b)}); };
    auto is_used = [&](int a, int b) { return used.count({std::min(a, b), std::max(a, b)}) > 0; };

    for (int u = 0; u < h.order(); ++u) {
        if (h.degree(u) == 2) continue;
        for (int w : h.neighbors(u)) {
            if (h.degree(w) != 2 || is_used(u, w)) continue;
            ThinWalk walk;
            walk.vertices = {u, w};
            mark(u, w);
            int prev = u, cur = w;
            while (h.degree(cur) == 2) {
                const auto& nb = h.neighbors(cur);
                const int nxt = nb[0] == prev ? nb[1] : nb[0];
                mark(cur, nxt);
                walk.vertices.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            walk.closed = walk.vertices.front() == walk.vertices.back();
            walks.push_back(std::move(walk));
        }
    }
    // pure-cycle components: every vertex of degree 2
    std::vector<char> visited(h.order(), 0);
    for (const auto& w : walks)
        for (int v : w.vertices) visited[v] = 1;
    for (const auto& comp : components(h)) {
        bool all2 = comp.size() >= 3;
        for (int v : comp) all2 = all2 && h.degree(v) == 2 && !visited[v];
        if (!all2) continue;
        ThinWalk walk;
        walk.closed = true;
        int start = comp.front();
        walk.vertices.push_back(start);
        int prev = -1, cur = start;
        do {
            const auto& nb = h.neighbors(cur);
            const int nxt = (nb[0] != prev) ? nb[0] : nb[1];
            walk.vertices.push_back(nxt);
            prev = cur;
            cur = nxt;
        } while (cur != start);
        walks.push_back(std::move(walk));
    }
    return walks;
}

std::string check_thin_walks(const Graph& h, const std::vector<ThinWalk>& walks) {
    std::set<Edge> used;
    std::set<int> internals;
    std::set<int> on_walk;
    for (const auto& w : walks) {
        const auto& v = w.vertices;
        if (v.size() < 2) return "walk shorter than one edge";
        if (w.closed != (v.front() == v.back())) return "closed flag inconsistent with endpoints";
        std::set<int> distinct(v.begin(), v.end());
        const std::size_t expect = w.closed ? v.size() - 1 : v.size();
        if (distinct.size() != expect) return "walk vertices not pairwise distinct";
        for (std::size_t i = 0; i + 1 < v.size(); ++i) {
            if (!h.has_edge(v[i], v[i + 1])) return "walk uses a non-edge";
            Edge e{std::min(v[i], v[i + 1]), std::max(v[i], v[i + 1])};
            if (used.count(e)) return "walks are not pairwise edge-disjoint";
            used.insert(e);
        }
        for (std::size_t i = 1; i + 1 < v.size(); ++i)
            if (h.degree(v[i]) != 2) return "internal vertex of degree != 2";
    }
    // proof-level condition: no internal vertex of any walk lies on another walk
    for (std::size_t a = 0; a < walks.size(); ++a) {
        std::set<int> internal_a(walks[a].vertices.begin() + 1, walks[a].vertices.end() - 1);
        for (std::size_t b = 0; b < walks.size(); ++b) {
            if (a == b) continue;
            for (int v : walks[b].vertices)
                if (internal_a.count(v)) return "internal vertex shared between walks";
        }
    }
    (void)internals;
    (void)on_walk;
    return {};
}

// ------------------------------------------------------- model normalization

namespace {

struct LayeredWalk {
    // dist[i][x] = edges to reach layer k-1 from (layer i, host vertex x); -1 unreachable
    std::vector<std::vector<int>> dist;
};

} // namespace

InducedMinorModel normalize_thin_walk_model(const Graph& host, const Graph& pattern,
                                            const InducedMinorModel& model_in,
                                            const std::vector<ThinWalk>& walks) {
    if (auto why = check_model(host, pattern, model_in); !why.empty())
        throw input_error("normalize_thin_walk_model: invalid model: " + why);
    if (auto why = check_thin_walks(pattern, walks); !why.empty())
        throw input_error("normalize_thin_walk_model: invalid walk collection: " + why);

    InducedMinorModel model = model_in;
    for (const auto& walk : walks) {
        const auto& wv = walk.vertices;
        const int k = static_cast<int>(wv.size());
        if (k <= 2) continue;
        auto set_of = [&](int i) -> const VertexSet& { return model.branch_sets[wv[i]]; };

        // backward BFS over the layered digraph
        std::vector<std::vector<int>> dist(k);
        for (int i = 0; i < k; ++i) dist[i].assign(host.order(), -1);
        std::queue<std::pair<int, int>> q;
        for (int x : set_of(k - 1)) {
            dist[k - 1][x] = 0;
            q.push({k - 1, x});
        }
        auto relax = [&](int layer, int x, int d) {
            if (dist[layer][x] < 0) {
                dist[layer][x] = d;
                q.push({layer, x});
            }
        };
        while (!q.empty()) {
            auto [i, x] = q.front();
            q.pop();
            const int d = dist[i][x] + 1;
            // predecessors within layer i (interior layers move inside their set)
            if (i >= 1 && i <= k - 2)
                for (int y : set_of(i))
                    if (host.has_edge(x, y)) relax(i, y, d);
            // predecessors in layer i-1
            if (i >= 1)
                for (int y : set_of(i - 1))
                    if (host.has_edge(x, y)) relax(i - 1, y, d);
        }
        int start = -1;
        for (int x : set_of(0))
            if (dist[0][x] >= 0 && (start < 0 || dist[0][x] < dist[0][start] ||
                                    (dist[0][x] == dist[0][start] && x < start)))
                start = x;
        if (start < 0) throw input_error("normalize_thin_walk_model: no monotone walk (model inconsistent)");

        // forward greedy reconstruction, lexicographically least among shortest
        std::vector<int> seq{start};
        int layer = 0, cur = start;
        while (layer != k - 1) {
            const int want = dist[layer][cur] - 1;
            int best = -1, best_layer = -1;
            if (layer + 1 <= k - 1)
                for (int y : set_of(layer + 1))
                    if (host.has_edge(cur, y) && dist[layer + 1][y] == want && (best < 0 || y < best)) {
                        best = y;
                        best_layer = layer + 1;
                    }
            if (layer >= 1 && layer <= k - 2)
                for (int y : set_of(layer))
                    if (host.has_edge(cur, y) && dist[layer][y] == want && (best < 0 || y < best)) {
                        best = y;
                        best_layer = layer;
                    }
            layer = best_layer;
            cur = best;
            seq.push_back(cur);
        }

        const int r = static_cast<int>(seq.size());
        VertexSet last = set_of(k - 1);
        for (int t = k - 1; t <= r - 2; ++t) last.push_back(seq[t]);
        std::sort(last.begin(), last.end());
        last.erase(std::unique(last.begin(), last.end()), last.end());
        for (int i = 1; i <= k - 2; ++i) model.branch_sets[wv[i]] = {seq[i]};
        model.branch_sets[wv[k - 1]] = std::move(last);
    }
    if (auto why = check_model(host, pattern, model); !why.empty())
        throw input_error("normalize_thin_walk_model: normalization produced an invalid model: " + why);
    return model;
}

// ------------------------------------------------------------------- fvs

int feedback_vertex_number(const Graph& g, int cap) {
    const int n = g.order();
    if (n > cap || n > 30)
        throw capability_error("feedback_vertex_number capped at " + std::to_string(std::min(cap, 30)) + " vertices");
    if (is_acyclic(g)) return 0;
    std::vector<int> parent(n);
    auto acyclic_minus = [&](unsigned removed) {
        for (int i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& [u, v] : g.edges()) {
            if ((removed >> u) & 1u || (removed >> v) & 1u) continue;
            int a = find(u), b = find(v);
            if (a == b) return false;
            parent[a] = b;
        }
        return true;
    };
    for (int s = 1; s <= n; ++s) {
        // all subsets of size s
        unsigned mask = (1u << s) - 1;
        const unsigned limit = 1u << n;
        while (mask < limit) {
            if (acyclic_minus(mask)) return s;
            const unsigned c = mask & (~mask + 1);
            const unsigned r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return n;
}

} // namespace sepscope
