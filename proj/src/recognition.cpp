#include "recognition.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace sepscope {

// ----------------------------------------------------------- validators

std::string check_twin_wheel_witness(const Graph& g, const TwinWheelWitness& w) {
    const auto& h = w.hole;
    const int L = static_cast<int>(h.size());
    if (L < 5) return "hole shorter than 5";
    check_vertex_set(g, h);
    if (w.center < 0 || w.center >= g.order()) return "center out of range";
    std::set<int> distinct(h.begin(), h.end());
    if (static_cast<int>(distinct.size()) != L) return "hole vertices not distinct";
    if (distinct.count(w.center)) return "center lies on the hole";
    for (int i = 0; i < L; ++i)
        if (!g.has_edge(h[i], h[(i + 1) % L])) return "hole uses a non-edge";
    for (int i = 0; i < L; ++i)
        for (int j = i + 2; j < L; ++j) {
            if (i == 0 && j == L - 1) continue;
            if (g.has_edge(h[i], h[j])) return "hole has a chord";
        }
    std::vector<int> spokes;
    for (int i = 0; i < L; ++i)
        if (g.has_edge(w.center, h[i])) spokes.push_back(i);
    if (spokes.size() != 3) return "center does not have exactly three hole neighbors";
    const bool consecutive = ((spokes[0] + 1) % L == spokes[1] && (spokes[1] + 1) % L == spokes[2]) ||
                             (spokes[0] == 0 && spokes[1] == 1 && spokes[2] == L - 1) ||
                             (spokes[0] == 0 && spokes[1] == L - 2 && spokes[2] == L - 1);
    if (!consecutive) return "center neighbors are not consecutive on the hole";
    return {};
}

std::string check_butterfly_witness(const Graph& g, const ButterflyWitness& w) {
    for (int v : w.x)
        if (v < 0 || v >= g.order()) return "X member out of range";
    std::set<int> xs(w.x.begin(), w.x.end());
    if (xs.size() != 4) return "X members not distinct";
    if (!g.has_edge(w.x[0], w.x[1]) || !g.has_edge(w.x[2], w.x[3])) return "X does not carry the two edges";
    for (int i : {0, 1})
        for (int j : {2, 3})
            if (g.has_edge(w.x[i], w.x[j])) return "X does not induce 2P2";
    check_vertex_set(g, w.component);
    if (w.component.empty()) return "empty component";
    for (int v : w.component)
        if (xs.count(v)) return "component intersects X";
    Graph sub = induced_subgraph(g, w.component);
    if (!is_connected(sub)) return "component vertex set is not connected";
    // maximality: no neighbor of the component outside X
    std::set<int> members(w.component.begin(), w.component.end());
    for (int v : w.component)
        for (int u : g.neighbors(v))
            if (!members.count(u) && !xs.count(u)) return "component is not a full component of G - X";
    for (int x : w.x) {
        bool seen = false;
        for (int u : g.neighbors(x)) seen = seen || members.count(u) > 0;
        if (!seen) return "an X vertex has no neighbor in the component";
    }
    return {};
}

namespace {

std::string format_set(const VertexSet& s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ", ";
        os << s[i];
    }
    os << '}';
    return os.str();
}

std::string format_seq(const std::vector<int>& s) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << ", ";
        os << s[i];
    }
    os << ']';
    return os.str();
}

} // namespace

std::string witness_to_text(const Witness& w) {
    std::ostringstream os;
    if (const auto* u = std::get_if<UnichordWitness>(&w)) {
        os << "long-unichord\n";
        os << "cycle: " << format_seq(u->cycle) << '\n';
        os << "chord: " << format_set({u->chord.first, u->chord.second}) << '\n';
    } else if (const auto* t = std::get_if<ThetaWitness>(&w)) {
        os << "long-theta\n";
        os << "hubs: " << format_set({t->hub_a, t->hub_b}) << '\n';
        for (const auto& p : t->paths) os << "path: " << format_seq(p) << '\n';
    } else if (const auto* tw = std::get_if<TwinWheelWitness>(&w)) {
        os << "long-twin-wheel\n";
        os << "hole: " << format_seq(tw->hole) << '\n';
        os << "center: {" << tw->center << "}\n";
    } else if (const auto* b = std::get_if<ButterflyWitness>(&w)) {
        os << "butterfly-model\n";
        os << "x: " << format_set({b->x[0], b->x[1], b->x[2], b->x[3]}) << '\n';
        os << "component: " << format_set(b->component) << '\n';
    } else if (const auto* e = std::get_if<Embedding>(&w)) {
        os << "embedding\n" << embedding_to_text(*e);
    }
    return os.str();
}

std::string check_witness(const Graph& g, const Witness& w, const Graph* embedding_pattern) {
    if (const auto* u = std::get_if<UnichordWitness>(&w)) return check_unichord_witness(g, *u);
    if (const auto* t = std::get_if<ThetaWitness>(&w)) return check_theta_witness(g, *t);
    if (const auto* tw = std::get_if<TwinWheelWitness>(&w)) return check_twin_wheel_witness(g, *tw);
    if (const auto* b = std::get_if<ButterflyWitness>(&w)) return check_butterfly_witness(g, *b);
    if (const auto* e = std::get_if<Embedding>(&w)) {
        if (!embedding_pattern) return "embedding witness needs its pattern for validation";
        return check_embedding(g, *embedding_pattern, *e);
    }
    return "unknown witness kind";
}

// ----------------------------------------------------------- recognizers

RecognitionResult has_house_itm(const Graph& g, long long budget) {
    if (auto u = find_long_unichord(g, budget)) return {true, Witness{std::move(*u)}};
    if (auto t = find_long_theta(g, budget)) return {true, Witness{std::move(*t)}};
    return {false, std::nullopt};
}

std::optional<TwinWheelWitness> has_long_twin_wheel(const Graph& g) {
    const int n = g.order();
    for (const auto& [b, c] : g.edges()) {
        // common neighbors of the adjacent pair, candidates for the
        // nonadjacent diamond pair {a, d}
        std::vector<int> comm;
        for (int v : g.neighbors(b))
            if (v != c && g.has_edge(v, c)) comm.push_back(v);
        for (std::size_t i = 0; i < comm.size(); ++i)
            for (std::size_t j = i + 1; j < comm.size(); ++j) {
                const int a = comm[i], d = comm[j];
                if (g.has_edge(a, d)) continue;
                std::vector<char> blocked(n, 0);
                blocked[b] = blocked[c] = 1;
                for (int v : g.neighbors(b)) blocked[v] = 1;
                for (int v : g.neighbors(c)) blocked[v] = 1;
                for (int v : g.neighbors(a))
                    if (g.has_edge(v, d)) blocked[v] = 1;
                blocked[a] = blocked[d] = 0;
                // shortest a,d-path in the restricted graph
                std::vector<int> parent(n, -2);
                std::queue<int> q;
                q.push(a);
                parent[a] = -1;
                while (!q.empty() && parent[d] == -2) {
                    int x = q.front();
                    q.pop();
                    for (int y : g.neighbors(x)) {
                        if (blocked[y] || parent[y] != -2) continue;
                        parent[y] = x;
                        q.push(y);
                    }
                }
                if (parent[d] == -2) continue;
                std::vector<int> path;
                for (int v = d; v != -1; v = parent[v]) path.push_back(v);
                std::reverse(path.begin(), path.end()); // a .. d
                for (int center : {b, c}) {
                    const int rim = center == b ? c : b;
                    TwinWheelWitness w;
                    w.hole = path;
                    w.hole.push_back(rim);
                    w.center = center;
                    if (check_twin_wheel_witness(g, w).empty()) return w;
                }
            }
    }
    return std::nullopt;
}

RecognitionResult has_house_im(const Graph& g, long long budget) {
    RecognitionResult r = has_house_itm(g, budget);
    if (r.present) return r;
    if (auto tw = has_long_twin_wheel(g)) return {true, Witness{std::move(*tw)}};
    return {false, std::nullopt};
}

std::optional<ButterflyWitness> has_butterfly_im(const Graph& g) {
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [u1, v1] = edges[i];
            const auto [u2, v2] = edges[j];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) continue;
            if (g.has_edge(u1, u2) || g.has_edge(u1, v2) || g.has_edge(v1, u2) || g.has_edge(v1, v2)) continue;
            const std::array<int, 4> x{u1, v1, u2, v2};
            std::vector<char> removed(g.order(), 0);
            for (int v : x) removed[v] = 1;
            std::vector<int> comp(g.order(), -1);
            for (int s = 0; s < g.order(); ++s) {
                if (removed[s] || comp[s] >= 0) continue;
                VertexSet members;
                std::queue<int> q;
                q.push(s);
                comp[s] = s;
                bool hit[4] = {false, false, false, false};
                while (!q.empty()) {
                    int p = q.front();
                    q.pop();
                    members.push_back(p);
                    for (int y : g.neighbors(p)) {
                        if (removed[y]) {
                            for (int t = 0; t < 4; ++t) hit[t] = hit[t] || (x[t] == y);
                        } else if (comp[y] < 0) {
                            comp[y] = s;
                            q.push(y);
                        }
                    }
                }
                if (hit[0] && hit[1] && hit[2] && hit[3]) {
                    std::sort(members.begin(), members.end());
                    return ButterflyWitness{x, std::move(members)};
                }
            }
        }
    return std::nullopt;
}

std::optional<Embedding> has_2p2_itm(const Graph& g) {
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [u1, v1] = edges[i];
            const auto [u2, v2] = edges[j];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) continue;
            if (g.has_edge(u1, u2) || g.has_edge(u1, v2) || g.has_edge(v1, u2) || g.has_edge(v1, v2)) continue;
            return Embedding{{u1, v1, u2, v2}};
        }
    return std::nullopt;
}

// ------------------------------------------------------------- dichotomy

const char* relation_name(Relation rel) {
    return rel == Relation::induced_minor ? "induced-minor" : "induced-topological-minor";
}

std::optional<Relation> relation_from_name(const std::string& name) {
    if (name == "induced-minor" || name == "im") return Relation::induced_minor;
    if (name == "induced-topological-minor" || name == "itm") return Relation::induced_topological_minor;
    return std::nullopt;
}

DichotomyVerdict classify_dichotomy(const Graph& h, Relation rel) {
    if (h.order() > kSubgraphPatternCap)
        throw capability_error("classify_dichotomy capped at " + std::to_string(kSubgraphPatternCap) + " vertices");
    std::vector<std::pair<std::string, Graph>> maximal;
    if (rel == Relation::induced_minor) {
        maximal = {{"diamond", diamond_graph()}, {"butterfly", butterfly_graph()}, {"house", house_graph()}};
    } else {
        maximal = {{"2P2", two_p2_graph()}, {"diamond", diamond_graph()}, {"house", house_graph()}};
    }
    for (const auto& [name, host] : maximal) {
        if (contains_induced_subgraph(host, h)) {
            return DichotomyVerdict{rel, true, "induced subgraph of the " + name};
        }
    }
    return DichotomyVerdict{rel, false, "none"};
}

} // namespace sepscope
