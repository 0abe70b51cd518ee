#include "solvers.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace sepscope {

// ------------------------------------------------------- three in a tree

namespace {

struct TreeSearch {
    const Graph& g;
    std::array<int, 3> ts;
    long long& budget;
    std::vector<char> in_tree, forb;

    TreeSearch(const Graph& graph, std::array<int, 3> terminals, long long& b)
        : g(graph), ts(terminals), budget(b), in_tree(g.order(), 0), forb(g.order(), 0) {}

    bool run(VertexSet& out) {
        in_tree[ts[0]] = 1;
        return recurse(out);
    }

    int tree_neighbors(int v) const {
        int c = 0;
        for (int w : g.neighbors(v)) c += in_tree[w];
        return c;
    }

    bool recurse(VertexSet& out) {
        if (--budget < 0) throw budget_error("three_in_a_tree: search budget exhausted");
        const int n = g.order();
        // vertices with two or more tree neighbors can never be added
        std::vector<char> dead(n, 0);
        for (int v = 0; v < n; ++v)
            if (!in_tree[v] && tree_neighbors(v) >= 2) dead[v] = 1;
        for (int t : ts)
            if (!in_tree[t] && (dead[t] || forb[t])) return false;
        if (in_tree[ts[0]] && in_tree[ts[1]] && in_tree[ts[2]]) {
            out = minimalize();
            return true;
        }
        // multi-source BFS from the tree through usable vertices to the
        // nearest uncovered terminal
        std::vector<int> parent(n, -2);
        std::queue<int> q;
        for (int v = 0; v < n; ++v)
            if (in_tree[v]) {
                parent[v] = -1;
                q.push(v);
            }
        int goal = -1;
        while (!q.empty() && goal < 0) {
            int x = q.front();
            q.pop();
            for (int y : g.neighbors(x)) {
                if (parent[y] != -2 || in_tree[y] || forb[y] || dead[y]) continue;
                parent[y] = x;
                if (y == ts[0] || y == ts[1] || y == ts[2]) {
                    goal = y;
                    break;
                }
                q.push(y);
            }
        }
        if (goal < 0) return false;
        int v = goal;
        while (parent[v] >= 0 && !in_tree[parent[v]]) v = parent[v];
        // v is adjacent to the tree and not dead, so it has exactly one tree neighbor
        in_tree[v] = 1;
        if (recurse(out)) return true;
        in_tree[v] = 0;
        forb[v] = 1;
        const bool found = recurse(out);
        forb[v] = 0;
        return found;
    }

    // strip non-terminal leaves until every leaf is a terminal
    VertexSet minimalize() const {
        std::vector<char> keep = in_tree;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < g.order(); ++v) {
                if (!keep[v] || v == ts[0] || v == ts[1] || v == ts[2]) continue;
                int deg = 0;
                for (int w : g.neighbors(v)) deg += keep[w];
                if (deg <= 1) {
                    keep[v] = 0;
                    changed = true;
                }
            }
        }
        VertexSet out;
        for (int v = 0; v < g.order(); ++v)
            if (keep[v]) out.push_back(v);
        return out;
    }
};

std::optional<TreeWitness> three_in_a_tree_shared(const Graph& g, std::array<int, 3> terminals,
                                                  long long& budget) {
    for (int t : terminals)
        if (t < 0 || t >= g.order()) throw input_error("three_in_a_tree: terminal out of range");
    if (terminals[0] == terminals[1] || terminals[0] == terminals[2] || terminals[1] == terminals[2])
        throw input_error("three_in_a_tree: terminals must be distinct");
    VertexSet tree;
    TreeSearch s(g, terminals, budget);
    if (!s.run(tree)) return std::nullopt;
    return TreeWitness{std::move(tree), terminals};
}

} // namespace

std::string check_tree_witness(const Graph& g, const TreeWitness& w) {
    check_vertex_set(g, w.tree);
    std::set<int> members(w.tree.begin(), w.tree.end());
    for (int t : w.terminals)
        if (!members.count(t)) return "terminal missing from the tree";
    Graph sub = induced_subgraph(g, w.tree);
    if (!is_connected(sub)) return "tree vertex set is not connected";
    if (!is_acyclic(sub)) return "tree vertex set induces a cycle";
    return {};
}

std::optional<TreeWitness> three_in_a_tree(const Graph& g, std::array<int, 3> terminals, long long budget) {
    return three_in_a_tree_shared(g, terminals, budget);
}

// ------------------------------------------------------- long unichord

std::string check_unichord_witness(const Graph& g, const UnichordWitness& w) {
    const auto& c = w.cycle;
    const int L = static_cast<int>(c.size());
    if (L < 5) return "cycle shorter than 5";
    check_vertex_set(g, c);
    std::set<int> distinct(c.begin(), c.end());
    if (static_cast<int>(distinct.size()) != L) return "cycle vertices not distinct";
    for (int i = 0; i < L; ++i)
        if (!g.has_edge(c[i], c[(i + 1) % L])) return "cycle uses a non-edge";
    auto pos_of = [&](int v) {
        for (int i = 0; i < L; ++i)
            if (c[i] == v) return i;
        return -1;
    };
    const int pa = pos_of(w.chord.first), pb = pos_of(w.chord.second);
    if (pa < 0 || pb < 0) return "chord endpoint not on cycle";
    const int gap = std::abs(pa - pb);
    if (gap == 1 || gap == L - 1) return "chord joins consecutive cycle vertices";
    if (!g.has_edge(w.chord.first, w.chord.second)) return "chord is not an edge";
    for (int i = 0; i < L; ++i)
        for (int j = i + 2; j < L; ++j) {
            if (i == 0 && j == L - 1) continue;
            const bool is_chord = (c[i] == w.chord.first && c[j] == w.chord.second) ||
                                  (c[i] == w.chord.second && c[j] == w.chord.first);
            if (!is_chord && g.has_edge(c[i], c[j])) return "cycle has a second chord";
        }
    return {};
}

namespace {

struct UnichordSearch {
    const Graph& h; // host minus the candidate chord edge
    int a, b;
    long long& budget;
    std::vector<char> on_path;
    std::vector<int> path;
    std::vector<char> banned; // used during the second arc
    std::vector<int> seen;    // scratch for the distance prune
    int stamp = 0;
    bool cut = false; // a branch was dropped only because of the depth limit

    UnichordSearch(const Graph& graph, int aa, int bb, long long& bud)
        : h(graph), a(aa), b(bb), budget(bud), on_path(graph.order(), 0), banned(graph.order(), 0),
          seen(graph.order(), 0) {}

    bool touches_path(int w, int except) const {
        for (int u : path)
            if (u != except && h.has_edge(w, u)) return true;
        return false;
    }

    // every completion of the current arc lives among vertices with no
    // neighbor on the path (except cur), so the BFS distance to b there is a
    // lower bound on the remaining arc length; -1 when unreachable
    int b_distance(int cur, bool second_arc) {
        ++stamp;
        std::vector<std::pair<int, int>> queue{{cur, 0}};
        seen[cur] = stamp;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto [x, d] = queue[head];
            for (int y : h.neighbors(x)) {
                if (seen[y] == stamp || on_path[y]) continue;
                if (second_arc && banned[y]) continue;
                if (touches_path(y, cur)) continue;
                if (y == b) return d + 1;
                seen[y] = stamp;
                queue.emplace_back(y, d + 1);
            }
        }
        return -1;
    }

    bool arc2(int cur, int min_len, std::vector<int>& out) {
        if (--budget < 0) throw budget_error("find_long_unichord: search budget exhausted");
        if (b_distance(cur, true) < 0) return false;
        for (int w : h.neighbors(cur)) {
            if (w == b) {
                if (static_cast<int>(path.size()) < min_len) continue; // closing adds the edge cur-b
                if (touches_path(b, cur)) continue;
                out = path;
                out.push_back(b);
                return true;
            }
            if (on_path[w] || banned[w] || touches_path(w, cur)) continue;
            on_path[w] = 1;
            path.push_back(w);
            if (arc2(w, min_len, out)) return true;
            path.pop_back();
            on_path[w] = 0;
        }
        return false;
    }

    // first arc limited to max_len edges; deeper witnesses are reached on a
    // later deepening round
    bool arc1(int cur, int max_len, std::vector<int>& cyc_out) {
        if (--budget < 0) throw budget_error("find_long_unichord: search budget exhausted");
        const int remaining = max_len - (static_cast<int>(path.size()) - 1);
        const int dist = b_distance(cur, false);
        if (dist < 0) return false;
        if (dist > remaining) {
            cut = true;
            return false;
        }
        for (int w : h.neighbors(cur)) {
            if (w == b) {
                if (path.size() < 2) continue;
                if (touches_path(b, cur)) continue;
                std::vector<int> first = path;
                first.push_back(b);
                if (try_second(first, cyc_out)) return true;
                continue;
            }
            if (on_path[w] || touches_path(w, cur)) continue;
            if (remaining < 2) { // the extension plus at least one edge to b exceed the limit
                cut = true;
                continue;
            }
            on_path[w] = 1;
            path.push_back(w);
            if (arc1(w, max_len, cyc_out)) return true;
            path.pop_back();
            on_path[w] = 0;
        }
        return false;
    }

    bool try_second(const std::vector<int>& first, std::vector<int>& cyc_out) {
        const int len1 = static_cast<int>(first.size()) - 1;
        // interiors of the second arc must avoid the first arc and its neighborhood
        std::fill(banned.begin(), banned.end(), 0);
        for (std::size_t i = 1; i + 1 < first.size(); ++i) {
            banned[first[i]] = 1;
            for (int w : h.neighbors(first[i]))
                if (w != a && w != b) banned[w] = 1;
        }
        std::vector<char> saved_on = on_path;
        std::vector<int> saved_path = path;
        std::fill(on_path.begin(), on_path.end(), 0);
        on_path[a] = 1;
        path = {a};
        std::vector<int> second;
        const int min_len = std::max(2, 5 - len1);
        const bool found = arc2(a, min_len, second);
        on_path = std::move(saved_on);
        path = std::move(saved_path);
        if (!found) return false;
        // cycle: a, first-arc interior..., b, second-arc interior reversed
        cyc_out = first;
        for (std::size_t i = second.size() - 2; i >= 1; --i) cyc_out.push_back(second[i]);
        return true;
    }
};

} // namespace

std::optional<UnichordWitness> find_long_unichord(const Graph& g, long long budget) {
    // iterative deepening over the first-arc length: short witnesses surface
    // early, and a round without depth cutoffs certifies absence
    std::vector<Graph> hosts;
    hosts.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        std::vector<Edge> rest;
        rest.reserve(g.edges().size());
        for (const auto& f : g.edges())
            if (f != e) rest.push_back(f);
        hosts.emplace_back(g.order(), rest);
    }
    for (int max_len = 2; max_len <= std::max(2, g.order() - 1); ++max_len) {
        bool any_cut = false;
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            const auto [a, b] = g.edges()[i];
            UnichordSearch s(hosts[i], a, b, budget);
            s.on_path[a] = 1;
            s.path = {a};
            std::vector<int> cycle;
            if (s.arc1(a, max_len, cycle)) {
                UnichordWitness w{std::move(cycle), {a, b}};
                if (auto why = check_unichord_witness(g, w); !why.empty())
                    throw std::logic_error("find_long_unichord produced a bad witness: " + why);
                return w;
            }
            any_cut = any_cut || s.cut;
        }
        if (!any_cut) break; // nothing was depth-limited: the sweep was exhaustive
    }
    return std::nullopt;
}

// ---------------------------------------------------------- long theta

std::string check_theta_witness(const Graph& g, const ThetaWitness& w) {
    if (w.hub_a < 0 || w.hub_b < 0 || w.hub_a == w.hub_b) return "invalid hubs";
    std::array<int, 3> lens{};
    std::set<int> interior_seen;
    VertexSet all{w.hub_a, w.hub_b};
    for (int p = 0; p < 3; ++p) {
        const auto& path = w.paths[p];
        if (path.size() < 3) return "path shorter than 2 edges";
        if (path.front() != w.hub_a || path.back() != w.hub_b) return "path does not join the hubs";
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.has_edge(path[i], path[i + 1])) return "path uses a non-edge";
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            if (path[i] == w.hub_a || path[i] == w.hub_b) return "hub repeated inside a path";
            if (!interior_seen.insert(path[i]).second) return "paths share an interior vertex";
            all.push_back(path[i]);
        }
        lens[p] = static_cast<int>(path.size()) - 1;
    }
    std::sort(lens.begin(), lens.end());
    if (lens[0] < 2) return "shortest path has length < 2";
    if (lens[2] < 3) return "longest path has length < 3";
    std::sort(all.begin(), all.end());
    Graph sub = induced_subgraph(g, all);
    // exactly the three paths' edges: i+j+k edges on i+j+k-1 vertices
    if (sub.size() != lens[0] + lens[1] + lens[2]) return "induced subgraph has chords";
    return {};
}

namespace {

// decompose G[s] as a long theta if possible; ids are host ids
std::optional<ThetaWitness> decompose_theta(const Graph& g, const VertexSet& s) {
    std::vector<int> ids;
    Graph sub = induced_subgraph(g, s, &ids);
    if (sub.size() != sub.order() + 1) return std::nullopt;
    std::vector<int> hubs;
    for (int v = 0; v < sub.order(); ++v) {
        if (sub.degree(v) == 3)
            hubs.push_back(v);
        else if (sub.degree(v) != 2)
            return std::nullopt;
    }
    if (hubs.size() != 2) return std::nullopt;
    const int u = hubs[0], v = hubs[1];
    ThetaWitness w;
    w.hub_a = ids[u];
    w.hub_b = ids[v];
    std::vector<char> used(sub.order(), 0);
    used[u] = used[v] = 1;
    int p = 0;
    for (int start : sub.neighbors(u)) {
        if (p == 3) return std::nullopt;
        std::vector<int> path{u};
        int prev = u, cur = start;
        while (cur != v) {
            if (used[cur] || sub.degree(cur) != 2) return std::nullopt;
            used[cur] = 1;
            path.push_back(cur);
            const auto& nb = sub.neighbors(cur);
            const int nxt = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = nxt;
        }
        path.push_back(v);
        for (int& x : path) x = ids[x];
        w.paths[p++] = std::move(path);
    }
    if (p != 3) return std::nullopt;
    for (int x = 0; x < sub.order(); ++x)
        if (!used[x]) return std::nullopt;
    if (!check_theta_witness(g, w).empty()) return std::nullopt;
    return w;
}

std::optional<ThetaWitness> try_theta_tuple(const Graph& g, int a, int b, int v1, int v2, int v3,
                                            long long& budget) {
    const int n = g.order();
    std::vector<char> near_ab(n, 0);
    for (int w : g.neighbors(a)) near_ab[w] = 1;
    for (int w : g.neighbors(b)) near_ab[w] = 1;
    std::vector<int> cand;
    for (int w = 0; w < n; ++w) {
        if (w == a || w == b || w == v1 || w == v2 || w == v3 || near_ab[w]) continue;
        if (g.has_edge(w, v1) || g.has_edge(w, v2) || g.has_edge(w, v3)) cand.push_back(w);
    }
    std::vector<char> near5 = near_ab;
    for (int w : g.neighbors(v1)) near5[w] = 1;
    for (int w : g.neighbors(v2)) near5[w] = 1;
    for (int w : g.neighbors(v3)) near5[w] = 1;

    auto try_x = [&](const std::vector<int>& x) -> std::optional<ThetaWitness> {
        if (--budget < 0) throw budget_error("find_long_theta: search budget exhausted");
        for (int t : {v1, v2, v3}) {
            int c = 0;
            for (int w : x) c += g.has_edge(t, w);
            if (c != 1) return std::nullopt;
        }
        std::vector<char> in_x(n, 0);
        for (int w : x) in_x[w] = 1;
        VertexSet kept;
        for (int w = 0; w < n; ++w) {
            if (w == a || w == b) continue;
            if (w == v1 || w == v2 || w == v3 || in_x[w] || !near5[w]) kept.push_back(w);
        }
        std::vector<int> ids;
        Graph gp = induced_subgraph(g, kept, &ids);
        std::array<int, 3> terms{-1, -1, -1};
        for (std::size_t i = 0; i < ids.size(); ++i) {
            if (ids[i] == v1) terms[0] = static_cast<int>(i);
            if (ids[i] == v2) terms[1] = static_cast<int>(i);
            if (ids[i] == v3) terms[2] = static_cast<int>(i);
        }
        auto tw = three_in_a_tree_shared(gp, terms, budget);
        if (!tw) return std::nullopt;
        VertexSet s{a, b};
        for (int t : tw->tree) s.push_back(ids[t]);
        std::sort(s.begin(), s.end());
        return decompose_theta(g, s);
    };

    const int c = static_cast<int>(cand.size());
    for (int i = 0; i < c; ++i) {
        if (auto w = try_x({cand[i]})) return w;
        for (int j = i + 1; j < c; ++j) {
            if (auto w = try_x({cand[i], cand[j]})) return w;
            for (int k = j + 1; k < c; ++k)
                if (auto w = try_x({cand[i], cand[j], cand[k]})) return w;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<ThetaWitness> find_long_theta(const Graph& g, long long budget) {
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
        for (int b : g.neighbors(a)) {
            for (int v1 : g.neighbors(a)) {
                if (v1 == b || g.has_edge(v1, b)) continue;
                for (int v2 : g.neighbors(a)) {
                    if (v2 <= v1 || v2 == b || g.has_edge(v2, b) || g.has_edge(v1, v2)) continue;
                    for (int v3 : g.neighbors(b)) {
                        if (v3 == a || v3 == v1 || v3 == v2 || g.has_edge(v3, v1) || g.has_edge(v3, v2)) continue;
                        if (--budget < 0) throw budget_error("find_long_theta: search budget exhausted");
                        if (auto w = try_theta_tuple(g, a, b, v1, v2, v3, budget)) return w;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace sepscope
