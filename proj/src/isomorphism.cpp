#include "graph.hpp"

#include <algorithm>
#include <map>

namespace sepscope {

namespace {

// iterated neighbor-label refinement over both graphs at once, so the
// resulting colors are comparable between them
void refine_colors(const Graph& a, const Graph& b, std::vector<int>& ca, std::vector<int>& cb) {
    ca.resize(a.order());
    cb.resize(b.order());
    for (int v = 0; v < a.order(); ++v) ca[v] = a.degree(v);
    for (int v = 0; v < b.order(); ++v) cb[v] = b.degree(v);
    std::size_t prev_classes = 0;
    for (int round = 0; round < a.order() + 1; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> dict;
        auto relabeled = [&](const Graph& g, const std::vector<int>& col, int v) {
            std::vector<int> sig;
            sig.reserve(g.degree(v));
            for (int w : g.neighbors(v)) sig.push_back(col[w]);
            std::sort(sig.begin(), sig.end());
            auto [it, ins] = dict.emplace(std::make_pair(col[v], std::move(sig)), static_cast<int>(dict.size()));
            return it->second;
        };
        std::vector<int> na(a.order()), nb(b.order());
        for (int v = 0; v < a.order(); ++v) na[v] = relabeled(a, ca, v);
        for (int v = 0; v < b.order(); ++v) nb[v] = relabeled(b, cb, v);
        ca = std::move(na);
        cb = std::move(nb);
        if (dict.size() == prev_classes) break;
        prev_classes = dict.size();
    }
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<int> ca, cb;
    std::vector<int> map_ab; // a-vertex -> b-vertex or -1
    std::vector<char> used_b;

    bool extend(int v) {
        if (v == a.order()) return true;
        for (int w = 0; w < b.order(); ++w) {
            if (used_b[w] || ca[v] != cb[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (a.has_edge(u, v) != b.has_edge(map_ab[u], w)) ok = false;
            if (!ok) continue;
            map_ab[v] = w;
            used_b[w] = 1;
            if (extend(v + 1)) return true;
            used_b[w] = 0;
            map_ab[v] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.order() > kIsoCap || b.order() > kIsoCap)
        throw capability_error("isomorphism test capped at " + std::to_string(kIsoCap) + " vertices");
    if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
    std::vector<int> ca, cb;
    refine_colors(a, b, ca, cb);
    {
        std::vector<int> sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    IsoSearch s{a, b, std::move(ca), std::move(cb), std::vector<int>(a.order(), -1),
                std::vector<char>(b.order(), 0)};
    if (!s.extend(0)) return std::nullopt;
    return s.map_ab;
}

bool is_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

} // namespace sepscope
