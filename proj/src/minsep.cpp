#include "minsep.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sepscope {

namespace {

// components of G - removed, with N(C) computed on the fly
struct CompScan {
    std::vector<VertexSet> comps;
    std::vector<VertexSet> nbhd; // sorted neighborhood of each component
};

CompScan components_minus(const Graph& g, const std::vector<char>& removed) {
    CompScan out;
    std::vector<int> label(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (removed[s] || label[s] >= 0) continue;
        const int id = static_cast<int>(out.comps.size());
        out.comps.push_back({});
        std::vector<char> seen_nb(g.order(), 0);
        std::deque<int> q{s};
        label[s] = id;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            out.comps[id].push_back(x);
            for (int y : g.neighbors(x)) {
                if (removed[y]) {
                    seen_nb[y] = 1;
                } else if (label[y] < 0) {
                    label[y] = id;
                    q.push_back(y);
                }
            }
        }
        std::sort(out.comps[id].begin(), out.comps[id].end());
        VertexSet nb;
        for (int v = 0; v < g.order(); ++v)
            if (seen_nb[v]) nb.push_back(v);
        out.nbhd.push_back(std::move(nb));
    }
    return out;
}

} // namespace

std::optional<SeparatorEvidence> is_minimal_separator(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    std::vector<char> removed(g.order(), 0);
    VertexSet key = s;
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    for (int v : key) removed[v] = 1;
    CompScan scan = components_minus(g, removed);
    SeparatorEvidence ev;
    int full = 0;
    for (std::size_t i = 0; i < scan.comps.size(); ++i) {
        if (std::includes(scan.nbhd[i].begin(), scan.nbhd[i].end(), key.begin(), key.end())) {
            if (full == 0)
                ev.comp1 = scan.comps[i];
            else if (full == 1)
                ev.comp2 = scan.comps[i];
            ++full;
            if (full >= 2) return ev;
        }
    }
    return std::nullopt;
}

SeparatorReport enumerate_minimal_separators(const Graph& g, long long cap) {
    std::set<VertexSet> found;
    std::deque<VertexSet> queue;
    bool capped = false;

    auto consider = [&](const VertexSet& cand) {
        if (capped) return;
        if (found.count(cand)) return;
        if (!is_minimal_separator(g, cand)) return;
        if (cap >= 0 && static_cast<long long>(found.size()) > cap) return;
        found.insert(cand);
        queue.push_back(cand);
        if (cap >= 0 && static_cast<long long>(found.size()) > cap) capped = true;
    };

    // seed: close separators of every vertex; the empty set is a minimal
    // separator exactly when g is disconnected
    consider({});
    for (int v = 0; v < g.order() && !capped; ++v) {
        std::vector<char> removed(g.order(), 0);
        removed[v] = 1;
        for (int w : g.neighbors(v)) removed[w] = 1;
        CompScan scan = components_minus(g, removed);
        for (auto& nb : scan.nbhd) consider(nb);
    }

    // substitution rule: for S and x in S, take N(C) for components C of G - (S u N[x])
    while (!queue.empty() && !capped) {
        VertexSet s = std::move(queue.front());
        queue.pop_front();
        for (int x : s) {
            std::vector<char> removed(g.order(), 0);
            for (int v : s) removed[v] = 1;
            removed[x] = 1;
            for (int w : g.neighbors(x)) removed[w] = 1;
            CompScan scan = components_minus(g, removed);
            for (auto& nb : scan.nbhd) consider(nb);
            if (capped) break;
        }
    }

    SeparatorReport report;
    report.capped = capped;
    report.separators.assign(found.begin(), found.end());
    report.count = static_cast<long long>(report.separators.size());
    report.evidence.reserve(report.separators.size());
    for (const auto& s : report.separators) report.evidence.push_back(*is_minimal_separator(g, s));
    return report;
}

SeparatorCount count_minimal_separators(const Graph& g, long long cap) {
    SeparatorReport r = enumerate_minimal_separators(g, cap);
    return {r.count, r.capped};
}

} // namespace sepscope
