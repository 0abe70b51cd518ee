#include "generators.hpp"

#include <algorithm>
#include <array>

namespace sepscope {

Graph k_theta(int k) {
    if (k < 3) throw input_error("k_theta: k >= 3 required");
    std::vector<Edge> e;
    const int a = 0, b = 1;
    for (int i = 0; i < k; ++i) {
        const int ai = 2 + i, bi = 2 + k + i;
        e.emplace_back(a, ai);
        e.emplace_back(ai, bi);
        e.emplace_back(bi, b);
    }
    return Graph(2 * k + 2, e);
}

Graph k_prism(int k) {
    if (k < 3) throw input_error("k_prism: k >= 3 required");
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            e.emplace_back(i, j);
            e.emplace_back(k + i, k + j);
        }
        e.emplace_back(i, k + i);
    }
    return Graph(2 * k, e);
}

Graph k_skinny_ladder(int k) {
    if (k < 1) throw input_error("k_skinny_ladder: k >= 1 required");
    std::vector<Edge> e;
    const int p = 0, q = k, r = 2 * k;
    for (int i = 0; i + 1 < k; ++i) {
        e.emplace_back(p + i, p + i + 1);
        e.emplace_back(q + i, q + i + 1);
    }
    for (int i = 0; i < k; ++i) {
        e.emplace_back(p + i, r + i);
        e.emplace_back(q + i, r + i);
    }
    return Graph(3 * k, e);
}

void validate_creature(const Graph& g, const CreatureLayout& lay) {
    const int k = lay.k;
    auto in_a = [&](int v) { return v >= lay.a_offset && v < lay.a_offset + lay.a_size; };
    auto in_b = [&](int v) { return v >= lay.b_offset && v < lay.b_offset + lay.b_size; };
    auto in_x = [&](int v) { return v >= lay.x_offset && v < lay.x_offset + k; };
    auto in_y = [&](int v) { return v >= lay.y_offset && v < lay.y_offset + k; };

    // (i) A and B are nonempty and induce connected subgraphs
    if (lay.a_size < 1 || lay.b_size < 1) throw construction_error("creature axiom (i): A and B must be nonempty");
    VertexSet av, bv;
    for (int i = 0; i < lay.a_size; ++i) av.push_back(lay.a_offset + i);
    for (int i = 0; i < lay.b_size; ++i) bv.push_back(lay.b_offset + i);
    if (!is_connected(induced_subgraph(g, av))) throw construction_error("creature axiom (i): A is not connected");
    if (!is_connected(induced_subgraph(g, bv))) throw construction_error("creature axiom (i): B is not connected");

    // (ii) A anticomplete to Y u B; B anticomplete to A u X
    for (const auto& [u, v] : g.edges()) {
        const bool ua = in_a(u), va = in_a(v), ub = in_b(u), vb = in_b(v);
        if ((ua && (in_y(v) || vb)) || (va && (in_y(u) || ub)))
            throw construction_error("creature axiom (ii): A must be anticomplete to Y and B");
        if ((ub && in_x(v)) || (vb && in_x(u)))
            throw construction_error("creature axiom (ii): B must be anticomplete to X");
    }

    // (iii) every x has a neighbor in A, every y a neighbor in B
    for (int i = 0; i < k; ++i) {
        bool xa = false, yb = false;
        for (int w : g.neighbors(lay.x_offset + i)) xa = xa || in_a(w);
        for (int w : g.neighbors(lay.y_offset + i)) yb = yb || in_b(w);
        if (!xa) throw construction_error("creature axiom (iii): x_" + std::to_string(i + 1) + " has no neighbor in A");
        if (!yb) throw construction_error("creature axiom (iii): y_" + std::to_string(i + 1) + " has no neighbor in B");
    }

    // (iv) x_i y_j adjacent iff i == j
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const bool adj = g.has_edge(lay.x_offset + i, lay.y_offset + j);
            if (adj != (i == j))
                throw construction_error("creature axiom (iv): X-Y adjacency must be exactly the matching x_i y_i");
        }
}

Graph k_creature(const CreatureSpec& spec, CreatureLayout* layout_out) {
    if (spec.k < 1) throw input_error("k_creature: k >= 1 required");
    if (static_cast<int>(spec.attach_a.size()) != spec.k || static_cast<int>(spec.attach_b.size()) != spec.k)
        throw input_error("k_creature: need one attachment set per x_i and per y_i");
    CreatureLayout lay;
    lay.k = spec.k;
    lay.a_size = spec.a_size;
    lay.b_size = spec.b_size;
    lay.a_offset = 0;
    lay.x_offset = spec.a_size;
    lay.y_offset = spec.a_size + spec.k;
    lay.b_offset = spec.a_size + 2 * spec.k;
    const int n = spec.a_size + 2 * spec.k + spec.b_size;

    std::vector<Edge> e;
    for (const auto& [u, v] : spec.a_edges) e.emplace_back(lay.a_offset + u, lay.a_offset + v);
    for (const auto& [u, v] : spec.b_edges) e.emplace_back(lay.b_offset + u, lay.b_offset + v);
    for (int i = 0; i < spec.k; ++i) {
        if (spec.attach_a[i].empty() || spec.attach_b[i].empty())
            throw construction_error("creature axiom (iii): empty attachment for index " + std::to_string(i + 1));
        for (int w : spec.attach_a[i]) {
            if (w < 0 || w >= spec.a_size) throw input_error("k_creature: attach_a index out of range");
            e.emplace_back(lay.x_offset + i, lay.a_offset + w);
        }
        for (int w : spec.attach_b[i]) {
            if (w < 0 || w >= spec.b_size) throw input_error("k_creature: attach_b index out of range");
            e.emplace_back(lay.y_offset + i, lay.b_offset + w);
        }
        e.emplace_back(lay.x_offset + i, lay.y_offset + i);
    }
    for (const auto& [u, v] : spec.x_edges) e.emplace_back(lay.x_offset + u, lay.x_offset + v);
    for (const auto& [u, v] : spec.y_edges) e.emplace_back(lay.y_offset + u, lay.y_offset + v);
    for (const auto& [u, v] : spec.extra_edges) e.emplace_back(u, v);

    Graph g(n, e);
    validate_creature(g, lay);
    if (layout_out) *layout_out = lay;
    return g;
}

CreatureSpec standard_creature_spec(int k, int a_size, int b_size, bool x_clique, bool y_clique) {
    if (k < 1 || a_size < 1 || b_size < 1) throw input_error("standard_creature_spec: positive sizes required");
    CreatureSpec s;
    s.k = k;
    s.a_size = a_size;
    s.b_size = b_size;
    for (int i = 0; i + 1 < a_size; ++i) s.a_edges.emplace_back(i, i + 1);
    for (int i = 0; i + 1 < b_size; ++i) s.b_edges.emplace_back(i, i + 1);
    for (int i = 0; i < k; ++i) {
        s.attach_a.push_back({i % a_size});
        s.attach_b.push_back({i % b_size});
    }
    if (x_clique)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) s.x_edges.emplace_back(i, j);
    if (y_clique)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) s.y_edges.emplace_back(i, j);
    return s;
}

Graph gamma(int i, int j, int k) {
    if (i < 1 || j < 1 || k < 1) throw input_error("gamma: positive path lengths required");
    const int ones = (i == 1) + (j == 1) + (k == 1);
    if (ones > 1) throw input_error("gamma: at most one path length may equal 1");
    const int a = 0, b = 1;
    std::vector<Edge> e;
    int next = 2;
    auto add_path = [&](int len) {
        if (len == 1) {
            e.emplace_back(a, b);
            return;
        }
        int prev = a;
        for (int t = 0; t < len - 1; ++t) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        e.emplace_back(prev, b);
    };
    add_path(i);
    add_path(j);
    add_path(k);
    Graph g(i + j + k - 1, e);
    validate_gamma(g, i, j, k);
    return g;
}

void validate_gamma(const Graph& g, int i, int j, int k) {
    // reconstruct the three paths from the fixed labeling
    const int a = 0, b = 1;
    std::array<std::vector<int>, 3> paths;
    std::array<int, 3> lens = {i, j, k};
    int next = 2;
    for (int p = 0; p < 3; ++p) {
        paths[p].push_back(a);
        for (int t = 0; t < lens[p] - 1; ++t) paths[p].push_back(next++);
        paths[p].push_back(b);
    }
    if (g.order() != i + j + k - 1) throw construction_error("gamma: wrong vertex count");
    for (int p = 0; p < 3; ++p)
        for (int q = p + 1; q < 3; ++q) {
            VertexSet uni;
            for (int v : paths[p]) uni.push_back(v);
            for (int v : paths[q]) uni.push_back(v);
            std::sort(uni.begin(), uni.end());
            uni.erase(std::unique(uni.begin(), uni.end()), uni.end());
            Graph sub = induced_subgraph(g, uni);
            const int cyc_len = lens[p] + lens[q];
            const bool third_is_edge = (lens[3 - p - q] == 1);
            if (lens[p] == 1 || lens[q] == 1) {
                // this pair's union is the other path plus the ab edge; only
                // require that it is exactly that cycle
                if (sub.order() != cyc_len || sub.size() != cyc_len)
                    throw construction_error("gamma: union with the length-1 path is not the expected cycle");
                continue;
            }
            const int expect_edges = cyc_len + (third_is_edge ? 1 : 0);
            if (sub.size() != expect_edges || sub.order() != cyc_len)
                throw construction_error("gamma: pair union has unexpected chords");
            if (!third_is_edge) {
                // literal hole condition: chordless cycle of length >= 4
                if (cyc_len < 4) throw construction_error("gamma: pair union induces a cycle shorter than a hole");
                for (int v = 0; v < sub.order(); ++v)
                    if (sub.degree(v) != 2) throw construction_error("gamma: pair union is not a cycle");
            }
        }
}

Graph long_twin_wheel(int hole_length) {
    if (hole_length < 5) throw input_error("long_twin_wheel: hole length >= 5 required");
    std::vector<Edge> e;
    for (int i = 0; i < hole_length; ++i) e.emplace_back(i, (i + 1) % hole_length);
    const int c = hole_length;
    e.emplace_back(c, 0);
    e.emplace_back(c, 1);
    e.emplace_back(c, 2);
    return Graph(hole_length + 1, e);
}

Graph subdivide(const Graph& g, const std::vector<int>& counts) {
    if (counts.size() != g.edges().size()) throw input_error("subdivide: one count per edge required");
    for (int c : counts)
        if (c < 0) throw input_error("subdivide: counts must be non-negative");
    std::vector<Edge> e;
    int next = g.order();
    for (std::size_t idx = 0; idx < g.edges().size(); ++idx) {
        auto [u, v] = g.edges()[idx];
        int prev = u;
        for (int t = 0; t < counts[idx]; ++t) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        e.emplace_back(prev, v);
    }
    return Graph(next, e);
}

} // namespace sepscope
