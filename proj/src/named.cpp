#include "graph.hpp"

#include <cctype>

namespace sepscope {

Graph path_graph(int k) {
    if (k < 1) throw input_error("path_graph: k >= 1 required");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph(k, e);
}

Graph cycle_graph(int k) {
    if (k < 3) throw input_error("cycle_graph: k >= 3 required");
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph(k, e);
}

Graph complete_graph(int k) {
    if (k < 0) throw input_error("complete_graph: k >= 0 required");
    std::vector<Edge> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return Graph(k, e);
}

Graph complete_bipartite(int p, int q) {
    if (p < 0 || q < 0) throw input_error("complete_bipartite: nonnegative parts required");
    std::vector<Edge> e;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) e.emplace_back(i, p + j);
    return Graph(p + q, e);
}

Graph diamond_graph() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

// vertices a,b,c,d,e = 0..4; edges ab,bc,cd,de,ae,ad
Graph house_graph() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 3}}); }

// join of 2P2 and P1; 4 is the center
Graph butterfly_graph() { return Graph(5, {{0, 1}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}); }

// join of P1 and P4; 4 is universal
Graph gem_graph() { return Graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}); }

Graph claw_graph() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

Graph paw_graph() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}); }

Graph two_p2_graph() { return Graph(4, {{0, 1}, {2, 3}}); }

std::optional<Graph> make_named(const std::string& name_in) {
    std::string name;
    for (char c : name_in)
        if (!std::isspace(static_cast<unsigned char>(c))) name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (name == "diamond") return diamond_graph();
    if (name == "house") return house_graph();
    if (name == "butterfly") return butterfly_graph();
    if (name == "gem") return gem_graph();
    if (name == "paw") return paw_graph();
    if (name == "claw") return claw_graph();
    if (name == "2p2" || name == "2k2") return two_p2_graph();
    if (name.size() >= 2 && (name[0] == 'p' || name[0] == 'c' || name[0] == 'k')) {
        const std::string rest = name.substr(1);
        auto all_digits = [](const std::string& s) {
            if (s.empty()) return false;
            for (char c : s)
                if (!std::isdigit(static_cast<unsigned char>(c))) return false;
            return true;
        };
        if (name[0] == 'k') {
            auto comma = rest.find(',');
            if (comma != std::string::npos) {
                std::string ps = rest.substr(0, comma), qs = rest.substr(comma + 1);
                if (all_digits(ps) && all_digits(qs)) return complete_bipartite(std::stoi(ps), std::stoi(qs));
                return std::nullopt;
            }
        }
        if (!all_digits(rest)) return std::nullopt;
        int k = std::stoi(rest);
        try {
            if (name[0] == 'p') return path_graph(k);
            if (name[0] == 'c') return cycle_graph(k);
            return complete_graph(k);
        } catch (const input_error&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

} // namespace sepscope
