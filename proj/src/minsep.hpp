#pragma once

#include "graph.hpp"

namespace sepscope {

/// Two full components of G - S, each seeing all of S.
struct SeparatorEvidence {
    VertexSet comp1;
    VertexSet comp2;
};

struct SeparatorReport {
    std::vector<VertexSet> separators; // lexicographic by sorted member list
    std::vector<SeparatorEvidence> evidence;
    long long count = 0; // equals separators.size(); cap+1 when capped
    bool capped = false;
};

struct SeparatorCount {
    long long count = 0;
    bool capped = false;
};

/// Full-component test: S is a minimal separator iff G - S has at least two
/// components C with S <= N(C). Returns the first two such components.
std::optional<SeparatorEvidence> is_minimal_separator(const Graph& g, const VertexSet& s);

/// All minimal separators, generated by seeding with the close separators
/// N(C) for components C of G - N[v] and closing under the neighborhood
/// substitution rule. cap < 0 means unlimited; otherwise enumeration stops
/// once cap+1 separators exist and the report is marked capped.
SeparatorReport enumerate_minimal_separators(const Graph& g, long long cap = -1);

SeparatorCount count_minimal_separators(const Graph& g, long long cap = -1);

} // namespace sepscope
