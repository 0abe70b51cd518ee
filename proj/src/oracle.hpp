#pragma once

#include "graph.hpp"

namespace sepscope {

/// Branch sets of an induced minor model, indexed by pattern vertex.
struct InducedMinorModel {
    std::vector<VertexSet> branch_sets;
};

/// Empty string when the model is valid, otherwise the violated condition.
std::string check_model(const Graph& host, const Graph& pattern, const InducedMinorModel& model);
inline bool validate_model(const Graph& host, const Graph& pattern, const InducedMinorModel& m) {
    return check_model(host, pattern, m).empty();
}

/// Injective map pattern vertex -> host vertex preserving adjacency and
/// non-adjacency.
struct Embedding {
    std::vector<int> map;
};

std::string check_embedding(const Graph& host, const Graph& pattern, const Embedding& e);

/// One line per pattern vertex, "v: {members}".
std::string model_to_text(const InducedMinorModel& m);
std::string embedding_to_text(const Embedding& e);

inline constexpr int kSubgraphPatternCap = 12;
inline constexpr int kMinorPatternCap = 6;
inline constexpr int kMinorHostCap = 14;
inline constexpr int kFvsCap = 14;

/// Exhaustive induced-subgraph search. The cap applies to the pattern;
/// capability_error above it.
std::optional<Embedding> contains_induced_subgraph(const Graph& host, const Graph& pattern,
                                                   int pattern_cap = kSubgraphPatternCap);

/// Exhaustive branch-and-prune induced-minor search; certified absence on
/// nullopt. Host must fit the cap (and at most 64 vertices).
std::optional<InducedMinorModel> contains_induced_minor(const Graph& host, const Graph& pattern,
                                                        int pattern_cap = kMinorPatternCap,
                                                        int host_cap = kMinorHostCap);

struct SubdivisionWitness {
    Graph subdivision;
    std::vector<int> counts; // per pattern edge, g.edges() order
    Embedding embedding;     // subdivision vertex -> host vertex
};

/// Enumerates subdivisions by total added vertices ascending (then
/// lexicographic count vector) and tests each as an induced subgraph.
std::optional<SubdivisionWitness> contains_induced_topological_minor(const Graph& host, const Graph& pattern,
                                                                     int pattern_cap = kMinorPatternCap,
                                                                     int host_cap = kMinorHostCap);

/// Walk whose internal vertices all have degree 2 in the pattern; closed
/// walks repeat their first vertex at the end.
struct ThinWalk {
    std::vector<int> vertices;
    bool closed = false;
};

/// Maximal collection of pairwise edge-disjoint thin walks: one walk per
/// maximal degree-2 chain (with branch-vertex endpoints) and one closed walk
/// per pure-cycle component. Trivial single edges are not reported.
std::vector<ThinWalk> thin_walks(const Graph& pattern);

/// Accepts only collections where, beyond edge-disjointness, no internal
/// vertex of any walk lies on another walk; chain-based collections satisfy
/// this, and normalization relies on it.
std::string check_thin_walks(const Graph& pattern, const std::vector<ThinWalk>& walks);

/// Rebuild the model so that every walk-internal pattern vertex has a
/// singleton branch set, via a shortest monotone walk through the branch
/// sets (lexicographically least among shortest). New interior sets are
/// contained in the union of the old ones.
InducedMinorModel normalize_thin_walk_model(const Graph& host, const Graph& pattern,
                                            const InducedMinorModel& model,
                                            const std::vector<ThinWalk>& walks);

/// Exact feedback vertex number by subset enumeration in increasing size.
int feedback_vertex_number(const Graph& g, int cap = kFvsCap);

} // namespace sepscope
