#pragma once

#include "graph.hpp"

namespace sepscope {

/// k internally disjoint length-3 paths between two hubs.
/// Vertex order: a=0, b=1, a_1..a_k, b_1..b_k; edges a a_i, a_i b_i, b_i b.
Graph k_theta(int k);

/// Two k-cliques joined by a perfect matching.
/// Vertex order: a_1..a_k = 0..k-1, b_1..b_k = k..2k-1.
Graph k_prism(int k);

/// Two anticomplete paths p_1..p_k and q_1..q_k plus an independent set
/// r_1..r_k with rungs p_i r_i and q_i r_i. Vertex order: P, Q, R.
Graph k_skinny_ladder(int k);

/// Parameters for a k-creature. A and B are connected graphs given by their
/// own edge lists; attach_a[i] / attach_b[i] are the (nonempty) neighborhoods
/// of x_i in A and of y_i in B. x_edges / y_edges are the optional internal
/// edges within X and within Y. extra_edges (global indices, layout
/// A | X | Y | B) lets a caller express inputs that violate the axioms, which
/// the validator then rejects by name.
struct CreatureSpec {
    int k = 0;
    int a_size = 0;
    int b_size = 0;
    std::vector<Edge> a_edges;
    std::vector<Edge> b_edges;
    std::vector<VertexSet> attach_a;
    std::vector<VertexSet> attach_b;
    std::vector<Edge> x_edges;
    std::vector<Edge> y_edges;
    std::vector<Edge> extra_edges;
};

struct CreatureLayout {
    int a_offset = 0, x_offset = 0, y_offset = 0, b_offset = 0;
    int k = 0, a_size = 0, b_size = 0;
};

/// Build the creature and re-check axioms (i)-(iv); construction_error names
/// the violated axiom.
Graph k_creature(const CreatureSpec& spec, CreatureLayout* layout = nullptr);

/// Axiom check against an explicit partition; throws construction_error.
void validate_creature(const Graph& g, const CreatureLayout& lay);

/// Convenience creature used by the CLI: A and B are paths, x_i attaches to
/// A-vertex i mod a_size (same for Y/B); optional X- and Y-cliques.
CreatureSpec standard_creature_spec(int k, int a_size, int b_size, bool x_clique, bool y_clique);

/// Two endpoints a=0, b=1 joined by three internally disjoint paths of
/// lengths i, j, k (interiors in path order). At most one length may be 1.
/// When one path is the single edge ab, the unions involving it induce a
/// cycle with ab as a chord, so the hole requirement is applied to the
/// remaining pair of paths (checked modulo that chord); with all lengths
/// >= 2 the literal hole condition holds for all three pair unions.
Graph gamma(int i, int j, int k);

/// Re-derives the three paths of a gamma-construction output and checks the
/// pairwise hole conditions described above; throws construction_error.
void validate_gamma(const Graph& g, int i, int j, int k);

/// Hole 0..L-1 plus a center (vertex L) adjacent to hole vertices 0,1,2.
Graph long_twin_wheel(int hole_length);

/// Replace edge e (in g.edges() order) by a path with counts[e] internal
/// vertices; new vertices are appended after the originals in edge order.
Graph subdivide(const Graph& g, const std::vector<int>& counts);

} // namespace sepscope
