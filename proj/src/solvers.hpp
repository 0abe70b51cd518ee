#pragma once

#include <array>

#include "graph.hpp"

namespace sepscope {

/// Search budget in search-tree nodes; exhaustion raises budget_error,
/// never a wrong answer.
inline constexpr long long kDefaultBudget = 100'000'000;

/// Induced tree through three terminals; inclusion-minimal, so its leaves
/// are terminals.
struct TreeWitness {
    VertexSet tree;
    std::array<int, 3> terminals;
};

std::string check_tree_witness(const Graph& g, const TreeWitness& w);

/// Exact three-in-a-tree: is there an induced subgraph that is a tree
/// containing the three (distinct) terminals?
std::optional<TreeWitness> three_in_a_tree(const Graph& g, std::array<int, 3> terminals,
                                           long long budget = kDefaultBudget);

/// Cycle of length >= 5 whose unique chord is `chord`.
struct UnichordWitness {
    std::vector<int> cycle; // cyclic order, no repeated first vertex
    Edge chord;
};

std::string check_unichord_witness(const Graph& g, const UnichordWitness& w);

/// First long unichord in canonical order, or certified absence.
std::optional<UnichordWitness> find_long_unichord(const Graph& g, long long budget = kDefaultBudget);

/// Induced theta with both short path lengths >= 2 and max length >= 3;
/// paths run from hub_a to hub_b inclusive.
struct ThetaWitness {
    int hub_a = -1;
    int hub_b = -1;
    std::array<std::vector<int>, 3> paths;
};

std::string check_theta_witness(const Graph& g, const ThetaWitness& w);

/// Long-theta detection by five-tuple enumeration reducing to
/// three-in-a-tree; reconstructed candidates are validated structurally
/// before being returned.
std::optional<ThetaWitness> find_long_theta(const Graph& g, long long budget = kDefaultBudget);

} // namespace sepscope
