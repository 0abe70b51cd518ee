#pragma once

#include <variant>

#include "graph.hpp"
#include "oracle.hpp"
#include "solvers.hpp"

namespace sepscope {

/// Hole of length >= 5 plus a degree-3 center whose neighbors are
/// consecutive on the hole.
struct TwinWheelWitness {
    std::vector<int> hole; // cyclic order
    int center = -1;
};

std::string check_twin_wheel_witness(const Graph& g, const TwinWheelWitness& w);

/// Four vertices inducing 2P2 plus a component of G - X seeing all of X.
struct ButterflyWitness {
    std::array<int, 4> x; // edges x[0]x[1] and x[2]x[3]
    VertexSet component;
};

std::string check_butterfly_witness(const Graph& g, const ButterflyWitness& w);

using Witness = std::variant<UnichordWitness, ThetaWitness, TwinWheelWitness, ButterflyWitness, Embedding>;

std::string witness_to_text(const Witness& w);

/// Runs the structural validator matching the variant; empty when sound.
/// Embeddings are validated against the pattern recorded by the caller.
std::string check_witness(const Graph& g, const Witness& w, const Graph* embedding_pattern = nullptr);

struct RecognitionResult {
    bool present = false;
    std::optional<Witness> witness;
};

/// House as induced topological minor: long unichord or long theta.
RecognitionResult has_house_itm(const Graph& g, long long budget = kDefaultBudget);

/// Four-tuple test over diamonds; polynomial, no budget needed.
std::optional<TwinWheelWitness> has_long_twin_wheel(const Graph& g);

/// House as induced minor: induced house-subdivision or long twin wheel.
RecognitionResult has_house_im(const Graph& g, long long budget = kDefaultBudget);

/// Butterfly as induced minor via the 2P2-plus-dominating-component test.
std::optional<ButterflyWitness> has_butterfly_im(const Graph& g);

/// 2P2 as induced topological minor reduces to the induced-subgraph test.
std::optional<Embedding> has_2p2_itm(const Graph& g);

enum class Relation { induced_minor, induced_topological_minor };

const char* relation_name(Relation rel);
std::optional<Relation> relation_from_name(const std::string& name);

struct DichotomyVerdict {
    Relation relation{};
    bool tame = false;
    std::string justification; // succeeding containment, or "none"
};

/// Tame iff the pattern is an induced subgraph of a maximal tame pattern:
/// diamond/butterfly/house for the induced-minor relation,
/// 2P2/diamond/house for the induced-topological-minor relation.
DichotomyVerdict classify_dichotomy(const Graph& h, Relation rel);

} // namespace sepscope
